#pragma once

#include <json.hpp>

#include "sjack/alpha_poly.hpp"
#include "sjack/multipoly.hpp"
#include "sjack/superjack.hpp"
#include "sjack/superpoly.hpp"

namespace sjack {

using Json = nlohmann::ordered_json;

/// {"num": "...", "den": "..."} in the text rendering of AlphaPoly.
Json to_json(const AlphaRational& r);
AlphaRational alpha_rational_from_json(const Json& j);

/// {"a": A, "b": B, "terms": [{"exponents": [...], "coeff": "..."}]} in canonical term order.
Json to_json(const MultiPoly& p);
MultiPoly multipoly_from_json(const Json& j);

/// {"N": N, "terms": [{"theta": [...], "exponents": [...], "coeff_num": "...", "coeff_den": "..."}]}
Json to_json(const SuperPolynomial& f);
SuperPolynomial superpoly_from_json(const Json& j);

/// {"index": "(..;..)", "N": N, "m_basis": [{"superpartition", "coeff_num", "coeff_den"}]}.
/// The polynomial itself is not serialized; reading back leaves `poly` empty.
Json to_json(const JackExpansion& e);
JackExpansion expansion_from_json(const Json& j);

}  // namespace sjack
