#include "sjack/json_io.hpp"

#include <stdexcept>

namespace sjack {

namespace {

Integer integer_from(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("expected an integer string, got " + j.dump());
  Integer z;
  if (z.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("bad integer " + j.dump());
  return z;
}

std::vector<std::uint8_t> bytes_from(const Json& j) {
  std::vector<std::uint8_t> out;
  for (const auto& e : j) {
    const int v = e.get<int>();
    if (v < 0 || v > 255) throw std::invalid_argument("entry out of range in " + j.dump());
    out.push_back(static_cast<std::uint8_t>(v));
  }
  return out;
}

Json ints(const std::vector<std::uint8_t>& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(static_cast<int>(x));
  return out;
}

}  // namespace

Json to_json(const AlphaRational& r) { return Json{{"num", r.num().str()}, {"den", r.den().str()}}; }

AlphaRational alpha_rational_from_json(const Json& j) {
  return AlphaRational(parse_alpha_poly(j.at("num").get<std::string>()), parse_alpha_poly(j.at("den").get<std::string>()));
}

Json to_json(const MultiPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json{{"exponents", ints(e)}, {"coeff", c.get_str()}});
  return Json{{"a", p.ring().a_count}, {"b", p.ring().b_count}, {"terms", terms}};
}

MultiPoly multipoly_from_json(const Json& j) {
  const PolyRing ring{j.at("a").get<int>(), j.at("b").get<int>()};
  MultiPoly p(ring);
  for (const auto& t : j.at("terms")) {
    auto e = bytes_from(t.at("exponents"));
    if (static_cast<int>(e.size()) != ring.size()) throw std::invalid_argument("exponent vector of the wrong length");
    p.add_term(e, integer_from(t.at("coeff")));
  }
  return p;
}

Json to_json(const SuperPolynomial& f) {
  Json terms = Json::array();
  for (const auto& [m, c] : f.terms())
    terms.push_back(Json{{"theta", ints(m.theta)},
                         {"exponents", ints(m.exps)},
                         {"coeff_num", c.num().str()},
                         {"coeff_den", c.den().str()}});
  return Json{{"N", f.n_vars()}, {"terms", terms}};
}

SuperPolynomial superpoly_from_json(const Json& j) {
  const int n = j.at("N").get<int>();
  SuperPolynomial f(n);
  for (const auto& t : j.at("terms")) {
    SuperMonomial m{bytes_from(t.at("theta")), bytes_from(t.at("exponents"))};
    if (static_cast<int>(m.exps.size()) != n) throw std::invalid_argument("exponent vector of the wrong length");
    for (std::size_t k = 0; k < m.theta.size(); ++k)
      if (m.theta[k] < 1 || m.theta[k] > n || (k && m.theta[k] <= m.theta[k - 1]))
        throw std::invalid_argument("theta indices must increase within 1..N");
    f.add_term(m, AlphaRational(parse_alpha_poly(t.at("coeff_num").get<std::string>()),
                                parse_alpha_poly(t.at("coeff_den").get<std::string>())));
  }
  return f;
}

Json to_json(const JackExpansion& e) {
  Json basis = Json::array();
  // greatest superpartition first, as in the text output
  for (auto it = e.m_basis.rbegin(); it != e.m_basis.rend(); ++it)
    basis.push_back(Json{{"superpartition", it->first.str()},
                         {"coeff_num", it->second.num().str()},
                         {"coeff_den", it->second.den().str()}});
  return Json{{"index", e.index.str()}, {"N", e.n_vars}, {"m_basis", basis}};
}

JackExpansion expansion_from_json(const Json& j) {
  JackExpansion e;
  e.index = parse_superpartition(j.at("index").get<std::string>());
  e.n_vars = j.at("N").get<int>();
  e.poly = SuperPolynomial(e.n_vars);
  for (const auto& t : j.at("m_basis"))
    e.m_basis.emplace(parse_superpartition(t.at("superpartition").get<std::string>()),
                      AlphaRational(parse_alpha_poly(t.at("coeff_num").get<std::string>()),
                                    parse_alpha_poly(t.at("coeff_den").get<std::string>())));
  return e;
}

}  // namespace sjack
