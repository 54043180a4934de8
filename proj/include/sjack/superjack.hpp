#pragma once

#include <map>
#include <string>
#include <vector>

#include "sjack/alpha_poly.hpp"
#include "sjack/partition.hpp"
#include "sjack/report.hpp"
#include "sjack/superpoly.hpp"

namespace sjack {

/// ell_{n,m} + m, the number of variables used for coefficient extraction (at least 1).
int default_n_vars(const Superpartition& sp);
int default_n_vars(int n, int m);

struct JackExpansion {
  Superpartition index;
  int n_vars = 0;
  SuperPolynomial poly;
  std::map<Superpartition, AlphaRational> m_basis;
};

/// Signed symmetrization of theta_1...theta_m E_{tilde Lambda}.
SuperPolynomial jack_poly(const Superpartition& sp, int n_vars, int jobs = 1);
/// Monomial expansion by repeated subtraction of the greatest canonical term.
/// Throws std::domain_error when f is not symmetric.
std::map<Superpartition, AlphaRational> m_expand(const SuperPolynomial& f);
SuperPolynomial m_synthesize(const std::map<Superpartition, AlphaRational>& coeffs, int n_vars);

JackExpansion jack_super(const Superpartition& sp, int n_vars, int jobs = 1);

/// Coefficient of theta_1...theta_m x^{Lambda_min} in J_Lambda divided by ell_{n,m}!.
AlphaRational c_min_via_expansion(const Superpartition& sp, int jobs = 1);
AlphaRational c_min_from_poly(const Superpartition& sp, const SuperPolynomial& jack);
/// Values alpha*a + l + 1 over the cells of Lambda-circle.
std::vector<AlphaPoly> c_min_factors(const Superpartition& sp);
AlphaRational c_min_closed(const Superpartition& sp);
/// The closed form left factored: "1 / ((3*alpha + 5)*(alpha + 1))", constants gathered in front.
std::string c_min_closed_str(const Superpartition& sp, Style style = Style::text);

CheckReport verify_lemma2(const Superpartition& sp);

/// p_Lambda for every superpartition of the sector, in n_vars variables.
std::map<Superpartition, SuperPolynomial> powersum_basis(int n, int m, int n_vars);
/// Coordinates of a homogeneous symmetric f in the power-sum basis of its sector.
std::map<Superpartition, AlphaRational> p_expand(const SuperPolynomial& f, int n, int m);
/// <<f|g>> through the power-sum expansion; f and g must lie in the same (n, m) sector.
AlphaRational scalar_product(const SuperPolynomial& f, const SuperPolynomial& g);
AlphaRational scalar_product(const SuperPolynomial& f, const SuperPolynomial& g, int n, int m);

/// Which closed form the norm checks compare against.
enum class NormConvention {
  as_stated,      // alpha^{m + ell} c_min(Lambda, alpha) / c_min(Lambda', 1/alpha)
  sector_signed,  // the same times (-1)^{m(m-1)/2}, the sign carried by the scalar product
};

AlphaRational expected_norm(const Superpartition& sp, NormConvention convention = NormConvention::as_stated);

struct SectorNorms {
  int n = 0;
  int m = 0;
  std::vector<Superpartition> basis;
  std::vector<std::vector<AlphaRational>> gram;  // <<J_Lambda | J_Omega>>
};
SectorNorms sector_norms(int n, int m, int jobs = 1);
/// Norm of J_Lambda and its orthogonality to the rest of the sector.
CheckReport verify_norm(const Superpartition& sp, int jobs = 1, NormConvention convention = NormConvention::as_stated);
CheckReport verify_sector_norms(const SectorNorms& s, NormConvention convention = NormConvention::as_stated);

}  // namespace sjack
