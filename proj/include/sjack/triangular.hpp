#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sjack/multipoly.hpp"
#include "sjack/report.hpp"
#include "sjack/weights.hpp"

namespace sjack {

/// gamma in {0,1}^{m-1}.
struct GammaVector {
  std::vector<int> bits;

  int m() const { return static_cast<int>(bits.size()) + 1; }
  /// #{k <= j : gamma_k = 1}
  int ones_upto(int j) const;
  int ones() const { return ones_upto(static_cast<int>(bits.size())); }
  /// 1-based index of the last 1, or 0.
  int last_one() const;
  /// gamma with its last 1 replaced by 0.
  GammaVector cleared_last() const;
  /// b_j -> 1 - a_r for every gamma_j = 1, r = ones_upto(j).
  std::map<int, MultiPoly> b_rules(PolyRing ring) const;
  std::string str() const;
  friend bool operator==(const GammaVector&, const GammaVector&) = default;
};

/// "101" -> gamma with m = 4; "" -> m = 1.
GammaVector parse_gamma(std::string_view bits);
GammaVector zero_gamma(int m);
std::vector<GammaVector> all_gammas(int m);

/// (lambda^(1), ..., lambda^(m)); rows[i-1] has length i.
using TriangularTableau = std::vector<std::vector<int>>;
std::string tableau_str(const TriangularTableau& t);

/// Parts in 1..m, weakly decreasing, lambda_{u+1} > #{k <= u : gamma_k = 1}.
bool is_compatible(const std::vector<int>& lambda, const GammaVector& gamma);
/// Compatible rows of the right lengths whose first column is a permutation of 1..m.
bool is_triangular(const TriangularTableau& t, const GammaVector& gamma);
/// The j-th parts of lambda^(j), ..., lambda^(m) are distinct for every j.
bool is_non_intersecting(const TriangularTableau& t);

/// Product over critical entries u (lambda_u = lambda_{u-1}, u >= 2) of (a_{lambda_u} + b_{u-1}).
FactorProduct partition_weight(const std::vector<int>& lambda);
/// sign(sigma_R) times the product of the row weights.
FactorProduct tableau_weight(const TriangularTableau& t);

/// Compatible partitions of the given length with the given first part.
std::vector<std::vector<int>> compatible_partitions(int length, int first, const GammaVector& gamma);

using TriangularVisitor = std::function<void(const TriangularTableau&)>;
void enumerate_triangular(const GammaVector& gamma, bool non_intersecting_only, const TriangularVisitor& visit);
std::vector<TriangularTableau> enumerate_V(const GammaVector& gamma);

/// Sum over V_gamma with free a, b.
MultiPoly sigma_free(const GammaVector& gamma);
/// Sum over V_gamma with b_j := 1 - a_r wherever gamma_j = 1.
MultiPoly sigma_gamma(const GammaVector& gamma);
/// Sum over all (possibly intersecting) compatible triangular tableaux, free a, b.
MultiPoly sigma_pi(const GammaVector& gamma);

/// P_{j,i}(gamma): compatible partitions of length i with first part j.
MultiPoly P_entry(const GammaVector& gamma, int j, int i);
PolyMatrix P_matrix(const GammaVector& gamma);

/// sigma_gamma equals the shifted Vandermonde product.
CheckReport identity2_check(const GammaVector& gamma);
/// Sigma = Sigma_pi = det M (Bareiss and permutation expansion agree too).
CheckReport det_check(const GammaVector& gamma);

/// Prefix swap pairing intersecting tableaux; nullopt when t is non-intersecting.
std::optional<TriangularTableau> lgv_phi(const TriangularTableau& t);
/// Phi is a fixed-point-free, weight-negating involution on intersecting tableaux.
CheckReport lgv_involution_check(const GammaVector& gamma);

/// Compatible with gamma' (last 1 cleared) but not with gamma.
bool in_V_prime(const TriangularTableau& t, const GammaVector& gamma);
/// The prefix swap between rows ell = j_min - 1 and r; throws std::invalid_argument outside V'_gamma.
TriangularTableau iota(const TriangularTableau& t, const GammaVector& gamma);
/// Involution, no fixed points, weight negation under the gamma relations,
/// vanishing sum over V'_gamma and the decomposition of Sigma(gamma').
CheckReport iota_check(const GammaVector& gamma);

}  // namespace sjack
