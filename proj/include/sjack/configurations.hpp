#pragma once

#include <string>
#include <vector>

#include "sjack/alpha_poly.hpp"
#include "sjack/partition.hpp"
#include "sjack/report.hpp"
#include "sjack/triangular.hpp"
#include "sjack/weights.hpp"

namespace sjack {

/// Letter i sits in columns 1..k_i at rows i_1 >= i_2 >= ... (all <= i <= m).
struct GoodConfiguration {
  std::vector<std::vector<int>> paths;  // paths[i-1] = (i_1, ..., i_{k_i})

  int m() const { return static_cast<int>(paths.size()); }
  /// (|P|_1, ..., |P|_m)
  std::vector<int> counts() const;
  /// Sign of [m - |P|_1, ..., m - |P|_m].
  int sign() const;
  /// Cells (row, col) that are 0-critical.
  std::vector<Cell> critical_cells() const;
  /// sign(P) * prod (a_row + b_col) over the critical cells.
  FactorProduct weight() const;
  std::string str() const;
  friend auto operator<=>(const GoodConfiguration&, const GoodConfiguration&) = default;
};

/// The first m rows of tilde(Lambda); good configurations only see these.
std::vector<int> fermionic_rows(const Superpartition& sp);
std::vector<GoodConfiguration> good_configs(const Superpartition& sp);

/// gamma_j = 1 iff Lambda has a fermionic part equal to j - 1 (j < m).
GammaVector gamma_of(const Superpartition& sp);
/// lambda^(k_i + 1) = (i, i_1, ..., i_{k_i}).
TriangularTableau to_triangular(const GoodConfiguration& p);
GoodConfiguration from_triangular(const TriangularTableau& t);

/// The linearization d((i,j)) = a_i + b_j of the hook lengths in the first m rows.
struct HookLinearization {
  std::vector<AlphaPoly> a;  // a_1..a_m
  std::vector<AlphaPoly> b;  // b_1..b_{max+1}
  std::vector<int> v;        // v_0..v_{max}: symmetric parts <= k

  static HookLinearization build(const Superpartition& sp, int n_vars);
  /// Every fermionic cell and the relation b_{eta_j + 1} = 1 - a_j.
  CheckReport check(const Superpartition& sp, int n_vars) const;
};

/// prod_{j<i}(a_j - a_i - 1) = sum over good configurations of sgn(P) d_P, with
/// b_{eta_i + 1} = 1 - a_i whenever eta_i < m - 1.
CheckReport identity1_check(const Superpartition& sp);
/// Good configurations and V_gamma correspond with matching signs and weights.
CheckReport bijection_check(const Superpartition& sp);

/// From the full tableaux at N = ell + m: the size of each fibre, the factorization of d_T,
/// the reduction to good configurations and the bad-configuration involution.
CheckReport verify_config_reduction(const Superpartition& sp);

/// c_min through the sum over good configurations.
AlphaRational c_min_via_configurations(const Superpartition& sp);
/// c_min_via_configurations agrees with the closed formula, and with the full expansion when asked
/// (that path symmetrizes over S_N, so keep it to small Lambda).
CheckReport verify_cmin_configurations(const Superpartition& sp, bool against_expansion = false);

}  // namespace sjack
