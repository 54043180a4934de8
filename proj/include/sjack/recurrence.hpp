#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "sjack/multipoly.hpp"
#include "sjack/report.hpp"
#include "sjack/triangular.hpp"
#include "sjack/weights.hpp"

namespace sjack {

/// Large enough for every P^[k]_{j,i} with i, j <= 8.
PolyRing recurrence_ring();

/// Partitions of length i with first part j (parts >= 1).
std::vector<std::vector<int>> partitions_with_first(int j, int i);
/// Length i, first part j, and a part equal to j - l for each l = 1..k.
bool in_P_k(const std::vector<int>& lambda, int j, int i, int k);
std::vector<std::vector<int>> P_k_set(int j, int i, int k);

/// Memoized weighted sums P^[k]_{j,i} in a fixed ring.
class PkTable {
 public:
  explicit PkTable(PolyRing ring = recurrence_ring()) : ring_(ring) {}
  const MultiPoly& get(int j, int i, int k);
  PolyRing ring() const { return ring_; }

 private:
  PolyRing ring_;
  std::map<std::tuple<int, int, int>, MultiPoly> cache_;
};

MultiPoly P_k(int j, int i, int k, PolyRing ring = recurrence_ring());

/// Vanishing, base case and both recurrences (with the b shift) at (j, i, k).
CheckReport recurrence_check(PkTable& table, int j, int i, int k);
/// P^[k]_{j,i} - P^[k]_{j-1,i} = (a_j + 1 - a_{j-k-1}) P^[k+1]_{j,i}, for i > k and j > k + 1.
CheckReport interp_check(PkTable& table, int j, int i, int k);

struct RowReduction {
  PolyMatrix final_matrix;
  std::vector<MultiPoly> factors;  // extracted stage by stage
  bool exact = true;               // every stage factor divided its row
  bool unit_upper = false;         // final matrix upper triangular with unit diagonal
  MultiPoly determinant;           // product of factors times det of the final matrix
  std::string note;
};

/// The staged L_j <- L_j - L_{j-1} sweeps with factor extraction, applied to any matrix.
RowReduction row_reduce(const PolyMatrix& m);
/// det M(gamma^0) by row reduction; throws std::logic_error if a stage is not exact.
MultiPoly row_reduce_determinant(int m);
/// Same sweeps on M(gamma); an experiment only, nothing is claimed about the outcome.
RowReduction row_reduce_experiment(const GammaVector& gamma);
/// Row reduction of M(gamma^0) ends at (P^[j-1]_{j,i}) with unit diagonal and the expected product.
CheckReport row_reduce_check(int m);

/// A base partition of P^[k+1]_{j,i} with an arrow between parts u and u+1.
struct ExtendedPartition {
  std::vector<int> base;
  int u = 0;
  bool left = false;

  std::string str() const;
  friend auto operator<=>(const ExtendedPartition&, const ExtendedPartition&) = default;
};

/// Every extension of every partition in P^[k+1]_{j,i}.
std::vector<ExtendedPartition> extended_partitions(int j, int i, int k);
/// Arrow positions u with lambda_u > lambda_{u+1} = lambda_u - 1 >= j - k - 1.
std::vector<int> arrow_positions(const std::vector<int>& lambda, int j, int k);
bool is_extension(const ExtendedPartition& e, int j, int i, int k);
/// w(lambda) times (a_{lambda_u} + b_u), or times -(a_{lambda_{u+1}} + b_u) for a right arrow.
FactorProduct extension_weight(const ExtendedPartition& e);

bool is_bad(const ExtendedPartition& e, int j, int k);
ExtendedPartition psi(const ExtendedPartition& e, int j, int k);
std::vector<int> theta_L(const ExtendedPartition& e, int j, int k);
std::vector<int> theta_R(const ExtendedPartition& e, int j, int k);
/// Adds 1 to the first `count` parts.
std::vector<int> raise_prefix(const std::vector<int>& lambda, int count);

/// Image sets of Theta_L, Theta_R and the two sides of the L = R bijection.
bool in_theta_L_image(const std::vector<int>& lambda, int j, int i, int k);
bool in_theta_R_image(const std::vector<int>& lambda, int j, int i, int k);
bool in_L_set(const std::vector<int>& lambda, int j, int i, int k);
bool in_R_set(const std::vector<int>& lambda, int j, int i, int k);

/// Both countings of EP^[k+1]_{j,i}, the maps Psi, Theta_L, Theta_R, the L = R bijection
/// and the double-counting relation itself.
CheckReport double_count_check(PkTable& table, int j, int i, int k);

/// Every check of this header over 0 <= k <= max_k, 1 <= i, j <= max_ij.
CheckReport recurrence_suite(int max_k, int max_ij);

}  // namespace sjack
