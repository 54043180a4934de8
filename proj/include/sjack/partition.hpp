#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "sjack/alpha_poly.hpp"

namespace sjack {

/// A cell (row, column) of a diagram; both 1-based, rows grow downward.
struct Cell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped; anything else out of order is rejected.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  /// Number of parts equal to `value` (value >= 1).
  int multiplicity(int value) const;
  /// parts_[i-1], or 0 past the end.
  int part(int i) const;
  bool empty() const { return parts_.empty(); }

  std::string str() const;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// N non-negative parts, zeros allowed.
class Composition {
 public:
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int n_parts() const { return static_cast<int>(parts_.size()); }
  /// Length of row i (1-based).
  int row(int i) const { return parts_[static_cast<std::size_t>(i - 1)]; }
  int size() const;
  bool contains(Cell c) const { return c.row >= 1 && c.row <= n_parts() && c.col >= 1 && c.col <= row(c.row); }
  /// Cells in row-major order.
  std::vector<Cell> cells() const;

  std::string str() const;
  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

Composition parse_composition(std::string_view text);

/// (fermionic; symmetric): fermionic strictly decreasing and >= 0, symmetric a partition.
class Superpartition {
 public:
  Superpartition() = default;
  Superpartition(std::vector<int> fermionic, Partition symmetric);

  const std::vector<int>& fermionic() const { return fermionic_; }
  const Partition& symmetric() const { return symmetric_; }
  int fermionic_degree() const { return static_cast<int>(fermionic_.size()); }
  int degree() const;
  /// m + number of nonzero symmetric parts.
  int length() const { return fermionic_degree() + symmetric_.length(); }
  /// n - m(m-1)/2 for this superpartition's sector.
  int ell_nm() const;

  /// "(a1,a2,...;s1,s2,...)"
  std::string str() const;
  friend auto operator<=>(const Superpartition&, const Superpartition&) = default;

 private:
  std::vector<int> fermionic_;
  Partition symmetric_;
};

Superpartition parse_superpartition(std::string_view text);

struct DiagramRow {
  int length = 0;
  bool circled = false;
  friend bool operator==(const DiagramRow&, const DiagramRow&) = default;
};

/// Rows of D[Lambda] from top to bottom; a circled row carries a circle just past its last cell.
struct CircledDiagram {
  std::vector<DiagramRow> rows;

  /// Length of row i counting its circle.
  int augmented_length(int i) const;
  /// True when some row has its circle in column `col`.
  bool column_has_circle(int col) const;
  /// ASCII rendering: '#' per cell, 'O' per circle, one row per line.
  std::string ascii() const;
  /// Row lengths top to bottom, empty circled rows included: "(5,3,3,2,1,0)".
  std::string row_lengths() const;
};

Partition star(const Superpartition& sp);
CircledDiagram diagram(const Superpartition& sp);
Superpartition conjugate(const Superpartition& sp);
Superpartition lambda_min(int n, int m);
/// (L_m, ..., L_1, L_N, ..., L_{m+1}) with the symmetric part zero-padded to N - m entries.
Composition tilde(const Superpartition& sp, int n_vars);

/// Arm, upper leg, lower leg of a composition cell.
int arm(const Composition& eta, Cell s);
int leg_upper(const Composition& eta, Cell s);
int leg_lower(const Composition& eta, Cell s);
/// alpha*(arm+1) + leg' + leg'' + 1
AlphaPoly hook_d(const Composition& eta, Cell s);

/// A cell of Lambda-circle with its arm (circle counted) and leg (column circle excluded).
struct CircledHook {
  Cell cell;
  int arm = 0;
  int leg = 0;
  AlphaPoly value() const { return AlphaPoly::linear(arm, leg + 1); }
};

/// Cells of D[Lambda] not lying in both a circled row and a circled column, row-major.
std::vector<CircledHook> arm_leg_circ(const Superpartition& sp);

/// Product of factorials of the multiplicities of the symmetric part padded to N - m entries.
Integer f_lambda_s(const Superpartition& sp, int n_vars);
/// alpha^length * prod_i i^{m_i} m_i!
AlphaPoly z_lambda(const Superpartition& sp);

/// All partitions of n, reverse-lexicographic (largest first).
std::vector<Partition> partitions_of(int n);
/// All superpartitions of degree n and fermionic degree m, in decreasing order.
std::vector<Superpartition> superpartitions(int n, int m);
/// Every superpartition with degree <= max_degree, fermionic degree <= max_m.
std::vector<Superpartition> superpartitions_up_to(int max_degree, int max_m = 1 << 20);

}  // namespace sjack
