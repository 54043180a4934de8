#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sjack/alpha_poly.hpp"
#include "sjack/partition.hpp"
#include "sjack/superpoly.hpp"

namespace sjack {

/// Filling of a composition diagram with letters 1..N.
struct AdmissibleTableau {
  Composition shape{std::vector<int>{0}};
  std::vector<std::vector<int>> rows;  // rows[i-1][j-1]

  int at(Cell s) const { return rows[static_cast<std::size_t>(s.row - 1)][static_cast<std::size_t>(s.col - 1)]; }
  int n_letters() const { return shape.n_parts(); }
  /// (|T|_1, ..., |T|_N)
  std::vector<int> evaluation() const;
  /// Rows joined by "/", letters by ",", "." for an empty row.
  std::string str() const;
  friend bool operator==(const AdmissibleTableau&, const AdmissibleTableau&) = default;
};

AdmissibleTableau parse_tableau(const Composition& shape, std::string_view text);

using TableauVisitor = std::function<void(const AdmissibleTableau&)>;

/// Streams every 0-admissible tableau of shape eta, column-major backtracking.
/// With n_workers > 1 only the tableaux whose first column has index
/// `worker` modulo n_workers (in enumeration order) are produced.
void enumerate_admissible(const Composition& eta, const TableauVisitor& visit, int worker = 0, int n_workers = 1);
std::vector<AdmissibleTableau> admissible_tableaux(const Composition& eta);

/// Checks conditions (1)-(3) directly on T.
bool is_admissible(const AdmissibleTableau& t);
/// Checks (1) and (2) on T with a column 0 holding letter i in row i.
bool is_admissible_augmented(const AdmissibleTableau& t);

std::vector<Cell> critical_cells(const AdmissibleTableau& t);
/// Cells satisfying (a) once column 0 is added.
std::vector<Cell> critical_cells_augmented(const AdmissibleTableau& t);
/// Product of d_eta over the 0-critical cells.
AlphaPoly critical_weight(const AdmissibleTableau& t);

/// Product of d_eta(s) over all cells of eta.
AlphaPoly hook_product(const Composition& eta);

/// E_eta stored as integer-polynomial numerators over one common denominator.
struct NonsymJack {
  Composition eta{std::vector<int>{0}};
  std::map<std::vector<int>, AlphaPoly> numerators;  // ev(T) -> sum of d_T
  AlphaPoly denominator{1};
  long long tableau_count = 0;

  AlphaRational coeff(const std::vector<int>& exps) const;
  SuperPolynomial poly() const;
};

NonsymJack nonsym_jack(const Composition& eta, int jobs = 1);

}  // namespace sjack
