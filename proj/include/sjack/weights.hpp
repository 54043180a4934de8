#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sjack/multipoly.hpp"

namespace sjack {

/// sign * prod (a_x + b_y), kept as the sorted multiset of index pairs (x, y).
/// Comparing two of these compares weights factor by factor.
struct FactorProduct {
  int sign = 1;
  std::vector<std::pair<int, int>> factors;

  void multiply(int a_index, int b_index);
  void normalize();  // sorts the factors
  FactorProduct negated() const { return {-sign, factors}; }
  std::string str() const;
  friend auto operator<=>(const FactorProduct&, const FactorProduct&) = default;
};

/// a_x + b_y, with b_y replaced through `b_rules` when present.
MultiPoly linear_factor(PolyRing ring, int a_index, int b_index, const std::map<int, MultiPoly>& b_rules = {});
MultiPoly expand(const FactorProduct& w, PolyRing ring, const std::map<int, MultiPoly>& b_rules = {});

/// Integer combination of factor products, expanded only once at the end.
class WeightSum {
 public:
  void add(const FactorProduct& w, const Integer& times = 1);
  void add(const WeightSum& other);
  std::size_t distinct() const { return terms_.size(); }
  MultiPoly expand(PolyRing ring, const std::map<int, MultiPoly>& b_rules = {}) const;

 private:
  std::map<std::vector<std::pair<int, int>>, Integer> terms_;
};

/// prod over 1 <= j < i <= m of (a_i + 1 - a_j)
MultiPoly vandermonde_shift(PolyRing ring, int m);

}  // namespace sjack
