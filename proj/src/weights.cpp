#include "sjack/weights.hpp"

#include <algorithm>

namespace sjack {

void FactorProduct::multiply(int a_index, int b_index) { factors.emplace_back(a_index, b_index); }

void FactorProduct::normalize() { std::sort(factors.begin(), factors.end()); }

std::string FactorProduct::str() const {
  std::string out = sign < 0 ? "-" : "";
  if (factors.empty()) return out + "1";
  for (const auto& [x, y] : factors) out += "(a_" + std::to_string(x) + "+b_" + std::to_string(y) + ")";
  return out;
}

MultiPoly linear_factor(PolyRing ring, int a_index, int b_index, const std::map<int, MultiPoly>& b_rules) {
  auto it = b_rules.find(b_index);
  return MultiPoly::a(ring, a_index) + (it == b_rules.end() ? MultiPoly::b(ring, b_index) : it->second);
}

MultiPoly expand(const FactorProduct& w, PolyRing ring, const std::map<int, MultiPoly>& b_rules) {
  MultiPoly out(ring, w.sign);
  for (const auto& [x, y] : w.factors) out = out * linear_factor(ring, x, y, b_rules);
  return out;
}

void WeightSum::add(const FactorProduct& w, const Integer& times) {
  auto key = w.factors;
  std::sort(key.begin(), key.end());
  auto [it, inserted] = terms_.try_emplace(std::move(key), times * w.sign);
  if (!inserted) {
    it->second += times * w.sign;
    if (it->second == 0) terms_.erase(it);
  }
}

void WeightSum::add(const WeightSum& other) {
  for (const auto& [k, c] : other.terms_) add(FactorProduct{1, k}, c);
}

namespace {

using Key = std::vector<std::pair<int, int>>;
using Iter = std::map<Key, Integer>::const_iterator;

// Terms in [lo, hi) share their first `depth` factors; factor the common prefix out level by level.
MultiPoly expand_trie(Iter lo, Iter hi, std::size_t depth, PolyRing ring,
                      std::map<std::pair<int, int>, MultiPoly>& cache, const std::map<int, MultiPoly>& b_rules) {
  MultiPoly out(ring);
  while (lo != hi && lo->first.size() == depth) {
    out += MultiPoly(ring, lo->second);
    ++lo;
  }
  while (lo != hi) {
    const auto f = lo->first[depth];
    Iter end = lo;
    while (end != hi && end->first[depth] == f) ++end;
    auto it = cache.find(f);
    if (it == cache.end()) it = cache.emplace(f, linear_factor(ring, f.first, f.second, b_rules)).first;
    out += it->second * expand_trie(lo, end, depth + 1, ring, cache, b_rules);
    lo = end;
  }
  return out;
}

}  // namespace

MultiPoly WeightSum::expand(PolyRing ring, const std::map<int, MultiPoly>& b_rules) const {
  std::map<std::pair<int, int>, MultiPoly> cache;
  return expand_trie(terms_.begin(), terms_.end(), 0, ring, cache, b_rules);
}

MultiPoly vandermonde_shift(PolyRing ring, int m) {
  MultiPoly out(ring, 1);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j < i; ++j) out = out * (MultiPoly::a(ring, i) + MultiPoly(ring, 1) - MultiPoly::a(ring, j));
  return out;
}

}  // namespace sjack
