#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace sjack {

/// Sign of a sequence of distinct values, read as the permutation that sorts it.
/// Values need not be 0..n-1; only their relative order matters.
template <class T>
int permutation_sign(std::span<const T> seq) {
  int inversions = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[j] < seq[i]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

inline int permutation_sign(const std::vector<int>& seq) {
  return permutation_sign(std::span<const int>(seq));
}

/// True when `seq` holds each of 1..n exactly once.
inline bool is_permutation_of_1_to_n(const std::vector<int>& seq) {
  std::vector<bool> seen(seq.size() + 1, false);
  for (int v : seq) {
    if (v < 1 || v > static_cast<int>(seq.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

/// Sorts a sequence of distinct indices in place, returning the sign of the
/// sorting permutation; returns 0 when an index repeats.
template <class T>
int sort_with_sign(std::vector<T>& seq) {
  int sign = 1;
  // insertion sort keeps the transposition count explicit
  for (std::size_t i = 1; i < seq.size(); ++i) {
    for (std::size_t j = i; j > 0 && seq[j] < seq[j - 1]; --j) {
      std::swap(seq[j], seq[j - 1]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < seq.size(); ++i)
    if (seq[i] == seq[i - 1]) return 0;
  return sign;
}

/// Calls `fn(perm)` for every permutation of 0..n-1 in lexicographic order.
template <class Fn>
void for_each_permutation(int n, Fn&& fn) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    fn(static_cast<const std::vector<int>&>(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

inline std::vector<int> compose(const std::vector<int>& sigma, const std::vector<int>& tau) {
  std::vector<int> out(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) out[i] = sigma[static_cast<std::size_t>(tau[i])];
  return out;
}

inline long factorial(int n) {
  long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace sjack
