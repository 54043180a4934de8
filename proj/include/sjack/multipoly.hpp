#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sjack/alpha_poly.hpp"

namespace sjack {

/// Indeterminates a_1..a_A followed by b_1..b_B.
struct PolyRing {
  int a_count = 0;
  int b_count = 0;

  /// The ring used by the identities for a given m: a_1..a_m, b_1..b_{m-1}.
  static PolyRing for_m(int m) { return {m, m > 0 ? m - 1 : 0}; }
  int size() const { return a_count + b_count; }
  friend bool operator==(const PolyRing&, const PolyRing&) = default;
};

/// Sparse polynomial with integer coefficients over a PolyRing.
/// Terms are kept in descending lexicographic order of exponent vectors.
class MultiPoly {
 public:
  using Exponents = std::vector<std::uint8_t>;
  using TermMap = std::map<Exponents, Integer, std::greater<>>;

  MultiPoly() = default;
  explicit MultiPoly(PolyRing ring) : ring_(ring) {}
  MultiPoly(PolyRing ring, const Integer& constant);

  static MultiPoly a(PolyRing ring, int i);
  static MultiPoly b(PolyRing ring, int j);

  const PolyRing& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(const Exponents& e) const;
  /// True when some term has a positive power of b_j.
  bool mentions_b(int j) const;

  void add_term(const Exponents& e, const Integer& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const Integer& rhs);
  friend MultiPoly operator+(MultiPoly l, const MultiPoly& r) { return l += r; }
  friend MultiPoly operator-(MultiPoly l, const MultiPoly& r) { return l -= r; }
  friend MultiPoly operator*(const MultiPoly& l, const MultiPoly& r);
  friend MultiPoly operator*(MultiPoly l, const Integer& r) { return l *= r; }
  friend bool operator==(const MultiPoly& l, const MultiPoly& r) { return l.ring_ == r.ring_ && l.terms_ == r.terms_; }

  /// Ring homomorphism sending each indeterminate (a's then b's) to images[k].
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;
  /// Same polynomial viewed in a ring with at least as many a's and b's.
  MultiPoly widen(PolyRing target) const;

  std::string str(Style style = Style::text) const;

 private:
  void check_ring(const MultiPoly& other) const;
  PolyRing ring_;
  TermMap terms_;
};

/// Replaces each b_j in `rules` by its image, leaving other indeterminates alone.
MultiPoly substitute_b(const MultiPoly& p, const std::map<int, MultiPoly>& rules);
/// b_l <- b_{l+1} for every l; the top b must not occur.
MultiPoly shift_b(const MultiPoly& p);

/// Exact quotient in Z[a, b]; nullopt when d does not divide p.
std::optional<MultiPoly> try_divide(const MultiPoly& p, const MultiPoly& d);

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/// Fraction-free (Bareiss) determinant.
MultiPoly det(const PolyMatrix& m);
/// Determinant as the signed sum over all permutations.
MultiPoly det_expand(const PolyMatrix& m);

}  // namespace sjack
