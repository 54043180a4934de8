#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sjack {

using Integer = mpz_class;
using Rational = mpq_class;

enum class Style { text, latex };

/// Polynomial in the Jack parameter alpha with integer coefficients.
///
/// Coefficients are stored in ascending degree with no trailing zeros, so the
/// zero polynomial has an empty coefficient vector and degree -1.
class AlphaPoly {
 public:
  AlphaPoly() = default;
  AlphaPoly(long constant);  // NOLINT(google-explicit-constructor)
  AlphaPoly(Integer constant);  // NOLINT(google-explicit-constructor)
  explicit AlphaPoly(std::vector<Integer> ascending);

  static AlphaPoly alpha() { return linear(1, 0); }
  /// `alpha_coeff * alpha + constant`
  static AlphaPoly linear(long alpha_coeff, long constant);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  Integer coeff(int power) const;
  const Integer& leading() const;

  /// gcd of the coefficients, taken positive; zero for the zero polynomial.
  Integer content() const;
  /// Divides out the content and makes the leading coefficient positive.
  AlphaPoly primitive() const;
  /// alpha^d * p(1/alpha) for d >= degree().
  AlphaPoly reversed(int d) const;
  Rational eval(const Rational& at) const;

  AlphaPoly operator-() const;
  AlphaPoly& operator+=(const AlphaPoly& rhs);
  AlphaPoly& operator-=(const AlphaPoly& rhs);
  AlphaPoly& operator*=(const AlphaPoly& rhs);
  AlphaPoly& operator*=(const Integer& rhs);

  friend AlphaPoly operator+(AlphaPoly lhs, const AlphaPoly& rhs) { return lhs += rhs; }
  friend AlphaPoly operator-(AlphaPoly lhs, const AlphaPoly& rhs) { return lhs -= rhs; }
  friend AlphaPoly operator*(const AlphaPoly& lhs, const AlphaPoly& rhs);
  friend bool operator==(const AlphaPoly&, const AlphaPoly&) = default;

  std::string str(Style style = Style::text) const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Parses the text rendering produced by AlphaPoly::str (e.g. "3*alpha^2 - alpha + 5").
AlphaPoly parse_alpha_poly(std::string_view text);

/// Exact quotient p / d in Z[alpha]; nullopt when d does not divide p.
std::optional<AlphaPoly> try_divide(const AlphaPoly& p, const AlphaPoly& d);
AlphaPoly divide_exact(const AlphaPoly& p, const AlphaPoly& d);

/// Primitive gcd with positive leading coefficient (primitive PRS).
AlphaPoly gcd(const AlphaPoly& a, const AlphaPoly& b);

/// Element of Q(alpha), kept as num/den with no common polynomial factor,
/// no common integer content, and a positive leading coefficient on den.
class AlphaRational {
 public:
  AlphaRational() : num_(0), den_(1) {}
  AlphaRational(long constant) : num_(constant), den_(1) {}  // NOLINT
  AlphaRational(AlphaPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT
  AlphaRational(AlphaPoly num, AlphaPoly den);
  static AlphaRational from_rational(const Rational& q);

  const AlphaPoly& num() const { return num_; }
  const AlphaPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  AlphaRational inverse() const;
  /// The same rational function evaluated at 1/alpha.
  AlphaRational at_inverse_alpha() const;

  AlphaRational operator-() const;
  AlphaRational& operator+=(const AlphaRational& rhs);
  AlphaRational& operator-=(const AlphaRational& rhs);
  AlphaRational& operator*=(const AlphaRational& rhs);
  AlphaRational& operator/=(const AlphaRational& rhs);

  friend AlphaRational operator+(AlphaRational l, const AlphaRational& r) { return l += r; }
  friend AlphaRational operator-(AlphaRational l, const AlphaRational& r) { return l -= r; }
  friend AlphaRational operator*(AlphaRational l, const AlphaRational& r) { return l *= r; }
  friend AlphaRational operator/(AlphaRational l, const AlphaRational& r) { return l /= r; }
  friend bool operator==(const AlphaRational&, const AlphaRational&) = default;

  /// "num" when den is 1, otherwise "num / den" with multi-term parts parenthesized.
  std::string str(Style style = Style::text) const;

 private:
  void normalize();
  AlphaPoly num_;
  AlphaPoly den_;
};

AlphaRational pow(const AlphaRational& base, int exponent);

inline bool is_zero(const AlphaPoly& p) { return p.is_zero(); }
inline bool is_zero(const AlphaRational& r) { return r.is_zero(); }

}  // namespace sjack
