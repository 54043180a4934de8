#include "sjack/alpha_poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace sjack {

AlphaPoly::AlphaPoly(long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

AlphaPoly::AlphaPoly(Integer constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

AlphaPoly::AlphaPoly(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) { trim(); }

AlphaPoly AlphaPoly::linear(long alpha_coeff, long constant) {
  return AlphaPoly(std::vector<Integer>{Integer(constant), Integer(alpha_coeff)});
}

void AlphaPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer AlphaPoly::coeff(int power) const {
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

const Integer& AlphaPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

Integer AlphaPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

AlphaPoly AlphaPoly::primitive() const {
  if (is_zero()) return {};
  Integer g = content();
  if (leading() < 0) g = -g;
  AlphaPoly out = *this;
  for (auto& c : out.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return out;
}

AlphaPoly AlphaPoly::reversed(int d) const {
  if (d < degree()) throw std::invalid_argument("reversal degree below polynomial degree");
  std::vector<Integer> out(static_cast<std::size_t>(d + 1), Integer(0));
  for (int k = 0; k <= degree(); ++k) out[static_cast<std::size_t>(d - k)] = coeffs_[static_cast<std::size_t>(k)];
  return AlphaPoly(std::move(out));
}

Rational AlphaPoly::eval(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + Rational(*it);
  return acc;
}

AlphaPoly AlphaPoly::operator-() const {
  AlphaPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

AlphaPoly& AlphaPoly::operator+=(const AlphaPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Integer(0));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

AlphaPoly& AlphaPoly::operator-=(const AlphaPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Integer(0));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

AlphaPoly operator*(const AlphaPoly& lhs, const AlphaPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Integer> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), lhs.coeffs_[i].get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
  }
  return AlphaPoly(std::move(out));
}

AlphaPoly& AlphaPoly::operator*=(const AlphaPoly& rhs) { return *this = *this * rhs; }

AlphaPoly& AlphaPoly::operator*=(const Integer& rhs) {
  if (rhs == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

namespace {

void append_term(std::string& out, const Integer& c, int power, Style style) {
  const bool negative = c < 0;
  const Integer mag = abs(c);
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  const std::string var = style == Style::latex ? "\\alpha" : "alpha";
  if (power == 0) {
    out += mag.get_str();
    return;
  }
  if (mag != 1) out += mag.get_str() + (style == Style::latex ? "" : "*");
  out += var;
  if (power > 1) out += style == Style::latex ? "^{" + std::to_string(power) + "}" : "^" + std::to_string(power);
}

}  // namespace

std::string AlphaPoly::str(Style style) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k)
    if (coeffs_[static_cast<std::size_t>(k)] != 0) append_term(out, coeffs_[static_cast<std::size_t>(k)], k, style);
  return out;
}

AlphaPoly parse_alpha_poly(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty polynomial text");
  std::vector<Integer> coeffs;
  std::size_t pos = 0;
  auto add = [&](const Integer& c, int power) {
    if (coeffs.size() <= static_cast<std::size_t>(power)) coeffs.resize(static_cast<std::size_t>(power) + 1, Integer(0));
    coeffs[static_cast<std::size_t>(power)] += c;
  };
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw std::invalid_argument("expected '+' or '-' in polynomial text: " + s);
    }
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    Integer c = 1;
    bool has_digits = pos > start;
    if (has_digits) c = Integer(s.substr(start, pos - start));
    int power = 0;
    if (pos < s.size() && s[pos] == '*') {
      if (!has_digits) throw std::invalid_argument("dangling '*' in polynomial text: " + s);
      ++pos;
    }
    if (s.compare(pos, 5, "alpha") == 0) {
      pos += 5;
      power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::size_t ps = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (ps == pos) throw std::invalid_argument("missing exponent in polynomial text: " + s);
        power = std::stoi(s.substr(ps, pos - ps));
      }
    } else if (!has_digits) {
      throw std::invalid_argument("malformed term in polynomial text: " + s);
    }
    add(sign * c, power);
  }
  return AlphaPoly(std::move(coeffs));
}

std::optional<AlphaPoly> try_divide(const AlphaPoly& p, const AlphaPoly& d) {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (p.is_zero()) return AlphaPoly{};
  if (p.degree() < d.degree()) return std::nullopt;
  std::vector<Integer> rem = p.coefficients();
  std::vector<Integer> quot(static_cast<std::size_t>(p.degree() - d.degree() + 1), Integer(0));
  const auto& dc = d.coefficients();
  const int dd = d.degree();
  for (int k = p.degree(); k >= dd; --k) {
    Integer& top = rem[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), dc.back().get_mpz_t())) return std::nullopt;
    Integer q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), dc.back().get_mpz_t());
    for (int t = 0; t <= dd; ++t)
      mpz_submul(rem[static_cast<std::size_t>(k - dd + t)].get_mpz_t(), q.get_mpz_t(),
                 dc[static_cast<std::size_t>(t)].get_mpz_t());
    quot[static_cast<std::size_t>(k - dd)] = q;
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  return AlphaPoly(std::move(quot));
}

AlphaPoly divide_exact(const AlphaPoly& p, const AlphaPoly& d) {
  auto q = try_divide(p, d);
  if (!q) throw std::domain_error("inexact polynomial division: (" + p.str() + ") / (" + d.str() + ")");
  return *std::move(q);
}

namespace {

AlphaPoly pseudo_remainder(AlphaPoly a, const AlphaPoly& b) {
  const int db = b.degree();
  const Integer lb = b.leading();
  while (!a.is_zero() && a.degree() >= db) {
    const int shift = a.degree() - db;
    std::vector<Integer> mono(static_cast<std::size_t>(shift + 1), Integer(0));
    mono.back() = a.leading();
    a *= lb;
    a -= AlphaPoly(std::move(mono)) * b;
  }
  return a;
}

}  // namespace

AlphaPoly gcd(const AlphaPoly& a, const AlphaPoly& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  if (a.is_constant() || b.is_constant()) return AlphaPoly(1);
  AlphaPoly x = a.primitive();
  AlphaPoly y = b.primitive();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    AlphaPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive();
  }
  return x.primitive();
}

AlphaRational::AlphaRational(AlphaPoly num, AlphaPoly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

AlphaRational AlphaRational::from_rational(const Rational& q) {
  return {AlphaPoly(Integer(q.get_num())), AlphaPoly(Integer(q.get_den()))};
}

void AlphaRational::normalize() {
  if (den_.is_zero()) throw std::domain_error("zero denominator in rational function");
  if (num_.is_zero()) {
    den_ = AlphaPoly(1);
    return;
  }
  if (!den_.is_constant()) {
    AlphaPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = divide_exact(num_, g);
      den_ = divide_exact(den_, g);
    }
  }
  Integer c = num_.content();
  Integer cd = den_.content();
  mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), cd.get_mpz_t());
  if (den_.leading() < 0) c = -c;
  if (c != 1) {
    std::vector<Integer> nc = num_.coefficients(), dc = den_.coefficients();
    for (auto& v : nc) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
    for (auto& v : dc) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
    num_ = AlphaPoly(std::move(nc));
    den_ = AlphaPoly(std::move(dc));
  }
}

AlphaRational AlphaRational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return {den_, num_};
}

AlphaRational AlphaRational::at_inverse_alpha() const {
  // p(1/a)/q(1/a) = a^(dq-dp) * rev(p)/rev(q)
  const int dp = num_.degree();
  const int dq = den_.degree();
  if (is_zero()) return {};
  AlphaPoly n = num_.reversed(dp);
  AlphaPoly d = den_.reversed(dq);
  std::vector<Integer> shift(static_cast<std::size_t>(std::abs(dq - dp) + 1), Integer(0));
  shift.back() = 1;
  if (dq >= dp)
    n *= AlphaPoly(std::move(shift));
  else
    d *= AlphaPoly(std::move(shift));
  return {std::move(n), std::move(d)};
}

AlphaRational AlphaRational::operator-() const {
  AlphaRational out = *this;
  out.num_ = -out.num_;
  return out;
}

AlphaRational& AlphaRational::operator+=(const AlphaRational& rhs) {
  if (rhs.is_zero()) return *this;
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
  }
  normalize();
  return *this;
}

AlphaRational& AlphaRational::operator-=(const AlphaRational& rhs) { return *this += -rhs; }

AlphaRational& AlphaRational::operator*=(const AlphaRational& rhs) {
  num_ = num_ * rhs.num_;
  den_ = den_ * rhs.den_;
  normalize();
  return *this;
}

AlphaRational& AlphaRational::operator/=(const AlphaRational& rhs) { return *this *= rhs.inverse(); }

namespace {

std::string wrap(const AlphaPoly& p, Style style) {
  std::string s = p.str(style);
  int terms = 0;
  for (const auto& c : p.coefficients()) terms += c != 0;
  return terms > 1 ? "(" + s + ")" : s;
}

}  // namespace

std::string AlphaRational::str(Style style) const {
  if (den_ == AlphaPoly(1)) return num_.str(style);
  if (style == Style::latex) return "\\frac{" + num_.str(style) + "}{" + den_.str(style) + "}";
  return wrap(num_, style) + " / " + wrap(den_, style);
}

AlphaRational pow(const AlphaRational& base, int exponent) {
  AlphaRational b = exponent < 0 ? base.inverse() : base;
  AlphaRational out(1);
  for (int k = 0; k < std::abs(exponent); ++k) out *= b;
  return out;
}

}  // namespace sjack
