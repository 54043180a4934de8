#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sjack/alpha_poly.hpp"
#include "sjack/partition.hpp"
#include "sjack/permutation.hpp"

namespace sjack {

/// theta_{t1} ... theta_{tk} x_1^{e1} ... x_N^{eN} with t strictly increasing (1-based).
/// Any reordering sign lives in the coefficient, never in the key.
struct SuperMonomial {
  std::vector<std::uint8_t> theta;
  std::vector<std::uint8_t> exps;

  int fermionic_degree() const { return static_cast<int>(theta.size()); }
  int degree() const;
  std::string str() const;
  friend auto operator<=>(const SuperMonomial&, const SuperMonomial&) = default;
};

/// theta_1 ... theta_m x^exps
SuperMonomial leading_monomial(const std::vector<int>& exps, int m);
/// theta_1 ... theta_m x^Lambda in N variables.
SuperMonomial canonical_monomial(const Superpartition& sp, int n_vars);
/// Reads back the superpartition of a canonical monomial; nullopt if the key is not canonical.
std::optional<Superpartition> as_superpartition(const SuperMonomial& mono);

/// Product of two monomials as (sign, monomial); sign is 0 when a theta repeats.
std::pair<int, SuperMonomial> multiply(const SuperMonomial& l, const SuperMonomial& r);
/// K_sigma on a monomial; perm[i] is the 0-based image of variable i.
std::pair<int, SuperMonomial> permute(const std::vector<int>& perm, const SuperMonomial& mono);

/// Polynomial in N commuting x's and N anticommuting thetas with coefficients in C.
template <class C>
class BasicSuperPoly {
 public:
  using TermMap = std::map<SuperMonomial, C>;

  explicit BasicSuperPoly(int n_vars = 0) : n_vars_(n_vars) {}

  static BasicSuperPoly constant(int n_vars, const C& c) {
    BasicSuperPoly p(n_vars);
    p.add_term(SuperMonomial{{}, std::vector<std::uint8_t>(static_cast<std::size_t>(n_vars), 0)}, c);
    return p;
  }
  static BasicSuperPoly theta(int n_vars, int i) {
    BasicSuperPoly p(n_vars);
    SuperMonomial m{{static_cast<std::uint8_t>(i)}, std::vector<std::uint8_t>(static_cast<std::size_t>(n_vars), 0)};
    p.add_term(m, C(1));
    return p;
  }
  static BasicSuperPoly x(int n_vars, int i, int power = 1) {
    BasicSuperPoly p(n_vars);
    SuperMonomial m{{}, std::vector<std::uint8_t>(static_cast<std::size_t>(n_vars), 0)};
    m.exps[static_cast<std::size_t>(i - 1)] = static_cast<std::uint8_t>(power);
    p.add_term(m, C(1));
    return p;
  }

  int n_vars() const { return n_vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  C coeff(const SuperMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? C(0) : it->second;
  }

  void add_term(const SuperMonomial& m, const C& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  BasicSuperPoly& operator+=(const BasicSuperPoly& rhs) {
    check(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
  }
  BasicSuperPoly& operator-=(const BasicSuperPoly& rhs) {
    check(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
  }
  BasicSuperPoly& operator*=(const C& scalar) {
    if (is_zero(scalar)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
  }
  friend BasicSuperPoly operator+(BasicSuperPoly l, const BasicSuperPoly& r) { return l += r; }
  friend BasicSuperPoly operator-(BasicSuperPoly l, const BasicSuperPoly& r) { return l -= r; }
  friend BasicSuperPoly operator*(BasicSuperPoly l, const C& s) { return l *= s; }
  friend bool operator==(const BasicSuperPoly& l, const BasicSuperPoly& r) {
    return l.n_vars_ == r.n_vars_ && l.terms_ == r.terms_;
  }

  /// Product in the superalgebra: thetas anticommute and square to zero.
  friend BasicSuperPoly operator*(const BasicSuperPoly& l, const BasicSuperPoly& r) {
    l.check(r);
    BasicSuperPoly out(l.n_vars_);
    for (const auto& [ml, cl] : l.terms_)
      for (const auto& [mr, cr] : r.terms_) {
        auto [sign, mono] = multiply(ml, mr);
        if (sign == 0) continue;
        C c = cl * cr;
        if (sign < 0) c = -c;
        out.add_term(mono, c);
      }
    return out;
  }

  template <class F>
  auto map_coefficients(F&& fn) const {
    using D = decltype(fn(std::declval<const C&>()));
    BasicSuperPoly<D> out(n_vars_);
    for (const auto& [m, c] : terms_) out.add_term(m, fn(c));
    return out;
  }

  /// "c * theta[1,2] * x1^2*x3 + ..." in key order.
  std::string str(Style style = Style::text) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      if (!out.empty()) out += " + ";
      std::string cs = c.str(style);
      if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
      out += cs;
      const std::string ms = m.str();
      if (!ms.empty()) out += " * " + ms;
    }
    return out;
  }

 private:
  static bool is_zero(const C& c) { return sjack::is_zero(c); }
  void check(const BasicSuperPoly& other) const {
    if (other.n_vars_ != n_vars_) throw std::invalid_argument("superpolynomials with different variable counts");
  }

  int n_vars_ = 0;
  TermMap terms_;
};

using SuperPolynomial = BasicSuperPoly<AlphaRational>;

/// K_sigma f: x_i -> x_{sigma(i)}, theta_i -> theta_{sigma(i)}; perm is 0-based.
template <class C>
BasicSuperPoly<C> apply_K(const std::vector<int>& perm, const BasicSuperPoly<C>& f) {
  if (static_cast<int>(perm.size()) != f.n_vars()) throw std::invalid_argument("permutation size mismatch");
  BasicSuperPoly<C> out(f.n_vars());
  for (const auto& [m, c] : f.terms()) {
    auto [sign, mono] = permute(perm, m);
    out.add_term(mono, sign > 0 ? c : -c);
  }
  return out;
}

/// Sum of K_w f over all w in S_N.
template <class C>
BasicSuperPoly<C> symmetrize(const BasicSuperPoly<C>& f) {
  BasicSuperPoly<C> out(f.n_vars());
  for_each_permutation(f.n_vars(), [&](const std::vector<int>& perm) {
    for (const auto& [m, c] : f.terms()) {
      auto [sign, mono] = permute(perm, m);
      out.add_term(mono, sign > 0 ? c : -c);
    }
  });
  return out;
}

/// m_Lambda in N variables, built from the distinct images of theta_1...theta_m x^Lambda.
SuperPolynomial monomial_basis(const Superpartition& sp, int n_vars);
/// m_Lambda as (1/f) * sum over all of S_N; slow reference for the orbit construction.
SuperPolynomial monomial_basis_direct(const Superpartition& sp, int n_vars);

AlphaRational extract_coeff(const SuperPolynomial& f, const SuperMonomial& mono);

}  // namespace sjack
