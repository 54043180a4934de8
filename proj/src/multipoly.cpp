#include "sjack/multipoly.hpp"

#include <stdexcept>

#include "sjack/permutation.hpp"

namespace sjack {

MultiPoly::MultiPoly(PolyRing ring, const Integer& constant) : ring_(ring) {
  if (constant != 0) terms_.emplace(Exponents(static_cast<std::size_t>(ring.size()), 0), constant);
}

MultiPoly MultiPoly::a(PolyRing ring, int i) {
  if (i < 1 || i > ring.a_count) throw std::out_of_range("a_" + std::to_string(i) + " not in ring");
  MultiPoly p(ring);
  Exponents e(static_cast<std::size_t>(ring.size()), 0);
  e[static_cast<std::size_t>(i - 1)] = 1;
  p.terms_.emplace(std::move(e), 1);
  return p;
}

MultiPoly MultiPoly::b(PolyRing ring, int j) {
  if (j < 1 || j > ring.b_count) throw std::out_of_range("b_" + std::to_string(j) + " not in ring");
  MultiPoly p(ring);
  Exponents e(static_cast<std::size_t>(ring.size()), 0);
  e[static_cast<std::size_t>(ring.a_count + j - 1)] = 1;
  p.terms_.emplace(std::move(e), 1);
  return p;
}

Integer MultiPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

bool MultiPoly::mentions_b(int j) const {
  const auto idx = static_cast<std::size_t>(ring_.a_count + j - 1);
  for (const auto& [e, c] : terms_)
    if (e[idx] > 0) return true;
  return false;
}

void MultiPoly::add_term(const Exponents& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::check_ring(const MultiPoly& other) const {
  if (!(ring_ == other.ring_)) throw std::invalid_argument("polynomials from different rings");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  check_ring(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  check_ring(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Integer& rhs) {
  if (rhs == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= rhs;
  return *this;
}

MultiPoly operator*(const MultiPoly& l, const MultiPoly& r) {
  l.check_ring(r);
  MultiPoly out(l.ring_);
  MultiPoly::Exponents e(static_cast<std::size_t>(l.ring_.size()));
  for (const auto& [el, cl] : l.terms_)
    for (const auto& [er, cr] : r.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = static_cast<std::uint8_t>(el[k] + er[k]);
      out.add_term(e, cl * cr);
    }
  return out;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  if (static_cast<int>(images.size()) != ring_.size()) throw std::invalid_argument("substitution arity mismatch");
  const PolyRing target = images.empty() ? ring_ : images.front().ring();
  // powers[k][p] = images[k]^p, built lazily
  std::vector<std::vector<MultiPoly>> powers(images.size());
  auto power = [&](std::size_t k, int p) -> const MultiPoly& {
    auto& cache = powers[k];
    if (cache.empty()) cache.emplace_back(target, 1);
    while (static_cast<int>(cache.size()) <= p) cache.push_back(cache.back() * images[k]);
    return cache[static_cast<std::size_t>(p)];
  };
  MultiPoly out(target);
  for (const auto& [e, c] : terms_) {
    MultiPoly term(target, c);
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k]) term = term * power(k, e[k]);
    out += term;
  }
  return out;
}

MultiPoly MultiPoly::widen(PolyRing target) const {
  if (target.a_count < ring_.a_count || target.b_count < ring_.b_count)
    throw std::invalid_argument("cannot widen into a smaller ring");
  MultiPoly out(target);
  for (const auto& [e, c] : terms_) {
    Exponents w(static_cast<std::size_t>(target.size()), 0);
    for (int i = 0; i < ring_.a_count; ++i) w[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i)];
    for (int j = 0; j < ring_.b_count; ++j)
      w[static_cast<std::size_t>(target.a_count + j)] = e[static_cast<std::size_t>(ring_.a_count + j)];
    out.add_term(w, c);
  }
  return out;
}

std::string MultiPoly::str(Style style) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (int k = 0; k < ring_.size(); ++k) {
      const int p = e[static_cast<std::size_t>(k)];
      if (!p) continue;
      const bool is_a = k < ring_.a_count;
      const int idx = is_a ? k + 1 : k - ring_.a_count + 1;
      std::string var;
      if (style == Style::latex) {
        var = std::string(is_a ? "a" : "b") + "_{" + std::to_string(idx) + "}";
        if (p > 1) var += "^{" + std::to_string(p) + "}";
        if (!mono.empty()) mono += " ";
      } else {
        var = std::string(is_a ? "a" : "b") + "_" + std::to_string(idx);
        if (p > 1) var += "^" + std::to_string(p);
        if (!mono.empty()) mono += "*";
      }
      mono += var;
    }
    const Integer mag = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (mono.empty())
      out += mag.get_str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.get_str() + (style == Style::latex ? " " : "*") + mono;
  }
  return out;
}

MultiPoly substitute_b(const MultiPoly& p, const std::map<int, MultiPoly>& rules) {
  const PolyRing ring = p.ring();
  std::vector<MultiPoly> images;
  images.reserve(static_cast<std::size_t>(ring.size()));
  for (int i = 1; i <= ring.a_count; ++i) images.push_back(MultiPoly::a(ring, i));
  for (int j = 1; j <= ring.b_count; ++j) {
    auto it = rules.find(j);
    images.push_back(it == rules.end() ? MultiPoly::b(ring, j) : it->second);
  }
  return p.substitute(images);
}

MultiPoly shift_b(const MultiPoly& p) {
  const PolyRing ring = p.ring();
  if (ring.b_count > 0 && p.mentions_b(ring.b_count))
    throw std::out_of_range("b shift would leave the ring");
  std::map<int, MultiPoly> rules;
  for (int j = 1; j < ring.b_count; ++j) rules.emplace(j, MultiPoly::b(ring, j + 1));
  return substitute_b(p, rules);
}

std::optional<MultiPoly> try_divide(const MultiPoly& p, const MultiPoly& d) {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (!(p.ring() == d.ring())) throw std::invalid_argument("polynomials from different rings");
  const auto& [lead_e, lead_c] = *d.terms().begin();
  MultiPoly rem = p;
  MultiPoly quot(p.ring());
  MultiPoly::Exponents e(lead_e.size());
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms().begin();
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (re[k] < lead_e[k]) return std::nullopt;
      e[k] = static_cast<std::uint8_t>(re[k] - lead_e[k]);
    }
    if (!mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t())) return std::nullopt;
    Integer q;
    mpz_divexact(q.get_mpz_t(), rc.get_mpz_t(), lead_c.get_mpz_t());
    MultiPoly t(p.ring());
    t.add_term(e, q);
    rem -= t * d;
    quot += t;
  }
  return quot;
}

MultiPoly det(const PolyMatrix& input) {
  const std::size_t n = input.size();
  for (const auto& row : input)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
  const PolyRing ring = input[0][0].ring();
  PolyMatrix m = input;
  MultiPoly prev(ring, 1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k].is_zero()) ++pivot;
      if (pivot == n) return MultiPoly(ring);
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        auto q = try_divide(num, prev);
        if (!q) throw std::logic_error("Bareiss step not exact");
        m[i][j] = *std::move(q);
      }
      m[i][k] = MultiPoly(ring);
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

MultiPoly det_expand(const PolyMatrix& m) {
  const int n = static_cast<int>(m.size());
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
  const PolyRing ring = m[0][0].ring();
  MultiPoly out(ring);
  for_each_permutation(n, [&](const std::vector<int>& sigma) {
    MultiPoly term(ring, permutation_sign(sigma));
    for (int i = 0; i < n && !term.is_zero(); ++i)
      term = term * m[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])][static_cast<std::size_t>(i)];
    out += term;
  });
  return out;
}

}  // namespace sjack
