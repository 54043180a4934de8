#include "sjack/superjack.hpp"

#include <mutex>
#include <stdexcept>

#include "sjack/nonsym_jack.hpp"

namespace sjack {

int default_n_vars(int n, int m) {
  const int ell = n - m * (m - 1) / 2;
  if (ell < 0) throw std::invalid_argument("no superpartitions of degree " + std::to_string(n) + " with m = " + std::to_string(m));
  return std::max(1, ell + m);
}

int default_n_vars(const Superpartition& sp) { return default_n_vars(sp.degree(), sp.fermionic_degree()); }

namespace {

int sector_sign(int m) { return (m * (m - 1) / 2) % 2 == 0 ? 1 : -1; }

void check_n_vars(const Superpartition& sp, int n_vars) {
  if (n_vars < sp.length() || n_vars < 1)
    throw std::invalid_argument(std::to_string(n_vars) + " variables are too few for " + sp.str());
}

}  // namespace

SuperPolynomial jack_poly(const Superpartition& sp, int n_vars, int jobs) {
  check_n_vars(sp, n_vars);
  const int m = sp.fermionic_degree();
  const NonsymJack e = nonsym_jack(tilde(sp, n_vars), jobs);
  BasicSuperPoly<AlphaPoly> seed(n_vars);
  for (const auto& [ev, num] : e.numerators) seed.add_term(leading_monomial(ev, m), num);
  const BasicSuperPoly<AlphaPoly> sum = symmetrize(seed);
  AlphaPoly den = e.denominator * AlphaPoly(f_lambda_s(sp, n_vars));
  if (sector_sign(m) < 0) den = -den;
  // one normalization per distinct denominator is enough; AlphaRational reduces each term
  return sum.map_coefficients([&](const AlphaPoly& c) { return AlphaRational(c, den); });
}

std::map<Superpartition, AlphaRational> m_expand(const SuperPolynomial& f) {
  std::map<Superpartition, AlphaRational> out;
  SuperPolynomial rest = f;
  while (!rest.is_zero()) {
    std::optional<Superpartition> top;
    AlphaRational c;
    for (auto it = rest.terms().rbegin(); it != rest.terms().rend(); ++it) {
      auto sp = as_superpartition(it->first);
      if (sp && (!top || *sp > *top)) {
        top = std::move(sp);
        c = it->second;
      }
    }
    if (!top) throw std::domain_error("polynomial is not symmetric: no canonical monomial left in " + rest.str());
    rest -= monomial_basis(*top, f.n_vars()) * c;
    out.emplace(*top, c);
  }
  return out;
}

SuperPolynomial m_synthesize(const std::map<Superpartition, AlphaRational>& coeffs, int n_vars) {
  SuperPolynomial out(n_vars);
  for (const auto& [sp, c] : coeffs) out += monomial_basis(sp, n_vars) * c;
  return out;
}

JackExpansion jack_super(const Superpartition& sp, int n_vars, int jobs) {
  JackExpansion out{sp, n_vars, jack_poly(sp, n_vars, jobs), {}};
  out.m_basis = m_expand(out.poly);
  return out;
}

AlphaRational c_min_from_poly(const Superpartition& sp, const SuperPolynomial& jack) {
  const int n = sp.degree();
  const int m = sp.fermionic_degree();
  const Superpartition lmin = lambda_min(n, m);
  if (jack.n_vars() < lmin.length()) throw std::invalid_argument("too few variables to see Lambda_min");
  const AlphaRational c = jack.coeff(canonical_monomial(lmin, jack.n_vars()));
  return c * AlphaRational(AlphaPoly(1), AlphaPoly(Integer(factorial(sp.ell_nm()))));
}

AlphaRational c_min_via_expansion(const Superpartition& sp, int jobs) {
  return c_min_from_poly(sp, jack_poly(sp, default_n_vars(sp), jobs));
}

std::vector<AlphaPoly> c_min_factors(const Superpartition& sp) {
  std::vector<AlphaPoly> out;
  for (const auto& h : arm_leg_circ(sp)) out.push_back(h.value());
  return out;
}

AlphaRational c_min_closed(const Superpartition& sp) {
  AlphaPoly den(1);
  for (const auto& f : c_min_factors(sp)) den *= f;
  return AlphaRational(AlphaPoly(1), den);
}

std::string c_min_closed_str(const Superpartition& sp, Style style) {
  Integer constant = 1;
  std::vector<std::string> parts;
  for (const auto& f : c_min_factors(sp)) {
    if (f.is_constant()) {
      constant *= f.coeff(0);
      continue;
    }
    parts.push_back("(" + f.str(style) + ")");
  }
  if (constant != 1 || parts.empty()) parts.insert(parts.begin(), constant.get_str());
  std::string den;
  for (std::size_t i = 0; i < parts.size(); ++i) den += (i && style == Style::text ? "*" : "") + parts[i];
  if (style == Style::latex) return "\\frac{1}{" + den + "}";
  if (den == "1") return "1";
  return parts.size() == 1 ? "1 / " + den : "1 / (" + den + ")";
}

CheckReport verify_lemma2(const Superpartition& sp) {
  CheckReport report;
  const int n_vars = default_n_vars(sp);
  const int m = sp.fermionic_degree();
  const Composition eta = tilde(sp, n_vars);

  AlphaPoly lhs_num = hook_product(eta);
  for (int v = 1; v <= (sp.symmetric().empty() ? 0 : sp.symmetric().part(1)); ++v) {
    const int mult = sp.symmetric().multiplicity(v);
    lhs_num *= Integer(factorial(mult));
  }
  AlphaPoly lhs_den(1);
  for (const auto& f : c_min_factors(sp)) lhs_den *= f;

  AlphaPoly rhs(1);
  for (int i = n_vars - sp.symmetric().length() + 1; i <= n_vars; ++i) rhs *= hook_d(eta, {i, 1});
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j < i; ++j) rhs *= hook_d(eta, {i, eta.row(j) + 1});

  const AlphaRational lhs(lhs_num, lhs_den);
  report.expect(lhs == AlphaRational(rhs),
                sp.str() + ": left side " + lhs.str() + " differs from right side " + rhs.str());
  return report;
}

std::map<Superpartition, SuperPolynomial> powersum_basis(int n, int m, int n_vars) {
  std::map<Superpartition, SuperPolynomial> out;
  std::map<int, SuperPolynomial> ptilde;
  std::map<int, SuperPolynomial> p;
  auto get_ptilde = [&](int k) -> const SuperPolynomial& {
    auto it = ptilde.find(k);
    if (it == ptilde.end()) it = ptilde.emplace(k, monomial_basis(Superpartition({k}, Partition()), n_vars)).first;
    return it->second;
  };
  auto get_p = [&](int k) -> const SuperPolynomial& {
    auto it = p.find(k);
    if (it == p.end()) it = p.emplace(k, monomial_basis(Superpartition({}, Partition({k})), n_vars)).first;
    return it->second;
  };
  for (const auto& sp : superpartitions(n, m)) {
    SuperPolynomial prod = SuperPolynomial::constant(n_vars, AlphaRational(1));
    for (int k : sp.fermionic()) prod = prod * get_ptilde(k);
    for (int k : sp.symmetric().parts()) prod = prod * get_p(k);
    out.emplace(sp, std::move(prod));
  }
  return out;
}

namespace {

// Inverse transpose of the integer matrix A[Lambda][Omega] = [theta_1..theta_m x^Omega] p_Lambda,
// so that the p-coordinates of f are inv * (m-coordinates of f).
struct PowerSumSector {
  std::vector<Superpartition> basis;
  std::vector<std::vector<Rational>> inv;
};

const PowerSumSector& power_sum_sector(int n, int m, int n_vars) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, PowerSumSector> cache;
  std::lock_guard lock(mutex);
  const auto key = std::make_tuple(n, m, n_vars);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  PowerSumSector s;
  s.basis = superpartitions(n, m);
  const std::size_t d = s.basis.size();
  const auto ps = powersum_basis(n, m, n_vars);
  // augmented [A^T | I], reduced with exact rational pivots
  std::vector<std::vector<Rational>> a(d, std::vector<Rational>(2 * d));
  for (std::size_t r = 0; r < d; ++r) {
    const SuperPolynomial& pl = ps.at(s.basis[r]);
    for (std::size_t c = 0; c < d; ++c) {
      const AlphaRational v = pl.coeff(canonical_monomial(s.basis[c], n_vars));
      if (!v.den().is_constant() || !v.num().is_constant()) throw std::logic_error("power sums should have integer coefficients");
      a[c][r] = Rational(v.num().coeff(0), v.den().coeff(0));
    }
  }
  for (std::size_t i = 0; i < d; ++i) a[i][d + i] = 1;
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    while (piv < d && a[piv][col] == 0) ++piv;
    if (piv == d) throw std::domain_error("power-sum basis is singular in " + std::to_string(n_vars) + " variables");
    std::swap(a[piv], a[col]);
    const Rational inv_p = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv_p;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t k = 0; k < 2 * d; ++k) a[r][k] -= f * a[col][k];
    }
  }
  s.inv.assign(d, std::vector<Rational>(d));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) s.inv[r][c] = a[r][d + c];
  return cache.emplace(key, std::move(s)).first->second;
}

std::pair<int, int> sector_of(const SuperPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial has no sector");
  const auto& mono = f.terms().begin()->first;
  const int n = mono.degree();
  const int m = mono.fermionic_degree();
  for (const auto& [k, c] : f.terms())
    if (k.degree() != n || k.fermionic_degree() != m) throw std::invalid_argument("polynomial is not homogeneous");
  return {n, m};
}

}  // namespace

std::map<Superpartition, AlphaRational> p_expand(const SuperPolynomial& f, int n, int m) {
  const int n_vars = f.n_vars();
  if (n_vars < n - m * (m - 1) / 2 + m)
    throw std::domain_error("need at least ell_{n,m} + m variables for the power-sum expansion");
  const auto& s = power_sum_sector(n, m, n_vars);
  const auto mcoeffs = m_expand(f);
  for (const auto& [sp, c] : mcoeffs)
    if (sp.degree() != n || sp.fermionic_degree() != m) throw std::invalid_argument("polynomial leaves the sector");
  std::vector<AlphaRational> fv;
  for (const auto& sp : s.basis) {
    auto it = mcoeffs.find(sp);
    fv.push_back(it == mcoeffs.end() ? AlphaRational(0) : it->second);
  }
  std::map<Superpartition, AlphaRational> out;
  for (std::size_t r = 0; r < s.basis.size(); ++r) {
    AlphaRational acc;
    for (std::size_t c = 0; c < s.basis.size(); ++c)
      if (s.inv[r][c] != 0 && !fv[c].is_zero()) acc += fv[c] * AlphaRational::from_rational(s.inv[r][c]);
    if (!acc.is_zero()) out.emplace(s.basis[r], acc);
  }
  return out;
}

AlphaRational scalar_product(const SuperPolynomial& f, const SuperPolynomial& g, int n, int m) {
  if (f.n_vars() != g.n_vars()) throw std::invalid_argument("superpolynomials with different variable counts");
  const auto cf = p_expand(f, n, m);
  const auto cg = p_expand(g, n, m);
  AlphaRational out;
  for (const auto& [sp, c] : cf) {
    auto it = cg.find(sp);
    if (it != cg.end()) out += c * it->second * AlphaRational(z_lambda(sp));
  }
  return sector_sign(m) > 0 ? out : -out;
}

AlphaRational scalar_product(const SuperPolynomial& f, const SuperPolynomial& g) {
  if (f.is_zero() || g.is_zero()) return AlphaRational(0);
  const auto [n, m] = sector_of(f);
  if (sector_of(g) != std::make_pair(n, m)) return AlphaRational(0);
  return scalar_product(f, g, n, m);
}

AlphaRational expected_norm(const Superpartition& sp, NormConvention convention) {
  const int m = sp.fermionic_degree();
  AlphaRational out = pow(AlphaRational(AlphaPoly::alpha()), m + sp.ell_nm()) * c_min_closed(sp) /
                      c_min_closed(conjugate(sp)).at_inverse_alpha();
  if (convention == NormConvention::sector_signed && sector_sign(m) < 0) out = -out;
  return out;
}

SectorNorms sector_norms(int n, int m, int jobs) {
  SectorNorms out;
  out.n = n;
  out.m = m;
  out.basis = superpartitions(n, m);
  const int n_vars = default_n_vars(n, m);
  std::vector<std::map<Superpartition, AlphaRational>> coords;
  for (const auto& sp : out.basis) coords.push_back(p_expand(jack_poly(sp, n_vars, jobs), n, m));
  const std::size_t d = out.basis.size();
  out.gram.assign(d, std::vector<AlphaRational>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      AlphaRational acc;
      for (const auto& [sp, c] : coords[i]) {
        auto it = coords[j].find(sp);
        if (it != coords[j].end()) acc += c * it->second * AlphaRational(z_lambda(sp));
      }
      out.gram[i][j] = sector_sign(m) > 0 ? acc : -acc;
    }
  return out;
}

CheckReport verify_sector_norms(const SectorNorms& s, NormConvention convention) {
  CheckReport report;
  for (std::size_t i = 0; i < s.basis.size(); ++i)
    for (std::size_t j = 0; j < s.basis.size(); ++j) {
      if (i == j) {
        const AlphaRational want = expected_norm(s.basis[i], convention);
        report.expect(s.gram[i][i] == want, "<<J|J>> for " + s.basis[i].str() + " is " + s.gram[i][i].str() +
                                                 ", expected " + want.str());
      } else {
        report.expect(s.gram[i][j].is_zero(), "<<J" + s.basis[i].str() + "|J" + s.basis[j].str() +
                                                  ">> = " + s.gram[i][j].str() + ", expected 0");
      }
    }
  return report;
}

CheckReport verify_norm(const Superpartition& sp, int jobs, NormConvention convention) {
  const SectorNorms s = sector_norms(sp.degree(), sp.fermionic_degree(), jobs);
  CheckReport full = verify_sector_norms(s, convention);
  CheckReport report;
  report.checked = static_cast<long long>(s.basis.size());
  const std::string tag = sp.str();
  for (const auto& f : full.failures)
    if (f.find(tag) != std::string::npos) report.fail(f);
  return report;
}

}  // namespace sjack
