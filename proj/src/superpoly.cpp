#include "sjack/superpoly.hpp"

#include <algorithm>
#include <numeric>

namespace sjack {

int SuperMonomial::degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }

std::string SuperMonomial::str() const {
  std::string out;
  if (!theta.empty()) {
    out += "theta[";
    for (std::size_t i = 0; i < theta.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(theta[i]);
    }
    out += "]";
  }
  std::string xs;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (!exps[i]) continue;
    if (!xs.empty()) xs += "*";
    xs += "x" + std::to_string(i + 1);
    if (exps[i] > 1) xs += "^" + std::to_string(exps[i]);
  }
  if (!out.empty() && !xs.empty()) out += " * ";
  return out + xs;
}

SuperMonomial leading_monomial(const std::vector<int>& exps, int m) {
  SuperMonomial mono;
  for (int i = 1; i <= m; ++i) mono.theta.push_back(static_cast<std::uint8_t>(i));
  for (int e : exps) mono.exps.push_back(static_cast<std::uint8_t>(e));
  return mono;
}

SuperMonomial canonical_monomial(const Superpartition& sp, int n_vars) {
  if (n_vars < sp.length()) throw std::invalid_argument("not enough variables for " + sp.str());
  std::vector<int> exps = sp.fermionic();
  exps.insert(exps.end(), sp.symmetric().parts().begin(), sp.symmetric().parts().end());
  exps.resize(static_cast<std::size_t>(n_vars), 0);
  return leading_monomial(exps, sp.fermionic_degree());
}

std::optional<Superpartition> as_superpartition(const SuperMonomial& mono) {
  const auto m = mono.theta.size();
  for (std::size_t i = 0; i < m; ++i)
    if (mono.theta[i] != i + 1) return std::nullopt;
  std::vector<int> ferm(mono.exps.begin(), mono.exps.begin() + static_cast<std::ptrdiff_t>(m));
  std::vector<int> sym(mono.exps.begin() + static_cast<std::ptrdiff_t>(m), mono.exps.end());
  for (std::size_t i = 1; i < ferm.size(); ++i)
    if (ferm[i] >= ferm[i - 1]) return std::nullopt;
  for (std::size_t i = 1; i < sym.size(); ++i)
    if (sym[i] > sym[i - 1]) return std::nullopt;
  return Superpartition(std::move(ferm), Partition(std::move(sym)));
}

std::pair<int, SuperMonomial> multiply(const SuperMonomial& l, const SuperMonomial& r) {
  if (l.exps.size() != r.exps.size()) throw std::invalid_argument("monomials with different variable counts");
  SuperMonomial out;
  out.theta = l.theta;
  out.theta.insert(out.theta.end(), r.theta.begin(), r.theta.end());
  const int sign = sort_with_sign(out.theta);
  if (sign == 0) return {0, {}};
  out.exps.resize(l.exps.size());
  for (std::size_t i = 0; i < l.exps.size(); ++i) out.exps[i] = static_cast<std::uint8_t>(l.exps[i] + r.exps[i]);
  return {sign, std::move(out)};
}

std::pair<int, SuperMonomial> permute(const std::vector<int>& perm, const SuperMonomial& mono) {
  SuperMonomial out;
  out.exps.resize(mono.exps.size());
  for (std::size_t i = 0; i < mono.exps.size(); ++i) out.exps[static_cast<std::size_t>(perm[i])] = mono.exps[i];
  out.theta.reserve(mono.theta.size());
  for (auto t : mono.theta) out.theta.push_back(static_cast<std::uint8_t>(perm[t - 1] + 1));
  const int sign = sort_with_sign(out.theta);
  return {sign, std::move(out)};
}

SuperPolynomial monomial_basis(const Superpartition& sp, int n_vars) {
  const SuperMonomial lead = canonical_monomial(sp, n_vars);
  const int m = sp.fermionic_degree();
  // fermion i is labelled -(i+1); bosonic slots by their exponent
  std::vector<int> labels;
  for (int i = 0; i < m; ++i) labels.push_back(-(i + 1));
  for (int k = m; k < n_vars; ++k) labels.push_back(lead.exps[static_cast<std::size_t>(k)]);
  std::sort(labels.begin(), labels.end());
  SuperPolynomial out(n_vars);
  std::vector<std::uint8_t> theta_pos(static_cast<std::size_t>(m));
  do {
    SuperMonomial mono;
    mono.exps.resize(static_cast<std::size_t>(n_vars));
    for (int k = 0; k < n_vars; ++k) {
      const int lab = labels[static_cast<std::size_t>(k)];
      if (lab < 0) {
        const int f = -lab - 1;
        theta_pos[static_cast<std::size_t>(f)] = static_cast<std::uint8_t>(k + 1);
        mono.exps[static_cast<std::size_t>(k)] = lead.exps[static_cast<std::size_t>(f)];
      } else {
        mono.exps[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(lab);
      }
    }
    mono.theta = theta_pos;
    const int sign = sort_with_sign(mono.theta);
    out.add_term(mono, AlphaRational(sign));
  } while (std::next_permutation(labels.begin(), labels.end()));
  return out;
}

SuperPolynomial monomial_basis_direct(const Superpartition& sp, int n_vars) {
  SuperPolynomial seed(n_vars);
  seed.add_term(canonical_monomial(sp, n_vars), AlphaRational(1));
  SuperPolynomial sum = symmetrize(seed);
  return sum * AlphaRational(AlphaPoly(1), AlphaPoly(f_lambda_s(sp, n_vars)));
}

AlphaRational extract_coeff(const SuperPolynomial& f, const SuperMonomial& mono) { return f.coeff(mono); }

}  // namespace sjack
