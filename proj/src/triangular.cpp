#include "sjack/triangular.hpp"

#include <stdexcept>

#include "sjack/permutation.hpp"

namespace sjack {

int GammaVector::ones_upto(int j) const {
  int r = 0;
  for (int k = 1; k <= j && k <= static_cast<int>(bits.size()); ++k) r += bits[static_cast<std::size_t>(k - 1)];
  return r;
}

int GammaVector::last_one() const {
  for (int k = static_cast<int>(bits.size()); k >= 1; --k)
    if (bits[static_cast<std::size_t>(k - 1)]) return k;
  return 0;
}

GammaVector GammaVector::cleared_last() const {
  GammaVector out = *this;
  if (const int k = last_one()) out.bits[static_cast<std::size_t>(k - 1)] = 0;
  return out;
}

std::map<int, MultiPoly> GammaVector::b_rules(PolyRing ring) const {
  std::map<int, MultiPoly> rules;
  for (int j = 1; j <= static_cast<int>(bits.size()); ++j)
    if (bits[static_cast<std::size_t>(j - 1)]) rules.emplace(j, MultiPoly(ring, 1) - MultiPoly::a(ring, ones_upto(j)));
  return rules;
}

std::string GammaVector::str() const {
  std::string out;
  for (int b : bits) out += b ? '1' : '0';
  return out;
}

GammaVector parse_gamma(std::string_view bits) {
  GammaVector g;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("gamma must be a string of 0s and 1s");
    g.bits.push_back(c - '0');
  }
  return g;
}

GammaVector zero_gamma(int m) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  return GammaVector{std::vector<int>(static_cast<std::size_t>(m - 1), 0)};
}

std::vector<GammaVector> all_gammas(int m) {
  std::vector<GammaVector> out;
  const int len = m - 1;
  for (int mask = 0; mask < (1 << len); ++mask) {
    GammaVector g = zero_gamma(m);
    for (int k = 0; k < len; ++k) g.bits[static_cast<std::size_t>(k)] = (mask >> (len - 1 - k)) & 1;
    out.push_back(std::move(g));
  }
  return out;
}

std::string tableau_str(const TriangularTableau& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += "(";
    for (std::size_t j = 0; j < t[i].size(); ++j) {
      if (j) out += ",";
      out += std::to_string(t[i][j]);
    }
    out += ")";
  }
  return out + ")";
}

bool is_compatible(const std::vector<int>& lambda, const GammaVector& gamma) {
  const int m = gamma.m();
  for (std::size_t u = 0; u < lambda.size(); ++u) {
    if (lambda[u] < 1 || lambda[u] > m) return false;
    if (u && lambda[u] > lambda[u - 1]) return false;
    if (u && lambda[u] <= gamma.ones_upto(static_cast<int>(u))) return false;
  }
  return true;
}

bool is_triangular(const TriangularTableau& t, const GammaVector& gamma) {
  const int m = gamma.m();
  if (static_cast<int>(t.size()) != m) return false;
  std::vector<int> first;
  for (int i = 1; i <= m; ++i) {
    const auto& row = t[static_cast<std::size_t>(i - 1)];
    if (static_cast<int>(row.size()) != i || !is_compatible(row, gamma)) return false;
    first.push_back(row[0]);
  }
  return is_permutation_of_1_to_n(first);
}

bool is_non_intersecting(const TriangularTableau& t) {
  const std::size_t m = t.size();
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = j; i < m; ++i)
      for (std::size_t k = i + 1; k < m; ++k)
        if (t[i][j] == t[k][j]) return false;
  return true;
}

FactorProduct partition_weight(const std::vector<int>& lambda) {
  FactorProduct w;
  for (std::size_t u = 1; u < lambda.size(); ++u)
    if (lambda[u] == lambda[u - 1]) w.multiply(lambda[u], static_cast<int>(u));
  return w;
}

FactorProduct tableau_weight(const TriangularTableau& t) {
  FactorProduct w;
  std::vector<int> first;
  for (const auto& row : t) {
    first.push_back(row[0]);
    for (const auto& f : partition_weight(row).factors) w.factors.push_back(f);
  }
  w.sign = permutation_sign(first);
  w.normalize();
  return w;
}

std::vector<std::vector<int>> compatible_partitions(int length, int first, const GammaVector& gamma) {
  std::vector<std::vector<int>> out;
  if (length < 1 || first < 1 || first > gamma.m()) return out;
  std::vector<int> cur{first};
  std::function<void()> rec = [&] {
    if (static_cast<int>(cur.size()) == length) {
      out.push_back(cur);
      return;
    }
    const int u = static_cast<int>(cur.size());  // next part is lambda_{u+1}
    const int low = gamma.ones_upto(u) + 1;
    for (int v = cur.back(); v >= low; --v) {
      cur.push_back(v);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

void enumerate_triangular(const GammaVector& gamma, bool non_intersecting_only, const TriangularVisitor& visit) {
  const int m = gamma.m();
  std::vector<std::vector<std::vector<std::vector<int>>>> cand(static_cast<std::size_t>(m + 1));
  for (int i = 1; i <= m; ++i) {
    cand[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(m + 1));
    for (int j = 1; j <= m; ++j) cand[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = compatible_partitions(i, j, gamma);
  }
  TriangularTableau t;
  std::vector<bool> used(static_cast<std::size_t>(m + 1), false);
  std::function<void(int)> rec = [&](int i) {
    if (i > m) {
      visit(t);
      return;
    }
    for (int j = 1; j <= m; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      used[static_cast<std::size_t>(j)] = true;
      for (const auto& lam : cand[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
        if (non_intersecting_only) {
          bool clash = false;
          for (std::size_t prev = 1; prev < t.size() + 1 && !clash; ++prev)
            for (std::size_t c = 0; c < prev && !clash; ++c)
              if (t[prev - 1][c] == lam[c]) clash = true;
          if (clash) continue;
        }
        t.push_back(lam);
        rec(i + 1);
        t.pop_back();
      }
      used[static_cast<std::size_t>(j)] = false;
    }
  };
  rec(1);
}

std::vector<TriangularTableau> enumerate_V(const GammaVector& gamma) {
  std::vector<TriangularTableau> out;
  enumerate_triangular(gamma, true, [&](const TriangularTableau& t) { out.push_back(t); });
  return out;
}

namespace {

// Applies b_j = 1 - a_r factor by factor: (x, j) becomes (x, -r), or drops out when x = r.
FactorProduct specialise(const FactorProduct& w, const GammaVector& gamma) {
  FactorProduct out{w.sign, {}};
  for (const auto& [x, y] : w.factors) {
    if (y > static_cast<int>(gamma.bits.size()) || !gamma.bits[static_cast<std::size_t>(y - 1)]) {
      out.multiply(x, y);
      continue;
    }
    const int r = gamma.ones_upto(y);
    if (x != r) out.multiply(x, -r);
  }
  out.normalize();
  return out;
}

WeightSum weight_sum(const GammaVector& gamma, bool non_intersecting_only) {
  WeightSum s;
  enumerate_triangular(gamma, non_intersecting_only, [&](const TriangularTableau& t) { s.add(tableau_weight(t)); });
  return s;
}

}  // namespace

MultiPoly sigma_free(const GammaVector& gamma) { return weight_sum(gamma, true).expand(PolyRing::for_m(gamma.m())); }

MultiPoly sigma_gamma(const GammaVector& gamma) {
  const PolyRing ring = PolyRing::for_m(gamma.m());
  return weight_sum(gamma, true).expand(ring, gamma.b_rules(ring));
}

MultiPoly sigma_pi(const GammaVector& gamma) { return weight_sum(gamma, false).expand(PolyRing::for_m(gamma.m())); }

MultiPoly P_entry(const GammaVector& gamma, int j, int i) {
  const PolyRing ring = PolyRing::for_m(gamma.m());
  WeightSum s;
  for (const auto& lam : compatible_partitions(i, j, gamma)) s.add(partition_weight(lam));
  return s.expand(ring);
}

PolyMatrix P_matrix(const GammaVector& gamma) {
  const int m = gamma.m();
  PolyMatrix out(static_cast<std::size_t>(m));
  for (int j = 1; j <= m; ++j)
    for (int i = 1; i <= m; ++i) out[static_cast<std::size_t>(j - 1)].push_back(P_entry(gamma, j, i));
  return out;
}

CheckReport identity2_check(const GammaVector& gamma) {
  CheckReport report;
  const PolyRing ring = PolyRing::for_m(gamma.m());
  const MultiPoly lhs = vandermonde_shift(ring, gamma.m());
  const MultiPoly rhs = sigma_gamma(gamma);
  report.expect(lhs == rhs, "gamma=" + gamma.str() + ": Sigma = " + rhs.str() + " but product = " + lhs.str());
  return report;
}

CheckReport det_check(const GammaVector& gamma) {
  CheckReport report;
  const std::string tag = "gamma=" + gamma.str() + ": ";
  const MultiPoly s = sigma_free(gamma);
  const MultiPoly spi = sigma_pi(gamma);
  const PolyMatrix mat = P_matrix(gamma);
  const MultiPoly d = det(mat);
  report.expect(s == spi, tag + "Sigma = " + s.str() + " differs from Sigma_pi = " + spi.str());
  report.expect(spi == d, tag + "Sigma_pi = " + spi.str() + " differs from det M = " + d.str());
  if (gamma.m() <= 4) {
    const MultiPoly de = det_expand(mat);
    report.expect(d == de, tag + "Bareiss det " + d.str() + " differs from expansion " + de.str());
  }
  return report;
}

std::optional<TriangularTableau> lgv_phi(const TriangularTableau& t) {
  const int m = static_cast<int>(t.size());
  for (int j = 1; j <= m; ++j) {
    // rows i >= j have a j-th part
    for (int i = j; i <= m; ++i) {
      const int x = t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
      for (int k = i + 1; k <= m; ++k) {
        if (t[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j - 1)] != x) continue;
        TriangularTableau out = t;
        for (int c = 0; c < j - 1; ++c)
          std::swap(out[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(c)],
                    out[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(c)]);
        return out;
      }
    }
  }
  return std::nullopt;
}

CheckReport lgv_involution_check(const GammaVector& gamma) {
  CheckReport report;
  const std::string tag = "gamma=" + gamma.str() + ": ";
  WeightSum intersecting;
  enumerate_triangular(gamma, false, [&](const TriangularTableau& t) {
    const auto image = lgv_phi(t);
    if (!image) {
      report.expect(is_non_intersecting(t), tag + "Phi undefined on intersecting " + tableau_str(t));
      return;
    }
    const FactorProduct w = tableau_weight(t);
    intersecting.add(w);
    const bool ok = *image != t && is_triangular(*image, gamma) && !is_non_intersecting(*image) &&
                    lgv_phi(*image) == t && tableau_weight(*image) == w.negated();
    report.expect(ok, tag + "Phi fails on " + tableau_str(t) + " -> " + tableau_str(*image));
  });
  report.expect(intersecting.expand(PolyRing::for_m(gamma.m())).is_zero(),
                tag + "intersecting tableaux do not cancel");
  return report;
}

bool in_V_prime(const TriangularTableau& t, const GammaVector& gamma) {
  if (!gamma.last_one()) return false;
  return is_triangular(t, gamma.cleared_last()) && is_non_intersecting(t) && !is_triangular(t, gamma);
}

TriangularTableau iota(const TriangularTableau& t, const GammaVector& gamma) {
  if (!in_V_prime(t, gamma)) throw std::invalid_argument(tableau_str(t) + " is not in V'_" + gamma.str());
  const int m = gamma.m();
  const int k = gamma.ones();
  const int ik = gamma.last_one();
  for (int j = ik + 1; j <= m; ++j) {
    int r = 0;
    for (int i = j; i <= m; ++i)
      if (t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] == k) {
        if (r) throw std::logic_error("two rows share the part " + std::to_string(k) + " in column " + std::to_string(j));
        r = i;
      }
    if (!r) continue;
    const int ell = j - 1;
    TriangularTableau out = t;
    const auto& lr = t[static_cast<std::size_t>(r - 1)];
    const auto& ll = t[static_cast<std::size_t>(ell - 1)];
    out[static_cast<std::size_t>(ell - 1)].assign(lr.begin(), lr.begin() + ell);
    auto& mr = out[static_cast<std::size_t>(r - 1)];
    std::copy(ll.begin(), ll.end(), mr.begin());
    return out;
  }
  throw std::logic_error("no part equal to " + std::to_string(k) + " past column " + std::to_string(ik));
}

CheckReport iota_check(const GammaVector& gamma) {
  CheckReport report;
  const std::string tag = "gamma=" + gamma.str() + ": ";
  if (!gamma.last_one()) return report;
  const PolyRing ring = PolyRing::for_m(gamma.m());
  const auto rules = gamma.b_rules(ring);
  const GammaVector prime = gamma.cleared_last();
  WeightSum vprime;
  WeightSum whole;
  enumerate_triangular(prime, true, [&](const TriangularTableau& t) {
    const FactorProduct w = tableau_weight(t);
    whole.add(w);
    if (is_triangular(t, gamma)) return;
    vprime.add(w);
    const TriangularTableau image = iota(t, gamma);
    bool ok = image != t && in_V_prime(image, gamma) && iota(image, gamma) == t;
    if (ok && specialise(tableau_weight(image), gamma) != specialise(w, gamma).negated())
      ok = expand(tableau_weight(image), ring, rules) == -expand(w, ring, rules);
    report.expect(ok, tag + "iota fails on " + tableau_str(t) + " -> " + tableau_str(image));
  });
  report.expect(vprime.expand(ring, rules).is_zero(), tag + "weights over V' do not cancel");
  const MultiPoly lhs = whole.expand(ring, rules);
  report.expect(lhs == vandermonde_shift(ring, gamma.m()), tag + "Sigma(gamma') with b specialised is " + lhs.str());
  report.expect(lhs == sigma_gamma(gamma) + vprime.expand(ring, rules), tag + "decomposition over V_gamma and V' fails");
  return report;
}

}  // namespace sjack
