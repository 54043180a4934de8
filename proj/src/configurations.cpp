#include "sjack/configurations.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "sjack/nonsym_jack.hpp"
#include "sjack/permutation.hpp"
#include "sjack/superjack.hpp"

namespace sjack {

namespace {

int sector_sign(int m) { return (m * (m - 1) / 2) % 2 == 0 ? 1 : -1; }

std::size_t idx(int one_based) { return static_cast<std::size_t>(one_based - 1); }

// A configuration drawn on the rows of eta; 0 marks a cell without a letter <= m.
using Grid = std::vector<std::vector<int>>;

Grid empty_grid(const Composition& eta) {
  Grid g;
  for (int r = 1; r <= eta.n_parts(); ++r) g.emplace_back(static_cast<std::size_t>(eta.row(r)), 0);
  return g;
}

Grid grid_of(const GoodConfiguration& p, const Composition& eta) {
  Grid g = empty_grid(eta);
  for (int i = 1; i <= p.m(); ++i) {
    const auto& path = p.paths[idx(i)];
    for (int c = 1; c <= static_cast<int>(path.size()); ++c) g[idx(path[idx(c)])][idx(c)] = i;
  }
  return g;
}

std::vector<int> grid_counts(const Grid& g, int m) {
  std::vector<int> out(static_cast<std::size_t>(m), 0);
  for (const auto& row : g)
    for (int x : row)
      if (x) ++out[idx(x)];
  return out;
}

int counts_sign(const std::vector<int>& counts) {
  const int m = static_cast<int>(counts.size());
  std::vector<int> w;
  for (int k : counts) w.push_back(m - k);
  return permutation_sign(w);
}

bool grid_has(const Grid& g, int col, int letter) {
  for (const auto& row : g)
    if (col <= static_cast<int>(row.size()) && row[idx(col)] == letter) return true;
  return false;
}

bool grid_is_good(const Grid& g, int m) {
  const auto counts = grid_counts(g, m);
  for (int i = 1; i <= m; ++i)
    for (int c = 1; c <= counts[idx(i)]; ++c)
      if (!grid_has(g, c, i)) return false;
  return true;
}

AlphaPoly grid_weight(const Grid& g, const Composition& eta) {
  AlphaPoly w(1);
  for (int r = 1; r <= static_cast<int>(g.size()); ++r) {
    const auto& row = g[idx(r)];
    for (int c = 1; c <= static_cast<int>(row.size()); ++c) {
      const int x = row[idx(c)];
      if (!x) continue;
      if ((c == 1 && x == r) || (c > 1 && row[idx(c - 1)] == x)) w *= hook_d(eta, {r, c});
    }
  }
  return w;
}

// The bad-configuration involution; nullopt when g is good.
std::optional<Grid> swap_bad(const Grid& g, int m) {
  const auto counts = grid_counts(g, m);
  int width = 0;
  for (const auto& row : g) width = std::max(width, static_cast<int>(row.size()));
  for (int j = 1; j <= width; ++j) {
    int a = 0;
    for (int x = 1; x <= m; ++x) {
      if (grid_has(g, j, x)) continue;
      bool later = false;
      for (int c = j + 1; c <= width && !later; ++c) later = grid_has(g, c, x);
      if (later && (a == 0 || counts[idx(x)] < counts[idx(a)])) a = x;
    }
    if (!a) continue;
    int b = 0;
    for (int x = 1; x <= m; ++x)
      if (counts[idx(x)] == j - 1) b = x;
    if (!b) throw std::logic_error("no letter occurs exactly j - 1 times");
    Grid out = g;
    for (auto& row : out)
      for (int c = j + 1; c <= static_cast<int>(row.size()); ++c)
        if (row[idx(c)] == a) row[idx(c)] = b;
    return out;
  }
  return std::nullopt;
}

std::string grid_str(const Grid& g) {
  std::string out;
  for (std::size_t r = 0; r < g.size(); ++r) {
    if (r) out += "/";
    if (g[r].empty()) out += ".";
    for (std::size_t c = 0; c < g[r].size(); ++c) out += (c ? "," : "") + std::to_string(g[r][c]);
  }
  return out;
}

}  // namespace

std::vector<int> GoodConfiguration::counts() const {
  std::vector<int> out;
  for (const auto& path : paths) out.push_back(static_cast<int>(path.size()));
  return out;
}

int GoodConfiguration::sign() const { return counts_sign(counts()); }

std::vector<Cell> GoodConfiguration::critical_cells() const {
  std::vector<Cell> out;
  for (int i = 1; i <= m(); ++i) {
    const auto& path = paths[idx(i)];
    for (int c = 1; c <= static_cast<int>(path.size()); ++c) {
      const int prev = c == 1 ? i : path[idx(c - 1)];
      if (prev == path[idx(c)]) out.push_back({path[idx(c)], c});
    }
  }
  return out;
}

FactorProduct GoodConfiguration::weight() const {
  FactorProduct w;
  w.sign = sign();
  for (const Cell& s : critical_cells()) w.multiply(s.row, s.col);
  w.normalize();
  return w;
}

std::string GoodConfiguration::str() const {
  std::string out;
  for (int i = 1; i <= m(); ++i) {
    if (i > 1) out += " ";
    out += std::to_string(i) + ":[";
    const auto& path = paths[idx(i)];
    for (std::size_t c = 0; c < path.size(); ++c) out += (c ? "," : "") + std::to_string(path[c]);
    out += "]";
  }
  return out;
}

std::vector<int> fermionic_rows(const Superpartition& sp) {
  std::vector<int> rows(sp.fermionic().rbegin(), sp.fermionic().rend());
  return rows;
}

std::vector<GoodConfiguration> good_configs(const Superpartition& sp) {
  const std::vector<int> fer = fermionic_rows(sp);
  const int m = static_cast<int>(fer.size());
  std::vector<GoodConfiguration> out;
  if (m == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<std::vector<bool>> used(static_cast<std::size_t>(m), std::vector<bool>(static_cast<std::size_t>(m), false));
  GoodConfiguration cur;
  cur.paths.resize(static_cast<std::size_t>(m));
  std::vector<int> counts(static_cast<std::size_t>(m));

  std::function<void(int)> place;
  // extends letter i's path by its column c, or moves on to letter i+1
  std::function<void(int, int)> extend = [&](int i, int c) {
    if (c > counts[idx(i)]) {
      place(i + 1);
      return;
    }
    auto& path = cur.paths[idx(i)];
    const int top = c == 1 ? i : path.back();
    for (int r = top; r >= 1; --r) {
      if (fer[idx(r)] < c || used[idx(r)][idx(c)]) continue;
      used[idx(r)][idx(c)] = true;
      path.push_back(r);
      extend(i, c + 1);
      path.pop_back();
      used[idx(r)][idx(c)] = false;
    }
  };
  place = [&](int i) {
    if (i > m) {
      out.push_back(cur);
      return;
    }
    extend(i, 1);
  };
  for_each_permutation(m, [&](const std::vector<int>& perm) {
    counts = perm;  // counts of letters 1..m, a permutation of 0..m-1
    place(1);
  });
  std::sort(out.begin(), out.end());
  return out;
}

GammaVector gamma_of(const Superpartition& sp) {
  const int m = sp.fermionic_degree();
  GammaVector g;
  for (int j = 1; j < m; ++j) {
    const auto& f = sp.fermionic();
    g.bits.push_back(std::find(f.begin(), f.end(), j - 1) != f.end() ? 1 : 0);
  }
  return g;
}

TriangularTableau to_triangular(const GoodConfiguration& p) {
  const int m = p.m();
  TriangularTableau t(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    const auto& path = p.paths[idx(i)];
    auto& row = t[path.size()];
    if (!row.empty()) throw std::invalid_argument("counts of " + p.str() + " are not a permutation");
    row.push_back(i);
    row.insert(row.end(), path.begin(), path.end());
  }
  return t;
}

GoodConfiguration from_triangular(const TriangularTableau& t) {
  const int m = static_cast<int>(t.size());
  GoodConfiguration p;
  p.paths.resize(static_cast<std::size_t>(m));
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  for (const auto& row : t) {
    if (row.empty() || row[0] < 1 || row[0] > m || seen[idx(row[0])])
      throw std::invalid_argument("first column of " + tableau_str(t) + " is not a permutation");
    seen[idx(row[0])] = true;
    p.paths[idx(row[0])].assign(row.begin() + 1, row.end());
  }
  return p;
}

HookLinearization HookLinearization::build(const Superpartition& sp, int n_vars) {
  HookLinearization h;
  const Composition eta = tilde(sp, n_vars);
  const int m = sp.fermionic_degree();
  if (m == 0) return h;
  const int top = eta.row(m);
  const auto& sym = sp.symmetric().parts();
  for (int k = 0; k <= top + 1; ++k) h.v.push_back(static_cast<int>(std::count_if(sym.begin(), sym.end(), [&](int p) { return p <= k; })));
  for (int i = 1; i <= m; ++i) h.a.push_back(AlphaPoly::linear(eta.row(i), h.v[idx(eta.row(i) + 1)] + i));
  for (int j = 1; j <= top + 1; ++j) {
    int leg = 0;  // l'((m, j)) read off the formula, the cell itself may lie outside eta
    for (int k = 1; k < m; ++k)
      if (j <= eta.row(k) + 1 && eta.row(k) + 1 <= top) ++leg;
    h.b.push_back(AlphaPoly::linear(1 - j, leg - m - h.v[idx(j)] + 1));
  }
  return h;
}

CheckReport HookLinearization::check(const Superpartition& sp, int n_vars) const {
  CheckReport r;
  const Composition eta = tilde(sp, n_vars);
  const int m = sp.fermionic_degree();
  const std::string tag = " for " + sp.str();
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= eta.row(i); ++j)
      r.expect(hook_d(eta, {i, j}) == a[idx(i)] + b[idx(j)],
               "d((" + std::to_string(i) + "," + std::to_string(j) + ")) != a_i + b_j" + tag);
  for (int j = 1; j <= m; ++j)
    r.expect(b[idx(eta.row(j) + 1)] == AlphaPoly(1) - a[idx(j)], "b_{eta_j+1} != 1 - a_j at j=" + std::to_string(j) + tag);
  return r;
}

CheckReport identity1_check(const Superpartition& sp) {
  CheckReport r;
  const int m = sp.fermionic_degree();
  const PolyRing ring = PolyRing::for_m(m);
  const std::vector<int> fer = fermionic_rows(sp);
  std::map<int, MultiPoly> rules;
  for (int i = 1; i <= m; ++i)
    if (fer[idx(i)] < m - 1) rules.emplace(fer[idx(i)] + 1, MultiPoly(ring, 1) - MultiPoly::a(ring, i));
  MultiPoly lhs(ring, 1);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j < i; ++j) lhs = lhs * (MultiPoly::a(ring, j) - MultiPoly::a(ring, i) - MultiPoly(ring, 1));
  WeightSum s;
  for (const auto& p : good_configs(sp)) s.add(p.weight());
  const MultiPoly rhs = s.expand(ring, rules);
  r.expect(lhs == rhs, "configuration sum " + rhs.str() + " != " + lhs.str() + " for " + sp.str());
  return r;
}

CheckReport bijection_check(const Superpartition& sp) {
  CheckReport r;
  const int m = sp.fermionic_degree();
  const std::string tag = " for " + sp.str();
  if (m == 0) {
    r.expect(good_configs(sp).size() == 1, "m = 0 needs the single empty configuration" + tag);
    return r;
  }
  const GammaVector gamma = gamma_of(sp);
  const auto configs = good_configs(sp);
  const auto V = enumerate_V(gamma);
  const std::set<TriangularTableau> V_set(V.begin(), V.end());
  std::set<TriangularTableau> images;
  for (const auto& p : configs) {
    const TriangularTableau t = to_triangular(p);
    r.expect(V_set.count(t) == 1, p.str() + " maps outside V_gamma" + tag);
    r.expect(images.insert(t).second, "two configurations map to " + tableau_str(t) + tag);
    r.expect(from_triangular(t) == p, "inverse map fails at " + p.str() + tag);
    FactorProduct wt = tableau_weight(t);
    FactorProduct wp = p.weight();
    r.expect(wt.sign == sector_sign(m) * wp.sign, "sign mismatch at " + p.str() + tag);
    r.expect(wt.factors == wp.factors, "weight factors differ at " + p.str() + tag);
  }
  r.expect(images.size() == V_set.size(), "map onto V_gamma fails" + tag);
  return r;
}

CheckReport verify_config_reduction(const Superpartition& sp) {
  CheckReport r;
  const int m = sp.fermionic_degree();
  const int n_vars = sp.ell_nm() + m;
  const std::string tag = " for " + sp.str();
  if (n_vars == 0) {
    // the empty superpartition: one empty configuration, nothing to reduce
    r.expect(good_configs(sp).size() == 1, "empty sector needs one configuration" + tag);
    return r;
  }
  const Composition eta = tilde(sp, n_vars);
  const int sym_len = sp.symmetric().length();

  AlphaPoly tail(1);
  for (int i = n_vars - sym_len + 1; i <= n_vars; ++i) tail *= hook_d(eta, {i, 1});

  std::map<Grid, long> fibre;
  enumerate_admissible(eta, [&](const AdmissibleTableau& t) {
    const auto ev = t.evaluation();
    for (int i = m; i < n_vars; ++i)
      if (ev[static_cast<std::size_t>(i)] != 1) return;
    std::vector<int> shifted;
    for (int i = 0; i < m; ++i) shifted.push_back(ev[static_cast<std::size_t>(i)] + 1);
    if (!is_permutation_of_1_to_n(shifted)) return;
    Grid g = t.rows;
    for (auto& row : g)
      for (int& x : row)
        if (x > m) x = 0;
    r.expect(critical_weight(t) == grid_weight(g, eta) * tail, "d_T does not factor at " + t.str() + tag);
    ++fibre[g];
  });

  const long expected = factorial(sp.ell_nm() - sym_len);
  AlphaPoly sum_c(0), sum_g(0);
  std::set<Grid> good_from_tableaux;
  for (const auto& [g, count] : fibre) {
    r.expect(count == expected, "fibre of " + grid_str(g) + " has " + std::to_string(count) + " tableaux" + tag);
    const AlphaPoly w = grid_weight(g, eta);
    const int s = counts_sign(grid_counts(g, m));
    sum_c += s > 0 ? w : -w;
    if (grid_is_good(g, m)) {
      sum_g += s > 0 ? w : -w;
      good_from_tableaux.insert(g);
      continue;
    }
    const auto partner = swap_bad(g, m);
    if (!partner) {
      r.fail("bad configuration without a partner: " + grid_str(g) + tag);
      continue;
    }
    r.expect(fibre.count(*partner) == 1, "partner of " + grid_str(g) + " is not a configuration" + tag);
    r.expect(!grid_is_good(*partner, m), "partner of " + grid_str(g) + " is good" + tag);
    const auto back = swap_bad(*partner, m);
    r.expect(back && *back == g, "bad involution does not return to " + grid_str(g) + tag);
    r.expect(counts_sign(grid_counts(*partner, m)) == -s, "bad involution keeps the sign at " + grid_str(g) + tag);
    r.expect(grid_weight(*partner, eta) == w, "bad involution changes d_P at " + grid_str(g) + tag);
  }
  r.expect(sum_c == sum_g, "sum over configurations != sum over good ones" + tag);

  std::set<Grid> characterized;
  for (const auto& p : good_configs(sp)) characterized.insert(grid_of(p, eta));
  r.expect(characterized == good_from_tableaux, "good configurations differ from their characterization" + tag);
  return r;
}

AlphaRational c_min_via_configurations(const Superpartition& sp) {
  const int m = sp.fermionic_degree();
  const Composition eta = tilde(sp, default_n_vars(sp));
  AlphaPoly sum(0);
  for (const auto& p : good_configs(sp)) {
    AlphaPoly w(1);
    for (const Cell& s : p.critical_cells()) w *= hook_d(eta, s);
    sum += p.sign() > 0 ? w : -w;
  }
  AlphaPoly den(1);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j < i; ++j) den *= hook_d(eta, {i, eta.row(j) + 1});
  for (const auto& h : arm_leg_circ(sp)) den *= h.value();
  if (sector_sign(m) < 0) sum = -sum;
  return AlphaRational(sum, den);
}

CheckReport verify_cmin_configurations(const Superpartition& sp, bool against_expansion) {
  CheckReport r;
  const AlphaRational via = c_min_via_configurations(sp);
  const AlphaRational closed = c_min_closed(sp);
  r.expect(via == closed, "configuration sum gives " + via.str() + ", closed formula " + closed.str() + " for " + sp.str());
  if (against_expansion) {
    const AlphaRational expanded = c_min_via_expansion(sp);
    r.expect(via == expanded, "configuration sum gives " + via.str() + ", expansion " + expanded.str() + " for " + sp.str());
  }
  return r;
}

}  // namespace sjack
