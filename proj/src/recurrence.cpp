#include "sjack/recurrence.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace sjack {

namespace {

std::string parts_str(const std::vector<int>& lambda) {
  std::string out = "(";
  for (std::size_t u = 0; u < lambda.size(); ++u) out += (u ? "," : "") + std::to_string(lambda[u]);
  return out + ")";
}

std::string at(int j, int i, int k) {
  return " at j=" + std::to_string(j) + " i=" + std::to_string(i) + " k=" + std::to_string(k);
}

// lambda_u, 1-based
int part(const std::vector<int>& lambda, int u) { return lambda[static_cast<std::size_t>(u - 1)]; }

bool has_part(const std::vector<int>& lambda, int value) {
  return std::find(lambda.begin(), lambda.end(), value) != lambda.end();
}

// Some value in [low, high] occurs at least twice.
bool repeated_in(const std::vector<int>& lambda, int low, int high) {
  for (std::size_t u = 1; u < lambda.size(); ++u)
    if (lambda[u] == lambda[u - 1] && lambda[u] >= low && lambda[u] <= high) return true;
  return false;
}

// Each of high, high-1, ..., low occurs exactly once.
bool each_once(const std::vector<int>& lambda, int low, int high) {
  for (int v = low; v <= high; ++v)
    if (std::count(lambda.begin(), lambda.end(), v) != 1) return false;
  return true;
}

FactorProduct weight_of(const std::vector<int>& lambda) {
  FactorProduct w = partition_weight(lambda);
  w.normalize();
  return w;
}

MultiPoly sum_weights(const std::vector<std::vector<int>>& set, PolyRing ring) {
  WeightSum s;
  for (const auto& lam : set) s.add(partition_weight(lam));
  return s.expand(ring);
}

}  // namespace

PolyRing recurrence_ring() { return {8, 8}; }

std::vector<std::vector<int>> partitions_with_first(int j, int i) {
  std::vector<std::vector<int>> out;
  if (j < 1 || i < 1) return out;
  std::vector<int> cur{j};
  std::function<void()> rec = [&] {
    if (static_cast<int>(cur.size()) == i) {
      out.push_back(cur);
      return;
    }
    for (int v = cur.back(); v >= 1; --v) {
      cur.push_back(v);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

bool in_P_k(const std::vector<int>& lambda, int j, int i, int k) {
  if (static_cast<int>(lambda.size()) != i || i < 1 || lambda[0] != j) return false;
  for (std::size_t u = 1; u < lambda.size(); ++u)
    if (lambda[u] > lambda[u - 1] || lambda[u] < 1) return false;
  for (int l = 1; l <= k; ++l)
    if (!has_part(lambda, j - l)) return false;
  return true;
}

std::vector<std::vector<int>> P_k_set(int j, int i, int k) {
  std::vector<std::vector<int>> out;
  for (auto& lam : partitions_with_first(j, i))
    if (in_P_k(lam, j, i, k)) out.push_back(std::move(lam));
  return out;
}

const MultiPoly& PkTable::get(int j, int i, int k) {
  const auto key = std::make_tuple(j, i, k);
  auto it = cache_.find(key);
  if (it == cache_.end()) it = cache_.emplace(key, sum_weights(P_k_set(j, i, k), ring_)).first;
  return it->second;
}

MultiPoly P_k(int j, int i, int k, PolyRing ring) { return sum_weights(P_k_set(j, i, k), ring); }

CheckReport recurrence_check(PkTable& table, int j, int i, int k) {
  CheckReport r;
  const PolyRing ring = table.ring();
  const MultiPoly& p = table.get(j, i, k);
  if (j <= k || i <= k) {
    r.expect(p.is_zero(), "P^[k] does not vanish" + at(j, i, k));
    return r;
  }
  if (i == 1) {
    // only k = 0 reaches here
    r.expect(p == MultiPoly(ring, 1), "P^[0]_{j,1} != 1" + at(j, i, k));
    return r;
  }
  const MultiPoly lead = linear_factor(ring, j, 1);
  MultiPoly rhs = lead * shift_b(table.get(j, i - 1, k));
  if (k == 0) {
    rhs += shift_b(table.get(j - 1, i - 1, 0));
    MultiPoly bracket = table.get(j - 1, i, 0);
    if (j >= 2) bracket -= linear_factor(ring, j - 1, 1) * shift_b(table.get(j - 1, i - 1, 0));
    rhs += bracket;
  } else {
    rhs += shift_b(table.get(j - 1, i - 1, k - 1));
  }
  r.expect(p == rhs, "recurrence fails" + at(j, i, k) + ": " + p.str() + " vs " + rhs.str());
  return r;
}

CheckReport interp_check(PkTable& table, int j, int i, int k) {
  CheckReport r;
  if (i <= k || j <= k + 1) return r;
  const PolyRing ring = table.ring();
  const MultiPoly d = table.get(j, i, k) - table.get(j - 1, i, k);
  const MultiPoly factor = MultiPoly::a(ring, j) + MultiPoly(ring, 1) - MultiPoly::a(ring, j - k - 1);
  r.expect(d == factor * table.get(j, i, k + 1), "D^[k] != (a_j+1-a_{j-k-1}) P^[k+1]" + at(j, i, k));
  return r;
}

RowReduction row_reduce(const PolyMatrix& input) {
  RowReduction out;
  out.final_matrix = input;
  PolyMatrix& m = out.final_matrix;
  const int n = static_cast<int>(m.size());
  if (n == 0) throw std::invalid_argument("row reduction of an empty matrix");
  const PolyRing ring = m[0][0].ring();
  // rows are 1-based below: L_j is m[j-1]
  auto row = [&](int j) -> std::vector<MultiPoly>& { return m[static_cast<std::size_t>(j - 1)]; };
  for (int k = 0; k + 2 <= n && out.exact; ++k) {
    for (int j = n; j >= k + 2; --j)
      for (int c = 0; c < n; ++c) row(j)[static_cast<std::size_t>(c)] -= row(j - 1)[static_cast<std::size_t>(c)];
    for (int j = k + 2; j <= n && out.exact; ++j) {
      const MultiPoly factor = MultiPoly::a(ring, j) + MultiPoly(ring, 1) - MultiPoly::a(ring, j - k - 1);
      for (auto& entry : row(j)) {
        auto q = try_divide(entry, factor);
        if (!q) {
          out.exact = false;
          out.note = "row " + std::to_string(j) + " not divisible by " + factor.str() + " at stage " + std::to_string(k);
          break;
        }
        entry = *std::move(q);
      }
      if (out.exact) out.factors.push_back(factor);
    }
  }
  out.unit_upper = true;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c <= r; ++c) {
      const MultiPoly& e = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (!(e == MultiPoly(ring, r == c ? 1 : 0))) out.unit_upper = false;
    }
  MultiPoly d = det(m);
  for (const auto& f : out.factors) d = d * f;
  out.determinant = std::move(d);
  return out;
}

MultiPoly row_reduce_determinant(int m) {
  RowReduction rr = row_reduce(P_matrix(zero_gamma(m)));
  if (!rr.exact) throw std::logic_error("row reduction not exact: " + rr.note);
  return rr.determinant;
}

RowReduction row_reduce_experiment(const GammaVector& gamma) { return row_reduce(P_matrix(gamma)); }

CheckReport row_reduce_check(int m) {
  CheckReport r;
  const PolyMatrix M = P_matrix(zero_gamma(m));
  const RowReduction rr = row_reduce(M);
  const std::string tag = " for m=" + std::to_string(m);
  r.expect(rr.exact, "row reduction not exact" + tag + ": " + rr.note);
  if (!rr.exact) return r;
  r.expect(rr.unit_upper, "reduced matrix not unit upper triangular" + tag);
  const PolyRing ring = PolyRing::for_m(m);
  for (int j = 1; j <= m; ++j)
    for (int i = 1; i <= m; ++i) {
      const MultiPoly& entry = rr.final_matrix[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)];
      r.expect(entry == P_k(j, i, j - 1, ring),
               "reduced entry (" + std::to_string(j) + "," + std::to_string(i) + ") != P^[j-1]_{j,i}" + tag);
    }
  r.expect(rr.determinant == vandermonde_shift(ring, m), "row-reduced determinant != product" + tag);
  r.expect(rr.determinant == det(M), "row-reduced determinant != det M" + tag);
  return r;
}

std::string ExtendedPartition::str() const {
  std::string out = "(";
  for (std::size_t v = 0; v < base.size(); ++v) {
    if (v) out += static_cast<int>(v) == u ? (left ? "<," : ">,") : ",";
    out += std::to_string(base[v]);
  }
  return out + ")";
}

std::vector<int> arrow_positions(const std::vector<int>& lambda, int j, int k) {
  std::vector<int> out;
  for (int u = 1; u < static_cast<int>(lambda.size()); ++u)
    if (part(lambda, u + 1) == part(lambda, u) - 1 && part(lambda, u + 1) >= j - k - 1) out.push_back(u);
  return out;
}

std::vector<ExtendedPartition> extended_partitions(int j, int i, int k) {
  std::vector<ExtendedPartition> out;
  for (const auto& lam : P_k_set(j, i, k + 1))
    for (int u : arrow_positions(lam, j, k)) {
      out.push_back({lam, u, true});
      out.push_back({lam, u, false});
    }
  return out;
}

bool is_extension(const ExtendedPartition& e, int j, int i, int k) {
  if (!in_P_k(e.base, j, i, k + 1)) return false;
  const auto pos = arrow_positions(e.base, j, k);
  return std::find(pos.begin(), pos.end(), e.u) != pos.end();
}

FactorProduct extension_weight(const ExtendedPartition& e) {
  FactorProduct w = partition_weight(e.base);
  if (e.left) {
    w.multiply(part(e.base, e.u), e.u);
  } else {
    w.multiply(part(e.base, e.u + 1), e.u);
    w.sign = -w.sign;
  }
  w.normalize();
  return w;
}

namespace {

// Minimal v >= u+1 with lambda_v = lambda_{v+1} >= j-k-1, or 0.
int bad_left_v(const ExtendedPartition& e, int j, int k) {
  const int len = static_cast<int>(e.base.size());
  for (int v = e.u + 1; v < len; ++v)
    if (part(e.base, v) == part(e.base, v + 1) && part(e.base, v) >= j - k - 1) return v;
  return 0;
}

// Maximal 2 <= v <= u with lambda_{v-1} = lambda_v, or 0.
int bad_right_v(const ExtendedPartition& e) {
  for (int v = e.u; v >= 2; --v)
    if (part(e.base, v - 1) == part(e.base, v)) return v;
  return 0;
}

}  // namespace

bool is_bad(const ExtendedPartition& e, int j, int k) {
  return e.left ? bad_left_v(e, j, k) != 0 : bad_right_v(e) != 0;
}

ExtendedPartition psi(const ExtendedPartition& e, int j, int k) {
  ExtendedPartition out = e;
  if (e.left) {
    const int v = bad_left_v(e, j, k);
    if (!v) throw std::invalid_argument("psi of a good extension " + e.str());
    for (int w = e.u + 1; w <= v; ++w) ++out.base[static_cast<std::size_t>(w - 1)];
    out.u = v;
    out.left = false;
  } else {
    const int v = bad_right_v(e);
    if (!v) throw std::invalid_argument("psi of a good extension " + e.str());
    for (int w = v; w <= e.u; ++w) --out.base[static_cast<std::size_t>(w - 1)];
    out.u = v - 1;
    out.left = true;
  }
  return out;
}

std::vector<int> theta_L(const ExtendedPartition& e, int j, int k) {
  if (!e.left || is_bad(e, j, k)) throw std::invalid_argument("theta_L needs a good left extension, got " + e.str());
  auto it = std::find(e.base.begin(), e.base.end(), j - k - 1);
  if (it == e.base.end()) throw std::invalid_argument("no part j-k-1 in " + e.str());
  const int v = static_cast<int>(it - e.base.begin()) + 1;
  std::vector<int> out = e.base;
  for (int w = e.u + 1; w <= v; ++w) ++out[static_cast<std::size_t>(w - 1)];
  return out;
}

std::vector<int> theta_R(const ExtendedPartition& e, int j, int k) {
  if (e.left || is_bad(e, j, k)) throw std::invalid_argument("theta_R needs a good right extension, got " + e.str());
  std::vector<int> out = e.base;
  for (int w = 1; w <= e.u; ++w) --out[static_cast<std::size_t>(w - 1)];
  return out;
}

std::vector<int> raise_prefix(const std::vector<int>& lambda, int count) {
  std::vector<int> out = lambda;
  for (int w = 0; w < count && w < static_cast<int>(out.size()); ++w) ++out[static_cast<std::size_t>(w)];
  return out;
}

bool in_theta_L_image(const std::vector<int>& lambda, int j, int i, int k) {
  return in_P_k(lambda, j, i, k) && !has_part(lambda, j - k - 1) && repeated_in(lambda, j - k, j);
}

bool in_theta_R_image(const std::vector<int>& lambda, int j, int i, int k) {
  return in_P_k(lambda, j - 1, i, k) && repeated_in(lambda, j - k - 1, j - 1);
}

bool in_L_set(const std::vector<int>& lambda, int j, int i, int k) {
  return in_P_k(lambda, j, i, k) && each_once(lambda, j - k, j) && !has_part(lambda, j - k - 1);
}

bool in_R_set(const std::vector<int>& lambda, int j, int i, int k) {
  return in_P_k(lambda, j - 1, i, k) && each_once(lambda, j - k - 1, j - 1);
}

CheckReport double_count_check(PkTable& table, int j, int i, int k) {
  CheckReport r;
  const PolyRing ring = table.ring();
  const std::string tag = at(j, i, k);

  // left side: grouped by base partition, each base contributes w(lambda)(a_j - a_{j-k-1})
  const auto eps = extended_partitions(j, i, k);
  const std::set<ExtendedPartition> ep_set(eps.begin(), eps.end());
  WeightSum all;
  for (const auto& e : eps) all.add(extension_weight(e));
  const MultiPoly ep_total = all.expand(ring);
  const MultiPoly& big = table.get(j, i, k + 1);
  MultiPoly lhs(ring);
  if (j - k - 1 >= 1) lhs = (MultiPoly::a(ring, j) - MultiPoly::a(ring, j - k - 1)) * big;
  r.expect(ep_total == lhs, "EP weight != (a_j - a_{j-k-1}) P^[k+1]" + tag);
  for (const auto& lam : P_k_set(j, i, k + 1)) {
    const auto pos = arrow_positions(lam, j, k);
    r.expect(static_cast<int>(pos.size()) == k + 1, "base " + parts_str(lam) + " lacks k+1 arrow positions" + tag);
  }

  // right side: Psi cancels the bad ones, Theta_L and Theta_R carry the good ones
  WeightSum good;
  std::set<std::vector<int>> left_images, right_images;
  WeightSum left_sum, right_sum;
  for (const auto& e : eps) {
    const FactorProduct w = extension_weight(e);
    if (is_bad(e, j, k)) {
      const ExtendedPartition f = psi(e, j, k);
      r.expect(ep_set.count(f) == 1, "psi leaves EP: " + e.str() + " -> " + f.str() + tag);
      r.expect(is_bad(f, j, k) && psi(f, j, k) == e, "psi not an involution at " + e.str() + tag);
      r.expect(extension_weight(f) == w.negated(), "psi does not negate weight at " + e.str() + tag);
      continue;
    }
    good.add(w);
    if (e.left) {
      const auto img = theta_L(e, j, k);
      r.expect(in_theta_L_image(img, j, i, k), "theta_L image out of range: " + e.str() + tag);
      r.expect(left_images.insert(img).second, "theta_L not injective at " + e.str() + tag);
      r.expect(weight_of(img) == w, "theta_L not weight preserving at " + e.str() + tag);
      left_sum.add(weight_of(img));
    } else {
      const auto img = theta_R(e, j, k);
      r.expect(in_theta_R_image(img, j, i, k), "theta_R image out of range: " + e.str() + tag);
      r.expect(right_images.insert(img).second, "theta_R not injective at " + e.str() + tag);
      r.expect(weight_of(img) == w.negated(), "theta_R not weight reversing at " + e.str() + tag);
      right_sum.add(weight_of(img));
    }
  }
  std::size_t left_target = 0, right_target = 0;
  WeightSum L, R;
  for (const auto& lam : P_k_set(j, i, k)) {
    if (in_theta_L_image(lam, j, i, k)) ++left_target;
    if (in_L_set(lam, j, i, k)) L.add(partition_weight(lam));
  }
  std::set<std::vector<int>> raised;
  for (const auto& lam : P_k_set(j - 1, i, k)) {
    if (in_theta_R_image(lam, j, i, k)) ++right_target;
    if (!in_R_set(lam, j, i, k)) continue;
    R.add(partition_weight(lam));
    const auto up = raise_prefix(lam, k + 1);
    r.expect(in_L_set(up, j, i, k), "raising " + parts_str(lam) + " misses L" + tag);
    r.expect(weight_of(up) == weight_of(lam), "raising " + parts_str(lam) + " changes weight" + tag);
    raised.insert(up);
  }
  r.expect(left_images.size() == left_target, "theta_L not onto" + tag);
  r.expect(right_images.size() == right_target, "theta_R not onto" + tag);
  const MultiPoly L_poly = L.expand(ring), R_poly = R.expand(ring);
  r.expect(L_poly == R_poly, "L != R" + tag);
  std::size_t L_count = 0;
  for (const auto& lam : P_k_set(j, i, k)) L_count += in_L_set(lam, j, i, k) ? 1 : 0;
  r.expect(raised.size() == L_count, "raising the first k+1 parts is not onto L" + tag);

  const MultiPoly good_total = good.expand(ring);
  r.expect(good_total == ep_total, "good extensions do not carry the full EP weight" + tag);
  const MultiPoly& small_j = table.get(j, i, k);
  const MultiPoly& small_prev = table.get(j - 1, i, k);
  r.expect(left_sum.expand(ring) == small_j - big - L_poly, "theta_L image weight mismatch" + tag);
  r.expect(right_sum.expand(ring) == small_prev - R_poly, "theta_R image weight mismatch" + tag);
  const MultiPoly rhs = (small_j - big) - small_prev;
  r.expect(good_total == rhs, "good extensions != (P^[k] - P^[k+1]) - P^[k]_{j-1}" + tag);
  r.expect(lhs == rhs, "double-counting relation fails" + tag);
  return r;
}

CheckReport recurrence_suite(int max_k, int max_ij) {
  CheckReport r;
  PkTable table;
  for (int k = 0; k <= max_k; ++k)
    for (int j = 1; j <= max_ij; ++j)
      for (int i = 1; i <= max_ij; ++i) {
        r.merge(recurrence_check(table, j, i, k));
        r.merge(interp_check(table, j, i, k));
        if (i > k && j > k + 1) r.merge(double_count_check(table, j, i, k));
      }
  return r;
}

}  // namespace sjack
