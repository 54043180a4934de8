#include <doctest.h>

#include <algorithm>

#include "sjack/recurrence.hpp"

using namespace sjack;

namespace {

// straight from the definition: length i, first part j, each of j-1..j-k present
std::vector<std::vector<int>> brute_P_k(int j, int i, int k) {
  std::vector<std::vector<int>> out;
  if (i < 1 || j < 1) return out;
  std::vector<int> cur = {j};
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == i) {
      bool ok = true;
      for (int l = 1; l <= k && ok; ++l) ok = std::find(cur.begin(), cur.end(), j - l) != cur.end();
      if (ok) out.push_back(cur);
      return;
    }
    for (int v = cur.back(); v >= 1; --v) {
      cur.push_back(v);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

}  // namespace

TEST_CASE("P^[k] sets and small values") {
  for (int j = 1; j <= 6; ++j)
    for (int i = 1; i <= 6; ++i)
      for (int k = 0; k <= 3; ++k) {
        auto got = P_k_set(j, i, k), want = brute_P_k(j, i, k);
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        CHECK(got == want);
      }
  const PolyRing ring = recurrence_ring();
  const MultiPoly one(ring, 1);
  for (int j = 1; j <= 5; ++j) CHECK(P_k(j, 1, 0) == one);
  CHECK(P_k(2, 2, 1) == one);
  for (int i = 1; i <= 6; ++i) CHECK(P_k(i, i, i - 1) == one);
  CHECK(P_k(2, 2, 2).is_zero());
  CHECK(P_k(3, 2, 2).is_zero());

  // D^[0]_{2,2} = (a_2 + b_1 + 1) - (a_1 + b_1) = (a_2 + 1 - a_1) P^[1]_{2,2}
  const auto a = [&](int i) { return MultiPoly::a(ring, i); };
  const auto b1 = MultiPoly::b(ring, 1);
  CHECK(P_k(2, 2, 0) == a(2) + b1 + one);
  CHECK(P_k(1, 2, 0) == a(1) + b1);
  CHECK(P_k(2, 2, 0) - P_k(1, 2, 0) == (a(2) + one - a(1)) * P_k(2, 2, 1));
}

TEST_CASE("recurrences and the interpolation step") {
  PkTable table;
  for (int k = 0; k <= 2; ++k)
    for (int j = 1; j <= 6; ++j)
      for (int i = 1; i <= 6; ++i) {
        CHECK(recurrence_check(table, j, i, k).ok);
        if (i > k && j > k + 1) CHECK(interp_check(table, j, i, k).ok);
      }
}

TEST_CASE("row reduction of M") {
  const PolyRing r1 = PolyRing::for_m(1), r2 = PolyRing::for_m(2);
  CHECK(row_reduce_determinant(1) == MultiPoly(r1, 1));
  CHECK(row_reduce_determinant(2) == MultiPoly::a(r2, 2) + MultiPoly(r2, 1) - MultiPoly::a(r2, 1));
  for (int m = 1; m <= 4; ++m) {
    CHECK(row_reduce_check(m).ok);
    CHECK(row_reduce_determinant(m) == det(P_matrix(zero_gamma(m))));
  }
  const auto red = row_reduce(P_matrix(zero_gamma(3)));
  CHECK(red.exact);
  CHECK(red.unit_upper);
}

TEST_CASE("extensions of the worked partition") {
  const std::vector<int> mu = {6, 6, 5, 5, 5, 4, 2, 2, 1};
  // mu lies in P^[2]_{6,9}, so its extensions live in EP^[k+1] with k = 1
  CHECK(in_P_k(mu, 6, 9, 2));
  CHECK(arrow_positions(mu, 6, 1) == std::vector<int>{2, 5});

  std::vector<ExtendedPartition> mine;
  for (const auto& e : extended_partitions(6, 9, 1))
    if (e.base == mu) mine.push_back(e);
  REQUIRE(mine.size() == 4);

  auto with = [&](int sign, int x, int y) {
    FactorProduct w = partition_weight(mu);
    w.sign *= sign;
    w.multiply(x, y);
    w.normalize();
    return w;
  };
  const std::vector<std::pair<ExtendedPartition, FactorProduct>> want = {
      {{mu, 2, false}, with(-1, 5, 2)},
      {{mu, 2, true}, with(1, 6, 2)},
      {{mu, 5, false}, with(-1, 4, 5)},
      {{mu, 5, true}, with(1, 5, 5)},
  };
  for (const auto& [e, w] : want) {
    CHECK(std::find(mine.begin(), mine.end(), e) != mine.end());
    CHECK(is_extension(e, 6, 9, 1));
    CHECK(extension_weight(e) == w);
  }
  CHECK(ExtendedPartition{mu, 2, true}.str() == "(6,6<,5,5,5,4,2,2,1)");
}

TEST_CASE("per-base sum of extension weights") {
  // sum over the 2(k+1) extensions of one base is w(lambda)(a_j - a_{j-k-1})
  const PolyRing ring = recurrence_ring();
  for (int j = 3; j <= 6; ++j)
    for (int i = 2; i <= 6; ++i)
      for (int k = 0; k <= 2; ++k)
        for (const auto& lam : P_k_set(j, i, k + 1)) {
          WeightSum s;
          int count = 0;
          for (int u : arrow_positions(lam, j, k))
            for (bool left : {false, true}) {
              s.add(extension_weight({lam, u, left}));
              ++count;
            }
          CHECK(count == 2 * (k + 1));
          CHECK(s.expand(ring) == expand(partition_weight(lam), ring) * (MultiPoly::a(ring, j) - MultiPoly::a(ring, j - k - 1)));
        }
}

TEST_CASE("Psi is a weight-negating involution on bad extensions") {
  for (int j = 3; j <= 6; ++j)
    for (int i = 2; i <= 6; ++i)
      for (int k = 0; k <= 2; ++k)
        for (const auto& e : extended_partitions(j, i, k)) {
          if (!is_bad(e, j, k)) continue;
          const auto f = psi(e, j, k);
          CHECK_FALSE(f == e);
          CHECK(is_bad(f, j, k));
          CHECK(psi(f, j, k) == e);
          CHECK(extension_weight(f) == extension_weight(e).negated());
        }
}

TEST_CASE("the L = R bijection raises k+1 parts") {
  bool k_parts_ever_fail = false;
  for (int j = 2; j <= 7; ++j)
    for (int i = 1; i <= 7; ++i)
      for (int k = 0; k <= 3; ++k)
        for (const auto& lam : P_k_set(j - 1, i, k)) {
          if (!in_R_set(lam, j, i, k)) continue;
          CHECK(in_L_set(raise_prefix(lam, k + 1), j, i, k));
          if (!in_L_set(raise_prefix(lam, k), j, i, k)) k_parts_ever_fail = true;
        }
  // raising only the first k parts leaves j - k - 1 in place and misses L
  CHECK(k_parts_ever_fail);
  CHECK(raise_prefix({3, 2, 1}, 2) == std::vector<int>{4, 3, 1});
  CHECK(raise_prefix({3}, 5) == std::vector<int>{4});
}

TEST_CASE("double counting") {
  PkTable table;
  for (int k = 0; k <= 2; ++k)
    for (int j = 1; j <= 6; ++j)
      for (int i = k + 1; i <= 6; ++i)
        if (j > k + 1) CHECK(double_count_check(table, j, i, k).ok);
  CHECK(recurrence_suite(2, 5).ok);
}
