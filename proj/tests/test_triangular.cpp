#include <doctest.h>

#include <set>

#include "sjack/permutation.hpp"
#include "sjack/triangular.hpp"

using namespace sjack;

namespace {

// weakly decreasing sequences of the given length with entries in 1..m
std::vector<std::vector<int>> decreasing_rows(int length, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int top) -> void {
    if (static_cast<int>(cur.size()) == length) {
      out.push_back(cur);
      return;
    }
    for (int v = top; v >= 1; --v) {
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, m);
  return out;
}

// every tuple of rows, filtered straight from the definitions: distinct first column,
// compatibility, non-intersection
std::vector<TriangularTableau> brute_V(const GammaVector& g) {
  const int m = g.m();
  std::vector<TriangularTableau> out;
  TriangularTableau cur;
  auto compatible = [&](const std::vector<int>& row) {
    int ones = 0;
    for (std::size_t u = 1; u < row.size(); ++u) {
      ones += g.bits[u - 1];
      if (row[u] <= ones) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int i) -> void {
    if (i > m) {
      for (int j = 1; j <= m; ++j) {
        std::set<int> seen;
        for (int r = j; r <= m; ++r)
          if (!seen.insert(cur[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(j - 1)]).second) return;
      }
      out.push_back(cur);
      return;
    }
    for (const auto& row : decreasing_rows(i, m)) {
      if (!compatible(row)) continue;
      cur.push_back(row);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

MultiPoly brute_sigma(const GammaVector& g, bool substitute) {
  const int m = g.m();
  const PolyRing ring = PolyRing::for_m(m);
  const MultiPoly one(ring, 1);
  MultiPoly total(ring);
  for (const auto& t : brute_V(g)) {
    std::vector<int> first;
    for (const auto& row : t) first.push_back(row[0]);
    MultiPoly w(ring, permutation_sign(first));
    for (const auto& row : t)
      for (std::size_t u = 1; u < row.size(); ++u)
        if (row[u] == row[u - 1]) {
          MultiPoly b = MultiPoly::b(ring, static_cast<int>(u));
          if (substitute && g.bits[u - 1]) b = one - MultiPoly::a(ring, g.ones_upto(static_cast<int>(u)));
          w = w * (MultiPoly::a(ring, row[u]) + b);
        }
    total += w;
  }
  return total;
}

std::set<std::string> names(const std::vector<TriangularTableau>& ts) {
  std::set<std::string> out;
  for (const auto& t : ts) out.insert(tableau_str(t));
  return out;
}

}  // namespace

TEST_CASE("gamma vectors") {
  const auto g = parse_gamma("101");
  CHECK(g.m() == 4);
  CHECK(g.ones() == 2);
  CHECK(g.ones_upto(2) == 1);
  CHECK(g.last_one() == 3);
  CHECK(g.cleared_last() == parse_gamma("100"));
  CHECK(parse_gamma("").m() == 1);
  CHECK(all_gammas(4).size() == 8);
  CHECK_THROWS_AS(parse_gamma("12"), std::invalid_argument);
  const PolyRing ring = PolyRing::for_m(4);
  const auto rules = g.b_rules(ring);
  CHECK(rules.at(3) == MultiPoly(ring, 1) - MultiPoly::a(ring, 2));
  CHECK(rules.count(2) == 0);
}

TEST_CASE("the tableau sets V") {
  CHECK(names(enumerate_V(parse_gamma(""))) == std::set<std::string>{"((1))"});
  CHECK(names(enumerate_V(parse_gamma("0"))) == std::set<std::string>{"((1),(2,2))", "((1),(2,1))", "((2),(1,1))"});
  CHECK(names(enumerate_V(parse_gamma("1"))) == std::set<std::string>{"((1),(2,2))"});
  for (int m = 1; m <= 4; ++m)
    for (const auto& g : all_gammas(m)) {
      const auto v = enumerate_V(g);
      CHECK(names(v) == names(brute_V(g)));
      for (const auto& t : v) {
        CHECK(is_triangular(t, g));
        CHECK(is_non_intersecting(t));
      }
    }
}

TEST_CASE("compatible partitions") {
  CHECK(is_compatible({2, 2}, parse_gamma("1")));
  CHECK_FALSE(is_compatible({2, 1}, parse_gamma("1")));
  CHECK_FALSE(is_compatible({3, 1}, parse_gamma("0")));  // part above m
  CHECK(compatible_partitions(2, 2, parse_gamma("0")).size() == 2);
  FactorProduct w = partition_weight({3, 3, 1, 1});
  w.normalize();
  CHECK(w.str() == "(a_1+b_3)(a_3+b_1)");
}

TEST_CASE("sums over V") {
  const PolyRing r2 = PolyRing::for_m(2);
  const MultiPoly expected = MultiPoly::a(r2, 2) + MultiPoly(r2, 1) - MultiPoly::a(r2, 1);
  CHECK(sigma_gamma(parse_gamma("")) == MultiPoly(PolyRing::for_m(1), 1));
  CHECK(sigma_gamma(parse_gamma("0")) == expected);
  CHECK(sigma_gamma(parse_gamma("1")) == expected);
  for (int m = 1; m <= 4; ++m)
    for (const auto& g : all_gammas(m)) {
      CHECK(sigma_free(g) == brute_sigma(g, false));
      CHECK(sigma_gamma(g) == brute_sigma(g, true));
      CHECK(sigma_gamma(g) == vandermonde_shift(PolyRing::for_m(m), m));
      CHECK(identity2_check(g).ok);
    }
}

TEST_CASE("determinant of M") {
  const PolyRing r2 = PolyRing::for_m(2);
  const auto a = [&](int i) { return MultiPoly::a(r2, i); };
  const MultiPoly b1 = MultiPoly::b(r2, 1), one(r2, 1);
  const PolyMatrix m = P_matrix(parse_gamma("0"));
  CHECK(m == PolyMatrix{{one, a(1) + b1}, {one, a(2) + b1 + one}});
  CHECK(det(m) == a(2) + one - a(1));
  CHECK(P_matrix(parse_gamma("")) == PolyMatrix{{MultiPoly(PolyRing::for_m(1), 1)}});
  for (int k = 1; k <= 4; ++k)
    for (const auto& g : all_gammas(k)) {
      CHECK(det_check(g).ok);
      CHECK(sigma_pi(g) == det(P_matrix(g)));
    }
}

TEST_CASE("involutions") {
  for (int m = 1; m <= 4; ++m)
    for (const auto& g : all_gammas(m)) {
      CHECK(lgv_involution_check(g).ok);
      if (g.ones() > 0) CHECK(iota_check(g).ok);
    }
  // phi leaves non-intersecting tableaux alone
  for (const auto& t : enumerate_V(parse_gamma("00"))) CHECK_FALSE(lgv_phi(t).has_value());
  CHECK_THROWS_AS(iota({{1}, {2, 2}}, parse_gamma("1")), std::invalid_argument);
}
