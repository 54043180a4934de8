#include <doctest.h>

#include <set>

#include "sjack/configurations.hpp"
#include "sjack/superjack.hpp"

using namespace sjack;

namespace {

Superpartition sp(std::string_view s) { return parse_superpartition(s); }

}  // namespace

TEST_CASE("gamma of a superpartition") {
  CHECK(gamma_of(sp("(3,1,0;4,2,1)")) == parse_gamma("11"));
  CHECK(gamma_of(sp("(3,2;1)")) == parse_gamma("0"));
  CHECK(gamma_of(sp("(2,0;)")) == parse_gamma("1"));
  CHECK(gamma_of(sp("(0;)")) == parse_gamma(""));
  CHECK(fermionic_rows(sp("(3,1,0;4,2,1)")) == std::vector<int>{0, 1, 3});
}

TEST_CASE("small good configurations") {
  const auto one = good_configs(sp("(1,0;)"));
  REQUIRE(one.size() == 1);
  // [m - |P|_i] = [0, 1] reversed against the first column (2, 1): the sector sign
  CHECK(one.front().sign() == -1);
  CHECK(c_min_via_configurations(sp("(1,0;)")) == AlphaRational(1));
  CHECK(c_min_via_configurations(sp("(0;)")) == AlphaRational(1));
  CHECK(good_configs(sp("(0;)")).size() == 1);
  for (const auto& p : good_configs(sp("(2,1,0;)"))) {
    std::set<int> seen;
    for (int c : p.counts()) seen.insert(c);
    CHECK(seen.size() == 3);
  }
}

TEST_CASE("configurations and triangular tableaux correspond") {
  for (const auto& x : superpartitions_up_to(7, 4)) {
    if (x.fermionic_degree() == 0) continue;
    const auto configs = good_configs(x);
    std::set<std::string> tabs;
    for (const auto& p : configs) {
      const auto t = to_triangular(p);
      CHECK(from_triangular(t) == p);
      CHECK(is_triangular(t, gamma_of(x)));
      CHECK(is_non_intersecting(t));
      const int m = x.fermionic_degree();
      CHECK(tableau_weight(t).sign == p.sign() * ((m * (m - 1) / 2) % 2 ? -1 : 1));
      tabs.insert(tableau_str(t));
    }
    std::set<std::string> v;
    for (const auto& t : enumerate_V(gamma_of(x))) v.insert(tableau_str(t));
    CHECK(tabs == v);
    CHECK(bijection_check(x).ok);
    CHECK(identity1_check(x).ok);
  }
}

TEST_CASE("hook linearization") {
  for (const auto& x : superpartitions_up_to(7, 3)) {
    if (x.fermionic_degree() == 0) continue;
    const int n = default_n_vars(x);
    for (int extra = 0; extra <= 2; ++extra) {
      const auto h = HookLinearization::build(x, n + extra);
      CHECK(h.check(x, n + extra).ok);
      CHECK(static_cast<int>(h.a.size()) == x.fermionic_degree());
    }
  }
  // v_k counts the positive symmetric parts up to k
  const auto h = HookLinearization::build(sp("(3,1,0;4,2,1)"), 11);
  CHECK(h.v[0] == 0);
  CHECK(h.v[1] == 1);
  CHECK(h.v[2] == 2);
  CHECK(h.v[3] == 2);
}

TEST_CASE("reduction from full tableaux to good configurations") {
  CHECK(verify_config_reduction(sp("(;)")).ok);
  for (const auto& x : superpartitions_up_to(5, 3)) {
    if (default_n_vars(x) > 6) continue;
    CHECK(verify_config_reduction(x).ok);
  }
}

TEST_CASE("c_min from the configuration sum") {
  const AlphaPoly den = AlphaPoly::linear(3, 5) * AlphaPoly::linear(2, 3) * AlphaPoly::linear(1, 2) *
                        AlphaPoly::linear(1, 1) * AlphaPoly::linear(1, 3);
  CHECK(c_min_via_configurations(sp("(3,1,0;4,2,1)")) == AlphaRational(AlphaPoly(1), den));
  CHECK(verify_cmin_configurations(sp("(3,1,0;4,2,1)")).ok);
  for (const auto& x : superpartitions_up_to(4, 3)) CHECK(verify_cmin_configurations(x, true).ok);
  for (const auto& x : superpartitions_up_to(8, 4)) CHECK(verify_cmin_configurations(x).ok);
}
