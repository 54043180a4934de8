#include <doctest.h>

#include <random>

#include "sjack/alpha_poly.hpp"
#include "sjack/multipoly.hpp"
#include "sjack/weights.hpp"

using namespace sjack;

namespace {

// evaluation at a handful of rationals is the oracle for Z[alpha] and Q(alpha)
const std::vector<Rational> kPoints = {Rational(0), Rational(1), Rational(-2), Rational(3, 7), Rational(-5, 3), Rational(11, 2)};

Rational eval(const AlphaRational& r, const Rational& at) { return r.num().eval(at) / r.den().eval(at); }

AlphaPoly random_poly(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg), coef(-6, 6);
  std::vector<Integer> c(static_cast<std::size_t>(deg(rng) + 1));
  for (auto& x : c) x = coef(rng);
  return AlphaPoly(c);
}

// value of p at a_i = pa[i-1], b_j = pb[j-1]
Integer eval(const MultiPoly& p, const std::vector<long>& pa, const std::vector<long>& pb) {
  Integer total = 0;
  const auto ring = p.ring();
  for (const auto& [e, c] : p.terms()) {
    Integer t = c;
    for (int k = 0; k < ring.size(); ++k) {
      const long v = k < ring.a_count ? pa[static_cast<std::size_t>(k)] : pb[static_cast<std::size_t>(k - ring.a_count)];
      for (int q = 0; q < e[static_cast<std::size_t>(k)]; ++q) t *= v;
    }
    total += t;
  }
  return total;
}

}  // namespace

TEST_CASE("alpha polynomials agree with pointwise arithmetic") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const AlphaPoly p = random_poly(rng, 4), q = random_poly(rng, 3);
    for (const auto& x : kPoints) {
      CHECK((p + q).eval(x) == p.eval(x) + q.eval(x));
      CHECK((p - q).eval(x) == p.eval(x) - q.eval(x));
      CHECK((p * q).eval(x) == p.eval(x) * q.eval(x));
    }
    if (!q.is_zero()) {
      auto quot = try_divide(p * q, q);
      REQUIRE(quot.has_value());
      CHECK(*quot == p);
    }
  }
}

TEST_CASE("alpha polynomial rendering and parsing") {
  const AlphaPoly p(std::vector<Integer>{5, -1, 3});
  CHECK(p.str() == "3*alpha^2 - alpha + 5");
  CHECK(parse_alpha_poly(p.str()) == p);
  CHECK(AlphaPoly::linear(6, 8).str() == "6*alpha + 8");
  CHECK(AlphaPoly::linear(1, 1).str(Style::latex) == "\\alpha + 1");
  CHECK(AlphaPoly().str() == "0");
  CHECK(AlphaPoly().degree() == -1);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const AlphaPoly r = random_poly(rng, 5);
    CHECK(parse_alpha_poly(r.str()) == r);
  }
  CHECK_THROWS(parse_alpha_poly("2*beta"));
}

TEST_CASE("gcd divides both and is primitive") {
  const AlphaPoly a1 = AlphaPoly::linear(1, 1), a2 = AlphaPoly::linear(2, 3), a3 = AlphaPoly::linear(1, 2);
  const AlphaPoly g = gcd(a1 * a2 * 4, a2 * a3 * 6);
  CHECK(g == a2);
  CHECK(gcd(AlphaPoly(0), a1) == a1);
}

TEST_CASE("alpha rationals are reduced and agree with pointwise arithmetic") {
  const AlphaPoly a1 = AlphaPoly::linear(1, 1), a2 = AlphaPoly::linear(1, 2);
  const AlphaRational r(a1 * a2 * 3, a1 * 6);
  CHECK(r.num() == a2);
  CHECK(r.den() == AlphaPoly(2));
  CHECK(AlphaRational(AlphaPoly(-1), a1).den().leading() > 0);
  CHECK_THROWS_AS(AlphaRational(a1, AlphaPoly(0)), std::domain_error);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    AlphaPoly d1 = random_poly(rng, 2), d2 = random_poly(rng, 2);
    if (d1.is_zero()) d1 = 1;
    if (d2.is_zero()) d2 = 1;
    const AlphaRational x(random_poly(rng, 3), d1), y(random_poly(rng, 3), d2);
    for (const auto& pt : kPoints) {
      if (d1.eval(pt) == 0 || d2.eval(pt) == 0) continue;
      CHECK(eval(x + y, pt) == eval(x, pt) + eval(y, pt));
      CHECK(eval(x * y, pt) == eval(x, pt) * eval(y, pt));
      if (!y.is_zero() && y.num().eval(pt) != 0) CHECK(eval(x / y, pt) == eval(x, pt) / eval(y, pt));
    }
    CHECK((x - x).is_zero());
  }
}

TEST_CASE("alpha rational inversion of the parameter") {
  // (alpha + 2) / (3 alpha + 1) at 1/alpha is (2 alpha + 1) / (alpha + 3)
  const AlphaRational r(AlphaPoly::linear(1, 2), AlphaPoly::linear(3, 1));
  CHECK(r.at_inverse_alpha() == AlphaRational(AlphaPoly::linear(2, 1), AlphaPoly::linear(1, 3)));
  CHECK(AlphaRational(AlphaPoly::alpha()).at_inverse_alpha() == AlphaRational(AlphaPoly(1), AlphaPoly::alpha()));
  CHECK(pow(AlphaRational(AlphaPoly::alpha()), 3).num() == AlphaPoly::alpha() * AlphaPoly::alpha() * AlphaPoly::alpha());
  CHECK(AlphaRational(AlphaPoly(1), AlphaPoly::linear(1, 2)).str() == "1 / (alpha + 2)");
}

TEST_CASE("multivariate polynomials: substitution and shift") {
  const PolyRing ring{3, 3};
  const auto a = [&](int i) { return MultiPoly::a(ring, i); };
  const auto b = [&](int j) { return MultiPoly::b(ring, j); };
  const MultiPoly one(ring, 1);

  CHECK(substitute_b(a(2) + b(1), {{1, one - a(1)}}) == a(2) + one - a(1));
  CHECK(substitute_b(a(1), {{1, one - a(1)}}) == a(1));

  const PolyRing big{4, 4};
  CHECK(shift_b(MultiPoly::b(big, 1) + MultiPoly::b(big, 2)) == MultiPoly::b(big, 2) + MultiPoly::b(big, 3));
  CHECK_THROWS_AS(shift_b(b(3)), std::out_of_range);
  CHECK_THROWS_AS(MultiPoly::a(ring, 4), std::out_of_range);
  CHECK_THROWS_AS(a(1) + MultiPoly::a(big, 1), std::invalid_argument);

  CHECK((a(1) + b(2)).str() == "a_1 + b_2");
  CHECK((a(1) * a(1) * 3 - b(1)).str(Style::latex) == "3 a_{1}^{2} - b_{1}");
}

TEST_CASE("multivariate division is exact or refuses") {
  const PolyRing ring{2, 1};
  const MultiPoly x = MultiPoly::a(ring, 1) + MultiPoly::b(ring, 1), y = MultiPoly::a(ring, 2) - MultiPoly(ring, 3);
  auto q = try_divide(x * y * x, x);
  REQUIRE(q.has_value());
  CHECK(*q == x * y);
  CHECK_FALSE(try_divide(x * y + MultiPoly(ring, 1), x).has_value());
  CHECK_THROWS_AS(try_divide(x, MultiPoly(ring)), std::domain_error);
}

TEST_CASE("determinants") {
  const PolyRing ring = PolyRing::for_m(2);
  const auto a = [&](int i) { return MultiPoly::a(ring, i); };
  const auto b1 = MultiPoly::b(ring, 1);
  const MultiPoly one(ring, 1);

  CHECK(det({{a(1) + b1}}) == a(1) + b1);
  CHECK(det({{one, a(1) + b1}, {one, a(2) + b1 + one}}) == a(2) + one - a(1));
  CHECK(det({{one, a(1), b1}, {MultiPoly(ring), one, a(2)}, {MultiPoly(ring), MultiPoly(ring), one}}) == one);
  CHECK_THROWS_AS(det({{one, one}}), std::invalid_argument);

  // Bareiss against the permutation expansion, checked again by evaluation
  const PolyRing r3{3, 2};
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> pick(-2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    PolyMatrix m(4, std::vector<MultiPoly>(4, MultiPoly(r3)));
    for (auto& row : m)
      for (auto& e : row) {
        e = MultiPoly(r3, pick(rng));
        e += MultiPoly::a(r3, 1 + (trial + pick(rng) + 2) % 3) * pick(rng);
        e += MultiPoly::b(r3, 1 + (trial % 2)) * pick(rng);
      }
    const MultiPoly d = det(m);
    CHECK(d == det_expand(m));
    const std::vector<long> pa = {2, -1, 3}, pb = {1, 4};
    // numeric determinant of the evaluated matrix
    std::vector<std::vector<Rational>> num(4, std::vector<Rational>(4));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) num[i][j] = eval(m[i][j], pa, pb);
    Rational nd = 1;
    for (int k = 0; k < 4; ++k) {
      int piv = k;
      while (piv < 4 && num[piv][k] == 0) ++piv;
      if (piv == 4) {
        nd = 0;
        break;
      }
      if (piv != k) {
        std::swap(num[piv], num[k]);
        nd = -nd;
      }
      nd *= num[k][k];
      for (int i = k + 1; i < 4; ++i) {
        const Rational f = num[i][k] / num[k][k];
        for (int j = k; j < 4; ++j) num[i][j] -= f * num[k][j];
      }
    }
    CHECK(Rational(eval(d, pa, pb)) == nd);
  }
}

TEST_CASE("weight sums expand like their naive sum") {
  const PolyRing ring{3, 2};
  FactorProduct w1;
  w1.multiply(1, 1);
  w1.multiply(3, 2);
  w1.normalize();
  FactorProduct w2;
  w2.sign = -1;
  w2.multiply(2, 1);
  w2.normalize();
  WeightSum s;
  s.add(w1, 2);
  s.add(w2);
  s.add(w1.negated());
  const MultiPoly naive = expand(w1, ring) * Integer(2) + expand(w2, ring) - expand(w1, ring);
  CHECK(s.expand(ring) == naive);
  CHECK(expand(w1, ring) == (MultiPoly::a(ring, 1) + MultiPoly::b(ring, 1)) * (MultiPoly::a(ring, 3) + MultiPoly::b(ring, 2)));

  const PolyRing r3 = PolyRing::for_m(3);
  const auto a = [&](int i) { return MultiPoly::a(r3, i); };
  const MultiPoly one(r3, 1);
  CHECK(vandermonde_shift(r3, 3) == (a(2) + one - a(1)) * (a(3) + one - a(1)) * (a(3) + one - a(2)));
}
