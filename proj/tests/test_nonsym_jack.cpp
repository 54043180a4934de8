#include <doctest.h>

#include <algorithm>
#include <set>

#include "sjack/nonsym_jack.hpp"

using namespace sjack;

namespace {

// every filling of eta with letters 1..N, in no particular order
std::vector<AdmissibleTableau> all_fillings(const Composition& eta) {
  const int n = eta.n_parts();
  const auto cells = eta.cells();
  std::vector<AdmissibleTableau> out;
  AdmissibleTableau t{eta, {}};
  for (int i = 1; i <= n; ++i) t.rows.emplace_back(static_cast<std::size_t>(eta.row(i)), 1);
  while (true) {
    out.push_back(t);
    std::size_t k = 0;
    for (; k < cells.size(); ++k) {
      int& v = t.rows[static_cast<std::size_t>(cells[k].row - 1)][static_cast<std::size_t>(cells[k].col - 1)];
      if (v < n) {
        ++v;
        break;
      }
      v = 1;
    }
    if (k == cells.size()) break;
  }
  return out;
}

std::set<std::string> names(const std::vector<AdmissibleTableau>& ts) {
  std::set<std::string> out;
  for (const auto& t : ts) out.insert(t.str());
  return out;
}

std::vector<Composition> compositions(int max_size, int max_parts) {
  std::vector<Composition> out;
  for (int n = 1; n <= max_parts; ++n) {
    std::vector<int> parts(static_cast<std::size_t>(n), 0);
    while (true) {
      int total = 0;
      for (int p : parts) total += p;
      if (total <= max_size) out.emplace_back(parts);
      std::size_t k = 0;
      for (; k < parts.size(); ++k) {
        if (parts[k] < max_size) {
          ++parts[k];
          break;
        }
        parts[k] = 0;
      }
      if (k == parts.size()) break;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("admissible tableaux of small shapes") {
  const auto a = admissible_tableaux(Composition({1, 0}));
  CHECK(names(a) == std::set<std::string>{"1/.", "2/."});
  const auto b = admissible_tableaux(Composition({0, 1}));
  CHECK(names(b) == std::set<std::string>{"./2"});
  CHECK(admissible_tableaux(Composition({0, 0, 0})).size() == 1);
  CHECK(admissible_tableaux(Composition({0, 0, 0})).front().str() == "././.");
}

TEST_CASE("critical weights") {
  const Composition e10({1, 0}), e01({0, 1});
  CHECK(critical_weight(parse_tableau(e10, "1/.")) == AlphaPoly::linear(1, 1));
  CHECK(critical_weight(parse_tableau(e10, "2/.")) == AlphaPoly(1));
  CHECK(critical_weight(parse_tableau(e01, "./2")) == AlphaPoly::linear(1, 2));
  CHECK(critical_cells(parse_tableau(e01, "./2")) == std::vector<Cell>{{2, 1}});
}

TEST_CASE("enumeration agrees with both validators on every filling") {
  for (const auto& eta : compositions(3, 3)) {
    if (eta.size() > 4) continue;
    std::set<std::string> brute, augmented;
    for (const auto& t : all_fillings(eta)) {
      const bool direct = is_admissible(t);
      CHECK(direct == is_admissible_augmented(t));
      if (direct) {
        brute.insert(t.str());
        CHECK(critical_cells(t) == critical_cells_augmented(t));
      }
    }
    CHECK(names(admissible_tableaux(eta)) == brute);
  }
}

TEST_CASE("split enumeration covers everything once") {
  const Composition eta({2, 0, 1, 1});
  const auto whole = admissible_tableaux(eta);
  std::vector<std::string> parts;
  for (int w = 0; w < 3; ++w) enumerate_admissible(eta, [&](const AdmissibleTableau& t) { parts.push_back(t.str()); }, w, 3);
  std::sort(parts.begin(), parts.end());
  CHECK(std::adjacent_find(parts.begin(), parts.end()) == parts.end());
  CHECK(std::set<std::string>(parts.begin(), parts.end()) == names(whole));
}

TEST_CASE("small non-symmetric Jacks") {
  const auto e = nonsym_jack(Composition({0, 0}));
  CHECK(e.poly() == SuperPolynomial::constant(2, 1));

  const auto e10 = nonsym_jack(Composition({1, 0}));
  const SuperPolynomial want = SuperPolynomial::x(2, 1) + SuperPolynomial::x(2, 2) * AlphaRational(AlphaPoly(1), AlphaPoly::linear(1, 1));
  CHECK(e10.poly() == want);
  CHECK(nonsym_jack(Composition({0, 1})).poly() == SuperPolynomial::x(2, 2));
  CHECK(nonsym_jack(Composition({1, 0}), 3).poly() == want);
}

TEST_CASE("leading coefficient, degree, and worker independence") {
  for (const auto& eta : compositions(4, 3)) {
    const auto e = nonsym_jack(eta);
    CHECK(e.coeff(eta.parts()) == AlphaRational(1));
    for (const auto& [exps, num] : e.numerators) {
      int deg = 0;
      for (int p : exps) deg += p;
      CHECK(deg == eta.size());
    }
  }
  const Composition eta({1, 0, 2, 1});
  CHECK(nonsym_jack(eta, 1).poly() == nonsym_jack(eta, 4).poly());
}
