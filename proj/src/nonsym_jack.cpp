#include "sjack/nonsym_jack.hpp"

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace sjack {

std::vector<int> AdmissibleTableau::evaluation() const {
  std::vector<int> ev(static_cast<std::size_t>(n_letters()), 0);
  for (const auto& row : rows)
    for (int c : row) ++ev[static_cast<std::size_t>(c - 1)];
  return ev;
}

std::string AdmissibleTableau::str() const {
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += "/";
    if (rows[i].empty()) {
      out += ".";
      continue;
    }
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j) out += ",";
      out += std::to_string(rows[i][j]);
    }
  }
  return out;
}

AdmissibleTableau parse_tableau(const Composition& shape, std::string_view text) {
  AdmissibleTableau t{shape, {}};
  std::string s(text);
  std::size_t start = 0;
  while (true) {
    const auto slash = s.find('/', start);
    const std::string row = s.substr(start, slash == std::string::npos ? std::string::npos : slash - start);
    std::vector<int> letters;
    if (row != ".") {
      std::size_t p = 0;
      while (p <= row.size()) {
        const auto comma = row.find(',', p);
        const std::string tok = row.substr(p, comma == std::string::npos ? std::string::npos : comma - p);
        letters.push_back(std::stoi(tok));
        if (comma == std::string::npos) break;
        p = comma + 1;
      }
    }
    t.rows.push_back(std::move(letters));
    if (slash == std::string::npos) break;
    start = slash + 1;
  }
  if (static_cast<int>(t.rows.size()) != shape.n_parts()) throw std::invalid_argument("tableau row count does not match shape");
  for (int i = 1; i <= shape.n_parts(); ++i)
    if (static_cast<int>(t.rows[static_cast<std::size_t>(i - 1)].size()) != shape.row(i))
      throw std::invalid_argument("tableau row " + std::to_string(i) + " has the wrong length");
  return t;
}

namespace {

struct Enumerator {
  const Composition& eta;
  const TableauVisitor& visit;
  int worker;
  int n_workers;
  int n;
  std::vector<Cell> order;  // column-major
  std::size_t col1_cells = 0;
  AdmissibleTableau t;
  std::vector<std::uint64_t> used;  // per column bitmask of letters
  long long first_column_index = 0;

  Enumerator(const Composition& e, const TableauVisitor& v, int w, int nw)
      : eta(e), visit(v), worker(w), n_workers(nw), n(e.n_parts()) {
    if (n > 63) throw std::invalid_argument("too many letters for the tableau enumerator");
    int width = 0;
    for (int p : eta.parts()) width = std::max(width, p);
    for (int j = 1; j <= width; ++j)
      for (int i = 1; i <= n; ++i)
        if (eta.row(i) >= j) order.push_back({i, j});
    for (int i = 1; i <= n; ++i)
      if (eta.row(i) >= 1) ++col1_cells;
    t.shape = eta;
    t.rows.resize(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) t.rows[static_cast<std::size_t>(i - 1)].assign(static_cast<std::size_t>(eta.row(i)), 0);
    used.assign(static_cast<std::size_t>(width + 1), 0);
  }

  bool allowed(Cell s, int c) const {
    if (used[static_cast<std::size_t>(s.col)] >> c & 1U) return false;
    if (s.col == 1) return c >= s.row;
    for (int r = 1; r < s.row; ++r)
      if (eta.row(r) >= s.col - 1 && t.at({r, s.col - 1}) == c) return false;
    return true;
  }

  void run(std::size_t k) {
    if (n_workers > 1 && k == col1_cells && first_column_index++ % n_workers != worker) return;
    if (k == order.size()) {
      visit(t);
      return;
    }
    const Cell s = order[k];
    auto& slot = t.rows[static_cast<std::size_t>(s.row - 1)][static_cast<std::size_t>(s.col - 1)];
    for (int c = 1; c <= n; ++c) {
      if (!allowed(s, c)) continue;
      slot = c;
      used[static_cast<std::size_t>(s.col)] |= std::uint64_t{1} << c;
      run(k + 1);
      used[static_cast<std::size_t>(s.col)] &= ~(std::uint64_t{1} << c);
    }
    slot = 0;
  }
};

}  // namespace

void enumerate_admissible(const Composition& eta, const TableauVisitor& visit, int worker, int n_workers) {
  if (n_workers < 1 || worker < 0 || worker >= n_workers) throw std::invalid_argument("bad worker split");
  Enumerator e(eta, visit, worker, n_workers);
  e.run(0);
}

std::vector<AdmissibleTableau> admissible_tableaux(const Composition& eta) {
  std::vector<AdmissibleTableau> out;
  enumerate_admissible(eta, [&](const AdmissibleTableau& t) { out.push_back(t); });
  return out;
}

namespace {

bool shape_matches(const AdmissibleTableau& t) {
  if (static_cast<int>(t.rows.size()) != t.shape.n_parts()) return false;
  for (int i = 1; i <= t.shape.n_parts(); ++i) {
    const auto& row = t.rows[static_cast<std::size_t>(i - 1)];
    if (static_cast<int>(row.size()) != t.shape.row(i)) return false;
    for (int c : row)
      if (c < 1 || c > t.n_letters()) return false;
  }
  return true;
}

// letter in (i, j) of T with column 0 added; 0 outside the diagram
int augmented_at(const AdmissibleTableau& t, int i, int j) {
  if (j == 0) return i;
  return t.shape.contains({i, j}) ? t.at({i, j}) : 0;
}

}  // namespace

bool is_admissible(const AdmissibleTableau& t) {
  if (!shape_matches(t)) return false;
  const int n = t.shape.n_parts();
  for (const Cell s : t.shape.cells()) {
    const int c = t.at(s);
    for (int k = s.row + 1; k <= n; ++k) {
      if (t.shape.contains({k, s.col}) && t.at({k, s.col}) == c) return false;
      if (t.shape.contains({k, s.col + 1}) && t.at({k, s.col + 1}) == c) return false;
    }
    if (s.col == 1 && s.row > c) return false;
  }
  return true;
}

bool is_admissible_augmented(const AdmissibleTableau& t) {
  if (!shape_matches(t)) return false;
  const int n = t.shape.n_parts();
  int width = 0;
  for (int p : t.shape.parts()) width = std::max(width, p);
  for (int j = 0; j <= width; ++j)
    for (int i = 1; i <= n; ++i) {
      const int c = augmented_at(t, i, j);
      if (!c) continue;
      for (int k = i + 1; k <= n; ++k) {
        if (augmented_at(t, k, j) == c) return false;
        if (augmented_at(t, k, j + 1) == c) return false;
      }
    }
  return true;
}

std::vector<Cell> critical_cells(const AdmissibleTableau& t) {
  std::vector<Cell> out;
  for (const Cell s : t.shape.cells()) {
    const int c = t.at(s);
    if ((s.col > 1 && t.at({s.row, s.col - 1}) == c) || (s.col == 1 && c == s.row)) out.push_back(s);
  }
  return out;
}

std::vector<Cell> critical_cells_augmented(const AdmissibleTableau& t) {
  std::vector<Cell> out;
  for (const Cell s : t.shape.cells())
    if (augmented_at(t, s.row, s.col - 1) == t.at(s)) out.push_back(s);
  return out;
}

AlphaPoly critical_weight(const AdmissibleTableau& t) {
  AlphaPoly w(1);
  for (const Cell s : critical_cells(t)) w *= hook_d(t.shape, s);
  return w;
}

AlphaPoly hook_product(const Composition& eta) {
  AlphaPoly p(1);
  for (const Cell s : eta.cells()) p *= hook_d(eta, s);
  return p;
}

AlphaRational NonsymJack::coeff(const std::vector<int>& exps) const {
  auto it = numerators.find(exps);
  return it == numerators.end() ? AlphaRational(0) : AlphaRational(it->second, denominator);
}

SuperPolynomial NonsymJack::poly() const {
  SuperPolynomial out(eta.n_parts());
  for (const auto& [ev, num] : numerators) out.add_term(leading_monomial(ev, 0), AlphaRational(num, denominator));
  return out;
}

NonsymJack nonsym_jack(const Composition& eta, int jobs) {
  if (jobs < 1) throw std::invalid_argument("jobs must be positive");
  // hooks are reused by every tableau
  std::map<Cell, AlphaPoly> hooks;
  for (const Cell s : eta.cells()) hooks.emplace(s, hook_d(eta, s));

  auto work = [&](int worker, int n_workers, std::map<std::vector<int>, AlphaPoly>& acc, long long& count) {
    enumerate_admissible(
        eta,
        [&](const AdmissibleTableau& t) {
          AlphaPoly w(1);
          for (const Cell s : critical_cells(t)) w *= hooks.at(s);
          auto [it, inserted] = acc.try_emplace(t.evaluation(), w);
          if (!inserted) {
            it->second += w;
            if (it->second.is_zero()) acc.erase(it);
          }
          ++count;
        },
        worker, n_workers);
  };

  NonsymJack out;
  out.eta = eta;
  out.denominator = hook_product(eta);
  if (jobs == 1) {
    work(0, 1, out.numerators, out.tableau_count);
    return out;
  }
  std::vector<std::map<std::vector<int>, AlphaPoly>> parts(static_cast<std::size_t>(jobs));
  std::vector<long long> counts(static_cast<std::size_t>(jobs), 0);
  std::vector<std::thread> threads;
  for (int w = 0; w < jobs; ++w)
    threads.emplace_back([&, w] { work(w, jobs, parts[static_cast<std::size_t>(w)], counts[static_cast<std::size_t>(w)]); });
  for (auto& th : threads) th.join();
  for (int w = 0; w < jobs; ++w) {
    out.tableau_count += counts[static_cast<std::size_t>(w)];
    for (auto& [ev, num] : parts[static_cast<std::size_t>(w)]) {
      auto [it, inserted] = out.numerators.try_emplace(ev, num);
      if (!inserted) {
        it->second += num;
        if (it->second.is_zero()) out.numerators.erase(it);
      }
    }
  }
  return out;
}

}  // namespace sjack
