#include "sjack/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "sjack/permutation.hpp"

namespace sjack {

namespace {

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw std::invalid_argument("empty entry in integer list");
    std::size_t used = 0;
    int v = std::stoi(cur, &used);
    if (used != cur.size()) throw std::invalid_argument("bad integer: " + cur);
    out.push_back(v);
    cur.clear();
  };
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) return out;
  for (char ch : s) {
    if (ch == ',')
      flush();
    else if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-')
      cur += ch;
    else
      throw std::invalid_argument(std::string("unexpected character '") + ch + "'");
  }
  flush();
  return out;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int value) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

int Partition::part(int i) const { return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0; }

std::string Partition::str() const { return "(" + join(parts_) + ")"; }

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("composition needs at least one part");
  for (int p : parts_)
    if (p < 0) throw std::invalid_argument("composition parts must be non-negative");
}

int Composition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<Cell> Composition::cells() const {
  std::vector<Cell> out;
  for (int i = 1; i <= n_parts(); ++i)
    for (int j = 1; j <= row(i); ++j) out.push_back({i, j});
  return out;
}

std::string Composition::str() const { return "(" + join(parts_) + ")"; }

Composition parse_composition(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  return Composition(parse_int_list(s));
}

Superpartition::Superpartition(std::vector<int> fermionic, Partition symmetric)
    : fermionic_(std::move(fermionic)), symmetric_(std::move(symmetric)) {
  for (std::size_t i = 0; i < fermionic_.size(); ++i) {
    if (fermionic_[i] < 0) throw std::invalid_argument("fermionic parts must be non-negative");
    if (i && fermionic_[i] >= fermionic_[i - 1])
      throw std::invalid_argument("fermionic parts must be strictly decreasing");
  }
}

int Superpartition::degree() const {
  return std::accumulate(fermionic_.begin(), fermionic_.end(), 0) + symmetric_.size();
}

int Superpartition::ell_nm() const {
  const int m = fermionic_degree();
  return degree() - m * (m - 1) / 2;
}

std::string Superpartition::str() const { return "(" + join(fermionic_) + ";" + join(symmetric_.parts()) + ")"; }

Superpartition parse_superpartition(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.size() < 3 || s.front() != '(' || s.back() != ')')
    throw std::invalid_argument("superpartition must look like (a1,...;s1,...): " + std::string(text));
  s = s.substr(1, s.size() - 2);
  const auto semi = s.find(';');
  if (semi == std::string::npos || s.find(';', semi + 1) != std::string::npos)
    throw std::invalid_argument("superpartition needs exactly one ';': " + std::string(text));
  auto ferm = parse_int_list(s.substr(0, semi));
  auto sym = parse_int_list(s.substr(semi + 1));
  for (std::size_t i = 1; i < sym.size(); ++i)
    if (sym[i] > sym[i - 1]) throw std::invalid_argument("symmetric part must be weakly decreasing");
  return Superpartition(std::move(ferm), Partition(std::move(sym)));
}

int CircledDiagram::augmented_length(int i) const {
  const auto& r = rows[static_cast<std::size_t>(i - 1)];
  return r.length + (r.circled ? 1 : 0);
}

bool CircledDiagram::column_has_circle(int col) const {
  return std::any_of(rows.begin(), rows.end(), [col](const DiagramRow& r) { return r.circled && r.length + 1 == col; });
}

std::string CircledDiagram::ascii() const {
  std::string out;
  for (const auto& r : rows) {
    out += std::string(static_cast<std::size_t>(r.length), '#');
    if (r.circled) out += 'O';
    out += '\n';
  }
  return out;
}

Partition star(const Superpartition& sp) {
  std::vector<int> all = sp.fermionic();
  all.insert(all.end(), sp.symmetric().parts().begin(), sp.symmetric().parts().end());
  std::sort(all.begin(), all.end(), std::greater<>());
  return Partition(std::move(all));
}

CircledDiagram diagram(const Superpartition& sp) {
  CircledDiagram d;
  for (int f : sp.fermionic()) d.rows.push_back({f, true});
  for (int s : sp.symmetric().parts()) d.rows.push_back({s, false});
  // circled rows go on top of equal-length uncircled ones
  std::stable_sort(d.rows.begin(), d.rows.end(), [](const DiagramRow& a, const DiagramRow& b) {
    if (a.length != b.length) return a.length > b.length;
    return a.circled && !b.circled;
  });
  return d;
}

std::string CircledDiagram::row_lengths() const {
  std::string out = "(";
  for (std::size_t i = 0; i < rows.size(); ++i) out += (i ? "," : "") + std::to_string(rows[i].length);
  return out + ")";
}

Superpartition conjugate(const Superpartition& sp) {
  const CircledDiagram d = diagram(sp);
  const int rows = static_cast<int>(d.rows.size());
  const int cols = rows ? d.augmented_length(1) : 0;
  std::vector<int> ferm, sym;
  for (int c = 1; c <= cols; ++c) {
    int height = 0;
    while (height < rows && d.augmented_length(height + 1) >= c) ++height;
    const auto& bottom = d.rows[static_cast<std::size_t>(height - 1)];
    const bool circled = bottom.circled && bottom.length + 1 == c;
    if (circled)
      ferm.push_back(height - 1);
    else
      sym.push_back(height);
  }
  std::sort(ferm.begin(), ferm.end(), std::greater<>());
  std::sort(sym.begin(), sym.end(), std::greater<>());
  return Superpartition(std::move(ferm), Partition(std::move(sym)));
}

Superpartition lambda_min(int n, int m) {
  if (m < 0 || n < 0) throw std::invalid_argument("lambda_min needs n, m >= 0");
  const int ell = n - m * (m - 1) / 2;
  if (ell < 0)
    throw std::invalid_argument("no superpartition of degree " + std::to_string(n) + " with fermionic degree " +
                                std::to_string(m));
  std::vector<int> ferm;
  for (int k = m - 1; k >= 0; --k) ferm.push_back(k);
  return Superpartition(std::move(ferm), Partition(std::vector<int>(static_cast<std::size_t>(ell), 1)));
}

Composition tilde(const Superpartition& sp, int n_vars) {
  if (n_vars < sp.length() || n_vars < 1)
    throw std::invalid_argument("tilde needs N >= length of " + sp.str());
  std::vector<int> out(sp.fermionic().rbegin(), sp.fermionic().rend());
  std::vector<int> sym = sp.symmetric().parts();
  sym.resize(static_cast<std::size_t>(n_vars - sp.fermionic_degree()), 0);
  out.insert(out.end(), sym.rbegin(), sym.rend());
  return Composition(std::move(out));
}

namespace {

void require_cell(const Composition& eta, Cell s) {
  if (!eta.contains(s))
    throw std::out_of_range("cell (" + std::to_string(s.row) + "," + std::to_string(s.col) + ") not in " + eta.str());
}

}  // namespace

int arm(const Composition& eta, Cell s) {
  require_cell(eta, s);
  return eta.row(s.row) - s.col;
}

int leg_upper(const Composition& eta, Cell s) {
  require_cell(eta, s);
  const int len = eta.row(s.row);
  int count = 0;
  for (int k = 1; k < s.row; ++k)
    if (s.col <= eta.row(k) + 1 && eta.row(k) + 1 <= len) ++count;
  return count;
}

int leg_lower(const Composition& eta, Cell s) {
  require_cell(eta, s);
  const int len = eta.row(s.row);
  int count = 0;
  for (int k = s.row + 1; k <= eta.n_parts(); ++k)
    if (s.col <= eta.row(k) && eta.row(k) <= len) ++count;
  return count;
}

AlphaPoly hook_d(const Composition& eta, Cell s) {
  return AlphaPoly::linear(arm(eta, s) + 1, leg_upper(eta, s) + leg_lower(eta, s) + 1);
}

std::vector<CircledHook> arm_leg_circ(const Superpartition& sp) {
  const CircledDiagram d = diagram(sp);
  const int rows = static_cast<int>(d.rows.size());
  std::vector<CircledHook> out;
  for (int i = 1; i <= rows; ++i) {
    const auto& row = d.rows[static_cast<std::size_t>(i - 1)];
    for (int j = 1; j <= row.length; ++j) {
      if (row.circled && d.column_has_circle(j)) continue;
      int leg = 0;
      for (int r = i + 1; r <= rows; ++r)
        if (d.rows[static_cast<std::size_t>(r - 1)].length >= j) ++leg;
      out.push_back({{i, j}, row.length - j + (row.circled ? 1 : 0), leg});
    }
  }
  return out;
}

Integer f_lambda_s(const Superpartition& sp, int n_vars) {
  if (n_vars < sp.length()) throw std::invalid_argument("f_lambda_s needs N >= length of " + sp.str());
  std::map<int, int> mult;
  for (int p : sp.symmetric().parts()) ++mult[p];
  mult[0] = n_vars - sp.length();
  Integer f = 1;
  for (const auto& [part, count] : mult) {
    Integer fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(count));
    f *= fact;
  }
  return f;
}

AlphaPoly z_lambda(const Superpartition& sp) {
  std::map<int, int> mult;
  for (int p : sp.symmetric().parts()) ++mult[p];
  Integer z = 1;
  for (const auto& [part, count] : mult) {
    Integer fact, power;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(count));
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(part), static_cast<unsigned long>(count));
    z *= fact * power;
  }
  std::vector<Integer> coeffs(static_cast<std::size_t>(sp.length() + 1), Integer(0));
  coeffs.back() = z;
  return AlphaPoly(std::move(coeffs));
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Superpartition> superpartitions(int n, int m) {
  std::vector<Superpartition> out;
  if (n < 0 || m < 0 || n < m * (m - 1) / 2) return out;
  std::vector<int> ferm;
  // strictly decreasing m-tuples of non-negative integers with sum <= n
  std::function<void(int, int, int)> rec = [&](int slots, int upper, int budget) {
    if (slots == 0) {
      for (const auto& sym : partitions_of(budget)) out.emplace_back(ferm, sym);
      return;
    }
    for (int p = std::min(upper, budget); p >= slots - 1; --p) {
      // the remaining slots - 1 parts need at least (slots-1)(slots-2)/2
      if (budget - p < (slots - 1) * (slots - 2) / 2) continue;
      ferm.push_back(p);
      rec(slots - 1, p - 1, budget - p);
      ferm.pop_back();
    }
  };
  rec(m, n, n);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<Superpartition> superpartitions_up_to(int max_degree, int max_m) {
  std::vector<Superpartition> out;
  for (int n = 0; n <= max_degree; ++n)
    for (int m = 0; m <= max_m && m * (m - 1) / 2 <= n; ++m) {
      auto sector = superpartitions(n, m);
      out.insert(out.end(), sector.begin(), sector.end());
    }
  return out;
}

}  // namespace sjack
