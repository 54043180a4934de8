// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>

#include "sjack/configurations.hpp"
#include "sjack/nonsym_jack.hpp"
#include "sjack/recurrence.hpp"
#include "sjack/superjack.hpp"
#include "sjack/triangular.hpp"

using namespace sjack;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  std::vector<std::string> notes;
};

int jobs_from_env() {
  const char* s = std::getenv("SJACK_JOBS");
  const int j = s ? std::atoi(s) : 1;
  return j > 0 ? j : 1;
}

void absorb(Outcome& out, const CheckReport& r, long long& checked) {
  checked += r.checked;
  if (r.ok) return;
  out.ok = false;
  for (std::size_t i = 0; i < r.failures.size() && out.notes.size() < 5; ++i) out.notes.push_back(r.failures[i]);
}

Outcome worked_example() {
  Outcome out;
  const Superpartition sp = parse_superpartition("(3,1,0;4,2,1)");
  const AlphaPoly den = AlphaPoly::linear(3, 5) * AlphaPoly::linear(2, 3) * AlphaPoly::linear(1, 2) *
                        AlphaPoly::linear(1, 1) * AlphaPoly::linear(1, 3);
  const AlphaRational expected(AlphaPoly(1), den);
  const AlphaRational closed = c_min_closed(sp);
  const AlphaRational configs = c_min_via_configurations(sp);
  out.ok = closed == expected && configs == expected;
  out.detail = "closed " + c_min_closed_str(sp) + " = " + closed.str() + "; configuration sum " + configs.str();
  return out;
}

Outcome desk_scale_cmin(int jobs) {
  Outcome out;
  int count = 0;
  for (const auto& sp : superpartitions_up_to(5)) {
    ++count;
    const AlphaRational via = c_min_via_expansion(sp, jobs);
    const AlphaRational closed = c_min_closed(sp);
    if (via != closed) {
      out.ok = false;
      out.notes.push_back(sp.str() + ": expansion " + via.str() + ", closed " + closed.str());
    }
  }
  out.detail = std::to_string(count) + " superpartitions with |Lambda| <= 5";
  return out;
}

Outcome identity_two() {
  Outcome out;
  long long checked = 0;
  int gammas = 0;
  for (int m = 1; m <= 5; ++m)
    for (const auto& g : all_gammas(m)) {
      ++gammas;
      absorb(out, identity2_check(g), checked);
    }
  out.detail = std::to_string(gammas) + " gamma vectors, m <= 5";
  return out;
}

Outcome lgv() {
  Outcome out;
  long long checked = 0;
  for (int m = 1; m <= 5; ++m)
    for (const auto& g : all_gammas(m)) {
      absorb(out, det_check(g), checked);
      absorb(out, lgv_involution_check(g), checked);
    }
  out.detail = std::to_string(checked) + " checks, m <= 5";
  return out;
}

Outcome recurrences() {
  Outcome out;
  long long checked = 0;
  absorb(out, recurrence_suite(3, 7), checked);
  for (int m = 2; m <= 5; ++m) {
    absorb(out, row_reduce_check(m), checked);
    for (const auto& g : all_gammas(m))
      if (g.ones() > 0) absorb(out, iota_check(g), checked);
  }
  out.detail = std::to_string(checked) + " checks, k <= 3, i,j <= 7; iota for m <= 5";
  return out;
}

Outcome norms(int jobs) {
  Outcome out;
  long long checked = 0;
  // ratio of the computed norm to the closed form, per fermionic degree
  std::map<int, std::set<std::string>> ratios;
  bool orthogonal = true;
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m * (m - 1) / 2 <= n; ++m) {
      const SectorNorms s = sector_norms(n, m, jobs);
      absorb(out, verify_sector_norms(s, NormConvention::as_stated), checked);
      for (std::size_t i = 0; i < s.basis.size(); ++i)
        for (std::size_t j = 0; j < s.basis.size(); ++j) {
          if (i != j) {
            orthogonal = orthogonal && s.gram[i][j].is_zero();
            continue;
          }
          ratios[m].insert((s.gram[i][i] / expected_norm(s.basis[i], NormConvention::as_stated)).str());
        }
    }
  out.detail = std::string("orthogonality ") + (orthogonal ? "holds" : "FAILS") + "; <<J|J>> / closed form by m:";
  for (const auto& [m, set] : ratios) {
    out.detail += " m=" + std::to_string(m) + ":{";
    bool first = true;
    for (const auto& r : set) {
      out.detail += (first ? "" : ",") + r;
      first = false;
    }
    out.detail += "}";
  }
  bool sector_sign_only = true;
  for (const auto& [m, set] : ratios)
    sector_sign_only = sector_sign_only && set.size() == 1 && *set.begin() == ((m * (m - 1) / 2) % 2 ? "-1" : "1");
  if (sector_sign_only) out.detail += "; every ratio is (-1)^{m(m-1)/2}";
  return out;
}

Outcome fixtures() {
  Outcome out;
  const Superpartition sp = parse_superpartition("(3,1,0;5,3,2)");
  const std::string star_rows = diagram(sp).row_lengths();
  const std::string conj = conjugate(sp).str();
  if (star_rows != "(5,3,3,2,1,0)") {
    out.ok = false;
    out.notes.push_back("Lambda* rows " + star_rows);
  }
  if (conj != "(5,4,1;3,1)") {
    out.ok = false;
    out.notes.push_back("conjugate " + conj);
  }
  int etas = 0;
  for (int n_parts = 1; n_parts <= 4; ++n_parts) {
    std::vector<int> parts(static_cast<std::size_t>(n_parts), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
      if (pos == parts.size()) {
        ++etas;
        const Composition eta(parts);
        const AlphaRational lead = nonsym_jack(eta).coeff(parts);
        if (lead != AlphaRational(1)) {
          out.ok = false;
          out.notes.push_back("E" + eta.str() + " leading coefficient " + lead.str());
        }
        return;
      }
      for (int v = 0; v <= left; ++v) {
        parts[pos] = v;
        rec(pos + 1, left - v);
      }
    };
    rec(0, 5);
  }
  long long checked = 0;
  int lambdas = 0;
  for (const auto& x : superpartitions_up_to(5)) {
    ++lambdas;
    absorb(out, verify_lemma2(x), checked);
  }
  out.detail = "Lambda* " + star_rows + ", conjugate " + conj + ", " + std::to_string(etas) + " compositions, " +
               std::to_string(lambdas) + " hook factorizations";
  return out;
}

}  // namespace

int main() {
  const int jobs = jobs_from_env();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"worked example c_min(3,1,0;4,2,1), closed and configuration sum", worked_example},
      {"c_min by expansion equals the product formula, |Lambda| <= 5", [&] { return desk_scale_cmin(jobs); }},
      {"sigma_gamma equals the shifted Vandermonde, m <= 5", identity_two},
      {"Sigma = Sigma_pi = det M and the LGV involution, m <= 5", lgv},
      {"P^[k] recurrences, interpolation, double counting, Psi/Theta/iota", recurrences},
      {"norm and orthogonality, sectors n <= 4", [&] { return norms(jobs); }},
      {"structural fixtures, leading coefficients, hook factorization", fixtures},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << " (" << timing << ")\n";
    std::cout << "       " << o.detail << "\n";
    for (const auto& n : o.notes) std::cout << "       - " << n << "\n";
    std::cout.flush();
    if (!o.ok) ++failed;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria pass\n";
  return failed ? 1 : 0;
}
