// sjack: Jack polynomials in superspace, their minimal coefficient and the identities behind it.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sjack/configurations.hpp"
#include "sjack/json_io.hpp"
#include "sjack/nonsym_jack.hpp"
#include "sjack/recurrence.hpp"
#include "sjack/superjack.hpp"
#include "sjack/triangular.hpp"

using namespace sjack;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

enum class Format { text, json, latex };

struct RunConfig {
  Format format = Format::text;
  std::string out_path;
  int jobs = 1;
  int n_vars = 0;  // 0: pick the default for the input
  std::string target;
  std::string gamma;
  bool gamma_given = false;
  int m = 1;
  std::string suite = "all";
  int max_m = 5;
  int max_degree = 5;
  int max_k = 3;
  int max_ij = 7;
  bool via_expansion = false;
  std::string convention = "stated";
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Style style_of(const RunConfig& cfg) { return cfg.format == Format::latex ? Style::latex : Style::text; }

void emit(const RunConfig& cfg, const std::string& body) {
  if (cfg.out_path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(cfg.out_path);
  if (!f) throw std::runtime_error("cannot write " + cfg.out_path);
  f << body;
}

void progress(const std::string& line) { std::cerr << line << std::endl; }

Superpartition read_superpartition(const std::string& text) {
  try {
    return parse_superpartition(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad superpartition: ") + e.what());
  }
}

Composition read_composition(const std::string& text) {
  try {
    return parse_composition(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad composition: ") + e.what());
  }
}

GammaVector read_gamma(const RunConfig& cfg) {
  if (!cfg.gamma_given) return zero_gamma(cfg.m);
  try {
    return parse_gamma(cfg.gamma);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad gamma: ") + e.what());
  }
}

int n_vars_for(const RunConfig& cfg, const Superpartition& sp) {
  const int n = cfg.n_vars > 0 ? cfg.n_vars : default_n_vars(sp);
  if (n < sp.length()) throw UsageError("N must be at least the length of " + sp.str());
  return n;
}

std::string matrix_str(const PolyMatrix& m, Style style) {
  std::string out;
  for (const auto& row : m) {
    out += "  [";
    for (std::size_t c = 0; c < row.size(); ++c) out += (c ? ", " : "") + row[c].str(style);
    out += "]\n";
  }
  return out;
}

Json matrix_json(const PolyMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(to_json(e));
    out.push_back(r);
  }
  return out;
}

// ---- jack ----

int cmd_jack_expand(const RunConfig& cfg) {
  const Superpartition sp = read_superpartition(cfg.target);
  const int n = n_vars_for(cfg, sp);
  progress("expanding J" + sp.str() + " in " + std::to_string(n) + " variables");
  const JackExpansion e = jack_super(sp, n, cfg.jobs);
  std::string out;
  if (cfg.format == Format::json) {
    out = to_json(e).dump(2) + "\n";
  } else if (cfg.format == Format::latex) {
    out = "J_{" + sp.str() + "} = ";
    bool first = true;
    for (auto it = e.m_basis.rbegin(); it != e.m_basis.rend(); ++it) {
      out += (first ? "" : " + ") + std::string("\\left(") + it->second.str(Style::latex) + "\\right) m_{" +
             it->first.str() + "}";
      first = false;
    }
    out += "\n";
  } else {
    out = "J" + sp.str() + " N=" + std::to_string(n) + "\n";
    for (auto it = e.m_basis.rbegin(); it != e.m_basis.rend(); ++it)
      out += "  m" + it->first.str() + "  " + it->second.str() + "\n";
  }
  emit(cfg, out);
  return kOk;
}

int cmd_jack_cmin(const RunConfig& cfg) {
  const Superpartition sp = read_superpartition(cfg.target);
  const Style style = style_of(cfg);
  const AlphaRational closed = c_min_closed(sp);
  const AlphaRational configs = c_min_via_configurations(sp);
  bool agree = configs == closed;
  AlphaRational expansion;
  if (cfg.via_expansion) {
    progress("symmetrizing J" + sp.str() + " (this grows like N!)");
    expansion = c_min_via_expansion(sp, cfg.jobs);
    agree = agree && expansion == closed;
  }
  std::string out;
  if (cfg.format == Format::json) {
    Json j{{"superpartition", sp.str()},
           {"closed", c_min_closed_str(sp)},
           {"expanded", to_json(closed)},
           {"configurations", to_json(configs)}};
    if (cfg.via_expansion) j["expansion"] = to_json(expansion);
    j["agree"] = agree;
    out = j.dump(2) + "\n";
  } else {
    out += "closed:          " + c_min_closed_str(sp, style) + "\n";
    out += "expanded:        " + closed.str(style) + "\n";
    out += "configurations:  " + configs.str(style) + "\n";
    if (cfg.via_expansion) out += "expansion:       " + expansion.str(style) + "\n";
  }
  emit(cfg, out);
  if (!agree) {
    std::cerr << "mismatch: the computed forms of c_min" << sp.str() << " differ\n";
    return kMismatch;
  }
  return kOk;
}

int cmd_jack_norm(const RunConfig& cfg) {
  const Superpartition sp = read_superpartition(cfg.target);
  NormConvention conv;
  if (cfg.convention == "stated")
    conv = NormConvention::as_stated;
  else if (cfg.convention == "signed")
    conv = NormConvention::sector_signed;
  else
    throw UsageError("--convention must be stated or signed");
  progress("Gram matrix of sector n=" + std::to_string(sp.degree()) + " m=" + std::to_string(sp.fermionic_degree()));
  const SectorNorms s = sector_norms(sp.degree(), sp.fermionic_degree(), cfg.jobs);
  std::size_t self = 0;
  while (!(s.basis[self] == sp)) ++self;
  const AlphaRational got = s.gram[self][self];
  const AlphaRational want = expected_norm(sp, conv);
  bool orthogonal = true;
  std::string witness;
  for (std::size_t j = 0; j < s.basis.size(); ++j)
    if (j != self && !s.gram[self][j].is_zero()) {
      orthogonal = false;
      if (witness.empty()) witness = s.basis[j].str();
    }
  const Style style = style_of(cfg);
  std::string out;
  if (cfg.format == Format::json) {
    Json j{{"superpartition", sp.str()},
           {"norm", to_json(got)},
           {"expected", to_json(want)},
           {"convention", cfg.convention},
           {"ratio", to_json(want.is_zero() ? AlphaRational(0) : got / want)},
           {"orthogonal", orthogonal}};
    out = j.dump(2) + "\n";
  } else {
    out += "<<J|J>>:     " + got.str(style) + "\n";
    out += "expected:    " + want.str(style) + "  (" + cfg.convention + ")\n";
    out += "ratio:       " + (got / want).str(style) + "\n";
    out += "orthogonal:  " + std::string(orthogonal ? "yes" : "no, e.g. against " + witness) + "\n";
  }
  emit(cfg, out);
  return got == want && orthogonal ? kOk : kMismatch;
}

// ---- nonsym / tableaux ----

int cmd_nonsym(const RunConfig& cfg) {
  const Composition eta = read_composition(cfg.target);
  const NonsymJack e = nonsym_jack(eta, cfg.jobs);
  const SuperPolynomial p = e.poly();
  std::string out;
  if (cfg.format == Format::json) {
    Json j{{"eta", eta.str()}, {"tableaux", e.tableau_count}, {"poly", to_json(p)}};
    out = j.dump(2) + "\n";
  } else {
    out = p.str(style_of(cfg)) + "\n";
  }
  emit(cfg, out);
  return kOk;
}

int cmd_tableaux(const RunConfig& cfg) {
  const Composition eta = read_composition(cfg.target);
  std::string out;
  Json list = Json::array();
  long long count = 0;
  enumerate_admissible(eta, [&](const AdmissibleTableau& t) {
    ++count;
    std::string ev;
    for (int x : t.evaluation()) ev += (ev.empty() ? "" : ",") + std::to_string(x);
    if (cfg.format == Format::json)
      list.push_back(Json{{"tableau", t.str()}, {"ev", t.evaluation()}, {"d", critical_weight(t).str()}});
    else
      out += t.str() + "  ev=(" + ev + ")  d=" + critical_weight(t).str(style_of(cfg)) + "\n";
  });
  if (cfg.format == Format::json)
    out = Json{{"eta", eta.str()}, {"count", count}, {"tableaux", list}}.dump(2) + "\n";
  else
    out += "# " + std::to_string(count) + " tableaux\n";
  emit(cfg, out);
  return kOk;
}

// ---- identity ----

int cmd_identity_sigma(const RunConfig& cfg) {
  const GammaVector gamma = read_gamma(cfg);
  const MultiPoly s = sigma_gamma(gamma);
  const MultiPoly want = vandermonde_shift(PolyRing::for_m(gamma.m()), gamma.m());
  if (cfg.format == Format::json)
    emit(cfg, Json{{"gamma", gamma.str()}, {"sigma", to_json(s)}, {"holds", s == want}}.dump(2) + "\n");
  else
    emit(cfg, s.str(style_of(cfg)) + "\n");
  if (!(s == want)) {
    std::cerr << "mismatch: expected " << want.str() << "\n";
    return kMismatch;
  }
  return kOk;
}

int cmd_identity_det(const RunConfig& cfg) {
  const GammaVector gamma = cfg.gamma_given ? read_gamma(cfg) : zero_gamma(cfg.m);
  const PolyMatrix M = P_matrix(gamma);
  const MultiPoly d = det(M);
  const CheckReport r = det_check(gamma);
  const Style style = style_of(cfg);
  if (cfg.format == Format::json)
    emit(cfg, Json{{"gamma", gamma.str()}, {"matrix", matrix_json(M)}, {"det", to_json(d)}, {"holds", r.ok}}.dump(2) +
                  "\n");
  else
    emit(cfg, "M =\n" + matrix_str(M, style) + "det = " + d.str(style) + "\n");
  if (!r.ok) {
    std::cerr << "mismatch: " << r.failures.front() << "\n";
    return kMismatch;
  }
  return kOk;
}

int cmd_identity_rowreduce(const RunConfig& cfg) {
  const GammaVector gamma = cfg.gamma_given ? read_gamma(cfg) : zero_gamma(cfg.m);
  const bool is_zero = gamma == zero_gamma(gamma.m());
  const RowReduction rr = row_reduce(P_matrix(gamma));
  const Style style = style_of(cfg);
  std::string out;
  if (cfg.format == Format::json) {
    Json factors = Json::array();
    for (const auto& f : rr.factors) factors.push_back(to_json(f));
    Json j{{"gamma", gamma.str()},     {"experiment", !is_zero},      {"exact", rr.exact},
           {"unit_upper", rr.unit_upper}, {"factors", factors}, {"final", matrix_json(rr.final_matrix)}};
    if (rr.exact) j["det"] = to_json(rr.determinant);
    out = j.dump(2) + "\n";
  } else {
    if (!is_zero) out += "# experiment: no claim is made for gamma other than 0...0\n";
    out += "exact: " + std::string(rr.exact ? "yes" : "no (" + rr.note + ")") + "\n";
    out += "factors:";
    for (const auto& f : rr.factors) out += " (" + f.str(style) + ")";
    out += "\nfinal =\n" + matrix_str(rr.final_matrix, style);
    out += "unit upper triangular: " + std::string(rr.unit_upper ? "yes" : "no") + "\n";
    if (rr.exact) out += "det = " + rr.determinant.str(style) + "\n";
  }
  emit(cfg, out);
  if (!is_zero) return kOk;
  const CheckReport r = row_reduce_check(gamma.m());
  if (!r.ok) {
    std::cerr << "mismatch: " << r.failures.front() << "\n";
    return kMismatch;
  }
  return kOk;
}

// ---- suites ----

struct Suite {
  std::string name;
  std::function<CheckReport()> run;
};

CheckReport over_gammas(int max_m, const std::function<CheckReport(const GammaVector&)>& fn) {
  CheckReport r;
  for (int m = 1; m <= max_m; ++m)
    for (const auto& g : all_gammas(m)) r.merge(fn(g));
  return r;
}

CheckReport over_superpartitions(int max_degree, int max_m, const std::function<CheckReport(const Superpartition&)>& fn) {
  CheckReport r;
  for (const auto& sp : superpartitions_up_to(max_degree, max_m)) r.merge(fn(sp));
  return r;
}

std::vector<Suite> identity_suites(const RunConfig& cfg) {
  const int M = cfg.max_m;
  const int D = cfg.max_degree;
  return {
      {"identity2", [=] { return over_gammas(M, identity2_check); }},
      {"lgv", [=] {
         CheckReport r = over_gammas(M, det_check);
         r.merge(over_gammas(M, lgv_involution_check));
         return r;
       }},
      {"iota", [=] { return over_gammas(M, iota_check); }},
      {"rowreduce", [=] {
         CheckReport r;
         for (int m = 1; m <= M; ++m) r.merge(row_reduce_check(m));
         return r;
       }},
      {"recurrence", [=] { return recurrence_suite(cfg.max_k, cfg.max_ij); }},
      {"identity1", [=] {
         return over_superpartitions(std::max(D, 8), std::min(M, 4), [](const Superpartition& sp) {
           CheckReport r = identity1_check(sp);
           r.merge(bijection_check(sp));
           const int n = default_n_vars(sp);
           r.merge(HookLinearization::build(sp, n).check(sp, n));
           r.merge(verify_cmin_configurations(sp));
           return r;
         });
       }},
      {"configurations", [=] { return over_superpartitions(std::min(D, 5), M, verify_config_reduction); }},
  };
}

Json report_json(const std::string& name, const CheckReport& r, double seconds) {
  Json failures = Json::array();
  for (std::size_t i = 0; i < r.failures.size() && i < 10; ++i) failures.push_back(r.failures[i]);
  return Json{{"suite", name}, {"ok", r.ok}, {"checked", r.checked}, {"seconds", seconds}, {"failures", failures}};
}

int run_suites(const RunConfig& cfg, const std::vector<Suite>& suites, const std::string& note = {}) {
  bool ok = true;
  std::string text;
  Json results = Json::array();
  for (const auto& s : suites) {
    progress("[" + s.name + "] running");
    const auto t0 = std::chrono::steady_clock::now();
    const CheckReport r = s.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    progress("[" + s.name + "] " + (r.ok ? "ok" : "FAILED") + " after " + std::to_string(secs) + "s");
    ok = ok && r.ok;
    results.push_back(report_json(s.name, r, secs));
    // timings go to stderr only, so stdout stays byte-deterministic
    text += s.name + ": " + (r.ok ? "PASS" : "FAIL") + " (" + std::to_string(r.checked) + " checks)\n";
    if (!r.ok) text += "  first counterexample: " + r.failures.front() + "\n";
  }
  if (!note.empty()) text += note;
  if (cfg.format == Format::json) {
    for (auto& j : results) j.erase("seconds");
    emit(cfg, Json{{"ok", ok}, {"suites", results}}.dump(2) + "\n");
  } else {
    emit(cfg, text);
  }
  return ok ? kOk : kMismatch;
}

int cmd_identity_check(const RunConfig& cfg) {
  std::vector<Suite> chosen;
  for (auto& s : identity_suites(cfg))
    if (cfg.suite == "all" || cfg.suite == s.name) chosen.push_back(std::move(s));
  if (chosen.empty())
    throw UsageError("unknown suite " + cfg.suite +
                     "; pick one of all, identity1, identity2, lgv, iota, rowreduce, recurrence, configurations");
  return run_suites(cfg, chosen);
}

// compositions with n_parts parts and total at most max_size
void for_each_composition(int n_parts, int max_size, const std::function<void(const Composition&)>& fn) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int left) {
    if (static_cast<int>(cur.size()) == n_parts) {
      fn(Composition(cur));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur.push_back(v);
      rec(left - v);
      cur.pop_back();
    }
  };
  rec(max_size);
}

int cmd_selftest(const RunConfig& cfg) {
  const int D = cfg.max_degree;
  const int M = cfg.max_m;
  const int jobs = cfg.jobs;
  std::vector<Suite> suites;
  suites.push_back({"structure", [=] {
                      CheckReport r;
                      const auto sp = parse_superpartition("(3,1,0;5,3,2)");
                      r.expect(star(sp).str() == "(5,3,3,2,1)", "star of (3,1,0;5,3,2) is " + star(sp).str());
                      const auto conj = conjugate(parse_superpartition("(3,1,0;5,3,2)"));
                      r.expect(conj.str() == "(5,4,1;3,1)", "conjugate of (3,1,0;5,3,2) is " + conj.str());
                      for (int n = 1; n <= 4; ++n)
                        for_each_composition(n, D, [&](const Composition& eta) {
                          const AlphaRational c = nonsym_jack(eta, jobs).coeff(eta.parts());
                          r.expect(c == AlphaRational(1), "leading coefficient of E" + eta.str() + " is " + c.str());
                        });
                      return r;
                    }});
  suites.push_back({"cmin", [=] {
                      return over_superpartitions(D, M, [&](const Superpartition& sp) {
                        CheckReport r = verify_lemma2(sp);
                        const AlphaRational got = c_min_via_expansion(sp, jobs);
                        r.expect(got == c_min_closed(sp),
                                 "c_min" + sp.str() + ": expansion " + got.str() + ", closed " + c_min_closed(sp).str());
                        return r;
                      });
                    }});
  suites.push_back({"json", [=] {
                      return over_superpartitions(std::min(D, 3), M, [&](const Superpartition& sp) {
                        CheckReport r;
                        const JackExpansion e = jack_super(sp, default_n_vars(sp), jobs);
                        const JackExpansion back = expansion_from_json(Json::parse(to_json(e).dump()));
                        r.expect(back.index == e.index && back.n_vars == e.n_vars && back.m_basis == e.m_basis,
                                 "expansion of " + sp.str() + " does not round-trip");
                        r.expect(superpoly_from_json(Json::parse(to_json(e.poly).dump())) == e.poly,
                                 "polynomial of " + sp.str() + " does not round-trip");
                        return r;
                      });
                    }});
  RunConfig sub = cfg;
  sub.max_m = M;
  sub.max_degree = D;
  for (auto& s : identity_suites(sub)) suites.push_back(std::move(s));
  suites.push_back({"norms", [=] {
                      CheckReport r;
                      for (int n = 0; n <= std::min(D, 4); ++n)
                        for (int m = 0; m <= M; ++m) {
                          if (superpartitions(n, m).empty()) continue;
                          r.merge(verify_sector_norms(sector_norms(n, m, jobs), NormConvention::sector_signed));
                        }
                      return r;
                    }});
  const std::string note =
      "note: norms are compared with the stated closed form times (-1)^{m(m-1)/2}, the sign the scalar product "
      "carries; `jack norm --convention stated` shows the unsigned comparison\n";
  return run_suites(cfg, suites, note);
}

void add_output_flags(CLI::App* app, RunConfig& cfg) {
  app->add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"text", Format::text}, {"json", Format::json}, {"latex", Format::latex}},
          CLI::ignore_case));
  app->add_option("--out", cfg.out_path, "Write the result to this file instead of standard output");
  app->add_option("--jobs", cfg.jobs, "Worker threads")->envname("SJACK_JOBS")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jack polynomials in superspace: expansions, minimal coefficients and the identities behind them"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::function<int(const RunConfig&)> action;

  auto* jack = app.add_subcommand("jack", "Jack polynomials in superspace")->require_subcommand(1);
  auto* expand = jack->add_subcommand("expand", "Monomial expansion of J_Lambda");
  expand->add_option("superpartition", cfg.target, "e.g. \"(1,0;2)\"")->required();
  expand->add_option("--N", cfg.n_vars, "Number of variables (default ell + m)")->check(CLI::PositiveNumber);
  add_output_flags(expand, cfg);
  expand->callback([&] { action = cmd_jack_expand; });

  auto* cmin = jack->add_subcommand("cmin", "Minimal coefficient: closed form, expanded form and configuration sum");
  cmin->add_option("superpartition", cfg.target)->required();
  cmin->add_flag("--via-expansion", cfg.via_expansion, "Also symmetrize the full polynomial (small inputs only)");
  add_output_flags(cmin, cfg);
  cmin->callback([&] { action = cmd_jack_cmin; });

  auto* norm = jack->add_subcommand("norm", "<<J|J>> against the closed form, and orthogonality in the sector");
  norm->add_option("superpartition", cfg.target)->required();
  norm->add_option("--convention", cfg.convention, "stated: as printed; signed: times (-1)^{m(m-1)/2}")
      ->check(CLI::IsMember({"stated", "signed"}));
  add_output_flags(norm, cfg);
  norm->callback([&] { action = cmd_jack_norm; });

  auto* nonsym = app.add_subcommand("nonsym", "Non-symmetric Jack polynomials")->require_subcommand(1);
  auto* E = nonsym->add_subcommand("E", "E_eta from the tableau formula");
  E->add_option("composition", cfg.target, "e.g. \"(0,2,1)\"")->required();
  add_output_flags(E, cfg);
  E->callback([&] { action = cmd_nonsym; });

  auto* tableaux = app.add_subcommand("tableaux", "0-admissible tableaux")->require_subcommand(1);
  auto* list = tableaux->add_subcommand("list", "Every 0-admissible tableau of a shape with its weight");
  list->add_option("composition", cfg.target)->required();
  add_output_flags(list, cfg);
  list->callback([&] { action = cmd_tableaux; });

  auto* identity = app.add_subcommand("identity", "The product identity and its proof machinery")->require_subcommand(1);
  auto add_gamma = [&](CLI::App* sub) {
    sub->add_option("--gamma", cfg.gamma, "Bit string of length m-1, e.g. 101")
        ->each([&](const std::string&) { cfg.gamma_given = true; });
  };
  auto* sigma = identity->add_subcommand("sigma", "Weighted sum over V_gamma");
  add_gamma(sigma);
  sigma->add_option("--m", cfg.m, "Size when --gamma is omitted (gamma = 0...0)")->check(CLI::PositiveNumber);
  add_output_flags(sigma, cfg);
  sigma->callback([&] { action = cmd_identity_sigma; });

  auto* detc = identity->add_subcommand("det", "M(gamma) and its determinant");
  detc->add_option("--m", cfg.m)->check(CLI::PositiveNumber);
  add_gamma(detc);
  add_output_flags(detc, cfg);
  detc->callback([&] { action = cmd_identity_det; });

  auto* rowreduce = identity->add_subcommand("rowreduce", "Staged row reduction of M(gamma)");
  rowreduce->add_option("--m", cfg.m)->check(CLI::PositiveNumber);
  add_gamma(rowreduce);
  add_output_flags(rowreduce, cfg);
  rowreduce->callback([&] { action = cmd_identity_rowreduce; });

  auto* check = identity->add_subcommand("check", "Exhaustive verification suites");
  check->add_option("--suite", cfg.suite, "all, identity1, identity2, lgv, iota, rowreduce, recurrence, configurations");
  check->add_option("--max-m", cfg.max_m)->check(CLI::Range(1, 6));
  check->add_option("--max-degree", cfg.max_degree, "Largest |Lambda| for the configuration suites")
      ->check(CLI::Range(0, 12));
  check->add_option("--max-k", cfg.max_k)->check(CLI::Range(0, 5));
  check->add_option("--max-ij", cfg.max_ij)->check(CLI::Range(1, 8));
  add_output_flags(check, cfg);
  check->callback([&] { action = cmd_identity_check; });

  auto* selftest = app.add_subcommand("selftest", "Every suite at the given sizes");
  cfg.max_degree = 5;
  selftest->add_option("--max-degree", cfg.max_degree)->check(CLI::Range(0, 8));
  selftest->add_option("--max-m", cfg.max_m)->check(CLI::Range(0, 6));
  selftest->add_option("--max-k", cfg.max_k)->check(CLI::Range(0, 5));
  selftest->add_option("--max-ij", cfg.max_ij)->check(CLI::Range(1, 8));
  add_output_flags(selftest, cfg);
  selftest->callback([&] { action = cmd_selftest; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }
  try {
    return action(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kMismatch;
  }
}
