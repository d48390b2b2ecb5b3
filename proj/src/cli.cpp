#include "torsionkit/cli.hpp"

#include <unistd.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "torsionkit/serialize.hpp"
#include "torsionkit/verify.hpp"

namespace torsionkit {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  long p = 2;
  long q = 3;
  long n = 2;
  std::string format = "json";
  std::string output;
  std::optional<long> component;
  std::optional<long> dim;
  bool all = false;
  bool adjoint = false;
  std::string suite = "all";
  std::uint64_t seed = kDefaultSeed;
  double tol = 1e-9;
  long trials = 20;
  long m = 1;
  std::string kind = "sl2-neg";
  std::string curve;
  std::string index;
  long omega = 0;
  std::string eigs;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool use_color(std::ostream& out) {
  if (const char* forced = std::getenv("TORSIONKIT_COLOR")) return std::string(forced) == "1";
  if (std::getenv("NO_COLOR")) return false;
  return &out == &std::cout && isatty(STDOUT_FILENO);
}

std::string status_word(bool ok, bool color) {
  if (!color) return ok ? "PASS" : "FAIL";
  return ok ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m";
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::vector<ComponentData> selected(const RunConfig& cfg) {
  const auto comps = enumerate_components(TorusKnot(cfg.p, cfg.q), cfg.n);
  if (!cfg.component) return comps;
  const long i = *cfg.component;
  if (i < 0 || i >= static_cast<long>(comps.size())) {
    throw UsageError("component index " + std::to_string(i) + " out of range (have " +
                     std::to_string(comps.size()) + ")");
  }
  return {comps[static_cast<std::size_t>(i)]};
}

int cmd_components(const RunConfig& cfg, std::ostream& out) {
  Json arr = Json::array();
  std::ostringstream text;
  for (const auto& c : enumerate_components(TorusKnot(cfg.p, cfg.q), cfg.n)) {
    if (cfg.dim && component_dimension(c) != *cfg.dim) continue;
    arr.push_back(to_json(c));
    text << c.to_string() << "  dim " << component_dimension(c) << '\n';
  }
  if (cfg.format == "json") {
    emit(out, arr);
  } else {
    out << text.str();
  }
  return kExitOk;
}

int cmd_tap(const RunConfig& cfg, std::ostream& out) {
  const auto comps = selected(cfg);
  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& c : comps) {
      arr.push_back(Json{{"component", to_json(c)},
                         {"polynomial", to_json(tap_polynomial(c))},
                         {"closed_form", to_json(tap_closed_form(c))},
                         {"expansion_sign", expansion_sign(c)}});
    }
    emit(out, arr);
    return kExitOk;
  }
  for (const auto& c : comps) {
    const std::string body =
        cfg.format == "factored" ? factors_string(tap_factors(c)) : tap_polynomial(c).to_pretty();
    if (comps.size() == 1) {
      out << body << '\n';
    } else {
      out << c.to_string() << ": " << body << '\n';
    }
  }
  return kExitOk;
}

int cmd_torsion(const RunConfig& cfg, std::ostream& out) {
  if (cfg.adjoint && cfg.n != 2) throw UsageError("--adjoint needs --n 2");
  if (cfg.all && cfg.component) throw UsageError("--all and --component are exclusive");
  const TorusKnot knot(cfg.p, cfg.q);
  Json arr = Json::array();
  std::ostringstream text;
  for (const auto& c : selected(cfg)) {
    TorsionValue tv;
    if (cfg.adjoint) {
      const auto [a, b] = sl2_index(c);
      tv = adjoint_torsion(knot, a, b);
    } else {
      tv = torsion_from_component(c);
    }
    Json rec{{"component", to_json(c)}, {"kind", cfg.adjoint ? "adjoint" : "standard"}};
    rec["torsion"] = to_json(tv);
    arr.push_back(rec);
    const Complex z = tv.value.embed();
    text << c.to_string() << ": " << tv.value.to_string() << "  ~ " << std::setprecision(12)
         << to_double(z.real());
    if (abs(z.imag()) > Real(1e-30)) text << (z.imag() < 0 ? " - " : " + ") << to_double(abs(z.imag())) << "i";
    text << (tv.acyclic ? "" : "  (not acyclic)") << '\n';
  }
  if (cfg.format == "json") {
    emit(out, arr);
  } else {
    out << text.str();
  }
  return kExitOk;
}

int cmd_seifert(const RunConfig& cfg, std::ostream& out) {
  const SeifertIndex index = SeifertIndex::parse(cfg.index);
  Json eigs;
  if (cfg.eigs.empty()) {
    if (!index.fibers.empty()) throw UsageError("--eigs is required when the index has exceptional fibers");
    eigs = Json{{"fibers", Json::array()}};
  } else {
    std::ifstream in(cfg.eigs);
    if (!in) throw UsageError("cannot read " + cfg.eigs);
    try {
      eigs = Json::parse(in);
    } catch (const Json::exception& e) {
      throw UsageError(std::string("bad eigenvalue file: ") + e.what());
    }
  }
  SeifertRepData rep;
  try {
    rep = seifert_rep_from_json(eigs, cfg.n, cfg.omega);
  } catch (const Json::exception& e) {
    throw UsageError(std::string("bad eigenvalue file: ") + e.what());
  }
  const TorsionValue tv = seifert_torsion(index, rep);
  Json rec{{"index", index.to_string()}, {"n", rep.n}, {"omega", rep.omega().to_string()}};
  rec["torsion"] = to_json(tv);
  bool degenerate = false;
  for (const auto& row : fiber_factors(index, rep)) {
    for (const auto& x : row) degenerate = degenerate || x.is_one();
  }
  if (!degenerate) rec["certificate"] = to_json(seifert_integrality_certificate(index, rep, tv.value));
  if (cfg.format == "json") {
    emit(out, rec);
  } else {
    out << index.to_string() << ": " << tv.value.to_string() << (tv.acyclic ? "" : "  (not acyclic)") << '\n';
  }
  return kExitOk;
}

int cmd_powersum(const RunConfig& cfg, std::ostream& out) {
  std::optional<std::pair<long, long>> curve;
  if (!cfg.curve.empty()) {
    const auto comma = cfg.curve.find(',');
    if (comma == std::string::npos) throw UsageError("--curve takes U,W");
    try {
      curve = std::make_pair(std::stol(cfg.curve.substr(0, comma)), std::stol(cfg.curve.substr(comma + 1)));
    } catch (const std::logic_error&) {
      throw UsageError("--curve takes two integers U,W");
    }
    if (parse_power_sum_kind(cfg.kind) != PowerSumKind::adjoint_neg) throw UsageError("--curve applies to adj-neg");
  }
  const PowerSumReport r = power_sum(parse_power_sum_kind(cfg.kind), cfg.p, cfg.q, cfg.m, curve);
  if (cfg.format == "json") {
    emit(out, to_json(r));
  } else {
    out << to_string(r.kind) << " K(" << r.p << "," << r.q << ") m=" << r.m << ": closed "
        << rational_to_string(r.closed_form) << ", brute " << rational_to_string(r.brute_force) << ", scale "
        << rational_to_string(r.integrality_scale) << "  " << status_word(r.passes, use_color(out)) << '\n';
  }
  return kExitOk;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
  if (cfg.trials < 1) throw UsageError("--trials must be positive");
  const OracleGridReport grid = oracle_knot(TorusKnot(cfg.p, cfg.q), cfg.n, cfg.trials, cfg.seed, cfg.tol);
  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& r : grid.components) arr.push_back(to_json(r));
    emit(out, Json{{"p", cfg.p},
                   {"q", cfg.q},
                   {"n", cfg.n},
                   {"seed", cfg.seed},
                   {"passed", grid.passed},
                   {"max_relative_error", grid.max_relative_error},
                   {"components", arr}});
  } else {
    const bool color = use_color(out);
    for (const auto& r : grid.components) {
      out << status_word(r.passed, color) << "  " << r.component.to_string() << "  max rel err "
          << r.max_relative_error << '\n';
    }
  }
  return grid.passed ? kExitOk : kExitFailure;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  std::vector<std::string> suites;
  if (cfg.suite == "all") {
    suites = suite_names();
  } else {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), cfg.suite) == names.end()) {
      throw UsageError("unknown suite '" + cfg.suite + "'");
    }
    suites.push_back(cfg.suite);
  }
  VerifyOptions options;
  options.seed = cfg.seed;
  options.oracle_tolerance = cfg.tol;
  options.oracle_trials = cfg.trials;
  bool ok = true;
  Json arr = Json::array();
  const bool color = use_color(out);
  for (const auto& name : suites) {
    const SuiteReport report = run_suite(name, options);
    ok = ok && report.passed();
    if (cfg.format == "json") {
      Json checks = Json::array();
      for (const auto& c : report.checks) {
        checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      }
      arr.push_back(Json{{"suite", name},
                         {"passed", report.passed()},
                         {"failures", report.failures()},
                         {"checks", checks}});
    } else {
      for (const auto& c : report.checks) {
        out << status_word(c.passed, color) << "  " << c.name;
        if (!c.detail.empty()) out << "  (" << c.detail << ")";
        out << '\n';
      }
      out << "suite " << name << ": " << report.checks.size() - report.failures() << "/" << report.checks.size()
          << " passed\n";
    }
  }
  if (cfg.format == "json") emit(out, arr);
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Twisted Alexander polynomials and Reidemeister torsions of torus knots"};
  app.require_subcommand(1);
  app.add_option("--output,-o", cfg.output, "Write output to this file instead of stdout");

  auto add_knot = [&cfg](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "First torus-knot parameter")->required();
    sub->add_option("--q", cfg.q, "Second torus-knot parameter")->required();
  };
  auto add_format = [&cfg](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(allowed));
  };

  auto* components = app.add_subcommand("components", "List character-variety components");
  add_knot(components);
  components->add_option("--n", cfg.n, "Dimension")->required();
  components->add_option("--dim", cfg.dim, "Only components of this dimension");
  add_format(components, {"json", "pretty"});

  auto* tap = app.add_subcommand("tap", "Twisted Alexander polynomials");
  add_knot(tap);
  tap->add_option("--n", cfg.n, "Dimension")->required();
  tap->add_option("--component", cfg.component, "Component index in canonical order");
  add_format(tap, {"json", "pretty", "factored"});

  auto* torsion = app.add_subcommand("torsion", "Reidemeister torsions");
  add_knot(torsion);
  torsion->add_option("--n", cfg.n, "Dimension")->required();
  torsion->add_flag("--adjoint", cfg.adjoint, "Adjoint torsion of SL2 components");
  torsion->add_option("--component", cfg.component, "Component index in canonical order");
  torsion->add_flag("--all", cfg.all, "All components (default)");
  add_format(torsion, {"json", "pretty"});

  auto* seifert = app.add_subcommand("seifert", "Torsion of a Seifert fibered space");
  seifert->add_option("--index", cfg.index, "Seifert index \"v,g;(a1,b1),...\"")->required();
  seifert->add_option("--n", cfg.n, "Dimension")->required();
  seifert->add_option("--omega", cfg.omega, "omega = exp(2 pi i K / n)")->required();
  seifert->add_option("--eigs", cfg.eigs, "Eigenvalue JSON file");
  add_format(seifert, {"json", "pretty"});

  auto* powersum = app.add_subcommand("powersum", "Power sums of SL2 and adjoint torsions");
  add_knot(powersum);
  powersum->add_option("--m", cfg.m, "Exponent")->required();
  powersum->add_option("--kind", cfg.kind, "sl2-neg, sl2-pos, adj-neg or adj-pos")
      ->check(CLI::IsMember({"sl2-neg", "sl2-pos", "adj-neg", "adj-pos"}));
  powersum->add_option("--curve", cfg.curve, "U,W for the curve mu^U lambda^W (adj-neg)");
  add_format(powersum, {"json", "pretty"});

  auto* oracle = app.add_subcommand("oracle", "Numerical Fox-calculus cross-check");
  add_knot(oracle);
  oracle->add_option("--n", cfg.n, "Dimension")->required();
  oracle->add_option("--trials", cfg.trials, "Trials per component");
  oracle->add_option("--seed", cfg.seed, "Master seed");
  oracle->add_option("--tol", cfg.tol, "Relative tolerance");
  add_format(oracle, {"json", "pretty"});

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::string suites_help = "all";
  for (const auto& s : suite_names()) suites_help += ", " + s;
  verify->add_option("--suite", cfg.suite, suites_help);
  verify->add_option("--seed", cfg.seed, "Master seed");
  verify->add_option("--trials", cfg.trials, "Oracle trials per component");
  verify->add_option("--tol", cfg.tol, "Oracle relative tolerance");
  add_format(verify, {"json", "pretty"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) {
      err << "error: cannot write " << cfg.output << '\n';
      return kExitUsage;
    }
    sink = &file;
  }

  try {
    if (components->parsed()) return cmd_components(cfg, *sink);
    if (tap->parsed()) return cmd_tap(cfg, *sink);
    if (torsion->parsed()) return cmd_torsion(cfg, *sink);
    if (seifert->parsed()) return cmd_seifert(cfg, *sink);
    if (powersum->parsed()) return cmd_powersum(cfg, *sink);
    if (oracle->parsed()) return cmd_oracle(cfg, *sink);
    if (verify->parsed()) return cmd_verify(cfg, *sink);
  } catch (const std::invalid_argument& e) {
    // ConstraintViolation and UsageError both land here
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace torsionkit
