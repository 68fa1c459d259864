#include "dtcodes/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <optional>
#include <ostream>
#include <thread>

#include "dtcodes/average_enumerator.hpp"
#include "dtcodes/errors.hpp"
#include "dtcodes/search.hpp"
#include "dtcodes/structured_codes.hpp"
#include "dtcodes/verify.hpp"

namespace dtc::cli {

namespace {

using json = nlohmann::json;

struct UsageError : Error {
  using Error::Error;
};

int default_workers() {
  if (const char* env = std::getenv(kWorkersEnv); env && *env) {
    try {
      std::size_t used = 0;
      const int w = std::stoi(env, &used);
      if (used == std::string(env).size() && w >= 1) return w;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string(kWorkersEnv) + ": expected a positive integer, got '" + env + "'");
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

int resolve_workers(int requested) { return requested > 0 ? requested : default_workers(); }

/// Rethrows parse and domain failures with the flag that caused them.
template <typename F>
auto with_flag(const std::string& flag, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw UsageError(flag + ": " + e.what());
  } catch (const DomainError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------

struct CodeArgs {
  int q = 2;
  std::string dt, dc, nc;
  bool minwt = false, wenum = false, dual = false, fsd = false;
  std::uint64_t budget = EnumerationBudget{}.max_messages;
};

void add_code(CLI::App& app, CodeArgs& a) {
  auto* cmd = app.add_subcommand("code", "Build one code and report a property of it");
  cmd->add_option("--q", a.q, "Field size")->required()->check(CLI::IsMember({2, 3, 4}));
  auto* dt = cmd->add_option("--dt", a.dt, "Double Toeplitz code from \"t;(a);(b)\"");
  auto* dc = cmd->add_option("--dc", a.dc, "Double circulant code from \"(r)\"");
  auto* nc = cmd->add_option("--nc", a.nc, "Double negacirculant code from \"(r)\"");
  dt->excludes(dc)->excludes(nc);
  dc->excludes(nc);
  auto* g = cmd->add_option_group("action");
  g->add_flag("--minwt", a.minwt, "Minimum weight");
  g->add_flag("--wenum", a.wenum, "Weight enumerator as a JSON array");
  g->add_flag("--dual", a.dual, "Generator rows of the dual code");
  g->add_flag("--fsd", a.fsd, "Whether the code is formally self-dual");
  g->require_option(1);
  cmd->add_option("--budget", a.budget, "Most messages to enumerate")->capture_default_str();
}

int run_code(const CodeArgs& a, std::ostream& out) {
  const Field& f = Field::of(a.q);
  std::optional<GeneratorCode> code;
  if (!a.dt.empty()) {
    code = with_flag("--dt", [&] { return double_toeplitz_code(parse_triple(f, a.dt)); });
  } else if (!a.dc.empty()) {
    code = with_flag("--dc", [&] { return double_circulant_code({parse_vector(f, a.dc), Sign::circulant}); });
  } else if (!a.nc.empty()) {
    code = with_flag("--nc", [&] { return double_negacirculant_code({parse_vector(f, a.nc), Sign::negacirculant}); });
  } else {
    throw UsageError("code: one of --dt, --dc or --nc is required");
  }
  const EnumerationBudget budget{a.budget};
  if (a.minwt) {
    out << minimum_weight(*code, budget) << "\n";
  } else if (a.wenum) {
    out << weight_enumerator(*code, budget).to_json() << "\n";
  } else if (a.fsd) {
    out << (is_formally_self_dual(*code, budget) ? "true" : "false") << "\n";
  } else {
    const GeneratorCode d = dual_code(*code);
    json rows = json::array();
    for (const auto& r : d.rows()) rows.push_back(render_vector(r));
    out << json{{"n", d.length()}, {"k", d.dimension()}, {"rows", rows}}.dump() << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct AweArgs {
  int q = 2;
  std::optional<int> n;
  bool verify = false;
  bool threshold = false;
  std::optional<int> d;
  bool table = false;
  int dmin = 5;
  int dmax = 10;
  int horizon = kThresholdHorizon;
  std::uint64_t budget = EnumerationBudget{}.max_messages;
};

void add_awe(CLI::App& app, AweArgs& a) {
  auto* cmd = app.add_subcommand("awe", "Average weight enumerator and existence thresholds");
  cmd->add_option("--q", a.q, "Field size")->required()->check(CLI::IsMember({2, 3, 4}));
  auto* n = cmd->add_option("--n", a.n, "Even code length");
  auto* verify = cmd->add_flag("--verify", a.verify, "Compare with enumeration of every code");
  auto* thr = cmd->add_flag("--threshold", a.threshold, "Smallest length guaranteed to reach --d");
  auto* d = cmd->add_option("--d", a.d, "Target minimum weight");
  auto* table = cmd->add_flag("--table", a.table, "CSV rows d,n for --dmin..--dmax");
  cmd->add_option("--dmin", a.dmin, "First weight of the table")->capture_default_str();
  cmd->add_option("--dmax", a.dmax, "Last weight of the table")->capture_default_str();
  cmd->add_option("--horizon", a.horizon, "Lengths past the threshold that must also satisfy the bound")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--budget", a.budget, "Most codewords to visit under --verify")->capture_default_str();
  verify->needs(n);
  thr->needs(d)->excludes(n)->excludes(table);
  table->excludes(n)->excludes(d);
}

int run_awe(const AweArgs& a, std::ostream& out, std::ostream& err) {
  const Field& f = Field::of(a.q);
  if (a.threshold) {
    const ThresholdResult r = with_flag("--d", [&] { return minimal_guaranteed_length(f, *a.d, a.horizon); });
    out << r.length << "\n";
    if (!r.isolated_lengths.empty()) err << "note: the bound also holds at some shorter lengths\n";
    return kExitOk;
  }
  if (a.table) {
    if (a.dmin > a.dmax) throw UsageError("--dmin must not exceed --dmax");
    for (int d = a.dmin; d <= a.dmax; ++d) {
      const ThresholdResult r = with_flag("--dmin/--dmax", [&] { return minimal_guaranteed_length(f, d, a.horizon); });
      out << d << "," << r.length << "\n";
    }
    return kExitOk;
  }
  if (!a.n) throw UsageError("awe: --n, --threshold or --table is required");
  const WeightEnumerator closed = with_flag("--n", [&] { return average_weight_enumerator(f, *a.n); });
  out << closed.to_json() << "\n";
  if (!a.verify) return kExitOk;
  const WeightEnumerator brute = average_weight_enumerator_bruteforce(f, *a.n, EnumerationBudget{a.budget});
  if (brute != closed) {
    err << "mismatch: enumeration gives " << brute.to_json() << "\n";
    return kExitVerificationFailed;
  }
  err << "closed form matches enumeration of all codes\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct SearchArgs {
  int q = 2;
  int n = 2;
  std::string family = "DT";
  std::string reduction;
  std::string mode = "find-optimal";
  int target = 0;
  int workers = 0;
  std::string checkpoint;
  std::uint64_t max_candidates = SearchConfig{}.max_candidates;
};

void add_search(CLI::App& app, SearchArgs& a) {
  auto* cmd = app.add_subcommand("search", "Exhaustive search; prints matching codes as JSON lines");
  cmd->add_option("--q", a.q, "Field size")->required()->check(CLI::IsMember({2, 3, 4}));
  cmd->add_option("--n", a.n, "Even code length")->required();
  cmd->add_option("--family", a.family, "DT, DC or NC")->capture_default_str();
  cmd->add_option("--reduction", a.reduction, "none, C2 or C3 (DT default: C2 for q=2, else C3)");
  cmd->add_option("--mode", a.mode, "find-optimal, collect-at or at-least")->capture_default_str();
  cmd->add_option("--target", a.target, "Minimum weight for collect-at and at-least");
  cmd->add_option("--workers", a.workers, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--checkpoint", a.checkpoint, "JSON file to resume from and record progress in");
  cmd->add_option("--max-candidates", a.max_candidates, "Refuse larger search spaces")->capture_default_str();
}

int run_search_cmd(const SearchArgs& a, std::ostream& out, std::ostream& err) {
  SearchConfig c;
  c.q = a.q;
  c.n = a.n;
  c.family = with_flag("--family", [&] { return parse_family(a.family); });
  c.reduction = a.reduction.empty() ? (c.family == Family::dt ? default_reduction(a.q) : Reduction::none)
                                    : with_flag("--reduction", [&] { return parse_reduction(a.reduction); });
  c.mode = with_flag("--mode", [&] { return parse_search_mode(a.mode); });
  c.target = a.target;
  if (c.mode != SearchMode::find_optimal && a.target < 1) throw UsageError("--target: required for --mode " + a.mode);
  c.workers = resolve_workers(a.workers);
  c.checkpoint_path = a.checkpoint;
  c.max_candidates = a.max_candidates;
  const SearchResult r = with_flag("search", [&] { return run_search(c); });
  for (const auto& h : r.hits) out << hit_json(h, c.family) << "\n";
  err << "d=" << r.d << " candidates=" << r.candidates << " hits=" << r.hits.size() << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct ClassifyArgs {
  int q = 2;
  int n = 2;
  std::string reduction;
  int workers = 0;
  bool lines = false;
  std::uint64_t node_cap = EquivalenceOptions{}.node_cap;
};

void add_classify(CLI::App& app, ClassifyArgs& a) {
  auto* cmd = app.add_subcommand("classify", "Classify the optimal double Toeplitz codes of one length");
  cmd->add_option("--q", a.q, "Field size")->required()->check(CLI::IsMember({2, 3, 4}));
  cmd->add_option("--n", a.n, "Even code length")->required();
  cmd->add_option("--reduction", a.reduction, "none, C2 or C3 (default: C2 for q=2, else C3)");
  cmd->add_option("--workers", a.workers, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_flag("--lines", a.lines, "One JSON line per class instead of the full report");
  cmd->add_option("--node-cap", a.node_cap, "Search nodes per equivalence test")->capture_default_str();
}

int run_classify(const ClassifyArgs& a, std::ostream& out, std::ostream& err) {
  ClassifyOptions o;
  if (!a.reduction.empty()) o.reduction = with_flag("--reduction", [&] { return parse_reduction(a.reduction); });
  o.workers = resolve_workers(a.workers);
  o.equivalence.node_cap = a.node_cap;
  const ClassificationReport r = with_flag("classify", [&] { return classify(Field::of(a.q), a.n, o); });
  if (a.lines) {
    out << r.to_json_lines();
  } else {
    out << r.to_json() << "\n";
  }
  err << "d=" << r.d << " N_DT=" << r.n_dt << " N_DC=" << r.n_dc << " N_NC=" << r.n_nc << " ("
      << r.classes.size() << " classes)\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  int workers = 0;
};

void add_verify(CLI::App& app, VerifyArgs& a) {
  auto* cmd = app.add_subcommand("verify-tables", "Check the library against published tables and oracles");
  cmd->add_option("--suite", a.suite, "awe-oracle, thresholds, classification-small or generators")->required();
  cmd->add_option("--workers", a.workers, "Worker threads")->check(CLI::PositiveNumber);
}

int run_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const verify::Suite suite = with_flag("--suite", [&] { return verify::parse_suite(a.suite); });
  const int workers = resolve_workers(a.workers);
  const verify::SuiteReport r = verify::run_suite(suite, workers, [&](const verify::CheckResult& c) {
    err << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
  });
  std::size_t failed = 0;
  for (const auto& c : r.checks) failed += c.passed ? 0 : 1;
  out << json{{"suite", verify::to_string(suite)}, {"checks", r.checks.size()}, {"failed", failed},
              {"passed", failed == 0}}
             .dump()
      << "\n";
  if (const auto* f = r.first_failure()) {
    err << "first failure: " << f->name << "\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Double Toeplitz, double circulant and double negacirculant codes over F2, F3 and F4", "dtcodes"};
  app.require_subcommand(1);
  CodeArgs code;
  AweArgs awe;
  SearchArgs search;
  ClassifyArgs cls;
  VerifyArgs ver;
  add_code(app, code);
  add_awe(app, awe);
  add_search(app, search);
  add_classify(app, cls);
  add_verify(app, ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "code") return run_code(code, out);
    if (name == "awe") return run_awe(awe, out, err);
    if (name == "search") return run_search_cmd(search, out, err);
    if (name == "classify") return run_classify(cls, out, err);
    return run_verify(ver, out, err);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Undecided& e) {
    err << "undecided: " << e.what() << "\n";
    return kExitBudget;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace dtc::cli
