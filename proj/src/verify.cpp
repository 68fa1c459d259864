#include "dtcodes/verify.hpp"

#include <random>
#include <set>

#include "dtcodes/average_enumerator.hpp"
#include "dtcodes/errors.hpp"
#include "dtcodes/structured_codes.hpp"

namespace dtc::verify {

bool SuiteReport::passed() const { return first_failure() == nullptr; }

const CheckResult* SuiteReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

void SuiteReport::append(const SuiteReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

namespace {

void record(SuiteReport& report, const Observer& observe, CheckResult result) {
  if (observe) observe(result);
  report.checks.push_back(std::move(result));
}

std::string qn(int q, int n) { return "q=" + std::to_string(q) + " n=" + std::to_string(n); }

/// All vectors of the given length in lexicographic order.
std::vector<FqVector> all_vectors(const Field& f, int length) {
  std::vector<FqVector> out{FqVector::zeros(f, length)};
  for (int i = 0; i < length; ++i) {
    std::vector<FqVector> next;
    next.reserve(out.size() * static_cast<std::size_t>(f.q()));
    for (const auto& v : out) {
      for (int c = 0; c < f.q(); ++c) {
        FqVector w = v;
        w.set(i, f.element(c));
        next.push_back(std::move(w));
      }
    }
    out = std::move(next);
  }
  return out;
}

FqVector random_vector(const Field& f, int length, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> digit(0, f.q() - 1);
  std::vector<Element> e(static_cast<std::size_t>(length));
  for (auto& x : e) x = f.element(digit(rng));
  return FqVector(f, std::move(e));
}

ToeplitzTriple random_triple(const Field& f, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> digit(0, f.q() - 1);
  const Element t = f.element(digit(rng));
  FqVector a = random_vector(f, n / 2 - 1, rng);
  FqVector b = random_vector(f, n / 2 - 1, rng);
  return ToeplitzTriple(f, t, std::move(a), std::move(b));
}

std::string counts_text(int d, std::optional<int> n_dt, int n_dc, int n_nc) {
  return "d=" + std::to_string(d) + " N_DT=" + (n_dt ? std::to_string(*n_dt) : std::string("?")) +
         " N_DC=" + std::to_string(n_dc) + " N_NC=" + std::to_string(n_nc);
}

}  // namespace

SuiteReport check_awe_oracle(const std::vector<std::pair<int, int>>& grid, const Observer& observe) {
  SuiteReport report;
  for (const auto& [q, n] : grid) {
    const Field& f = Field::of(q);
    const WeightEnumerator closed = average_weight_enumerator(f, n);
    const WeightEnumerator brute = average_weight_enumerator_bruteforce(f, n);
    record(report, observe, {"average enumerator " + qn(q, n), closed == brute, closed.to_json()});
  }
  return report;
}

SuiteReport check_counting(const std::vector<std::pair<int, int>>& grid, const Observer& observe) {
  SuiteReport report;
  for (const auto& [q, n] : grid) {
    const Field& f = Field::of(q);
    const std::vector<FqVector> halves = all_vectors(f, n / 2);
    std::size_t pairs = 0;
    std::size_t mismatches = 0;
    std::vector<BigInt> by_weight(static_cast<std::size_t>(n + 1));
    for (const auto& u : halves) {
      for (const auto& v : halves) {
        const BigInt formula = count_codes_containing(f, n, u, v);
        if (formula != count_codes_containing_bruteforce(f, n, u, v)) ++mismatches;
        by_weight[static_cast<std::size_t>(weight(u) + weight(v))] += formula;
        ++pairs;
      }
    }
    record(report, observe,
           {"containment count " + qn(q, n), mismatches == 0,
            std::to_string(pairs) + " pairs, " + std::to_string(mismatches) + " mismatches"});
    // Weight 0 counts the zero word once per code; the enumerator does too.
    const WeightEnumerator closed = average_weight_enumerator(f, n);
    record(report, observe,
           {"enumerator as sum of counts " + qn(q, n), closed.coeffs == by_weight, closed.to_json()});
  }
  return report;
}

SuiteReport check_thresholds(const Observer& observe) {
  SuiteReport report;
  for (const auto& t : reference::thresholds()) {
    const ThresholdResult r = minimal_guaranteed_length(Field::of(t.q), t.d);
    std::string detail = "n=" + std::to_string(r.length) + " expected " + std::to_string(t.n);
    if (!r.isolated_lengths.empty()) detail += " (bound also holds below it)";
    record(report, observe,
           {"threshold q=" + std::to_string(t.q) + " d=" + std::to_string(t.d), r.length == t.n, detail});
  }
  return report;
}

SuiteReport check_generators(const reference::DimensionLimits& limits, const Observer& observe) {
  SuiteReport report;
  for (const auto& e : reference::generator_entries(limits)) {
    const int d = minimum_weight(reference::build_code(e));
    record(report, observe,
           {reference::describe(e), d == e.min_weight,
            "min weight " + std::to_string(d) + " expected " + std::to_string(e.min_weight) + " [" + e.group + "]"});
  }
  return report;
}

std::vector<std::pair<int, int>> small_classification_rows() {
  std::vector<std::pair<int, int>> rows;
  for (int n = 4; n <= 18; n += 2) rows.emplace_back(2, n);
  for (int n = 4; n <= 10; n += 2) rows.emplace_back(3, n);
  for (int n = 4; n <= 10; n += 2) rows.emplace_back(4, n);
  return rows;
}

SuiteReport check_classification(const std::vector<std::pair<int, int>>& rows, int workers,
                                 std::vector<ClassificationReport>* reports, const Observer& observe) {
  SuiteReport report;
  for (const auto& [q, n] : rows) {
    const auto expected = reference::classification_row(q, n);
    if (!expected) throw DomainError("no published classification for " + qn(q, n));
    ClassifyOptions options;
    options.workers = workers;
    ClassificationReport got = classify(Field::of(q), n, options);
    const bool ok = got.d == expected->d && (!expected->n_dt || got.n_dt == *expected->n_dt) &&
                    got.n_dc == expected->n_dc && got.n_nc == expected->n_nc && got.consistent();
    std::string detail = counts_text(got.d, got.n_dt, got.n_dc, got.n_nc);
    if (!ok) {
      detail += " expected " + counts_text(expected->d, expected->n_dt, expected->n_dc, expected->n_nc);
      if (!got.consistent()) detail += " (family classes do not match)";
    }
    record(report, observe, {"classification " + qn(q, n), ok, detail});
    if (reports) reports->push_back(std::move(got));
  }
  return report;
}

SuiteReport check_listed_representatives(const std::vector<ClassificationReport>& reports, const Observer& observe) {
  SuiteReport report;
  for (const auto& listed : reference::listed_representatives()) {
    const Field& f = Field::of(listed.q);
    const ClassificationReport* rep = nullptr;
    for (const auto& r : reports) {
      if (r.q == listed.q && r.n == listed.n) rep = &r;
    }
    if (!rep) continue;
    std::set<std::size_t> seen;
    std::string problem;
    for (const auto& text : listed.triples) {
      const auto idx = find_class(*rep, double_toeplitz_code(parse_triple(f, text)));
      if (!idx) {
        problem = text + " is in no class";
      } else if (!seen.insert(*idx).second) {
        problem = text + " shares class " + std::to_string(rep->classes[*idx].class_id);
      } else if (rep->classes[*idx].structure != Structure::dt_only) {
        problem = text + " is in a " + to_string(rep->classes[*idx].structure) + " class";
      }
      if (!problem.empty()) break;
    }
    record(report, observe,
           {"listed representatives " + qn(listed.q, listed.n), problem.empty(),
            problem.empty() ? std::to_string(listed.triples.size()) + " distinct classes" : problem});
  }
  return report;
}

SuiteReport check_reduction_soundness(const std::vector<std::pair<int, int>>& rows, int workers,
                                      const Observer& observe) {
  SuiteReport report;
  for (const auto& [q, n] : rows) {
    const bool ok = verify_reduction_soundness(Field::of(q), n, workers);
    record(report, observe,
           {"reduction " + to_string(default_reduction(q)) + " " + qn(q, n), ok,
            ok ? "filtered and full runs agree" : "filtered and full runs differ"});
  }
  return report;
}

SuiteReport check_properties(const PropertyOptions& options, const Observer& observe) {
  SuiteReport report;
  std::mt19937_64 rng(options.seed);
  for (const int q : {2, 3, 4}) {
    const Field& f = Field::of(q);
    for (const int n : options.fsd_lengths) {
      int failures = 0;
      std::string example;
      for (int i = 0; i < options.fsd_samples; ++i) {
        const ToeplitzTriple t = random_triple(f, n, rng);
        if (!is_formally_self_dual(double_toeplitz_code(t))) {
          if (failures++ == 0) example = render_triple(t);
        }
      }
      record(report, observe,
             {"formally self-dual " + qn(q, n), failures == 0,
              std::to_string(options.fsd_samples) + " codes" + (example.empty() ? "" : ", e.g. " + example)});
    }
    std::uniform_int_distribution<int> half(2, options.max_band_length / 2);
    std::uniform_int_distribution<int> scalar(0, q - 2);
    int swap_failures = 0;
    int scale_failures = 0;
    std::string example;
    for (int i = 0; i < options.band_samples; ++i) {
      const int n = 2 * half(rng);
      const ToeplitzTriple t = random_triple(f, n, rng);
      const GeneratorCode code = double_toeplitz_code(t);
      if (!are_equivalent(code, double_toeplitz_code(t.swapped()))) {
        ++swap_failures;
        if (example.empty()) example = "swap " + render_triple(t);
      }
      const Element alpha = f.nonzero()[static_cast<std::size_t>(scalar(rng))];
      if (!are_equivalent(code, double_toeplitz_code(t.scaled(alpha)))) {
        ++scale_failures;
        if (example.empty()) example = "scale " + render_triple(t);
      }
    }
    record(report, observe,
           {"swap and scale equivalences q=" + std::to_string(q), swap_failures == 0 && scale_failures == 0,
            std::to_string(options.band_samples) + " triples" + (example.empty() ? "" : ", e.g. " + example)});
  }
  for (const auto& [q, n] : options.determinism_rows) {
    ClassifyOptions serial;
    ClassifyOptions parallel;
    parallel.workers = options.parallel_workers;
    const ClassificationReport a = classify(Field::of(q), n, serial);
    const ClassificationReport b = classify(Field::of(q), n, parallel);
    const bool same = a.to_json() == b.to_json() && a.to_json_lines() == b.to_json_lines();
    record(report, observe,
           {"workers 1 vs " + std::to_string(options.parallel_workers) + " " + qn(q, n), same,
            same ? "identical reports" : "reports differ"});
  }
  return report;
}

std::string to_string(Suite suite) {
  switch (suite) {
    case Suite::awe_oracle:
      return "awe-oracle";
    case Suite::thresholds:
      return "thresholds";
    case Suite::classification_small:
      return "classification-small";
    case Suite::generators:
      break;
  }
  return "generators";
}

Suite parse_suite(std::string_view text) {
  for (const Suite s : {Suite::awe_oracle, Suite::thresholds, Suite::classification_small, Suite::generators}) {
    if (text == to_string(s)) return s;
  }
  throw ParseError("unknown suite '" + std::string(text) +
                   "' (expected awe-oracle, thresholds, classification-small or generators)");
}

SuiteReport run_suite(Suite suite, int workers, const Observer& observe) {
  switch (suite) {
    case Suite::awe_oracle: {
      SuiteReport report = check_awe_oracle(kAweGrid, observe);
      report.append(check_counting(kCountingGrid, observe));
      return report;
    }
    case Suite::thresholds:
      return check_thresholds(observe);
    case Suite::classification_small: {
      std::vector<ClassificationReport> reports;
      SuiteReport report = check_classification(small_classification_rows(), workers, &reports, observe);
      report.append(check_listed_representatives(reports, observe));
      return report;
    }
    case Suite::generators:
      break;
  }
  return check_generators({}, observe);
}

}  // namespace dtc::verify
