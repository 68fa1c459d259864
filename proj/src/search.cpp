#include "dtcodes/search.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>

#include <json.hpp>

#include "dtcodes/errors.hpp"
#include "parallel.hpp"

namespace dtc {

using nlohmann::json;

std::string to_string(Family family) {
  switch (family) {
    case Family::dc:
      return "DC";
    case Family::nc:
      return "NC";
    case Family::dt:
      break;
  }
  return "DT";
}

std::string to_string(Reduction reduction) {
  switch (reduction) {
    case Reduction::c2:
      return "C2";
    case Reduction::c3:
      return "C3";
    case Reduction::none:
      break;
  }
  return "none";
}

std::string to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::collect_at:
      return "collect-at";
    case SearchMode::at_least:
      return "at-least";
    case SearchMode::find_optimal:
      break;
  }
  return "find-optimal";
}

std::string to_string(Structure s) {
  switch (s) {
    case Structure::dc:
      return "DC";
    case Structure::nc:
      return "NC";
    case Structure::dt_only:
      break;
  }
  return "DT-only";
}

Family parse_family(std::string_view text) {
  if (text == "DT" || text == "dt") return Family::dt;
  if (text == "DC" || text == "dc") return Family::dc;
  if (text == "NC" || text == "nc") return Family::nc;
  throw ParseError("unknown family '" + std::string(text) + "' (expected DT, DC or NC)");
}

Reduction parse_reduction(std::string_view text) {
  if (text == "none") return Reduction::none;
  if (text == "C2" || text == "c2") return Reduction::c2;
  if (text == "C3" || text == "c3") return Reduction::c3;
  throw ParseError("unknown reduction '" + std::string(text) + "' (expected none, C2 or C3)");
}

SearchMode parse_search_mode(std::string_view text) {
  if (text == "find-optimal") return SearchMode::find_optimal;
  if (text == "collect-at") return SearchMode::collect_at;
  if (text == "at-least") return SearchMode::at_least;
  throw ParseError("unknown mode '" + std::string(text) + "' (expected find-optimal, collect-at or at-least)");
}

Reduction default_reduction(int q) { return q == 2 ? Reduction::c2 : Reduction::c3; }

std::uint64_t vector_rank(const FqVector& a) {
  if (a.field().q() != 2) throw DomainError("vector rank is defined for binary vectors only");
  if (a.size() > 63) throw DomainError("vector too long for its rank to fit in 64 bits");
  std::uint64_t r = 0;
  for (int i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero()) r |= std::uint64_t{1} << i;
  }
  return r;
}

namespace {

void check_reduction(int q, Reduction reduction) {
  if (reduction == Reduction::c2 && q != 2) throw DomainError("reduction C2 applies to binary codes only");
  if (reduction == Reduction::c3 && q == 2) throw DomainError("reduction C3 applies to ternary and quaternary codes only");
}

}  // namespace

bool passes_reduction(const ToeplitzTriple& triple, Reduction reduction) {
  check_reduction(triple.field().q(), reduction);
  switch (reduction) {
    case Reduction::none:
      return true;
    case Reduction::c2:
      return vector_rank(triple.a()) >= vector_rank(triple.b());
    case Reduction::c3: {
      if (!triple.t().is_zero()) return triple.t() == kOne;
      for (int i = 0; i < triple.a().size(); ++i) {
        if (!triple.a()[i].is_zero()) return triple.a()[i] == kOne;
      }
      return true;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Candidate spaces

namespace {

struct Candidate {
  ToeplitzTriple triple;
  std::optional<CirculantSpec> row;
};

class CandidateSpace {
 public:
  CandidateSpace(const Field& field, int n, Family family) : field_(&field), family_(family), m_(n / 2) {
    require_even_length(n);
    if (n > kMaxPackedLength) throw BudgetExceeded("lengths above " + std::to_string(kMaxPackedLength) + " are not supported");
    if (family == Family::nc && field.q() != 3) {
      // Over characteristic 2 the negacirculant family coincides with the circulant one.
      family_ = Family::dc;
    }
    if (family_ == Family::dt) {
      triples_.emplace(field, n);
      size_ = triples_->size();
      partition_size_ = triples_->partition_size();
    } else {
      size_ = 1;
      partition_size_ = 1;
      for (int i = 0; i < m_; ++i) size_ *= static_cast<std::uint64_t>(field.q());
      for (int i = 0; i < m_ - 1; ++i) partition_size_ *= static_cast<std::uint64_t>(field.q());
    }
  }

  std::uint64_t size() const { return size_; }
  std::uint64_t partition_size() const { return partition_size_; }
  std::uint64_t partition_count() const { return size_ / partition_size_; }

  Candidate at(std::uint64_t index) const {
    if (triples_) return {triples_->at(index), std::nullopt};
    const auto q = static_cast<std::uint64_t>(field_->q());
    std::vector<Element> r(static_cast<std::size_t>(m_));
    for (int i = m_ - 1; i >= 0; --i) {
      r[static_cast<std::size_t>(i)] = Element{static_cast<std::uint8_t>(index % q)};
      index /= q;
    }
    CirculantSpec spec{FqVector(*field_, std::move(r)), family_ == Family::nc ? Sign::negacirculant : Sign::circulant};
    return {triple_of_circulant(spec), spec};
  }

 private:
  const Field* field_;
  Family family_;
  int m_;
  std::optional<TripleSpace> triples_;
  std::uint64_t size_ = 0;
  std::uint64_t partition_size_ = 1;
};

using HitList = std::vector<std::pair<std::uint64_t, int>>;

struct Progress {
  std::map<std::uint64_t, int> phase1;
  int phase2_d = -1;
  std::map<std::uint64_t, HitList> phase2;
};

json config_json(const SearchConfig& c) {
  return json{{"q", c.q},
              {"n", c.n},
              {"family", to_string(c.family)},
              {"reduction", to_string(c.reduction)},
              {"mode", to_string(c.mode)},
              {"target", c.target}};
}

class Checkpoint {
 public:
  explicit Checkpoint(const SearchConfig& config) : path_(config.checkpoint_path), config_(config_json(config)) {}

  Progress load() const {
    Progress p;
    if (path_.empty() || !std::filesystem::exists(path_)) return p;
    std::ifstream in(path_);
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::exception& e) {
      throw Error("checkpoint " + path_ + " is not valid JSON: " + e.what());
    }
    if (!doc.contains("version") || doc["version"] != kCheckpointVersion) {
      throw Error("checkpoint " + path_ + " has version " + (doc.contains("version") ? doc["version"].dump() : "none") +
                  ", expected " + std::to_string(kCheckpointVersion));
    }
    if (doc.value("config", json{}) != config_) {
      throw Error("checkpoint " + path_ + " was written for a different configuration: " + doc["config"].dump());
    }
    try {
      for (const auto& [k, v] : doc.at("phase1").at("best").items()) p.phase1[std::stoull(k)] = v.get<int>();
      p.phase2_d = doc.at("phase2").at("d").get<int>();
      for (const auto& [k, v] : doc.at("phase2").at("hits").items()) {
        p.phase2[std::stoull(k)] = v.get<HitList>();
      }
    } catch (const std::exception& e) {
      throw Error("checkpoint " + path_ + " is malformed: " + e.what());
    }
    return p;
  }

  void save(const Progress& p) const {
    if (path_.empty()) return;
    json best = json::object();
    for (const auto& [k, v] : p.phase1) best[std::to_string(k)] = v;
    json hits = json::object();
    for (const auto& [k, v] : p.phase2) hits[std::to_string(k)] = v;
    json completed1 = json::array();
    for (const auto& kv : p.phase1) completed1.push_back(kv.first);
    json completed2 = json::array();
    for (const auto& kv : p.phase2) completed2.push_back(kv.first);
    int best_d = 0;
    for (const auto& kv : p.phase1) best_d = std::max(best_d, kv.second);
    const json doc{{"version", kCheckpointVersion},
                   {"config", config_},
                   {"best_d", best_d},
                   {"phase1", {{"completed", completed1}, {"best", best}}},
                   {"phase2", {{"d", p.phase2_d}, {"completed", completed2}, {"hits", hits}}}};
    const std::string tmp = path_ + ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      if (!out) throw Error("cannot write checkpoint " + tmp);
      out << doc.dump() << '\n';
    }
    std::filesystem::rename(tmp, path_);
  }

 private:
  std::string path_;
  json config_;
};

void validate(const SearchConfig& c) {
  Field::of(c.q);
  require_even_length(c.n);
  check_reduction(c.q, c.reduction);
  if (c.workers < 1) throw DomainError("worker count must be positive");
  if (c.mode != SearchMode::find_optimal && (c.target < 1 || c.target > c.n)) {
    throw DomainError("target weight must lie in [1, n] for mode " + to_string(c.mode));
  }
}

}  // namespace

SearchResult run_search(const SearchConfig& config) {
  validate(config);
  const Field& field = Field::of(config.q);
  const CandidateSpace space(field, config.n, config.family);
  if (space.size() > config.max_candidates) {
    throw BudgetExceeded("search space has " + std::to_string(space.size()) + " candidates, above the cap of " +
                         std::to_string(config.max_candidates));
  }
  const std::uint64_t parts = space.partition_count();
  const std::uint64_t psize = space.partition_size();

  const Checkpoint checkpoint(config);
  Progress progress = checkpoint.load();
  std::mutex progress_mutex;

  auto pending = [&](const auto& done) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 0; p < parts; ++p) {
      if (!done.count(p)) out.push_back(p);
    }
    return out;
  };

  int d = config.target;
  if (config.mode == SearchMode::find_optimal) {
    std::atomic<int> best{0};
    for (const auto& kv : progress.phase1) best = std::max(best.load(), kv.second);
    const std::vector<std::uint64_t> todo = pending(progress.phase1);
    detail::parallel_for(todo.size(), config.workers, [&](std::uint64_t i) {
      const std::uint64_t p = todo[i];
      int local = 0;
      for (std::uint64_t idx = p * psize; idx < (p + 1) * psize; ++idx) {
        const Candidate c = space.at(idx);
        if (!passes_reduction(c.triple, config.reduction)) continue;
        const PackedCode code = pack_double_toeplitz(c.triple);
        const int floor = std::max(best.load(std::memory_order_relaxed), local);
        if (!min_weight_at_least(code, floor + 1)) continue;
        local = minimum_weight(code);
        int seen = best.load();
        while (seen < local && !best.compare_exchange_weak(seen, local)) {
        }
      }
      std::lock_guard<std::mutex> lock(progress_mutex);
      progress.phase1[p] = local;
      checkpoint.save(progress);
    });
    d = best.load();
  }

  if (progress.phase2_d != d) {
    progress.phase2_d = d;
    progress.phase2.clear();
  }
  const std::vector<std::uint64_t> todo = pending(progress.phase2);
  detail::parallel_for(todo.size(), config.workers, [&](std::uint64_t i) {
    const std::uint64_t p = todo[i];
    HitList hits;
    for (std::uint64_t idx = p * psize; idx < (p + 1) * psize; ++idx) {
      const Candidate c = space.at(idx);
      if (!passes_reduction(c.triple, config.reduction)) continue;
      const PackedCode code = pack_double_toeplitz(c.triple);
      if (!min_weight_at_least(code, d)) continue;
      if (config.mode == SearchMode::at_least) {
        hits.emplace_back(idx, minimum_weight(code));
      } else if (!min_weight_at_least(code, d + 1)) {
        hits.emplace_back(idx, d);
      }
    }
    std::lock_guard<std::mutex> lock(progress_mutex);
    progress.phase2[p] = std::move(hits);
    checkpoint.save(progress);
  });

  SearchResult result;
  result.d = d;
  result.candidates = space.size();
  result.partitions = parts;
  for (const auto& [p, hits] : progress.phase2) {
    for (const auto& [idx, wt] : hits) {
      Candidate c = space.at(idx);
      result.hits.push_back(SearchHit{idx, std::move(c.triple), std::move(c.row), wt});
    }
  }
  return result;
}

std::string hit_json(const SearchHit& hit, Family family) {
  const Field& f = hit.triple.field();
  json j{{"t", f.render(hit.triple.t())},
         {"a", render_vector(hit.triple.a())},
         {"b", render_vector(hit.triple.b())},
         {"min_weight", hit.min_weight}};
  if (hit.row && family != Family::dt) j["r"] = render_vector(hit.row->r);
  return j.dump();
}

OptimalTriples find_dt_optimal(const Field& field, int n, Reduction reduction, int workers) {
  SearchConfig c;
  c.q = field.q();
  c.n = n;
  c.reduction = reduction;
  c.workers = workers;
  SearchResult r = run_search(c);
  OptimalTriples out{r.d, {}};
  for (auto& h : r.hits) out.triples.push_back(std::move(h.triple));
  return out;
}

namespace {

OptimalRows family_rows(const Field& field, int n, Family family, SearchMode mode, int target, int workers) {
  if (family == Family::dt) throw DomainError("family search needs DC or NC");
  SearchConfig c;
  c.q = field.q();
  c.n = n;
  c.family = family;
  c.mode = mode;
  c.target = target;
  c.workers = workers;
  SearchResult r = run_search(c);
  OptimalRows out{r.d, {}};
  for (auto& h : r.hits) out.rows.push_back(std::move(*h.row));
  return out;
}

std::vector<GeneratorCode> codes_of(const std::vector<ToeplitzTriple>& triples) {
  std::vector<GeneratorCode> out;
  out.reserve(triples.size());
  for (const auto& t : triples) out.push_back(double_toeplitz_code(t));
  return out;
}

std::vector<GeneratorCode> codes_of(const std::vector<CirculantSpec>& rows) {
  std::vector<GeneratorCode> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(double_toeplitz_code(triple_of_circulant(r)));
  return out;
}

struct Representative {
  GeneratorCode code;
  CodeSignature sig;
};

std::vector<Representative> class_representatives(const std::vector<GeneratorCode>& codes,
                                                   const ClassifyOptions& options) {
  std::vector<Representative> reps;
  for (const auto& cls : dedupe_into_classes(codes, options.equivalence, options.workers)) {
    const GeneratorCode& c = codes[cls.front()];
    reps.push_back({c, signature(c, options.equivalence.budget)});
  }
  return reps;
}

bool equivalent_to_any(const GeneratorCode& code, const CodeSignature& sig, const std::vector<Representative>& reps,
                       const EquivalenceOptions& options) {
  return std::any_of(reps.begin(), reps.end(), [&](const Representative& r) {
    return find_equivalence(code, sig, r.code, r.sig, options).has_value();
  });
}

}  // namespace

OptimalRows find_family_optimal(const Field& field, int n, Family family, int workers) {
  return family_rows(field, n, family, SearchMode::find_optimal, 0, workers);
}

ClassificationReport classify(const Field& field, int n, const ClassifyOptions& options) {
  const Reduction reduction = options.reduction.value_or(default_reduction(field.q()));
  SearchConfig sc;
  sc.q = field.q();
  sc.n = n;
  sc.reduction = reduction;
  sc.workers = options.workers;
  const SearchResult found = run_search(sc);

  ClassificationReport report;
  report.q = field.q();
  report.n = n;
  report.d = found.d;
  report.candidates = found.candidates;

  std::vector<ToeplitzTriple> triples;
  for (const auto& h : found.hits) triples.push_back(h.triple);
  const std::vector<GeneratorCode> codes = codes_of(triples);
  const auto classes = dedupe_into_classes(codes, options.equivalence, options.workers);

  const std::vector<Representative> dc_reps =
      class_representatives(codes_of(family_rows(field, n, Family::dc, SearchMode::collect_at, found.d,
                                                 options.workers).rows),
                            options);
  std::vector<Representative> nc_reps;
  if (field.q() == 3) {
    for (auto& r : class_representatives(codes_of(family_rows(field, n, Family::nc, SearchMode::collect_at,
                                                               found.d, options.workers).rows),
                                         options)) {
      if (!equivalent_to_any(r.code, r.sig, dc_reps, options.equivalence)) nc_reps.push_back(std::move(r));
    }
  }
  report.dc_family_classes = static_cast<int>(dc_reps.size());
  report.nc_family_classes = static_cast<int>(nc_reps.size());

  report.classes.resize(classes.size());
  detail::parallel_for(classes.size(), options.workers, [&](std::uint64_t i) {
    const std::size_t rep = classes[i].front();
    const CodeSignature sig = signature(codes[rep], options.equivalence.budget);
    ClassRecord& rec = report.classes[i];
    rec.class_id = static_cast<int>(i) + 1;
    rec.representative = triples[rep];
    rec.members = classes[i].size();
    if (equivalent_to_any(codes[rep], sig, dc_reps, options.equivalence)) {
      rec.structure = Structure::dc;
    } else if (equivalent_to_any(codes[rep], sig, nc_reps, options.equivalence)) {
      rec.structure = Structure::nc;
    } else {
      rec.structure = Structure::dt_only;
    }
  });
  for (const auto& rec : report.classes) {
    switch (rec.structure) {
      case Structure::dc:
        ++report.n_dc;
        break;
      case Structure::nc:
        ++report.n_nc;
        break;
      case Structure::dt_only:
        ++report.n_dt;
        break;
    }
  }
  return report;
}

namespace {

json class_json(const ClassificationReport& r, const ClassRecord& c) {
  return json{{"q", r.q},
              {"n", r.n},
              {"d", r.d},
              {"class_id", c.class_id},
              {"representative_triple", render_triple(c.representative)},
              {"members", c.members},
              {"structure", to_string(c.structure)}};
}

}  // namespace

std::string ClassificationReport::to_json() const {
  json classes_json = json::array();
  for (const auto& c : classes) classes_json.push_back(class_json(*this, c));
  const json doc{{"q", q},
                 {"n", n},
                 {"d", d},
                 {"candidates", candidates},
                 {"counts", {{"DT", n_dt}, {"DC", n_dc}, {"NC", n_nc}}},
                 {"family_classes", {{"DC", dc_family_classes}, {"NC", nc_family_classes}}},
                 {"consistent", consistent()},
                 {"classes", classes_json}};
  return doc.dump(2);
}

std::string ClassificationReport::to_json_lines() const {
  std::string out;
  for (const auto& c : classes) out += class_json(*this, c).dump() + "\n";
  return out;
}

std::optional<std::size_t> find_class(const ClassificationReport& report, const GeneratorCode& code,
                                      const EquivalenceOptions& options) {
  const CodeSignature sig = signature(code, options.budget);
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    const GeneratorCode rep = double_toeplitz_code(report.classes[i].representative);
    if (find_equivalence(code, sig, rep, signature(rep, options.budget), options)) return i;
  }
  return std::nullopt;
}

bool verify_reduction_soundness(const Field& field, int n, int workers) {
  ClassifyOptions filtered;
  filtered.workers = workers;
  ClassifyOptions unfiltered = filtered;
  unfiltered.reduction = Reduction::none;
  const ClassificationReport a = classify(field, n, filtered);
  const ClassificationReport b = classify(field, n, unfiltered);
  if (a.d != b.d || a.n_dt != b.n_dt || a.n_dc != b.n_dc || a.n_nc != b.n_nc || a.classes.size() != b.classes.size()) {
    return false;
  }
  std::vector<bool> used(b.classes.size(), false);
  for (const auto& c : a.classes) {
    const auto idx = find_class(b, double_toeplitz_code(c.representative));
    if (!idx || used[*idx] || b.classes[*idx].structure != c.structure) return false;
    used[*idx] = true;
  }
  return true;
}

EvenWeightDiagnostic even_weight_diagnostic(int n) {
  const Field& f = Field::of(2);
  const TripleSpace space(f, n);
  std::vector<GeneratorCode> circulant;
  const CandidateSpace rows(f, n, Family::dc);
  for (std::uint64_t i = 0; i < rows.size(); ++i) circulant.push_back(double_toeplitz_code(rows.at(i).triple));

  EvenWeightDiagnostic out;
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    const GeneratorCode code = double_toeplitz_code(space.at(i));
    const WeightEnumerator we = weight_enumerator(code);
    bool even = true;
    for (std::size_t j = 1; j < we.coeffs.size(); j += 2) even = even && we.coeffs[j] == 0;
    if (!even) continue;
    ++out.even_codes;
    if (std::any_of(circulant.begin(), circulant.end(), [&](const auto& c) { return same_code(code, c); })) {
      ++out.equal_to_double_circulant;
    }
    if (std::any_of(circulant.begin(), circulant.end(), [&](const auto& c) { return are_equivalent(code, c); })) {
      ++out.equivalent_to_double_circulant;
    }
  }
  return out;
}

}  // namespace dtc
