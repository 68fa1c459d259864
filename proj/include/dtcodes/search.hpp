#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dtcodes/equivalence.hpp"
#include "dtcodes/structured_codes.hpp"

namespace dtc {

enum class Family { dt, dc, nc };
/// c2 keeps one triple of each {(t,a,b), (t,b,a)} pair (binary only); c3
/// keeps the scalar multiple whose (t, a) starts with 1 (ternary and quaternary).
enum class Reduction { none, c2, c3 };
enum class SearchMode { find_optimal, collect_at, at_least };

std::string to_string(Family family);
std::string to_string(Reduction reduction);
std::string to_string(SearchMode mode);
Family parse_family(std::string_view text);
Reduction parse_reduction(std::string_view text);
SearchMode parse_search_mode(std::string_view text);

/// c2 for q = 2, c3 otherwise.
Reduction default_reduction(int q);

/// sum_i 2^(i-1) a_i for a binary vector. Throws DomainError for q != 2 or
/// vectors longer than 63.
std::uint64_t vector_rank(const FqVector& a);

/// Throws DomainError when the reduction does not fit the field.
bool passes_reduction(const ToeplitzTriple& triple, Reduction reduction);

struct SearchConfig {
  int q = 2;
  int n = 2;
  Family family = Family::dt;
  Reduction reduction = Reduction::none;
  SearchMode mode = SearchMode::find_optimal;
  /// The weight for collect_at and at_least.
  int target = 0;
  int workers = 1;
  /// Refuse candidate spaces larger than this.
  std::uint64_t max_candidates = std::uint64_t{1} << 30;
  /// Resume from and record progress in this JSON file when nonempty.
  std::string checkpoint_path;
};

struct SearchHit {
  std::uint64_t index = 0;
  ToeplitzTriple triple;
  /// First row, for the circulant families.
  std::optional<CirculantSpec> row;
  int min_weight = 0;
};

struct SearchResult {
  /// d_opt for find_optimal, else the requested weight.
  int d = 0;
  std::uint64_t candidates = 0;
  std::uint64_t partitions = 0;
  /// In candidate order.
  std::vector<SearchHit> hits;
};

inline constexpr int kCheckpointVersion = 1;

/// Throws DomainError for invalid configurations, BudgetExceeded for spaces
/// above the cap and Error for unusable checkpoints. The result does not
/// depend on the number of workers.
SearchResult run_search(const SearchConfig& config);

/// JSON-lines record {"t","a","b","min_weight"} (plus "r" for the circulant families).
std::string hit_json(const SearchHit& hit, Family family);

struct OptimalTriples {
  int d = 0;
  std::vector<ToeplitzTriple> triples;
};

struct OptimalRows {
  int d = 0;
  std::vector<CirculantSpec> rows;
};

OptimalTriples find_dt_optimal(const Field& field, int n, Reduction reduction, int workers = 1);
/// family must be dc or nc.
OptimalRows find_family_optimal(const Field& field, int n, Family family, int workers = 1);

enum class Structure { dc, nc, dt_only };
std::string to_string(Structure s);

struct ClassRecord {
  int class_id = 0;
  ToeplitzTriple representative;
  std::size_t members = 0;
  Structure structure = Structure::dt_only;
};

struct ClassificationReport {
  int q = 2;
  int n = 2;
  int d = 0;
  std::uint64_t candidates = 0;
  std::vector<ClassRecord> classes;
  int n_dt = 0;
  int n_dc = 0;
  int n_nc = 0;
  /// Classes among the optimal double circulant codes, and among the optimal
  /// double negacirculant codes not equivalent to one of those.
  int dc_family_classes = 0;
  int nc_family_classes = 0;

  /// Each family class matched exactly one class of the triples.
  bool consistent() const { return n_dc == dc_family_classes && n_nc == nc_family_classes; }

  std::string to_json() const;
  /// One record per class.
  std::string to_json_lines() const;
};

struct ClassifyOptions {
  std::optional<Reduction> reduction;  // default_reduction(q) when unset
  int workers = 1;
  EquivalenceOptions equivalence;
};

ClassificationReport classify(const Field& field, int n, const ClassifyOptions& options = {});

/// Index into report.classes of the class containing the code, if any.
std::optional<std::size_t> find_class(const ClassificationReport& report, const GeneratorCode& code,
                                      const EquivalenceOptions& options = {});

/// The filtered and unfiltered classifications agree: same d, same counts per
/// structure and pairwise equivalent representatives.
bool verify_reduction_soundness(const Field& field, int n, int workers = 1);

struct EvenWeightDiagnostic {
  int even_codes = 0;
  int equal_to_double_circulant = 0;
  int equivalent_to_double_circulant = 0;
};

/// Binary double Toeplitz codes of length n whose weights are all even,
/// compared with the binary double circulant codes of the same length.
EvenWeightDiagnostic even_weight_diagnostic(int n);

}  // namespace dtc
