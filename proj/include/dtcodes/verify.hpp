#pragma once

// Checks of the library against oracles and published tables, shared by the
// command line tool and the acceptance runner.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dtcodes/reference.hpp"
#include "dtcodes/search.hpp"

namespace dtc::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Called after each check completes.
using Observer = std::function<void(const CheckResult&)>;

struct SuiteReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  /// nullptr when every check passed.
  const CheckResult* first_failure() const;
  void append(const SuiteReport& other);
};

/// Closed-form average enumerator against brute force.
inline const std::vector<std::pair<int, int>> kAweGrid = {{2, 2}, {2, 4}, {2, 6}, {2, 8}, {2, 10},
                                                          {3, 4}, {3, 6}, {4, 4}};
SuiteReport check_awe_oracle(const std::vector<std::pair<int, int>>& grid = kAweGrid, const Observer& observe = {});

/// Counting formula against brute force for every (u, v), and the closed-form
/// coefficients against the sum of the counts over vectors of each weight.
inline const std::vector<std::pair<int, int>> kCountingGrid = {{2, 4}, {2, 6}, {3, 4}};
SuiteReport check_counting(const std::vector<std::pair<int, int>>& grid = kCountingGrid, const Observer& observe = {});

SuiteReport check_thresholds(const Observer& observe = {});

SuiteReport check_generators(const reference::DimensionLimits& limits = {}, const Observer& observe = {});

/// (q, n) rows reproduced by default.
std::vector<std::pair<int, int>> small_classification_rows();

/// Classifies each row and compares d and the class counts. Reports are
/// returned for reuse.
SuiteReport check_classification(const std::vector<std::pair<int, int>>& rows, int workers,
                                 std::vector<ClassificationReport>* reports = nullptr, const Observer& observe = {});

/// Each listed triple falls in a class of the matching report, no two in the
/// same class. Lists at lengths without a report are skipped.
SuiteReport check_listed_representatives(const std::vector<ClassificationReport>& reports,
                                         const Observer& observe = {});

inline const std::vector<std::pair<int, int>> kSoundnessRows = {{2, 8}, {2, 10}, {3, 6}, {4, 4}};
SuiteReport check_reduction_soundness(const std::vector<std::pair<int, int>>& rows = kSoundnessRows,
                                      int workers = 1, const Observer& observe = {});

struct PropertyOptions {
  std::uint64_t seed = 20240917;
  int fsd_samples = 1000;
  int band_samples = 100;
  std::vector<int> fsd_lengths = {8, 12};
  int max_band_length = 12;
  std::vector<std::pair<int, int>> determinism_rows = {{2, 12}, {3, 6}, {4, 8}};
  int parallel_workers = 4;
};

/// Randomized properties: formal self-duality, equivalence under swapping
/// the bands and under scaling, and classification independent of workers.
SuiteReport check_properties(const PropertyOptions& options = {}, const Observer& observe = {});

enum class Suite { awe_oracle, thresholds, classification_small, generators };
std::string to_string(Suite suite);
/// Throws ParseError on an unknown name.
Suite parse_suite(std::string_view text);

SuiteReport run_suite(Suite suite, int workers, const Observer& observe = {});

}  // namespace dtc::verify
