#pragma once

// Published values the library is checked against: existence thresholds,
// classification counts, generator rows with their minimum weights and the
// listed class representatives.

#include <optional>
#include <string>
#include <vector>

#include "dtcodes/linear_code.hpp"

namespace dtc::reference {

struct Threshold {
  int q;
  int d;
  int n;
};

/// n_q(d) for q in {2,3,4} and 5 <= d <= 50.
const std::vector<Threshold>& thresholds();

struct ClassificationRow {
  int q;
  int n;
  int d;
  /// Unknown for quaternary length 16.
  std::optional<int> n_dt;
  int n_dc;
  int n_nc;
};

const std::vector<ClassificationRow>& classification_rows();
std::optional<ClassificationRow> classification_row(int q, int n);

enum class Kind { double_circulant, double_negacirculant, double_toeplitz };

struct GeneratorEntry {
  int q;
  int n;
  Kind kind;
  /// "(r)" padded to n/2 for the circulant kinds, "t;(a);(b)" otherwise.
  std::string text;
  int min_weight;
  std::string group;
};

struct DimensionLimits {
  int binary = 24;
  int ternary = 14;
  int quaternary = 13;
};

/// Every listed generator whose dimension n/2 is within the limits.
std::vector<GeneratorEntry> generator_entries(const DimensionLimits& limits = {});

GeneratorCode build_code(const GeneratorEntry& entry);
/// Compact label such as "q=2 n=16 C(1,1,1,0,1,0,0,0)".
std::string describe(const GeneratorEntry& entry);

/// Triples listed as representatives of pairwise distinct classes of
/// optimal double Toeplitz codes of one length.
struct ListedClasses {
  int q;
  int n;
  std::vector<std::string> triples;
};

std::vector<ListedClasses> listed_representatives();

}  // namespace dtc::reference
