#pragma once

#include <string_view>
#include <vector>

#include "dtcodes/reference.hpp"

namespace dtc::reference::data {

struct CirculantRow {
  int n;
  std::string_view row;
};

extern const std::vector<Threshold> kThresholds;
extern const std::vector<CirculantRow> kBinaryCirculant;
extern const std::vector<CirculantRow> kTernaryCirculant;
extern const std::vector<CirculantRow> kTernaryNegacirculant;
extern const std::vector<CirculantRow> kQuaternaryCirculant;
extern const std::vector<std::string_view> kBinaryLength14;
extern const std::vector<std::string_view> kTernaryLength20;

}  // namespace dtc::reference::data
