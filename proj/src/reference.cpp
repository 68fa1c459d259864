#include "dtcodes/reference.hpp"

#include <algorithm>

#include "dtcodes/errors.hpp"
#include "dtcodes/structured_codes.hpp"
#include "reference_data.hpp"

namespace dtc::reference {

const std::vector<Threshold>& thresholds() { return data::kThresholds; }

const std::vector<ClassificationRow>& classification_rows() {
  static const std::vector<ClassificationRow> rows = {
      // binary
      {2, 4, 2, 0, 2, 0},
      {2, 6, 3, 0, 1, 0},
      {2, 8, 4, 0, 1, 0},
      {2, 10, 4, 0, 2, 0},
      {2, 12, 4, 4, 4, 0},
      {2, 14, 4, 75, 4, 0},
      {2, 16, 5, 0, 1, 0},
      {2, 18, 6, 0, 1, 0},
      {2, 20, 6, 0, 3, 0},
      {2, 22, 7, 0, 1, 0},
      {2, 24, 8, 0, 1, 0},
      {2, 26, 7, 2, 1, 0},
      {2, 28, 8, 0, 1, 0},
      {2, 30, 8, 0, 5, 0},
      {2, 32, 8, 1, 30, 0},
      {2, 34, 8, 2, 52, 0},
      {2, 36, 8, 347, 403, 0},
      {2, 38, 8, 118328, 415, 0},
      {2, 40, 9, 231, 15, 0},
      // ternary
      {3, 4, 3, 0, 0, 1},
      {3, 6, 3, 1, 2, 0},
      {3, 8, 4, 0, 3, 0},
      {3, 10, 5, 0, 1, 0},
      {3, 12, 6, 0, 0, 1},
      {3, 14, 6, 0, 1, 0},
      {3, 16, 6, 104, 7, 5},
      {3, 18, 6, 156189, 57, 0},
      {3, 20, 7, 27, 5, 11},
      {3, 22, 8, 1, 2, 0},
      {3, 24, 9, 0, 0, 2},
      {3, 26, 8, 3186, 376, 0},
      // quaternary
      {4, 4, 3, 0, 1, 0},
      {4, 6, 4, 0, 1, 0},
      {4, 8, 4, 7, 6, 0},
      {4, 10, 5, 2, 2, 0},
      {4, 12, 5, 6864, 13, 0},
      {4, 14, 6, 360, 19, 0},
      {4, 16, 6, std::nullopt, 218, 0},
      {4, 18, 7, 2502, 15, 0},
      {4, 20, 8, 0, 4, 0},
  };
  return rows;
}

std::optional<ClassificationRow> classification_row(int q, int n) {
  for (const auto& r : classification_rows()) {
    if (r.q == q && r.n == n) return r;
  }
  return std::nullopt;
}

namespace {

int optimal_distance(int q, int n) {
  const auto row = classification_row(q, n);
  if (!row) throw DomainError("no optimal distance recorded for q=" + std::to_string(q) + ", n=" + std::to_string(n));
  return row->d;
}

struct RowFamily {
  int q;
  Kind kind;
  std::string_view row;
  std::vector<int> lengths;
  int min_weight;
};

// Circulant rows that are shown to reach a given weight for a range of
// lengths; each row is padded with zeros up to n/2.
const std::vector<RowFamily>& existence_rows() {
  static const std::vector<RowFamily> rows = {
      {2, Kind::double_circulant, "(1,1,1,0,1)", {18, 20, 22, 24, 26, 28}, 5},
      {2, Kind::double_circulant, "(1,1,1,1,0,1)", {30, 32, 36, 38}, 6},
      {2, Kind::double_circulant, "(1,0,1,1,1,1,0,0,1,0,0,0,0,0)", {28}, 7},
      {2, Kind::double_circulant, "(1,1,1,0,1,1,0,1)", {30, 32, 34, 36, 38, 40, 42, 44, 46}, 7},
      {2, Kind::double_circulant, "(1,1,1,1,0,1,1,0,1)", {42, 46, 48, 50, 52, 54}, 8},
      {2, Kind::double_circulant, "(1,1,0,1,0,1,1,1,1,0,0,1,0,0,0,0,0,0,0,0,0)", {42}, 9},
      {2, Kind::double_circulant, "(1,1,1,0,1,1,1,0,0,1,0,1)", {44, 46, 48, 50, 52, 54, 56, 58, 60, 62, 64}, 9},
      {2, Kind::double_circulant, "(1,1,0,1,0,1,1,1,1,1,0,0,1)", {56, 60, 62, 64}, 10},
      {3, Kind::double_circulant, "(1,2,1,1)", {14, 16, 18}, 5},
      {3, Kind::double_negacirculant, "(1,2,1,1,1,0)", {12}, 6},
      {3, Kind::double_circulant, "(1,2,2,1,1,0,0,0)", {20, 22, 24}, 6},
      {3, Kind::double_circulant, "(1,2,1,1,2,0,1)", {22, 24, 26, 28, 30}, 7},
      {3, Kind::double_circulant, "(1,1,1,2,1,1,0,1)", {28, 30, 32, 34, 36}, 8},
      {3, Kind::double_circulant, "(1,2,1,1,1,2,0,1,1)", {34, 36, 38, 40, 42}, 9},
      {3, Kind::double_circulant, "(1,1,1,1,0,1,2,1,0,1,1,0,0,0,0,0,0)", {34}, 10},
      {3, Kind::double_circulant, "(1,2,2,1,2,1,0,1,1,0,1)", {38, 40}, 10},
      {3, Kind::double_circulant, "(1,1,2,2,1,1,0,1,1,0,1)", {42, 44, 46, 48}, 10},
      {3, Kind::double_circulant, "(1,1,1,1,2,1,1,1,2,0,0,1,0,0)", {28}, 9},
      {3, Kind::double_negacirculant, "(1,2,0,2,1,1,2,0,2,1,0,0,0,0)", {28}, 9},
      {3, Kind::double_negacirculant, "(1,2,2,2,0,2,0,2,2,1,0,0,0,0)", {28}, 9},
      {3, Kind::double_negacirculant, "(1,1,1,1,2,1,2,0,0,0,1,0,0,0)", {28}, 9},
      {3, Kind::double_negacirculant, "(1,1,2,1,2,0,0,1,2,0,1,0,0,0)", {28}, 9},
      {3, Kind::double_negacirculant, "(1,2,2,2,2,0,1,1,0,0,2,0,0,0)", {28}, 9},
      {3, Kind::double_negacirculant, "(1,1,2,1,2,1,1,1,1,1,2,0,0,0)", {28}, 9},
      {3, Kind::double_negacirculant, "(1,1,2,1,2,2,2,1,2,1,0,1,0,0)", {28}, 9},
      {3, Kind::double_negacirculant, "(1,2,2,1,1,1,1,1,2,2,0,1,0,0)", {28}, 9},
      {3, Kind::double_negacirculant, "(1,2,2,2,2,2,0,1,1,2,1,1,0,0)", {28}, 9},
      {4, Kind::double_circulant, "(1,w,1,w,0)", {10}, 5},
      {4, Kind::double_circulant, "(1,w,1,1)", {12, 14}, 5},
      {4, Kind::double_circulant, "(1,w,1,1,1)", {14, 16, 18, 20}, 6},
      {4, Kind::double_circulant, "(1,v,1,w,1,0,1)", {18, 20, 22, 24}, 7},
      {4, Kind::double_circulant, "(1,v,1,1,w,w,v,w,0,0)", {20}, 8},
      {4, Kind::double_circulant, "(1,w,w,v,w,1,1,0,0,0,0)", {22}, 8},
      {4, Kind::double_circulant, "(1,1,w,1,w,1,1)", {24, 26, 28, 30}, 8},
      {4, Kind::double_circulant, "(1,w,w,v,w,v,w,1,0,w,0,0)", {24}, 9},
      {4, Kind::double_circulant, "(1,v,w,w,w,w,1,0,1,0,0,0,0)", {26}, 9},
      {4, Kind::double_circulant, "(1,w,v,w,1,1,1,0,1)", {28, 30, 32, 34, 36}, 9},
      {4, Kind::double_circulant, "(1,1,w,w,v,v,1,v,1,w,0,w,0,0)", {28}, 10},
      {4, Kind::double_circulant, "(1,v,w,v,1,1,w,1,0,1,0,0,0,0,0)", {30}, 10},
      {4, Kind::double_circulant, "(1,v,1,w,w,w,1,1,0,1)", {32, 34, 36, 38, 40}, 10},
  };
  return rows;
}

struct ListedTriples {
  int q;
  int n;
  int min_weight;
  std::vector<std::string_view> triples;
};

const std::vector<ListedTriples>& listed_triples() {
  static const std::vector<ListedTriples> lists = [] {
    std::vector<ListedTriples> out = {
        {2, 12, 4, {"0;(1,1,0,1,0);(1,1,1,0,0)", "0;(1,0,1,1,0);(1,1,1,0,0)", "0;(0,1,1,0,1);(1,1,1,0,0)",
                    "0;(0,1,1,0,1);(1,1,0,1,0)"}},
        {2, 14, 4, data::kBinaryLength14},
        {2, 24, 7, {"0;(1,1,1,1,0,1,1,0,0,0,0);(1,0,0,0,1,1,0,1,1,1,1)"}},
        {2, 26, 7, {"0;(1,0,0,1,1,0,1,1,0,0,1,0);(1,0,1,0,0,1,1,0,1,1,0,0)",
                    "0;(0,1,0,1,0,1,0,0,1,1,0,1);(1,1,0,1,1,0,0,1,0,1,0,1)"}},
        {2, 32, 8, {"1;(0,0,1,0,1,0,1,1,0,0,0,1,0,1,1);(1,1,1,0,0,1,1,0,0,0,0,0,1,0,1)"}},
        {2, 34, 8, {"1;(0,0,1,0,1,0,1,1,0,0,0,1,0,1,1,1);(1,1,1,0,0,1,1,0,0,0,0,0,1,0,1,0)",
                    "1;(0,1,0,1,1,0,0,0,0,1,0,1,0,1,1,1);(1,0,1,1,0,0,1,1,1,1,0,1,1,1,0,0)"}},
        {3, 6, 3, {"1;(1,0);(2,1)"}},
        {3, 20, 7, data::kTernaryLength20},
        {3, 22, 8, {"1;(0,1,2,1,1,2,1,1,1,2);(1,1,2,2,2,1,2,2,1,2)"}},
        {4, 8, 4, {"0;(1,1,1);(1,w,1)", "0;(1,1,1);(1,v,1)", "0;(1,1,1);(1,1,w)", "0;(1,1,1);(v,v,w)",
                   "0;(1,w,1);(w,1,w)", "1;(1,1,0);(v,0,w)", "1;(w,1,0);(v,0,1)"}},
        {4, 10, 5, {"0;(1,w,1,1);(1,w,v,w)", "1;(w,1,1,0);(v,1,0,v)"}},
    };
    return out;
  }();
  return lists;
}

bool within(const DimensionLimits& limits, int q, int n) {
  const int k = n / 2;
  switch (q) {
    case 2:
      return k <= limits.binary;
    case 3:
      return k <= limits.ternary;
    default:
      return k <= limits.quaternary;
  }
}

std::string pad_row(std::string_view row, int length) {
  std::string out(row.substr(0, row.size() - 1));
  int have = 1 + static_cast<int>(std::count(row.begin(), row.end(), ','));
  if (have > length) throw DomainError("row " + std::string(row) + " is longer than " + std::to_string(length));
  for (; have < length; ++have) out += ",0";
  return out + ")";
}

}  // namespace

std::vector<GeneratorEntry> generator_entries(const DimensionLimits& limits) {
  std::vector<GeneratorEntry> out;
  auto add_row = [&](int q, int n, Kind kind, std::string_view row, int d, const char* group) {
    if (within(limits, q, n)) out.push_back({q, n, kind, pad_row(row, n / 2), d, group});
  };
  for (const auto& f : existence_rows()) {
    for (const int n : f.lengths) add_row(f.q, n, f.kind, f.row, f.min_weight, "existence");
  }
  const std::pair<int, const std::vector<data::CirculantRow>*> optimal_dc[] = {
      {2, &data::kBinaryCirculant}, {3, &data::kTernaryCirculant}, {4, &data::kQuaternaryCirculant}};
  for (const auto& [q, rows] : optimal_dc) {
    for (const auto& r : *rows) add_row(q, r.n, Kind::double_circulant, r.row, optimal_distance(q, r.n), "optimal-dc");
  }
  for (const auto& r : data::kTernaryNegacirculant) {
    add_row(3, r.n, Kind::double_negacirculant, r.row, optimal_distance(3, r.n), "optimal-nc");
  }
  for (const auto& l : listed_triples()) {
    if (!within(limits, l.q, l.n)) continue;
    for (const auto t : l.triples) out.push_back({l.q, l.n, Kind::double_toeplitz, std::string(t), l.min_weight, "listed-dt"});
  }
  return out;
}

GeneratorCode build_code(const GeneratorEntry& entry) {
  const Field& f = Field::of(entry.q);
  switch (entry.kind) {
    case Kind::double_circulant:
      return double_circulant_code(CirculantSpec{parse_vector(f, entry.text), Sign::circulant});
    case Kind::double_negacirculant:
      return double_negacirculant_code(CirculantSpec{parse_vector(f, entry.text), Sign::negacirculant});
    case Kind::double_toeplitz:
      break;
  }
  return double_toeplitz_code(parse_triple(f, entry.text));
}

std::string describe(const GeneratorEntry& entry) {
  const char* prefix = entry.kind == Kind::double_circulant      ? "C"
                       : entry.kind == Kind::double_negacirculant ? "N"
                                                                  : "T";
  return "q=" + std::to_string(entry.q) + " n=" + std::to_string(entry.n) + " " + prefix +
         (entry.kind == Kind::double_toeplitz ? "(" + entry.text + ")" : entry.text);
}

std::vector<ListedClasses> listed_representatives() {
  std::vector<ListedClasses> out;
  for (const auto& l : listed_triples()) {
    const auto row = classification_row(l.q, l.n);
    // Only lists that make up the whole set of triples-only classes.
    if (!row || !row->n_dt || *row->n_dt != static_cast<int>(l.triples.size())) continue;
    ListedClasses c{l.q, l.n, {}};
    for (const auto t : l.triples) c.triples.emplace_back(t);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace dtc::reference
