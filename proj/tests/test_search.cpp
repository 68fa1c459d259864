#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include "dtcodes/errors.hpp"
#include "dtcodes/search.hpp"

using namespace dtc;
using json = nlohmann::json;

namespace {

std::vector<std::string> rendered(const SearchResult& r) {
  std::vector<std::string> out;
  for (const auto& h : r.hits) out.push_back(std::to_string(h.index) + " " + render_triple(h.triple) + " " +
                                             std::to_string(h.min_weight));
  return out;
}

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& name) : path(std::filesystem::temp_directory_path() / name) {
    std::filesystem::remove(path);
  }
  ~TempFile() { std::filesystem::remove(path); }
};

json read_json(const std::filesystem::path& p) {
  std::ifstream in(p);
  return json::parse(in);
}

void write_json(const std::filesystem::path& p, const json& j) {
  std::ofstream out(p);
  out << j.dump();
}

}  // namespace

TEST_CASE("names") {
  CHECK(parse_family("DC") == Family::dc);
  CHECK(parse_family("nc") == Family::nc);
  CHECK(to_string(Family::dt) == "DT");
  CHECK(parse_reduction("C3") == Reduction::c3);
  CHECK(to_string(Reduction::none) == "none");
  CHECK(parse_search_mode("at-least") == SearchMode::at_least);
  CHECK(to_string(SearchMode::collect_at) == "collect-at");
  CHECK_THROWS_AS(parse_family("XY"), ParseError);
  CHECK_THROWS_AS(parse_reduction("C4"), ParseError);
  CHECK_THROWS_AS(parse_search_mode("fast"), ParseError);
  CHECK(default_reduction(2) == Reduction::c2);
  CHECK(default_reduction(4) == Reduction::c3);
  CHECK(to_string(Structure::dt_only) == "DT-only");
}

TEST_CASE("vector rank") {
  const Field& f2 = Field::of(2);
  CHECK(vector_rank(FqVector(f2, {0, 0, 0})) == 0);
  CHECK(vector_rank(FqVector(f2, {1, 0, 1})) == 5);
  CHECK(vector_rank(FqVector(f2, {1, 1})) == 3);
  CHECK_THROWS_AS(vector_rank(FqVector(Field::of(3), {1})), DomainError);
  CHECK_THROWS_AS(vector_rank(FqVector::zeros(f2, 64)), DomainError);
}

TEST_CASE("reduction filters") {
  const Field& f2 = Field::of(2);
  const Field& f3 = Field::of(3);
  CHECK(passes_reduction(parse_triple(f2, "0;(1,0,1);(1,1,0)"), Reduction::c2));
  CHECK_FALSE(passes_reduction(parse_triple(f2, "0;(1,1,0);(1,0,1)"), Reduction::c2));
  CHECK(passes_reduction(parse_triple(f2, "1;(1,1,0);(1,1,0)"), Reduction::c2));
  const ToeplitzTriple t = parse_triple(f3, "0;(2,1);(1,1)");
  CHECK_FALSE(passes_reduction(t, Reduction::c3));
  CHECK(passes_reduction(t.scaled(Element{2}), Reduction::c3));
  CHECK(passes_reduction(parse_triple(f3, "0;(0,0);(2,1)"), Reduction::c3));
  CHECK_THROWS_AS(passes_reduction(t, Reduction::c2), DomainError);
  CHECK_THROWS_AS(passes_reduction(parse_triple(f2, "0;(1);(1)"), Reduction::c3), DomainError);
}

TEST_CASE("C2 keeps one of each swapped pair") {
  const TripleSpace s(Field::of(2), 10);
  for (std::uint64_t i = 0; i < s.size(); ++i) {
    const ToeplitzTriple t = s.at(i);
    const bool a = passes_reduction(t, Reduction::c2);
    const bool b = passes_reduction(t.swapped(), Reduction::c2);
    CHECK((a || b));
    if (t.a() != t.b()) CHECK(a != b);
  }
}

TEST_CASE("C3 keeps exactly one scalar multiple") {
  for (const int q : {3, 4}) {
    const Field& f = Field::of(q);
    const TripleSpace s(f, 6);
    for (std::uint64_t i = 0; i < s.size(); ++i) {
      const ToeplitzTriple t = s.at(i);
      int kept = 0;
      for (const Element alpha : f.nonzero()) kept += passes_reduction(t.scaled(alpha), Reduction::c3);
      const bool ta_zero = t.t().is_zero() && t.a().is_zero();
      CHECK(kept == (ta_zero ? q - 1 : 1));
    }
  }
}

TEST_CASE("optimal distances") {
  CHECK(find_dt_optimal(Field::of(2), 12, Reduction::c2).d == 4);
  CHECK(find_dt_optimal(Field::of(3), 10, Reduction::c3).d == 5);
  CHECK(find_dt_optimal(Field::of(4), 8, Reduction::c3).d == 4);
  const OptimalTriples all4 = find_dt_optimal(Field::of(2), 4, Reduction::none);
  const TripleSpace s(Field::of(2), 4);
  std::vector<ToeplitzTriple> expected;
  for (std::uint64_t i = 0; i < s.size(); ++i) {
    if (minimum_weight(double_toeplitz_code(s.at(i))) == all4.d) expected.push_back(s.at(i));
  }
  CHECK(all4.d == 2);
  CHECK(all4.triples == expected);
}

TEST_CASE("optimal circulant rows") {
  auto has = [](const OptimalRows& r, const std::string& row) {
    for (const auto& s : r.rows) {
      if (render_vector(s.r) == row) return true;
    }
    return false;
  };
  const OptimalRows b16 = find_family_optimal(Field::of(2), 16, Family::dc);
  CHECK(b16.d == 5);
  CHECK(has(b16, "(1,1,1,0,1,0,0,0)"));
  const OptimalRows t4 = find_family_optimal(Field::of(3), 4, Family::nc);
  CHECK(t4.d == 3);
  CHECK(has(t4, "(1,1)"));
  for (const auto& s : t4.rows) CHECK(s.sign == Sign::negacirculant);
  const OptimalRows q6 = find_family_optimal(Field::of(4), 6, Family::dc);
  CHECK(q6.d == 4);
  CHECK(has(q6, "(1,w,1)"));
  CHECK_THROWS_AS(find_family_optimal(Field::of(2), 8, Family::dt), DomainError);
}

TEST_CASE("binary length 4 search covers both circulant rows") {
  SearchConfig c;
  c.q = 2;
  c.n = 4;
  c.reduction = Reduction::c2;
  const SearchResult r = run_search(c);
  CHECK(r.d == 2);
  std::set<std::string> seen;
  for (const auto& h : r.hits) seen.insert(render_triple(h.triple));
  CHECK(seen.count("1;(0);(0)") == 1);  // C((1,0))
  CHECK(seen.count("1;(1);(1)") == 1);  // C((1,1))
}

TEST_CASE("search modes") {
  SearchConfig c;
  c.q = 3;
  c.n = 8;
  c.reduction = Reduction::c3;
  const SearchResult opt = run_search(c);
  c.mode = SearchMode::collect_at;
  c.target = opt.d;
  const SearchResult at = run_search(c);
  CHECK(rendered(at) == rendered(opt));
  c.mode = SearchMode::at_least;
  c.target = 3;
  const SearchResult least = run_search(c);
  std::uint64_t expected = 0;
  const TripleSpace s(Field::of(3), 8);
  for (std::uint64_t i = 0; i < s.size(); ++i) {
    const ToeplitzTriple t = s.at(i);
    if (passes_reduction(t, Reduction::c3) && minimum_weight(double_toeplitz_code(t)) >= 3) ++expected;
  }
  CHECK(least.hits.size() == expected);
  for (const auto& h : least.hits) {
    CHECK(h.min_weight >= 3);
    CHECK(minimum_weight(double_toeplitz_code(h.triple)) == h.min_weight);
  }
}

TEST_CASE("circulant families in the search") {
  SearchConfig c;
  c.q = 3;
  c.n = 12;
  c.family = Family::nc;
  const SearchResult r = run_search(c);
  CHECK(r.d == 6);
  for (const auto& h : r.hits) {
    REQUIRE(h.row.has_value());
    CHECK(h.row->sign == Sign::negacirculant);
    CHECK(triple_of_circulant(*h.row) == h.triple);
    const json j = json::parse(hit_json(h, c.family));
    CHECK(j.at("r") == render_vector(h.row->r));
    CHECK(j.at("min_weight") == 6);
  }
  c.q = 2;
  c.n = 8;
  const SearchResult nc2 = run_search(c);
  c.family = Family::dc;
  CHECK(rendered(run_search(c)) == rendered(nc2));
}

TEST_CASE("results do not depend on the number of workers") {
  for (const auto& [q, n] : std::vector<std::pair<int, int>>{{2, 12}, {3, 8}, {4, 6}}) {
    SearchConfig c;
    c.q = q;
    c.n = n;
    c.reduction = default_reduction(q);
    const SearchResult one = run_search(c);
    c.workers = 3;
    CHECK(rendered(run_search(c)) == rendered(one));
    c.workers = 4;
    CHECK(classify(Field::of(q), n, {std::nullopt, 4, {}}).to_json() ==
          classify(Field::of(q), n, {std::nullopt, 1, {}}).to_json());
  }
}

TEST_CASE("search configuration errors") {
  SearchConfig c;
  c.q = 2;
  c.n = 7;
  CHECK_THROWS_AS(run_search(c), DomainError);
  c.n = 8;
  c.reduction = Reduction::c3;
  CHECK_THROWS_AS(run_search(c), DomainError);
  c.reduction = Reduction::none;
  c.mode = SearchMode::collect_at;
  CHECK_THROWS_AS(run_search(c), DomainError);
  c.mode = SearchMode::find_optimal;
  c.workers = 0;
  CHECK_THROWS_AS(run_search(c), DomainError);
  c.workers = 1;
  c.max_candidates = 10;
  CHECK_THROWS_AS(run_search(c), BudgetExceeded);
  c.q = 5;
  CHECK_THROWS_AS(run_search(c), DomainError);
}

TEST_CASE("checkpoints") {
  TempFile file("dtcodes_test_checkpoint.json");
  SearchConfig c;
  c.q = 2;
  c.n = 12;
  c.reduction = Reduction::c2;
  const SearchResult fresh = run_search(c);
  c.checkpoint_path = file.path.string();
  const SearchResult first = run_search(c);
  CHECK(rendered(first) == rendered(fresh));
  REQUIRE(std::filesystem::exists(file.path));
  json saved = read_json(file.path);
  CHECK(saved.at("version") == kCheckpointVersion);
  CHECK(saved.at("best_d") == fresh.d);

  SUBCASE("complete checkpoint") { CHECK(rendered(run_search(c)) == rendered(fresh)); }

  SUBCASE("partial checkpoint resumes") {
    // Keep two finished partitions of the first phase and drop the second.
    json partial = saved;
    json best = json::object();
    for (const auto& [k, v] : saved.at("phase1").at("best").items()) {
      if (best.size() < 2) best[k] = v;
    }
    REQUIRE(best.size() == 2);
    partial.at("phase1").at("best") = best;
    partial.at("phase1").at("completed") = json::array();
    for (const auto& [k, v] : best.items()) partial.at("phase1").at("completed").push_back(std::stoull(k));
    partial.at("phase2").at("completed") = json::array();
    partial.at("phase2").at("hits") = json::object();
    partial.at("best_d") = 0;
    write_json(file.path, partial);
    CHECK(rendered(run_search(c)) == rendered(fresh));
    c.workers = 3;
    write_json(file.path, partial);
    CHECK(rendered(run_search(c)) == rendered(fresh));
  }

  SUBCASE("version mismatch") {
    json bad = saved;
    bad.at("version") = kCheckpointVersion + 1;
    write_json(file.path, bad);
    CHECK_THROWS_AS(run_search(c), Error);
  }

  SUBCASE("configuration mismatch") {
    c.n = 10;
    CHECK_THROWS_AS(run_search(c), Error);
  }

  SUBCASE("unreadable file") {
    std::ofstream(file.path) << "{not json";
    CHECK_THROWS_AS(run_search(c), Error);
  }
}

TEST_CASE("classification examples") {
  const ClassificationReport b12 = classify(Field::of(2), 12);
  CHECK(b12.d == 4);
  CHECK(b12.n_dt == 4);
  CHECK(b12.n_dc == 4);
  CHECK(b12.classes.size() == 8);
  CHECK(b12.consistent());

  const ClassificationReport t4 = classify(Field::of(3), 4);
  CHECK(t4.d == 3);
  CHECK(t4.n_dt == 0);
  CHECK(t4.n_dc == 0);
  CHECK(t4.n_nc == 1);

  const ClassificationReport t6 = classify(Field::of(3), 6);
  CHECK(t6.classes.size() == 3);
  CHECK(t6.n_dt == 1);
  CHECK(t6.n_dc == 2);
  const auto idx = find_class(t6, double_toeplitz_code(parse_triple(Field::of(3), "1;(1,0);(2,1)")));
  REQUIRE(idx.has_value());
  CHECK(t6.classes[*idx].structure == Structure::dt_only);

  // Class records are ordered and each representative is optimal.
  for (std::size_t i = 0; i < b12.classes.size(); ++i) {
    CHECK(b12.classes[i].class_id == static_cast<int>(i) + 1);
    CHECK(minimum_weight(double_toeplitz_code(b12.classes[i].representative)) == 4);
  }
  const json doc = json::parse(b12.to_json());
  CHECK(doc.at("counts").at("DT") == 4);
  std::size_t lines = 0;
  std::istringstream in(b12.to_json_lines());
  for (std::string line; std::getline(in, line);) {
    const json rec = json::parse(line);
    CHECK(rec.at("q") == 2);
    CHECK(rec.contains("representative_triple"));
    ++lines;
  }
  CHECK(lines == 8);
}

TEST_CASE("filtered and unfiltered classifications agree") {
  CHECK(verify_reduction_soundness(Field::of(2), 8));
  CHECK(verify_reduction_soundness(Field::of(3), 6));
  CHECK(verify_reduction_soundness(Field::of(4), 4));
}

TEST_CASE("binary codes with only even weights") {
  for (int n = 2; n <= 8; n += 2) {
    const EvenWeightDiagnostic d = even_weight_diagnostic(n);
    CHECK(d.even_codes > 0);
    CHECK(d.equivalent_to_double_circulant == d.even_codes);
    MESSAGE("n=" << n << ": " << d.even_codes << " all-even codes, " << d.equal_to_double_circulant
                 << " equal to a double circulant code");
  }
}
