#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "dtcodes/equivalence.hpp"
#include "dtcodes/errors.hpp"
#include "dtcodes/structured_codes.hpp"
#include "oracles.hpp"

using namespace dtc;

namespace {

MonomialMap random_map(const Field& f, int n, std::mt19937_64& rng) {
  MonomialMap m = MonomialMap::identity(n);
  std::shuffle(m.perm.begin(), m.perm.end(), rng);
  std::uniform_int_distribution<int> pick(0, f.q() - 2);
  for (auto& s : m.scales) s = f.nonzero()[static_cast<std::size_t>(pick(rng))];
  return m;
}

using Words = std::vector<std::vector<int>>;

/// Smallest sorted codeword list over every monomial map: equal exactly for
/// equivalent codes.
Words canonical_form(const GeneratorCode& code) {
  const Field& f = code.field();
  const int n = code.length();
  const Words words = oracle::codewords(code);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  const auto scale_choices = oracle::all_digit_strings(f.q() - 1, n);
  Words best;
  do {
    for (const auto& sc : scale_choices) {
      Words image;
      for (const auto& w : words) {
        std::vector<int> x(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
          x[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])] =
              f.mul(f.nonzero()[static_cast<std::size_t>(sc[static_cast<std::size_t>(j)])], f.element(w[static_cast<std::size_t>(j)]))
                  .code;
        }
        image.push_back(std::move(x));
      }
      std::sort(image.begin(), image.end());
      if (best.empty() || image < best) best = std::move(image);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

void compare_with_oracle(const std::vector<GeneratorCode>& codes) {
  std::vector<Words> canon;
  for (const auto& c : codes) canon.push_back(canonical_form(c));
  int equal_pairs = 0;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    for (std::size_t j = i + 1; j < codes.size(); ++j) {
      const bool expected = canon[i] == canon[j];
      equal_pairs += expected;
      const auto w = find_equivalence(codes[i], codes[j]);
      CHECK(w.has_value() == expected);
      if (w) CHECK(same_code(apply_monomial(codes[i], w->map), codes[j]));
    }
  }
  // Both outcomes are exercised.
  CHECK(equal_pairs > 0);
}

}  // namespace

TEST_CASE("monomial maps") {
  const Field& f3 = Field::of(3);
  const FqVector x(f3, {1, 2, 0});
  CHECK(apply_monomial(x, MonomialMap::identity(3)) == x);
  const MonomialMap m{{2, 0, 1}, {Element{2}, kOne, kOne}};
  CHECK(apply_monomial(x, m) == FqVector(f3, {2, 0, 2}));
  CHECK_THROWS_AS(apply_monomial(x, MonomialMap::identity(2)), DomainError);
  CHECK_THROWS_AS(apply_monomial(x, MonomialMap{{0, 0, 1}, {kOne, kOne, kOne}}), DomainError);
  CHECK_THROWS_AS(apply_monomial(x, MonomialMap{{0, 1, 2}, {kOne, kZero, kOne}}), DomainError);
}

TEST_CASE("scaling every column gives the same code") {
  std::mt19937_64 rng(4);
  const Field& f3 = Field::of(3);
  const GeneratorCode c = oracle::random_code(f3, 6, 3, rng);
  MonomialMap m = MonomialMap::identity(6);
  for (auto& s : m.scales) s = Element{2};
  const GeneratorCode d = apply_monomial(c, m);
  CHECK(same_code(c, d));
  CHECK(weight_enumerator(c) == weight_enumerator(d));
}

TEST_CASE("signatures are invariant") {
  std::mt19937_64 rng(8);
  for (const int q : {2, 3, 4}) {
    const Field& f = Field::of(q);
    for (int trial = 0; trial < 20; ++trial) {
      const GeneratorCode c = oracle::random_code(f, 8, 4, rng);
      const GeneratorCode d = apply_monomial(c, random_map(f, 8, rng));
      CHECK(signature(c) == signature(d));
      const auto w = find_equivalence(c, d);
      REQUIRE(w.has_value());
      CHECK(same_code(apply_monomial(c, w->map), d));
    }
  }
  const Field& f2 = Field::of(2);
  const GeneratorCode a(f2, 4, {FqVector(f2, {1, 1, 0, 0}), FqVector(f2, {0, 0, 1, 1})});
  const GeneratorCode b(f2, 4, {FqVector(f2, {1, 0, 0, 0}), FqVector(f2, {0, 1, 1, 1})});
  CHECK(signature(a) != signature(b));
  CHECK_FALSE(are_equivalent(a, b));
}

TEST_CASE("binary permutation equivalence matches exhaustive search") {
  std::mt19937_64 rng(12);
  for (const auto& [n, k] : std::vector<std::pair<int, int>>{{6, 3}, {7, 3}, {8, 4}}) {
    std::vector<GeneratorCode> codes;
    for (int i = 0; i < 10; ++i) {
      const GeneratorCode c = oracle::random_code(Field::of(2), n, k, rng);
      codes.push_back(c);
      codes.push_back(apply_monomial(c, random_map(Field::of(2), n, rng)));
    }
    compare_with_oracle(codes);
  }
}

TEST_CASE("binary double Toeplitz codes of lengths 8 and 10") {
  // Exhaustive canonical forms at length 8; at length 10 only known maps.
  std::mt19937_64 rng(13);
  const Field& f2 = Field::of(2);
  const TripleSpace s(f2, 10);
  for (int trial = 0; trial < 30; ++trial) {
    const ToeplitzTriple t = s.at(rng() % s.size());
    const GeneratorCode c = double_toeplitz_code(t);
    const GeneratorCode d = apply_monomial(c, random_map(f2, 10, rng));
    CHECK(are_equivalent(c, d));
  }
  std::vector<GeneratorCode> codes;
  const TripleSpace s8(f2, 8);
  for (int i = 0; i < 24; ++i) codes.push_back(double_toeplitz_code(s8.at(rng() % s8.size())));
  compare_with_oracle(codes);
}

TEST_CASE("nonbinary monomial equivalence matches exhaustive search") {
  std::mt19937_64 rng(14);
  for (const auto& [q, n] : std::vector<std::pair<int, int>>{{3, 5}, {3, 6}, {4, 4}, {4, 5}}) {
    const Field& f = Field::of(q);
    std::vector<GeneratorCode> codes;
    for (int i = 0; i < 8; ++i) {
      const GeneratorCode c = oracle::random_code(f, n, 2, rng);
      codes.push_back(c);
      codes.push_back(apply_monomial(c, random_map(f, n, rng)));
    }
    compare_with_oracle(codes);
  }
}

TEST_CASE("swapping bands and scaling give equivalent codes") {
  std::mt19937_64 rng(15);
  for (const int q : {2, 3, 4}) {
    const Field& f = Field::of(q);
    for (int n = 4; n <= 12; n += 2) {
      const TripleSpace s(f, n);
      for (int trial = 0; trial < 10; ++trial) {
        const ToeplitzTriple t = s.at(rng() % s.size());
        const GeneratorCode c = double_toeplitz_code(t);
        CHECK(are_equivalent(c, double_toeplitz_code(t.swapped())));
        for (const Element alpha : f.nonzero()) CHECK(are_equivalent(c, double_toeplitz_code(t.scaled(alpha))));
      }
    }
  }
}

TEST_CASE("Frobenius images") {
  const Field& f4 = Field::of(4);
  const FqVector x = parse_vector(f4, "(1,w,v,0)");
  CHECK(render_vector(frobenius(x)) == "(1,v,w,0)");
  CHECK(frobenius(frobenius(x)) == x);
  const GeneratorCode c = double_circulant_code({parse_vector(f4, "(1,w,1,1,0,0)"), Sign::circulant});
  const GeneratorCode fc = frobenius(c);
  EquivalenceOptions semi;
  semi.mode = EquivalenceMode::semimonomial;
  const auto w = find_equivalence(c, fc, semi);
  REQUIRE(w.has_value());
  const GeneratorCode source = w->frobenius ? frobenius(c) : c;
  CHECK(same_code(apply_monomial(source, w->map), fc));
  // Over F2 and F3 the map is the identity.
  const FqVector y(Field::of(3), {1, 2, 0});
  CHECK(frobenius(y) == y);
}

TEST_CASE("different enumerators are never equivalent") {
  const Field& f3 = Field::of(3);
  const GeneratorCode a = double_toeplitz_code(parse_triple(f3, "1;(1,0);(2,1)"));
  const GeneratorCode b = double_toeplitz_code(parse_triple(f3, "1;(0,0);(0,0)"));
  CHECK(weight_enumerator(a) != weight_enumerator(b));
  CHECK_FALSE(find_equivalence(a, b).has_value());
}

TEST_CASE("node cap") {
  std::mt19937_64 rng(16);
  const Field& f3 = Field::of(3);
  const GeneratorCode c = oracle::random_code(f3, 8, 4, rng);
  const GeneratorCode d = apply_monomial(c, random_map(f3, 8, rng));
  EquivalenceOptions o;
  o.node_cap = 0;
  CHECK_THROWS_AS(find_equivalence(c, d, o), Undecided);
}

TEST_CASE("grouping into classes") {
  std::mt19937_64 rng(18);
  const Field& f2 = Field::of(2);
  CHECK(dedupe_into_classes({}).empty());
  const GeneratorCode one = oracle::random_code(f2, 6, 3, rng);
  CHECK(dedupe_into_classes({one}) == std::vector<std::vector<std::size_t>>{{0}});

  std::vector<GeneratorCode> codes;
  for (int i = 0; i < 6; ++i) {
    const GeneratorCode c = oracle::random_code(f2, 8, 4, rng);
    codes.push_back(c);
    codes.push_back(apply_monomial(c, random_map(f2, 8, rng)));
  }
  const auto classes = dedupe_into_classes(codes);
  for (const auto& cls : classes) {
    CHECK(std::is_sorted(cls.begin(), cls.end()));
    for (const auto i : cls) CHECK(are_equivalent(codes[cls.front()], codes[i]));
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i > 0) CHECK(classes[i - 1].front() < classes[i].front());
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      CHECK_FALSE(are_equivalent(codes[classes[i].front()], codes[classes[j].front()]));
    }
  }
  CHECK(dedupe_into_classes(codes, {}, 3) == classes);
}
