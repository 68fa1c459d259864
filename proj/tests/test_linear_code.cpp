#include <doctest.h>

#include <random>

#include "dtcodes/errors.hpp"
#include "dtcodes/linear_code.hpp"
#include "oracles.hpp"

using namespace dtc;

namespace {

std::int64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t power(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

/// Dual weight distribution through Krawtchouk polynomials.
std::vector<std::int64_t> macwilliams(const std::vector<std::int64_t>& a, int q) {
  const int n = static_cast<int>(a.size()) - 1;
  std::int64_t size = 0;
  for (const auto x : a) size += x;
  std::vector<std::int64_t> b(a.size(), 0);
  for (int j = 0; j <= n; ++j) {
    std::int64_t acc = 0;
    for (int i = 0; i <= n; ++i) {
      std::int64_t k = 0;
      for (int s = 0; s <= j; ++s) {
        k += (s % 2 ? -1 : 1) * power(q - 1, j - s) * choose(i, s) * choose(n - i, j - s);
      }
      acc += a[static_cast<std::size_t>(i)] * k;
    }
    b[static_cast<std::size_t>(j)] = acc / size;
  }
  return b;
}

std::vector<std::int64_t> to_int(const WeightEnumerator& w) {
  std::vector<std::int64_t> out;
  for (const auto& c : w.coeffs) out.push_back(static_cast<std::int64_t>(c));
  return out;
}

}  // namespace

TEST_CASE("weights and encoding") {
  const Field& f2 = Field::of(2);
  const Field& f3 = Field::of(3);
  const Field& f4 = Field::of(4);
  CHECK(weight(FqVector::zeros(f2, 5)) == 0);
  CHECK(weight(FqVector(f3, {1, 2, 0, 2})) == 3);
  CHECK(weight(parse_vector(f4, "(1,w,v,0,0,1)")) == 4);
  const GeneratorCode c(f2, 4, {FqVector(f2, {1, 0, 1, 1}), FqVector(f2, {0, 1, 1, 0})});
  CHECK(c.encode(FqVector::zeros(f2, 2)) == FqVector::zeros(f2, 4));
  CHECK(c.encode(FqVector::unit(f2, 2, 1)) == FqVector(f2, {0, 1, 1, 0}));
  CHECK(c.encode(FqVector(f2, {1, 1})) == FqVector(f2, {1, 1, 0, 1}));
  CHECK(c.contains(FqVector(f2, {1, 1, 0, 1})));
  CHECK_FALSE(c.contains(FqVector(f2, {1, 1, 1, 1})));
  CHECK_THROWS_AS(c.encode(FqVector::zeros(f2, 3)), DomainError);
}

TEST_CASE("vector text") {
  const Field& f4 = Field::of(4);
  CHECK(render_vector(parse_vector(f4, " ( 1, w ,0,v ) ")) == "(1,w,0,v)");
  CHECK_THROWS_AS(parse_vector(f4, "1,w"), ParseError);
  CHECK_THROWS_AS(parse_vector(f4, "(1,q)"), ParseError);
  CHECK_THROWS_AS(parse_vector(Field::of(2), "(1,2)"), ParseError);
}

TEST_CASE("generator validation") {
  const Field& f2 = Field::of(2);
  CHECK_THROWS_AS(GeneratorCode(f2, 3, {FqVector(f2, {1, 1})}), DomainError);
  CHECK_THROWS_AS(GeneratorCode(f2, 2, {FqVector(f2, {1, 1}), FqVector(f2, {1, 1})}), DomainError);
  const GeneratorCode c(f2, 3, {FqVector(f2, {1, 1, 0}), FqVector(f2, {0, 1, 1})});
  CHECK(GeneratorCode::parse(f2, c.to_text()).rows() == c.rows());
}

TEST_CASE("weight enumerator of the repetition code") {
  const Field& f2 = Field::of(2);
  const GeneratorCode c(f2, 2, {FqVector(f2, {1, 1})});
  const WeightEnumerator w = weight_enumerator(c);
  CHECK(w.coeffs == std::vector<BigInt>{1, 0, 1});
  CHECK(w.to_json() == R"(["1","0","1"])");
}

TEST_CASE("ternary extended Golay code from a negacirculant has 264 words of weight 6") {
  const Field& f = Field::of(3);
  const std::vector<int> r = {1, 2, 1, 1, 1, 0};
  std::vector<FqVector> rows;
  for (int i = 0; i < 6; ++i) {
    std::vector<Element> row(12, kZero);
    row[static_cast<std::size_t>(i)] = kOne;
    for (int j = 0; j < 6; ++j) {
      const Element e = f.element(j >= i ? r[static_cast<std::size_t>(j - i)] : r[static_cast<std::size_t>(6 + j - i)]);
      row[static_cast<std::size_t>(6 + j)] = j >= i ? e : f.neg(e);
    }
    rows.emplace_back(f, std::move(row));
  }
  const GeneratorCode golay(f, 12, rows);
  const auto counts = oracle::weight_counts(golay);
  CHECK(counts[6] == 264);
  CHECK(to_int(weight_enumerator(golay)) == counts);
  CHECK(minimum_weight(golay) == 6);
  CHECK(min_weight_at_least(golay, 6));
  CHECK_FALSE(min_weight_at_least(golay, 7));
}

TEST_CASE("enumerator and minimum weight agree with direct enumeration") {
  std::mt19937_64 rng(11);
  for (const int q : {2, 3, 4}) {
    const Field& f = Field::of(q);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 2 + trial % 8;
      const int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::min(n, q == 2 ? 8 : 5)));
      const GeneratorCode c = oracle::random_code(f, n, k, rng);
      const auto counts = oracle::weight_counts(c);
      CHECK(to_int(weight_enumerator(c)) == counts);
      const int d = oracle::min_weight(c);
      CHECK(minimum_weight(c) == d);
      for (int t = 1; t <= n + 1; ++t) CHECK(min_weight_at_least(c, t) == (t <= d));
    }
  }
}

TEST_CASE("min_weight_at_least against minimum_weight on every binary code family up to length 8") {
  std::mt19937_64 rng(3);
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (int trial = 0; trial < 10; ++trial) {
        const GeneratorCode c = oracle::random_code(Field::of(2), n, k, rng);
        const int d = minimum_weight(c);
        for (int t = 1; t <= n + 1; ++t) CHECK(min_weight_at_least(c, t) == (t <= d));
        CHECK_THROWS_AS(min_weight_at_least(c, 0), DomainError);
      }
    }
  }
}

TEST_CASE("low-weight words") {
  std::mt19937_64 rng(5);
  for (const int q : {2, 3, 4}) {
    const Field& f = Field::of(q);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 4 + trial % 5;
      const GeneratorCode c = oracle::random_code(f, n, 3, rng);
      const int limit = 1 + trial % n;
      std::size_t expected = 0;
      std::size_t expected_projective = 0;
      for (const auto& w : oracle::codewords(c)) {
        int wt = 0;
        int lead = 0;
        for (const int x : w) {
          if (x != 0 && lead == 0) lead = x;
          wt += x != 0;
        }
        if (wt >= 1 && wt <= limit) {
          ++expected;
          if (lead == 1) ++expected_projective;
        }
      }
      CHECK(codewords_up_to_weight(c.packed(), limit, false).size() == expected);
      const auto proj = codewords_up_to_weight(c.packed(), limit, true);
      CHECK(proj.size() == expected_projective);
      for (const Word& w : proj) CHECK(normalize(q, w) == w);
    }
  }
}

TEST_CASE("dual codes") {
  std::mt19937_64 rng(17);
  for (const int q : {2, 3, 4}) {
    const Field& f = Field::of(q);
    for (int trial = 0; trial < 30; ++trial) {
      const int n = 2 + trial % 7;
      const int k = 1 + trial % n;
      const GeneratorCode c = oracle::random_code(f, n, k, rng);
      const GeneratorCode d = dual_code(c);
      CHECK(d.dimension() == n - k);
      for (const auto& x : c.rows()) {
        for (const auto& y : d.rows()) CHECK(dot(x, y) == kZero);
      }
      if (k < n) {
        const GeneratorCode dd = dual_code(d);
        CHECK(dd.dimension() == k);
        for (const auto& x : dd.rows()) CHECK(c.contains(x));
        CHECK(to_int(weight_enumerator(d)) == macwilliams(to_int(weight_enumerator(c)), q));
      }
    }
  }
}

TEST_CASE("the dual of (I | A) is generated by (-A^T | I)") {
  std::mt19937_64 rng(23);
  for (const int q : {2, 3, 4}) {
    const Field& f = Field::of(q);
    std::uniform_int_distribution<int> digit(0, q - 1);
    const int m = 4;
    std::vector<std::vector<Element>> a(m, std::vector<Element>(m));
    for (auto& row : a) {
      for (auto& x : row) x = f.element(digit(rng));
    }
    std::vector<FqVector> g, h;
    for (int i = 0; i < m; ++i) {
      std::vector<Element> gi(2 * m, kZero), hi(2 * m, kZero);
      gi[static_cast<std::size_t>(i)] = kOne;
      hi[static_cast<std::size_t>(m + i)] = kOne;
      for (int j = 0; j < m; ++j) {
        gi[static_cast<std::size_t>(m + j)] = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        hi[static_cast<std::size_t>(j)] = f.neg(a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
      }
      g.emplace_back(f, std::move(gi));
      h.emplace_back(f, std::move(hi));
    }
    const GeneratorCode d = dual_code(GeneratorCode(f, 2 * m, g));
    for (const auto& row : h) CHECK(d.contains(row));
  }
}

TEST_CASE("formal self-duality") {
  const Field& f2 = Field::of(2);
  CHECK(is_formally_self_dual(GeneratorCode(f2, 2, {FqVector(f2, {1, 1})})));
  CHECK_FALSE(is_formally_self_dual(GeneratorCode(f2, 3, {FqVector(f2, {1, 1, 0})})));
  // [4,2] with rows 1100, 0011 is self-dual.
  CHECK(is_formally_self_dual(GeneratorCode(f2, 4, {FqVector(f2, {1, 1, 0, 0}), FqVector(f2, {0, 0, 1, 1})})));
  // 1 + y + y^3 + y^4 against 1 + 3y^2 for the dual.
  CHECK_FALSE(is_formally_self_dual(GeneratorCode(f2, 4, {FqVector(f2, {1, 1, 1, 0}), FqVector(f2, {0, 0, 0, 1})})));
}

TEST_CASE("budgets") {
  CHECK_THROWS_AS(require_within_budget(2, 27, EnumerationBudget{}, "test"), BudgetExceeded);
  CHECK_NOTHROW(require_within_budget(2, 26, EnumerationBudget{}, "test"));
  std::mt19937_64 rng(1);
  const GeneratorCode c = oracle::random_code(Field::of(3), 12, 6, rng);
  CHECK_THROWS_AS(minimum_weight(c, EnumerationBudget{100}), BudgetExceeded);
  CHECK_THROWS_AS(weight_enumerator(c, EnumerationBudget{100}), BudgetExceeded);
}
