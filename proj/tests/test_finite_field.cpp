#include <doctest.h>

#include <random>

#include "dtcodes/errors.hpp"
#include "dtcodes/finite_field.hpp"
#include "dtcodes/packed.hpp"

using namespace dtc;

namespace {

// F4 as polynomials b0 + b1 x over F2 modulo x^2 + x + 1, stored as b0 | b1 << 1.
int poly_add(int x, int y) { return x ^ y; }
int poly_mul(int x, int y) {
  int prod = 0;  // degree <= 2
  for (int i = 0; i < 2; ++i) {
    if ((y >> i) & 1) prod ^= x << i;
  }
  if (prod & 4) prod ^= 0b111;
  return prod;
}

std::vector<Element> elements(const Field& f) {
  std::vector<Element> out;
  for (int c = 0; c < f.q(); ++c) out.push_back(f.element(c));
  return out;
}

}  // namespace

TEST_CASE("small examples") {
  const Field& f2 = Field::of(2);
  const Field& f3 = Field::of(3);
  const Field& f4 = Field::of(4);
  const Element w = f4.parse("w");
  const Element v = f4.parse("v");
  CHECK(f2.add(kOne, kOne) == kZero);
  CHECK(f3.add(Element{2}, Element{2}) == kOne);
  CHECK(f4.add(w, v) == kOne);
  CHECK(f4.mul(w, w) == v);
  CHECK(f3.mul(Element{2}, Element{2}) == kOne);
  CHECK(f3.neg(kOne) == Element{2});
  CHECK(f2.neg(kOne) == kOne);
  CHECK(f4.inv(w) == v);
  CHECK(f4.render(v) == "v");
  CHECK(f3.parse("2") == Element{2});
  for (const Field* f : {&f2, &f3, &f4}) {
    for (const Element x : elements(*f)) CHECK(f->mul(x, kZero) == kZero);
  }
}

TEST_CASE("field axioms hold exhaustively") {
  for (const int q : {2, 3, 4}) {
    const Field& f = Field::of(q);
    const auto all = elements(f);
    for (const Element x : all) {
      CHECK(f.add(x, kZero) == x);
      CHECK(f.mul(x, kOne) == x);
      CHECK(f.add(x, f.neg(x)) == kZero);
      CHECK(f.sub(x, x) == kZero);
      if (!x.is_zero()) CHECK(f.mul(x, f.inv(x)) == kOne);
      for (const Element y : all) {
        CHECK(f.add(x, y) == f.add(y, x));
        CHECK(f.mul(x, y) == f.mul(y, x));
        for (const Element z : all) {
          CHECK(f.add(f.add(x, y), z) == f.add(x, f.add(y, z)));
          CHECK(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
          CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
        }
      }
    }
  }
}

TEST_CASE("nonzero elements form a cyclic group") {
  for (const int q : {2, 3, 4}) {
    const Field& f = Field::of(q);
    CHECK(static_cast<int>(f.nonzero().size()) == q - 1);
    bool has_generator = false;
    for (const Element g : f.nonzero()) {
      Element p = g;
      int order = 1;
      while (p != kOne) {
        p = f.mul(p, g);
        ++order;
      }
      if (order == q - 1) has_generator = true;
    }
    CHECK(has_generator);
  }
}

TEST_CASE("F4 matches polynomial arithmetic") {
  const Field& f = Field::of(4);
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      CHECK(f.add(Element{static_cast<std::uint8_t>(x)}, Element{static_cast<std::uint8_t>(y)}).code == poly_add(x, y));
      CHECK(f.mul(Element{static_cast<std::uint8_t>(x)}, Element{static_cast<std::uint8_t>(y)}).code == poly_mul(x, y));
    }
  }
}

TEST_CASE("F3 matches integers mod 3") {
  const Field& f = Field::of(3);
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      CHECK(f.add(f.element(x), f.element(y)).code == (x + y) % 3);
      CHECK(f.mul(f.element(x), f.element(y)).code == (x * y) % 3);
    }
  }
}

TEST_CASE("squaring is a field automorphism of F4 swapping w and w^2") {
  const Field& f = Field::of(4);
  auto sq = [&](Element x) { return f.mul(x, x); };
  CHECK(sq(Element{2}) == Element{3});
  CHECK(sq(Element{3}) == Element{2});
  for (const Element x : elements(f)) {
    for (const Element y : elements(f)) {
      CHECK(sq(f.add(x, y)) == f.add(sq(x), sq(y)));
      CHECK(sq(f.mul(x, y)) == f.mul(sq(x), sq(y)));
    }
  }
}

TEST_CASE("tokens") {
  const Field& f4 = Field::of(4);
  for (const Element x : elements(f4)) CHECK(f4.parse(f4.render(x)) == x);
  CHECK_THROWS_AS(Field::of(2).parse("2"), ParseError);
  CHECK_THROWS_AS(Field::of(3).parse("w"), ParseError);
  CHECK_THROWS_AS(f4.parse("x"), ParseError);
  try {
    f4.parse("x");
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("x") != std::string::npos);
    CHECK(msg.find("F4") != std::string::npos);
  }
  CHECK_THROWS_AS(Field::of(5), DomainError);
  CHECK_THROWS_AS(Field::of(3).inv(kZero), DomainError);
  CHECK_THROWS_AS(Field::of(3).element(3), DomainError);
}

TEST_CASE("bit-sliced operations agree with the tables") {
  std::mt19937_64 rng(7);
  for (const int q : {2, 3, 4}) {
    const Field& f = Field::of(q);
    std::uniform_int_distribution<int> digit(0, q - 1);
    for (int trial = 0; trial < 200; ++trial) {
      Word x, y;
      std::vector<Element> ex(64), ey(64), scales(64);
      for (int j = 0; j < 64; ++j) {
        ex[static_cast<std::size_t>(j)] = f.element(digit(rng));
        ey[static_cast<std::size_t>(j)] = f.element(digit(rng));
        scales[static_cast<std::size_t>(j)] = f.element(digit(rng));
        set_value(x, j, ex[static_cast<std::size_t>(j)]);
        set_value(y, j, ey[static_cast<std::size_t>(j)]);
      }
      const Element s = f.element(digit(rng));
      const Word sum = add(q, x, y);
      const Word scaled = scale(q, x, s);
      const Word cols = scale_columns(q, x, scales);
      const Word norm = normalize(q, x);
      int wt = 0;
      Element lead = kZero;
      for (int j = 0; j < 64; ++j) {
        const Element a = ex[static_cast<std::size_t>(j)];
        CHECK(value_at(sum, j) == f.add(a, ey[static_cast<std::size_t>(j)]));
        CHECK(value_at(scaled, j) == f.mul(s, a));
        CHECK(value_at(cols, j) == f.mul(scales[static_cast<std::size_t>(j)], a));
        if (!a.is_zero()) {
          ++wt;
          if (lead.is_zero()) lead = a;
        }
      }
      CHECK(weight(x) == wt);
      if (!lead.is_zero()) {
        CHECK(norm == scale(q, x, f.inv(lead)));
      } else {
        CHECK(norm == Word{});
      }
    }
  }
}
