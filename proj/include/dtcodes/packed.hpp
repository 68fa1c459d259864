#pragma once

// Bit-sliced vectors of length <= 64 over F2, F3 and F4.
//
// Each coordinate j is stored as two bits (bit j of lo, bit j of hi) equal to
// bits 0 and 1 of the element code. For F2 hi is always zero. For F3 lo marks
// the ones and hi the twos. For F4 (lo, hi) are the coordinates in the basis
// {1, w}, so addition is a plain XOR of both planes.

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "dtcodes/finite_field.hpp"

namespace dtc {

inline constexpr int kMaxPackedLength = 64;

struct Word {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  friend constexpr bool operator==(const Word&, const Word&) = default;
  friend constexpr auto operator<=>(const Word&, const Word&) = default;
};

inline int weight(const Word& x) { return std::popcount(x.lo | x.hi); }
inline std::uint64_t support(const Word& x) { return x.lo | x.hi; }

inline Element value_at(const Word& x, int j) {
  return Element{static_cast<std::uint8_t>(((x.lo >> j) & 1U) | (((x.hi >> j) & 1U) << 1))};
}

inline void set_value(Word& x, int j, Element v) {
  const std::uint64_t bit = std::uint64_t{1} << j;
  x.lo = (v.code & 1U) ? (x.lo | bit) : (x.lo & ~bit);
  x.hi = (v.code & 2U) ? (x.hi | bit) : (x.hi & ~bit);
}

template <int Q>
inline Word add(const Word& x, const Word& y) {
  if constexpr (Q == 3) {
    const std::uint64_t t = (x.lo | y.hi) ^ (x.hi | y.lo);
    return Word{(x.hi | y.hi) ^ t, (x.lo | y.lo) ^ t};
  } else {
    return Word{x.lo ^ y.lo, x.hi ^ y.hi};
  }
}

template <int Q>
inline Word negate(const Word& x) {
  if constexpr (Q == 3) {
    return Word{x.hi, x.lo};
  } else {
    return x;
  }
}

/// s * x for a field element s.
template <int Q>
inline Word scale(const Word& x, Element s) {
  if (s.code == 0) return Word{};
  if (s.code == 1) return x;
  if constexpr (Q == 3) {
    return Word{x.hi, x.lo};
  } else {
    // w*(b0 + b1 w) = b1 + (b0 + b1) w
    if (s.code == 2) return Word{x.hi, x.lo ^ x.hi};
    return Word{x.lo ^ x.hi, x.lo};
  }
}

Word add(int q, const Word& x, const Word& y);
Word scale(int q, const Word& x, Element s);

/// Coordinatewise map x_j -> s_j * x_j.
Word scale_columns(int q, const Word& x, const std::vector<Element>& scales);

/// Scalar multiple whose first nonzero coordinate is 1; zero stays zero.
Word normalize(int q, const Word& x);

/// A code in systematic shape: row i carries 1 at pivot[i] and 0 at every
/// other pivot. This makes the weight of a message a lower bound for the
/// weight of its codeword, which the pruned enumerations rely on.
struct PackedCode {
  int q = 2;
  int n = 0;
  int k = 0;
  std::vector<Word> rows;
  std::vector<int> pivots;
  /// multiples[i][s] = s * rows[i].
  std::vector<std::array<Word, 4>> multiples;

  void build_multiples();
};

}  // namespace dtc
