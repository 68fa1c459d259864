#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace dtc {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& x) { return x.str(); }

/// base^exponent for small nonnegative exponents.
inline BigInt ipow(unsigned base, unsigned exponent) {
  return boost::multiprecision::pow(BigInt(base), exponent);
}

}  // namespace dtc
