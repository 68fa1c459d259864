#include "dtcodes/finite_field.hpp"

#include "dtcodes/errors.hpp"

namespace dtc {

namespace {

// Multiplicative group of F4 is generated by w (code 2): w^0 = 1, w^1 = w, w^2 = w + 1.
constexpr std::array<std::uint8_t, 3> kF4Exp = {1, 2, 3};
constexpr std::array<int, 4> kF4Log = {-1, 0, 1, 2};

}  // namespace

Field::Field(int q) : q_(q) {
  for (int x = 0; x < q; ++x) {
    for (int y = 0; y < q; ++y) {
      if (q == 4) {
        add_[x][y] = static_cast<std::uint8_t>(x ^ y);
        mul_[x][y] = (x == 0 || y == 0) ? 0 : kF4Exp[(kF4Log[x] + kF4Log[y]) % 3];
      } else {
        add_[x][y] = static_cast<std::uint8_t>((x + y) % q);
        mul_[x][y] = static_cast<std::uint8_t>((x * y) % q);
      }
    }
  }
  for (int x = 0; x < q; ++x) {
    for (int y = 0; y < q; ++y) {
      if (add_[x][y] == 0) neg_[x] = static_cast<std::uint8_t>(y);
      if (mul_[x][y] == 1) inv_[x] = static_cast<std::uint8_t>(y);
    }
  }
  for (int x = 1; x < q; ++x) nonzero_[x - 1] = Element{static_cast<std::uint8_t>(x)};
}

const Field& Field::of(int q) {
  static const Field f2(2);
  static const Field f3(3);
  static const Field f4(4);
  switch (q) {
    case 2:
      return f2;
    case 3:
      return f3;
    case 4:
      return f4;
    default:
      throw DomainError("unsupported field size q=" + std::to_string(q) + " (expected 2, 3 or 4)");
  }
}

Element Field::inv(Element x) const {
  if (x.is_zero()) throw DomainError("division by zero in " + name());
  return Element{inv_[x.code]};
}

Element Field::element(int code) const {
  if (code < 0 || code >= q_) {
    throw DomainError("element code " + std::to_string(code) + " out of range for " + name());
  }
  return Element{static_cast<std::uint8_t>(code)};
}

Element Field::parse(std::string_view token) const {
  if (token.size() == 1) {
    const char c = token[0];
    if (c == '0') return kZero;
    if (c == '1') return kOne;
    if (q_ == 3 && c == '2') return Element{2};
    if (q_ == 4 && c == 'w') return Element{2};
    if (q_ == 4 && c == 'v') return Element{3};
  }
  throw ParseError("unknown token '" + std::string(token) + "' for field " + name());
}

std::string Field::render(Element x) const {
  if (q_ == 4) {
    static constexpr std::array<const char*, 4> kSymbols = {"0", "1", "w", "v"};
    return kSymbols[x.code];
  }
  return std::to_string(x.code);
}

}  // namespace dtc
