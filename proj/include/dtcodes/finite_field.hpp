#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace dtc {

/// A field element identified by its code 0..q-1. For F4 the codes are
/// 0, 1, 2 = w, 3 = w^2 with w^2 = w + 1; bit 0 of the code is the
/// coefficient of 1 and bit 1 the coefficient of w.
struct Element {
  std::uint8_t code = 0;

  constexpr bool is_zero() const { return code == 0; }
  friend constexpr bool operator==(Element, Element) = default;
  friend constexpr auto operator<=>(Element, Element) = default;
};

inline constexpr Element kZero{0};
inline constexpr Element kOne{1};

/// Table-driven arithmetic for F2, F3 and F4. Instances are immutable
/// singletons obtained through Field::of.
class Field {
 public:
  /// Throws DomainError unless q is 2, 3 or 4.
  static const Field& of(int q);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  int q() const { return q_; }
  bool is_binary() const { return q_ == 2; }

  Element add(Element x, Element y) const { return Element{add_[x.code][y.code]}; }
  Element sub(Element x, Element y) const { return add(x, neg(y)); }
  Element mul(Element x, Element y) const { return Element{mul_[x.code][y.code]}; }
  Element neg(Element x) const { return Element{neg_[x.code]}; }
  /// Throws DomainError on zero.
  Element inv(Element x) const;

  /// Validated conversion from an integer code.
  Element element(int code) const;

  /// The nonzero elements in code order.
  std::span<const Element> nonzero() const { return {nonzero_.data(), static_cast<std::size_t>(q_ - 1)}; }

  /// Tokens: "0","1" for F2; "0","1","2" for F3; "0","1","w","v" for F4 (v = w^2).
  Element parse(std::string_view token) const;
  std::string render(Element x) const;

  std::string name() const { return "F" + std::to_string(q_); }

 private:
  explicit Field(int q);

  int q_;
  std::array<std::array<std::uint8_t, 4>, 4> add_{};
  std::array<std::array<std::uint8_t, 4>, 4> mul_{};
  std::array<std::uint8_t, 4> neg_{};
  std::array<std::uint8_t, 4> inv_{};
  std::array<Element, 3> nonzero_{};
};

}  // namespace dtc
