#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace pdawg {

/// A raw input character. Byte input uses the byte value, UTF-8 input the
/// code point, tokenized input the token's intern id.
using Char = char32_t;

/// One symbol of a prev-encoded string: either a static character from the
/// static alphabet or a non-negative integer.
///
/// Stored as a single 32-bit key whose natural order is the label order used
/// everywhere in the library: static symbols first (by character code), then
/// integers in the "0 is largest" order 1 < 2 < ... < 0.
class Symbol {
 public:
  static constexpr std::uint32_t kNumBit = 0x8000'0000u;
  static constexpr std::uint32_t kMaxValue = 0x7FFF'FFFEu;
  static constexpr Char kMaxChar = 0x7FFF'FFFFu;

  constexpr Symbol() = default;

  static constexpr Symbol chr(Char c) {
    if (c > kMaxChar) throw std::out_of_range("static symbol code out of range");
    return Symbol(static_cast<std::uint32_t>(c));
  }

  static constexpr Symbol num(std::uint64_t v) {
    if (v > kMaxValue) throw std::out_of_range("integer symbol out of range");
    return Symbol(v == 0 ? 0xFFFF'FFFFu : kNumBit | static_cast<std::uint32_t>(v));
  }

  constexpr bool is_static() const { return (key_ & kNumBit) == 0; }
  constexpr bool is_num() const { return !is_static(); }
  constexpr bool is_zero() const { return key_ == 0xFFFF'FFFFu; }

  constexpr Char code() const { return static_cast<Char>(key_); }
  constexpr std::uint32_t value() const { return is_zero() ? 0 : key_ & ~kNumBit; }

  constexpr std::uint32_t key() const { return key_; }
  static constexpr Symbol from_key(std::uint32_t key) { return Symbol(key); }

  constexpr auto operator<=>(const Symbol&) const = default;

 private:
  constexpr explicit Symbol(std::uint32_t key) : key_(key) {}

  std::uint32_t key_ = 0xFFFF'FFFFu;
};

/// Z(a, j): an integer symbol pointing further back than `j` becomes 0.
constexpr Symbol z_adjust(Symbol a, std::int64_t j) {
  if (a.is_num() && static_cast<std::int64_t>(a.value()) > j) return Symbol::num(0);
  return a;
}

/// The linear order on non-negative integers in which 0 is the maximum.
constexpr bool prec_less(std::uint64_t a, std::uint64_t b) {
  return (0 < a && a < b) || (a != b && b == 0);
}

}  // namespace pdawg

template <>
struct std::hash<pdawg::Symbol> {
  std::size_t operator()(pdawg::Symbol s) const noexcept { return std::hash<std::uint32_t>{}(s.key()); }
};
