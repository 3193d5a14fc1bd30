#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pdawg/symbol.hpp"

namespace pdawg {

// Positions in this library are 1-based, as in the usual textbook notation
// for strings: w[1..n]. Containers are indexed from 0 internally.

class ClassificationError : public std::invalid_argument {
 public:
  ClassificationError(std::size_t position, Char c);
  std::size_t position() const { return position_; }
  Char character() const { return char_; }

 private:
  std::size_t position_;
  Char char_;
};

class ValidityError : public std::invalid_argument {
 public:
  ValidityError(std::size_t position, const std::string& what);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class AlphabetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class SymbolClass { Static, Param, Unknown };

/// The partition of input characters into static (Σ) and parameter (Π)
/// alphabets. With `params_auto`, every character outside Σ is a parameter.
class AlphabetSpec {
 public:
  AlphabetSpec() = default;
  AlphabetSpec(std::set<Char> statics, std::set<Char> params, bool params_auto = false);

  /// Both arguments are UTF-8; every code point becomes one character.
  static AlphabetSpec from_chars(std::string_view sigma, std::string_view pi);
  static AlphabetSpec auto_params(std::string_view sigma);

  SymbolClass classify(Char c) const;

  const std::set<Char>& statics() const { return statics_; }
  const std::set<Char>& params() const { return params_; }
  bool params_auto() const { return params_auto_; }

  /// Display names, used for tokenized input and generated parameters.
  void set_name(Char c, std::string name);
  std::string name(Char c) const;
  const std::map<Char, std::string>& names() const { return names_; }

  bool operator==(const AlphabetSpec&) const = default;

 private:
  std::set<Char> statics_;
  std::set<Char> params_;
  bool params_auto_ = false;
  std::map<Char, std::string> names_;
};

/// A parameterized string: raw characters plus the alphabet that classifies
/// them. Construction rejects unclassifiable characters.
class PString {
 public:
  PString() = default;
  PString(std::u32string text, AlphabetSpec alphabet);
  static PString from_utf8(std::string_view text, const AlphabetSpec& alphabet);

  const std::u32string& text() const { return text_; }
  const AlphabetSpec& alphabet() const { return alphabet_; }
  std::size_t size() const { return text_.size(); }
  bool empty() const { return text_.empty(); }

  PString reversed() const;
  /// Characters [i..j], 1-based inclusive.
  PString substr(std::size_t i, std::size_t j) const;

  std::string utf8() const;

 private:
  std::u32string text_;
  AlphabetSpec alphabet_;
};

/// A prev-encoded string, i.e. <S> for some p-string S.
class PvString {
 public:
  PvString() = default;

  /// Validates; throws ValidityError naming the first bad position.
  static PvString checked(std::vector<Symbol> symbols);
  static PvString unchecked(std::vector<Symbol> symbols) { return PvString(std::move(symbols)); }

  /// Accepts "0a2a0" (one character per symbol, digits are integers) or a
  /// whitespace-separated form "0 a 12 a 0". Validates.
  static PvString parse(std::string_view text);

  std::size_t size() const { return syms_.size(); }
  bool empty() const { return syms_.empty(); }
  Symbol operator[](std::size_t i) const { return syms_[i]; }
  /// 1-based access.
  Symbol at(std::size_t i) const { return syms_.at(i - 1); }
  std::span<const Symbol> symbols() const { return syms_; }
  auto begin() const { return syms_.begin(); }
  auto end() const { return syms_.end(); }

  /// Compact form when unambiguous, space-separated otherwise.
  std::string str() const;
  std::string str(const AlphabetSpec& alphabet) const;

  auto operator<=>(const PvString&) const = default;

 private:
  explicit PvString(std::vector<Symbol> symbols) : syms_(std::move(symbols)) {}

  std::vector<Symbol> syms_;
};

struct PvStringHash {
  std::size_t operator()(const PvString& x) const noexcept;
};

/// True iff `symbols` is the prev-encoding of some p-string.
bool is_pv_string(std::span<const Symbol> symbols);

PvString prev_encode(const PString& s);
PvString prev_encode(std::u32string_view text, const AlphabetSpec& alphabet);

/// Inverse of prev_encode. Parameters are named from `pool` in order of
/// first occurrence; static symbols keep their code.
PString prev_decode(const PvString& x, std::span<const Char> pool);
/// Same, with generated parameter names p0, p1, ...
PString prev_decode(const PvString& x);

/// <x>: zeroes every back reference that reaches before the start of x.
PvString re_encode(std::span<const Symbol> x);
/// <w[i..j]>, 1-based inclusive. Empty when i > j.
PvString slice(const PvString& w, std::size_t i, std::size_t j);

/// The pv-string of the reversed p-string: pv_reverse(<S>) = <reverse(S)>.
PvString pv_reverse(const PvString& x);

std::uint64_t prec_min(std::span<const std::uint64_t> values);
std::uint64_t prec_max(std::span<const std::uint64_t> values);

bool p_match(const PString& s1, const PString& s2);

std::string to_utf8(std::u32string_view text);
std::u32string from_utf8(std::string_view text);

}  // namespace pdawg
