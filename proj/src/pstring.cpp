#include "pdawg/pstring.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <unordered_map>

namespace pdawg {

namespace {

std::string describe_char(Char c) {
  std::ostringstream os;
  os << "U+" << std::hex << std::uppercase << static_cast<std::uint32_t>(c);
  return os.str();
}

// Assigns a parameter id to every Num position, or reports the first
// position (1-based) whose back reference cannot be decoded.
std::optional<std::vector<int>> decode_ids(std::span<const Symbol> x, std::size_t& bad) {
  std::vector<int> id(x.size(), -1);
  std::vector<std::size_t> last;  // last position of each id, 0-based
  for (std::size_t i = 0; i < x.size(); ++i) {
    Symbol s = x[i];
    if (s.is_static()) continue;
    if (s.is_zero()) {
      id[i] = static_cast<int>(last.size());
      last.push_back(i);
      continue;
    }
    std::size_t v = s.value();
    if (v > i || id[i - v] < 0 || last[id[i - v]] != i - v) {
      bad = i + 1;
      return std::nullopt;
    }
    id[i] = id[i - v];
    last[id[i]] = i;
  }
  return id;
}

std::vector<Symbol> encode_ids(std::span<const Symbol> x, const std::vector<int>& id) {
  std::vector<Symbol> out(x.size());
  std::unordered_map<int, std::size_t> last;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (id[i] < 0) {
      out[i] = x[i];
      continue;
    }
    auto it = last.find(id[i]);
    out[i] = Symbol::num(it == last.end() ? 0 : i - it->second);
    last[id[i]] = i;
  }
  return out;
}

}  // namespace

ClassificationError::ClassificationError(std::size_t position, Char c)
    : std::invalid_argument("character " + describe_char(c) + " at position " + std::to_string(position) +
                            " is neither static nor a parameter"),
      position_(position),
      char_(c) {}

ValidityError::ValidityError(std::size_t position, const std::string& what)
    : std::invalid_argument("invalid pv-string at position " + std::to_string(position) + ": " + what),
      position_(position) {}

AlphabetSpec::AlphabetSpec(std::set<Char> statics, std::set<Char> params, bool params_auto)
    : statics_(std::move(statics)), params_(std::move(params)), params_auto_(params_auto) {
  for (Char c : params_) {
    if (statics_.count(c)) throw AlphabetError("character " + describe_char(c) + " is both static and a parameter");
  }
  for (Char c : statics_) {
    if (c > Symbol::kMaxChar) throw AlphabetError("static character out of range");
  }
}

AlphabetSpec AlphabetSpec::from_chars(std::string_view sigma, std::string_view pi) {
  std::u32string s = from_utf8(sigma), p = from_utf8(pi);
  return AlphabetSpec(std::set<Char>(s.begin(), s.end()), std::set<Char>(p.begin(), p.end()));
}

AlphabetSpec AlphabetSpec::auto_params(std::string_view sigma) {
  std::u32string s = from_utf8(sigma);
  return AlphabetSpec(std::set<Char>(s.begin(), s.end()), {}, true);
}

SymbolClass AlphabetSpec::classify(Char c) const {
  if (statics_.count(c)) return SymbolClass::Static;
  if (params_.count(c) || params_auto_) return SymbolClass::Param;
  return SymbolClass::Unknown;
}

void AlphabetSpec::set_name(Char c, std::string name) { names_[c] = std::move(name); }

std::string AlphabetSpec::name(Char c) const {
  auto it = names_.find(c);
  if (it != names_.end()) return it->second;
  return to_utf8(std::u32string(1, c));
}

PString::PString(std::u32string text, AlphabetSpec alphabet) : text_(std::move(text)), alphabet_(std::move(alphabet)) {
  for (std::size_t i = 0; i < text_.size(); ++i) {
    if (alphabet_.classify(text_[i]) == SymbolClass::Unknown) throw ClassificationError(i + 1, text_[i]);
  }
}

PString PString::from_utf8(std::string_view text, const AlphabetSpec& alphabet) {
  return PString(pdawg::from_utf8(text), alphabet);
}

PString PString::reversed() const {
  PString r = *this;
  std::reverse(r.text_.begin(), r.text_.end());
  return r;
}

PString PString::substr(std::size_t i, std::size_t j) const {
  PString r;
  r.alphabet_ = alphabet_;
  if (i >= 1 && i <= j && j <= text_.size()) r.text_ = text_.substr(i - 1, j - i + 1);
  return r;
}

std::string PString::utf8() const {
  if (alphabet_.names().empty()) return to_utf8(text_);
  std::string out;
  for (std::size_t i = 0; i < text_.size(); ++i) {
    if (i) out += ' ';
    out += alphabet_.name(text_[i]);
  }
  return out;
}

PvString PvString::checked(std::vector<Symbol> symbols) {
  std::size_t bad = 0;
  auto ids = decode_ids(symbols, bad);
  if (!ids) throw ValidityError(bad, "dangling back reference");
  if (encode_ids(symbols, *ids) != symbols) throw ValidityError(0, "round trip mismatch");
  return PvString(std::move(symbols));
}

PvString PvString::parse(std::string_view text) {
  std::vector<Symbol> syms;
  bool spaced = std::any_of(text.begin(), text.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
  if (spaced) {
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
      if (std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        syms.push_back(Symbol::num(std::stoull(tok)));
      } else {
        std::u32string cs = from_utf8(tok);
        if (cs.size() != 1) throw ValidityError(syms.size() + 1, "token '" + tok + "' is not a single character");
        syms.push_back(Symbol::chr(cs[0]));
      }
    }
  } else {
    for (Char c : from_utf8(text)) syms.push_back(c >= U'0' && c <= U'9' ? Symbol::num(c - U'0') : Symbol::chr(c));
  }
  return checked(std::move(syms));
}

std::string PvString::str() const { return str(AlphabetSpec{}); }

std::string PvString::str(const AlphabetSpec& alphabet) const {
  bool compact = std::all_of(syms_.begin(), syms_.end(), [&](Symbol s) {
    if (s.is_num()) return s.value() < 10;
    std::string n = alphabet.name(s.code());
    return from_utf8(n).size() == 1 && !(n[0] >= '0' && n[0] <= '9') && !std::isspace(static_cast<unsigned char>(n[0]));
  });
  std::string out;
  for (std::size_t i = 0; i < syms_.size(); ++i) {
    if (!compact && i) out += ' ';
    out += syms_[i].is_num() ? std::to_string(syms_[i].value()) : alphabet.name(syms_[i].code());
  }
  return out;
}

std::size_t PvStringHash::operator()(const PvString& x) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Symbol s : x) h = (h ^ s.key()) * 0x100000001b3ull;
  return h;
}

bool is_pv_string(std::span<const Symbol> symbols) {
  std::size_t bad = 0;
  auto ids = decode_ids(symbols, bad);
  return ids && std::ranges::equal(encode_ids(symbols, *ids), symbols);
}

PvString prev_encode(std::u32string_view text, const AlphabetSpec& alphabet) {
  std::vector<Symbol> out;
  out.reserve(text.size());
  std::unordered_map<Char, std::size_t> last;
  for (std::size_t i = 0; i < text.size(); ++i) {
    Char c = text[i];
    switch (alphabet.classify(c)) {
      case SymbolClass::Static:
        out.push_back(Symbol::chr(c));
        break;
      case SymbolClass::Param: {
        auto [it, fresh] = last.try_emplace(c, i);
        out.push_back(Symbol::num(fresh ? 0 : i - it->second));
        it->second = i;
        break;
      }
      case SymbolClass::Unknown:
        throw ClassificationError(i + 1, c);
    }
  }
  return PvString::unchecked(std::move(out));
}

PvString prev_encode(const PString& s) { return prev_encode(s.text(), s.alphabet()); }

PString prev_decode(const PvString& x, std::span<const Char> pool) {
  std::size_t bad = 0;
  auto ids = decode_ids(x.symbols(), bad);
  if (!ids) throw ValidityError(bad, "dangling back reference");
  std::set<Char> statics;
  for (Symbol s : x)
    if (s.is_static()) statics.insert(s.code());
  int chains = 0;
  for (int id : *ids) chains = std::max(chains, id + 1);
  if (static_cast<std::size_t>(chains) > pool.size())
    throw AlphabetError("parameter pool has " + std::to_string(pool.size()) + " names, " + std::to_string(chains) +
                        " needed");
  std::set<Char> params(pool.begin(), pool.end());
  if (params.size() != pool.size()) throw AlphabetError("parameter pool has duplicate names");
  AlphabetSpec alphabet(std::move(statics), std::move(params));
  std::u32string text(x.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) text[i] = (*ids)[i] < 0 ? x[i].code() : pool[(*ids)[i]];
  return PString(std::move(text), std::move(alphabet));
}

PString prev_decode(const PvString& x) {
  std::size_t bad = 0;
  auto ids = decode_ids(x.symbols(), bad);
  if (!ids) throw ValidityError(bad, "dangling back reference");
  int chains = 0;
  for (int id : *ids) chains = std::max(chains, id + 1);
  std::vector<Char> pool;
  for (int i = 0; i < chains; ++i) pool.push_back(0xE000 + i);
  PString plain = prev_decode(x, pool);
  AlphabetSpec alphabet = plain.alphabet();
  for (int i = 0; i < chains; ++i) alphabet.set_name(pool[i], "p" + std::to_string(i));
  return PString(plain.text(), std::move(alphabet));
}

PvString re_encode(std::span<const Symbol> x) {
  std::vector<Symbol> out(x.begin(), x.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = z_adjust(out[i], static_cast<std::int64_t>(i));
  return PvString::unchecked(std::move(out));
}

PvString slice(const PvString& w, std::size_t i, std::size_t j) {
  if (i < 1 || i > j || j > w.size()) return {};
  return re_encode(w.symbols().subspan(i - 1, j - i + 1));
}

PvString pv_reverse(const PvString& x) {
  std::size_t n = x.size();
  std::vector<Symbol> r(n, Symbol::num(0));
  for (std::size_t p = 1; p <= n; ++p) {
    Symbol s = x.at(p);
    if (s.is_static()) {
      r[n - p] = s;
    } else if (!s.is_zero()) {
      std::size_t v = s.value();
      r[n - (p - v)] = s;  // 1-based position n+1-(p-v)
    }
  }
  return PvString::unchecked(std::move(r));
}

std::uint64_t prec_min(std::span<const std::uint64_t> values) {
  if (values.empty()) throw std::invalid_argument("prec_min of an empty set");
  return *std::min_element(values.begin(), values.end(), prec_less);
}

std::uint64_t prec_max(std::span<const std::uint64_t> values) {
  if (values.empty()) throw std::invalid_argument("prec_max of an empty set");
  return *std::max_element(values.begin(), values.end(), prec_less);
}

bool p_match(const PString& s1, const PString& s2) { return prev_encode(s1) == prev_encode(s2); }

std::string to_utf8(std::u32string_view text) {
  std::string out;
  for (Char c : text) {
    if (c < 0x80) {
      out += static_cast<char>(c);
    } else if (c < 0x800) {
      out += static_cast<char>(0xC0 | (c >> 6));
      out += static_cast<char>(0x80 | (c & 0x3F));
    } else if (c < 0x10000) {
      out += static_cast<char>(0xE0 | (c >> 12));
      out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (c & 0x3F));
    } else {
      out += static_cast<char>(0xF0 | ((c >> 18) & 0x07));
      out += static_cast<char>(0x80 | ((c >> 12) & 0x3F));
      out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (c & 0x3F));
    }
  }
  return out;
}

// Malformed sequences decode byte by byte, so arbitrary binary input still
// maps to one character per byte.
std::u32string from_utf8(std::string_view text) {
  std::u32string out;
  std::size_t i = 0;
  while (i < text.size()) {
    auto b = static_cast<unsigned char>(text[i]);
    int len = b < 0x80 ? 1 : (b >> 5) == 0x6 ? 2 : (b >> 4) == 0xE ? 3 : (b >> 3) == 0x1E ? 4 : 0;
    bool ok = len > 0 && i + len <= text.size();
    Char c = len == 1 ? b : len == 2 ? (b & 0x1F) : len == 3 ? (b & 0x0F) : (b & 0x07);
    for (int k = 1; ok && k < len; ++k) {
      auto t = static_cast<unsigned char>(text[i + k]);
      if ((t & 0xC0) != 0x80) ok = false;
      c = (c << 6) | (t & 0x3F);
    }
    if (!ok) {
      out += static_cast<Char>(b);
      ++i;
    } else {
      out += c;
      i += len;
    }
  }
  return out;
}

}  // namespace pdawg
