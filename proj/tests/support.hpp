#pragma once

// Reference implementations written directly from the definitions, sharing
// no code with the library beyond the Symbol value type. Raw strings are
// std::u32string; `params` says which characters are parameters.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pdawg/pdawg.hpp"

namespace ref {

using Chars = std::u32string;
using Params = std::set<char32_t>;

// Static characters are stored as -(code + 1); parameters as their value.
using Enc = std::vector<long long>;

inline Enc prev(const Chars& s, const Params& params) {
  Enc out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!params.count(s[i])) {
      out.push_back(-static_cast<long long>(s[i]) - 1);
      continue;
    }
    long long v = 0;
    for (std::size_t j = i; j-- > 0;) {
      if (s[j] == s[i]) {
        v = static_cast<long long>(i - j);
        break;
      }
    }
    out.push_back(v);
  }
  return out;
}

inline pdawg::Symbol to_symbol(long long e) {
  return e < 0 ? pdawg::Symbol::chr(static_cast<char32_t>(-e - 1)) : pdawg::Symbol::num(static_cast<std::uint64_t>(e));
}

inline std::vector<pdawg::Symbol> to_symbols(const Enc& e) {
  std::vector<pdawg::Symbol> out;
  for (long long x : e) out.push_back(to_symbol(x));
  return out;
}

/// End positions (1-based) of every p-factor, by encoding each raw window.
inline std::map<Enc, std::set<std::size_t>> factors(const Chars& s, const Params& params) {
  std::map<Enc, std::set<std::size_t>> out;
  for (std::size_t e = 0; e <= s.size(); ++e) out[{}].insert(e);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i; j < s.size(); ++j) out[prev(s.substr(i, j - i + 1), params)].insert(j + 1);
  return out;
}

/// The PDAWG of s straight from its definition, in the library's canonical
/// shape: nodes named by (longest length, smallest end position).
inline pdawg::CanonicalPdawg pdawg_by_definition(const Chars& s, const Params& params) {
  auto fac = factors(s, params);
  std::map<std::set<std::size_t>, std::vector<Enc>> classes;
  for (const auto& [x, ends] : fac) classes[ends].push_back(x);
  auto name_of = [&](const Enc& x) {
    const auto& ends = fac.at(x);
    std::size_t longest = 0;
    for (const auto& m : classes.at(ends)) longest = std::max(longest, m.size());
    return pdawg::CanonicalNode::Name{static_cast<long long>(longest), static_cast<long long>(*ends.begin())};
  };

  pdawg::CanonicalPdawg g;
  for (const auto& [ends, members] : classes) {
    const Enc* mx = &members[0];
    const Enc* mn = &members[0];
    for (const auto& m : members) {
      if (m.size() > mx->size()) mx = &m;
      if (m.size() < mn->size()) mn = &m;
    }
    pdawg::CanonicalNode node;
    node.name = name_of(*mx);
    // Edges extend the longest member by one raw character at each end position.
    std::map<std::uint32_t, std::pair<pdawg::CanonicalNode::Name, bool>> edges;
    for (std::size_t e : ends) {
      if (e >= s.size()) continue;
      Enc y = prev(s.substr(e - mx->size(), mx->size() + 1), params);
      pdawg::Symbol label = to_symbol(y.back());
      auto tn = name_of(y);
      edges[label.key()] = {tn, tn.first == static_cast<long long>(mx->size()) + 1};
    }
    for (const auto& [k, t] : edges) node.edges.emplace_back(k, t.first, t.second);
    if (!mn->empty()) {
      // Drop the first symbol of the shortest member and re-encode.
      std::size_t e = *ends.begin();
      node.slink = name_of(prev(s.substr(e - mn->size() + 1, mn->size() - 1), params));
    }
    g.nodes.push_back(std::move(node));
  }
  std::sort(g.nodes.begin(), g.nodes.end());
  return g;
}

/// Occurrences by scanning every window of the raw text.
inline std::vector<std::size_t> scan(const Chars& t, const Chars& p, const Params& params) {
  std::vector<std::size_t> out;
  if (p.empty()) {
    for (std::size_t e = 0; e <= t.size(); ++e) out.push_back(e);
    return out;
  }
  Enc want = prev(p, params);
  for (std::size_t e = p.size(); e <= t.size(); ++e)
    if (prev(t.substr(e - p.size(), p.size()), params) == want) out.push_back(e);
  return out;
}

/// Classic suffix automaton (all characters static): state and edge counts.
struct SamCounts {
  std::size_t states = 0, edges = 0;
};

inline SamCounts suffix_automaton(const Chars& s) {
  struct St {
    int len = 0, link = -1;
    std::map<char32_t, int> next;
  };
  std::vector<St> st(1);
  int last = 0;
  for (char32_t c : s) {
    int cur = static_cast<int>(st.size());
    st.push_back({st[last].len + 1, -1, {}});
    int p = last;
    while (p != -1 && !st[p].next.count(c)) {
      st[p].next[c] = cur;
      p = st[p].link;
    }
    if (p == -1) {
      st[cur].link = 0;
    } else {
      int q = st[p].next[c];
      if (st[p].len + 1 == st[q].len) {
        st[cur].link = q;
      } else {
        int clone = static_cast<int>(st.size());
        st.push_back({st[p].len + 1, st[q].link, st[q].next});
        while (p != -1 && st[p].next[c] == q) {
          st[p].next[c] = clone;
          p = st[p].link;
        }
        st[q].link = st[cur].link = clone;
      }
    }
    last = cur;
  }
  SamCounts out{st.size(), 0};
  for (const auto& x : st) out.edges += x.next.size();
  return out;
}

/// Number of distinct residual languages of the suffix set of prev(s): the
/// state count of a minimal automaton for it, counting every state (no
/// dead state, since the trie has none).
inline std::size_t residual_count(const Chars& s, const Params& params) {
  std::set<Enc> suffixes;
  for (std::size_t i = 0; i <= s.size(); ++i) suffixes.insert(prev(s.substr(i), params));
  std::set<Enc> prefixes;
  for (const auto& x : suffixes)
    for (std::size_t k = 0; k <= x.size(); ++k) prefixes.insert(Enc(x.begin(), x.begin() + static_cast<long>(k)));
  std::set<std::set<Enc>> residuals;
  for (const auto& u : prefixes) {
    std::set<Enc> r;
    for (const auto& x : suffixes)
      if (x.size() >= u.size() && std::equal(u.begin(), u.end(), x.begin())) r.insert(Enc(x.begin() + static_cast<long>(u.size()), x.end()));
    residuals.insert(std::move(r));
  }
  return residuals.size();
}

inline Chars random_chars(std::mt19937_64& rng, const Chars& alphabet, std::size_t len) {
  Chars s;
  for (std::size_t i = 0; i < len; ++i) s += alphabet[rng() % alphabet.size()];
  return s;
}

inline void all_strings(const Chars& alphabet, std::size_t max_len, std::vector<Chars>& out) {
  std::vector<Chars> layer{Chars()};
  out.push_back(Chars());
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Chars> next;
    for (const auto& s : layer)
      for (char32_t c : alphabet) next.push_back(s + c);
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
}

}  // namespace ref
