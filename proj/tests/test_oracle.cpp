#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pdawg/oracle.hpp"
#include "support.hpp"

using namespace pdawg;

namespace {

const AlphabetSpec kAxy = AlphabetSpec::from_chars("a", "xy");

PvString pv(const char* s) { return PvString::parse(s); }
std::vector<std::size_t> V(std::initializer_list<std::size_t> v) { return v; }

// Node count of the compacted trie of the suffix set, from the definition:
// the root, every suffix, and every prefix with two or more continuations.
std::size_t compacted_nodes(const std::u32string& s, const ref::Params& params) {
  std::set<ref::Enc> suffixes;
  for (std::size_t i = 0; i <= s.size(); ++i) suffixes.insert(ref::prev(s.substr(i), params));
  std::map<ref::Enc, std::set<long long>> next;
  for (const auto& x : suffixes)
    for (std::size_t k = 0; k < x.size(); ++k) next[ref::Enc(x.begin(), x.begin() + static_cast<long>(k))].insert(x[k]);
  std::size_t count = 0;
  std::set<ref::Enc> prefixes;
  for (const auto& x : suffixes)
    for (std::size_t k = 0; k <= x.size(); ++k) prefixes.insert(ref::Enc(x.begin(), x.begin() + static_cast<long>(k)));
  for (const auto& p : prefixes)
    if (p.empty() || suffixes.count(p) || next[p].size() >= 2) ++count;
  return count;
}

}  // namespace

TEST_CASE("rpos on the worked example") {
  PvString w = pv("0a2a0");
  CHECK(rpos(w, pv("a")) == V({2, 4}));
  CHECK(rpos(w, pv("0a")) == V({2, 4}));
  CHECK(rpos(w, pv("a0")) == V({3, 5}));
  CHECK(rpos(w, pv("0a0")) == V({5}));
  CHECK(rpos(w, PvString{}) == V({0, 1, 2, 3, 4, 5}));
  PvString w4 = pv("0a2a");
  CHECK(rpos(w4, pv("a0")) == V({3}));
  CHECK(rpos(w4, pv("0a2")) == V({3}));
}

TEST_CASE("factor table matches the reference") {
  std::vector<std::u32string> all;
  ref::all_strings(U"axy", 7, all);
  for (const auto& s : all) {
    auto want = ref::factors(s, kAxy.params());
    FactorTable got = enumerate_factors(prev_encode(PString(s, kAxy)));
    REQUIRE(got.size() == want.size());
    for (const auto& [x, ends] : want) {
      auto it = got.find(PvString::checked(ref::to_symbols(x)));
      REQUIRE(it != got.end());
      REQUIRE(std::set<std::size_t>(it->second.begin(), it->second.end()) == ends);
    }
  }
}

TEST_CASE("PSTrie") {
  PSTrie t = build_pstrie(PString::from_utf8("xaxay", kAxy));
  CHECK(t.nodes.size() == ref::factors(U"xaxay", kAxy.params()).size());
  // Distinct paths for a and 0a.
  const auto& root = t.nodes[t.root];
  CHECK(root.children.count(Symbol::chr(U'a')) == 1);
  CHECK(root.children.count(Symbol::num(0)) == 1);
  std::size_t suffix_nodes = 0;
  for (const auto& n : t.nodes) suffix_nodes += n.is_suffix;
  CHECK(suffix_nodes == 6);  // five suffixes plus ε
  CHECK(build_pstrie(PString(U"", kAxy)).nodes.size() == 1);
}

TEST_CASE("oracle PDAWG of 0a2a0") {
  OraclePdawg g = build_oracle_pdawg(pv("0a2a0"));
  auto a = g.class_of(pv("a"));
  REQUIRE(a);
  CHECK(g.class_of(pv("0a")) == a);
  CHECK(g.class_of(pv("a0")) != g.class_of(pv("0a0")));
  // Some node is not reachable from the source by edges.
  std::vector<bool> seen(g.classes.size());
  std::vector<std::size_t> stack{g.source};
  seen[g.source] = true;
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    for (const auto& e : g.classes[u].edges)
      if (!seen[e.target]) seen[e.target] = true, stack.push_back(e.target);
  }
  CHECK(std::count(seen.begin(), seen.end(), false) > 0);
}

TEST_CASE("oracle PDAWG of a single static symbol") {
  OraclePdawg g = build_oracle_pdawg(pv("a"));
  CHECK(g.classes.size() == 2);
  CHECK(g.edge_count() == 1);
}

TEST_CASE("oracle PDAWG equals the reference definition") {
  std::vector<std::u32string> all;
  ref::all_strings(U"axy", 7, all);
  for (const auto& s : all) {
    auto got = canonical_form(build_oracle_pdawg(prev_encode(PString(s, kAxy))));
    auto want = ref::pdawg_by_definition(s, kAxy.params());
    INFO(to_utf8(s));
    REQUIRE(describe_difference(got, want) == "");
  }
  const AlphabetSpec wide = AlphabetSpec::from_chars("ab", "xyz");
  std::mt19937_64 rng(3);
  for (int it = 0; it < 200; ++it) {
    auto s = ref::random_chars(rng, U"abxyz", 1 + rng() % 25);
    INFO(to_utf8(s));
    REQUIRE(describe_difference(canonical_form(build_oracle_pdawg(prev_encode(PString(s, wide)))),
                                ref::pdawg_by_definition(s, wide.params())) == "");
  }
}

TEST_CASE("oracle PDAWG stays within the size bounds") {
  const AlphabetSpec wide = AlphabetSpec::from_chars("ab", "xyz");
  std::mt19937_64 rng(17);
  for (int it = 0; it < 200; ++it) {
    std::size_t n = 3 + rng() % 58;
    auto g = build_oracle_pdawg(prev_encode(PString(ref::random_chars(rng, U"abxyz", n), wide)));
    REQUIRE(g.classes.size() <= 2 * n - 1);
    REQUIRE(g.edge_count() <= 3 * n - 4);
  }
}

TEST_CASE("PSAuto is the minimal suffix automaton") {
  const AlphabetSpec wide = AlphabetSpec::from_chars("ab", "xyz");
  std::vector<std::u32string> all;
  ref::all_strings(U"abxy", 6, all);
  for (const auto& s : all) {
    PSAuto a = build_psauto(PString(s, wide));
    REQUIRE(a.states.size() == ref::residual_count(s, wide.params()));
  }
  // All static: the classic suffix automaton.
  const AlphabetSpec st = AlphabetSpec::from_chars("abc", "");
  for (const char32_t* s : {U"ab", U"abcbc", U"abbb", U"aabab"}) {
    CHECK(build_psauto(PString(s, st)).states.size() == ref::suffix_automaton(s).states);
  }
}

TEST_CASE("PSAuto accepts exactly the suffixes") {
  PString t = PString::from_utf8("xaxay", kAxy);
  PSAuto a = build_psauto(t);
  auto fac = ref::factors(t.text(), kAxy.params());
  std::set<ref::Enc> suffixes;
  for (std::size_t i = 0; i <= t.size(); ++i) suffixes.insert(ref::prev(t.text().substr(i), kAxy.params()));
  for (const auto& [x, ends] : fac) {
    auto syms = ref::to_symbols(x);
    CHECK(a.accepts(syms) == (suffixes.count(x) > 0));
  }
}

TEST_CASE("PSAuto of T_k grows quadratically") {
  for (std::size_t k = 2; k <= 7; ++k) {
    PString t = t_family(k);
    CHECK(t.size() == 4 * k);
    CHECK(build_psauto(t).states.size() >= k * (k - 1) / 2);
  }
  CHECK(build_psauto(t_family(4)).states.size() >= 6);
}

TEST_CASE("naive PSTree") {
  const AlphabetSpec ab = AlphabetSpec::from_chars("ab", "xy");
  NaivePSTree t = build_pstree_naive(PString::from_utf8("baxayay", ab));
  CHECK(t.nodes.size() == compacted_nodes(U"baxayay", ab.params()));
  CHECK(build_pstree_naive(PString(U"", ab)).nodes.size() == 1);

  std::mt19937_64 rng(23);
  for (int it = 0; it < 200; ++it) {
    auto s = ref::random_chars(rng, U"abxy", rng() % 40);
    PString p(s, ab);
    NaivePSTree tree = build_pstree_naive(p);
    REQUIRE(tree.nodes.size() == compacted_nodes(s, ab.params()));
    PSTrie expanded = decompact(tree);
    PSTrie trie = build_pstrie(p);
    REQUIRE(expanded.nodes.size() == trie.nodes.size());
    // Same labelled shape: walk both in lockstep.
    std::vector<std::pair<std::size_t, std::size_t>> stack{{expanded.root, trie.root}};
    while (!stack.empty()) {
      auto [u, v] = stack.back();
      stack.pop_back();
      REQUIRE(expanded.nodes[u].is_suffix == trie.nodes[v].is_suffix);
      REQUIRE(expanded.nodes[u].children.size() == trie.nodes[v].children.size());
      for (const auto& [c, x] : expanded.nodes[u].children) {
        auto it = trie.nodes[v].children.find(c);
        REQUIRE(it != trie.nodes[v].children.end());
        stack.emplace_back(x, it->second);
      }
    }
  }
}

TEST_CASE("scan_occurrences") {
  auto P = [](const char* s) { return PString::from_utf8(s, kAxy); };
  CHECK(scan_occurrences(P("xaxay"), P("ya")) == V({2, 4}));
  CHECK(scan_occurrences(P("xaxay"), P("xaxay")) == V({5}));
  CHECK(scan_occurrences(P("xaxay"), P("yaxa")).empty());

  std::mt19937_64 rng(29);
  for (int it = 0; it < 300; ++it) {
    auto t = ref::random_chars(rng, U"axy", 1 + rng() % 20);
    auto p = ref::random_chars(rng, U"axy", 1 + rng() % 4);
    auto want = ref::scan(t, p, kAxy.params());
    REQUIRE(scan_occurrences(PString(t, kAxy), PString(p, kAxy)) == want);
    REQUIRE(scan_occurrences(prev_encode(PString(t, kAxy)), prev_encode(PString(p, kAxy))) == want);
  }
}
