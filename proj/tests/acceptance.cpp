// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "pdawg/matcher.hpp"
#include "pdawg/oracle.hpp"
#include "pdawg/pdawg.hpp"
#include "pdawg/pstree.hpp"
#ifdef PDAWG_FAST_RTL
#include "pdawg/rtl.hpp"
#endif
#include "support.hpp"

using namespace pdawg;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Result {
  bool pass = true;
  std::string note;
  void fail(const std::string& why) {
    if (pass) note = why;
    pass = false;
  }
};

struct Instance {
  std::u32string text;
  const AlphabetSpec* alphabet;
};

const AlphabetSpec kSmall = AlphabetSpec::from_chars("a", "xy");
const AlphabetSpec kWide = AlphabetSpec::from_chars("ab", "xyz");

std::vector<Instance> exhaustive_corpus() {
  std::vector<Instance> out;
  std::vector<std::u32string> a, b;
  ref::all_strings(U"axy", 8, a);
  ref::all_strings(U"abxyz", 6, b);
  for (auto& s : a) out.push_back({std::move(s), &kSmall});
  for (auto& s : b) out.push_back({std::move(s), &kWide});
  return out;
}

std::string show(const Instance& in) { return "\"" + to_utf8(in.text) + "\""; }

std::size_t distinct_params(const PString& s) {
  std::set<Char> p;
  for (Char c : s.text())
    if (s.alphabet().classify(c) == SymbolClass::Param) p.insert(c);
  return p.size();
}

// Random p-strings over a random share of a fixed alphabet.
const AlphabetSpec kRandom = AlphabetSpec::from_chars("abcd", "uvwxyz");

PString random_pstring(std::mt19937_64& rng, std::size_t n) {
  const std::u32string statics = U"abcd", params = U"uvwxyz";
  std::size_t ns = rng() % 5, np = 1 + rng() % 6;
  std::u32string pool = statics.substr(0, ns) + params.substr(0, np);
  return PString(ref::random_chars(rng, pool, n), kRandom);
}

Result criterion1() {
  Result r;
  auto t0 = Clock::now();
  auto enc = [](const char* s, const char* sigma, const char* pi) {
    return prev_encode(PString::from_utf8(s, AlphabetSpec::from_chars(sigma, pi))).str();
  };
  if (enc("xaxay", "a", "xy") != "0a2a0") r.fail("prev(xaxay) = " + enc("xaxay", "a", "xy"));
  if (enc("uvvauvb", "ab", "uv") != "001a43b") r.fail("prev(uvvauvb) = " + enc("uvvauvb", "ab", "uv"));
  std::string rev = pv_reverse(PvString::parse("0a20")).str();
  if (rev != "00a2") r.fail("pv_reverse(0a20) = " + rev);
  double s = seconds_since(t0);
  if (s >= 1.0) r.fail("took " + std::to_string(s) + " s");
  r.note = r.pass ? "0a2a0, 001a43b, 00a2" : r.note;
  return r;
}

Result criterion2(const std::vector<Instance>& corpus) {
  Result r;
  std::size_t steps = 0;
  for (const auto& in : corpus) {
    PvString w = prev_encode(PString(in.text, *in.alphabet));
    OnlineBuilder b;
    for (std::size_t i = 1; i <= w.size(); ++i) {
      b.append(w.at(i));
      ++steps;
      auto d = describe_difference(canonical_form(b.pdawg()), canonical_form(build_oracle_pdawg(slice(w, 1, i))));
      if (!d.empty()) {
        r.fail(show(in) + " prefix " + std::to_string(i) + ": " + d);
        return r;
      }
    }
  }
  r.note = std::to_string(corpus.size()) + " texts, " + std::to_string(steps) + " prefix steps";
  return r;
}

Result criterion3(const std::vector<Instance>& corpus) {
  Result r;
  auto check = [&](const PString& s, const std::string& what) {
    const std::size_t n = s.size();
    if (n < 3) return;
    auto st = build_online(s).pdawg.stats();
    if (st.nodes > 2 * n - 1) r.fail(what + ": nodes " + std::to_string(st.nodes));
    if (st.edges > 3 * n - 4) r.fail(what + ": edges " + std::to_string(st.edges));
  };
  for (const auto& in : corpus) check(PString(in.text, *in.alphabet), show(in));
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    PString s = random_pstring(rng, 1 + rng() % 300);
    check(s, "random " + s.utf8());
  }
  const AlphabetSpec abc = AlphabetSpec::from_chars("abc", "");
  for (std::size_t n = 3; n <= 100; ++n) {
    auto nodes = build_online(PString(U"a" + std::u32string(n - 1, U'b'), abc)).pdawg.stats().nodes;
    auto edges = build_online(PString(U"a" + std::u32string(n - 2, U'b') + U"c", abc)).pdawg.stats().edges;
    if (nodes != 2 * n - 1) r.fail("a b^" + std::to_string(n - 1) + ": nodes " + std::to_string(nodes));
    if (edges != 3 * n - 4) r.fail("a b^" + std::to_string(n - 2) + " c: edges " + std::to_string(edges));
  }
  if (r.pass) r.note = "bounds hold on " + std::to_string(corpus.size() + 1000) + " texts; equality on both families for n = 3..100";
  return r;
}

Result criterion4() {
  Result r;
  std::ostringstream os;
  for (std::size_t k = 2; k <= 12; ++k) {
    PString t = t_family(k);
    std::size_t states = build_psauto(t).states.size();
    std::size_t nodes = build_online(t).pdawg.stats().nodes;
    if (states < k * (k - 1) / 2) r.fail("k=" + std::to_string(k) + ": " + std::to_string(states) + " states");
    if (nodes > 2 * (4 * k) - 1) r.fail("k=" + std::to_string(k) + ": " + std::to_string(nodes) + " PDAWG nodes");
    if (k == 2 || k == 12) os << (k == 2 ? "" : ", ") << "k=" << k << ": " << states << " states vs " << nodes << " nodes";
  }
  if (r.pass) r.note = os.str();
  return r;
}

// Occurrences of every distinct factor of a longer text, from sorted suffix
// encodings: the factors with a given prefix form a contiguous run.
struct SuffixOracle {
  std::vector<ref::Enc> suffix;  // prev of each suffix, index = start - 1
  std::vector<std::size_t> order;
  std::vector<std::size_t> lcp;  // between order[r-1] and order[r]

  SuffixOracle(const std::u32string& t, const ref::Params& params) {
    for (std::size_t i = 0; i < t.size(); ++i) suffix.push_back(ref::prev(t.substr(i), params));
    order.resize(t.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return suffix[a] < suffix[b]; });
    lcp.assign(order.size(), 0);
    for (std::size_t r = 1; r < order.size(); ++r) {
      const auto &a = suffix[order[r - 1]], &b = suffix[order[r]];
      std::size_t l = 0;
      while (l < a.size() && l < b.size() && a[l] == b[l]) ++l;
      lcp[r] = l;
    }
  }

  bool contains(const ref::Enc& p) const {
    auto it = std::lower_bound(order.begin(), order.end(), p, [&](std::size_t i, const ref::Enc& x) { return suffix[i] < x; });
    if (it == order.end()) return false;
    const auto& s = suffix[*it];
    return s.size() >= p.size() && std::equal(p.begin(), p.end(), s.begin());
  }
};

bool check_text_matching(const PString& t, std::mt19937_64& rng, std::size_t non_factors, Result& r, std::size_t& queries) {
  const auto& params = t.alphabet().params();
  OccurrenceIndex idx(build_online(t).pdawg);
  const Pdawg& g = idx.pdawg();
  const std::u32string& raw = t.text();
  const std::size_t n = raw.size();
  SuffixOracle so(raw, params);

  // Every distinct factor: rank r, length m > lcp[r].
  for (std::size_t rk = 0; rk < n; ++rk) {
    const std::size_t start = so.order[rk];
    const auto& suf = so.suffix[start];
    for (std::size_t m = so.lcp[rk] + 1; m <= suf.size(); ++m) {
      std::vector<std::size_t> want;
      for (std::size_t q = rk; q < n && (q == rk || so.lcp[q] >= m); ++q)
        if (so.suffix[so.order[q]].size() >= m) want.push_back(so.order[q] + m);
      std::sort(want.begin(), want.end());
      PString p = t.substr(start + 1, start + m);
      ++queries;
      if (!p_match_query(g, p)) {
        r.fail("factor " + p.utf8() + " of " + t.utf8() + " rejected");
        return false;
      }
      if (idx.locate(p) != want) {
        r.fail("locate " + p.utf8() + " in " + t.utf8());
        return false;
      }
      // A sample of factors against the direct window scan as well.
      if (rng() % 2000 == 0 && scan_occurrences(t, p) != want) {
        r.fail("scan disagrees on " + p.utf8() + " in " + t.utf8());
        return false;
      }
    }
  }

  // Random non-factors.
  std::u32string pool;
  for (Char c : t.alphabet().statics()) pool += c;
  for (Char c : params) pool += c;
  std::size_t found = 0, tries = 0;
  while (found < non_factors && tries < 200 * non_factors) {
    ++tries;
    std::u32string p = ref::random_chars(rng, pool, 1 + rng() % std::max<std::size_t>(1, std::min<std::size_t>(n + 2, 14)));
    if (so.contains(ref::prev(p, params))) continue;
    ++found;
    ++queries;
    PString ps(p, t.alphabet());
    if (p_match_query(g, ps) || !idx.locate(ps).empty()) {
      r.fail("non-factor " + ps.utf8() + " matched in " + t.utf8());
      return false;
    }
    if (found % 10 == 0 && !scan_occurrences(t, ps).empty()) {
      r.fail("generated pattern " + ps.utf8() + " is a factor of " + t.utf8());
      return false;
    }
  }
  return true;
}

std::vector<PString> criterion5_random_texts() {
  std::mt19937_64 rng(5005);
  std::vector<PString> out;
  for (int i = 0; i < 200; ++i) out.push_back(random_pstring(rng, 1 + rng() % 500));
  return out;
}

Result criterion5(const std::vector<Instance>& corpus, const std::vector<PString>& texts) {
  Result r;
  std::mt19937_64 rng(55);
  std::size_t queries = 0;
  auto t0 = Clock::now();
  for (const auto& in : corpus) {
    PString t(in.text, *in.alphabet);
    OccurrenceIndex idx(build_online(t).pdawg);
    PvString w = prev_encode(t);
    FactorTable fac = enumerate_factors(w);
    for (const auto& [x, ends] : fac) {
      ++queries;
      if (!p_match_query(idx.pdawg(), x) || idx.locate(x) != ends) {
        r.fail("factor " + x.str() + " of " + show(in));
        return r;
      }
      // One-symbol extensions that are not factors.
      std::vector<Symbol> cand{Symbol::num(0)};
      for (std::size_t v = 1; v <= x.size(); ++v) cand.push_back(Symbol::num(v));
      for (Char c : in.alphabet->statics()) cand.push_back(Symbol::chr(c));
      for (Symbol c : cand) {
        std::vector<Symbol> y(x.begin(), x.end());
        y.push_back(c);
        PvString py = re_encode(y);
        if (fac.count(py)) continue;
        ++queries;
        if (p_match_query(idx.pdawg(), py) || !idx.locate(py).empty() || !scan_occurrences(w, py).empty()) {
          r.fail("non-factor " + py.str() + " of " + show(in));
          return r;
        }
      }
    }
  }
  for (const auto& t : texts)
    if (!check_text_matching(t, rng, 1000, r, queries)) return r;
  double s = seconds_since(t0);
  r.note = std::to_string(queries) + " queries, 0 mismatches, " + std::to_string(static_cast<int>(s)) + " s";
  if (s > 300) r.fail("took " + std::to_string(s) + " s");
  return r;
}

Result criterion6(const std::vector<Instance>& corpus) {
  Result r;
  auto one = [&](const PString& t, const std::string& what) {
    Pdawg g = build_online(t).pdawg;
    PSTree tree = pstree_from_naive(build_pstree_naive(t.reversed()));
    weiner_links(tree);
    DualityReport rep = verify_duality(g, tree);
    if (!rep.all()) r.fail(what + ": " + rep.json());
    std::size_t ex = 0, im = 0;
    for (const auto& v : tree.nodes) v.weiner.for_each([&](Symbol, const WeinerLink& l) { (l.is_explicit ? ex : im)++; });
    PdawgStats st = g.stats();
    if (ex != st.primary_edges || im != st.secondary_edges) r.fail(what + ": link counts differ from edge counts");
    if (tree.nodes.size() != st.nodes) r.fail(what + ": node counts differ");
  };
  one(PString::from_utf8("yayaxab", AlphabetSpec::from_chars("ab", "xy")), "yayaxab");
  for (const auto& in : corpus) {
    if (!r.pass) break;
    one(PString(in.text, *in.alphabet), show(in));
  }
  if (r.pass) r.note = "yayaxab/baxayay and " + std::to_string(corpus.size()) + " texts";
  return r;
}

Result criterion7(const std::vector<Instance>& corpus) {
  Result r;
  for (const auto& in : corpus) {
    PString t(in.text, *in.alphabet);
    Pdawg off = offline_build_pdawg(pstree_from_naive(build_pstree_naive(t.reversed())));
    auto d = describe_difference(canonical_form(off), canonical_form(build_online(t).pdawg));
    if (!d.empty()) {
      r.fail(show(in) + ": " + d);
      return r;
    }
  }
  r.note = std::to_string(corpus.size()) + " texts isomorphic";
  return r;
}

Result criterion8(const std::vector<Instance>& corpus) {
  Result r;
#ifdef PDAWG_FAST_RTL
  std::size_t steps = 0, redirections = 0, rehangs = 0, max_red = 0;
  for (const auto& in : corpus) {
    PString s(in.text, *in.alphabet);
    PvString ps = prev_encode(s);
    RtlBuilder b(ps);
    try {
      while (!b.done()) {
        b.step();
        ++steps;
        if (tree_signature(b.tree()) != tree_signature(build_pstree_naive(slice(ps, b.start(), ps.size())))) {
          r.fail(show(in) + ": tree differs after inserting suffix " + std::to_string(b.start()));
          return r;
        }
      }
    } catch (const std::exception& e) {
      r.fail(show(in) + ": " + e.what());
      return r;
    }
    max_red = std::max(max_red, b.counters().max_redirections_per_step);
    redirections += b.counters().redirections;
    rehangs += b.counters().rehangs;
    auto d = describe_difference(canonical_form(upward_links_to_pdawg(b.tree())), canonical_form(build_online(s.reversed()).pdawg));
    if (!d.empty()) {
      r.fail(show(in) + ": " + d);
      return r;
    }
  }
  if (max_red > 1) r.fail("a step redirected " + std::to_string(max_red) + " upward links");
  if (r.pass)
    r.note = std::to_string(steps) + " steps, max " + std::to_string(max_red) + " redirection per step (" + std::to_string(redirections) +
             " redirections, " + std::to_string(rehangs) + " re-hung links in total)";
#else
  (void)corpus;
  r.fail("built without PDAWG_FAST_RTL");
#endif
  return r;
}

Result criterion9(const std::vector<Instance>& corpus, const std::vector<PString>& texts) {
  Result r;
  std::size_t worst_num = 0, worst_den = 1;
  auto check = [&](const PString& t, const std::string& what) {
    auto b = build_online(t);
    std::size_t bound = (distinct_params(t) + 1) * t.size();
    if (b.stats.redirected_secondary_edges > bound) r.fail(what + ": " + std::to_string(b.stats.redirected_secondary_edges) + " redirections");
    if (bound && b.stats.redirected_secondary_edges * worst_den > worst_num * bound) {
      worst_num = b.stats.redirected_secondary_edges;
      worst_den = bound;
    }
  };
  for (const auto& in : corpus) check(PString(in.text, *in.alphabet), show(in));
  for (const auto& t : texts) check(t, t.utf8());

  std::mt19937_64 rng(99);
  const AlphabetSpec a = AlphabetSpec::from_chars("ab", "wxyz");
  PString big(ref::random_chars(rng, U"abwxyz", 100000), a);
  auto t0 = Clock::now();
  auto b = build_online(big);
  double s = seconds_since(t0);
  if (s >= 5.0) r.fail("n = 100000 build took " + std::to_string(s) + " s");
  if (b.stats.redirected_secondary_edges > 5 * big.size()) r.fail("n = 100000: work bound exceeded");
  char buf[160];
  std::snprintf(buf, sizeof buf, "worst ratio %zu/%zu of the (|Pi|+1)n bound; n=1e5, |Pi|=4 built in %.2f s (%zu nodes)", worst_num, worst_den, s,
                b.pdawg.stats().nodes);
  if (r.pass) r.note = buf;
  return r;
}

}  // namespace

int main() {
  auto t0 = Clock::now();
  const auto corpus = exhaustive_corpus();
  const auto texts = criterion5_random_texts();
  bool all = true;
  auto report = [&](int id, const char* name, const std::function<Result()>& run) {
    auto t = Clock::now();
    Result r;
    try {
      r = run();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    all = all && r.pass;
    std::printf("criterion %d %-28s %s  (%.1f s) %s\n", id, name, r.pass ? "PASS" : "FAIL", seconds_since(t), r.note.c_str());
    std::fflush(stdout);
  };
  report(1, "encoding ground truth", [] { return criterion1(); });
  report(2, "oracle isomorphism", [&] { return criterion2(corpus); });
  report(3, "size bounds", [&] { return criterion3(corpus); });
  report(4, "quadratic separation", [] { return criterion4(); });
  report(5, "matching", [&] { return criterion5(corpus, texts); });
  report(6, "duality", [&] { return criterion6(corpus); });
  report(7, "offline construction", [&] { return criterion7(corpus); });
  report(8, "right-to-left construction", [&] { return criterion8(corpus); });
  report(9, "work bounds", [&] { return criterion9(corpus, texts); });
  std::printf("%s in %.1f s\n", all ? "all criteria passed" : "some criteria FAILED", seconds_since(t0));
  return all ? 0 : 1;
}
