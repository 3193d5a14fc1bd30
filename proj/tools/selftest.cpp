#include "selftest.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "pdawg/matcher.hpp"
#include "pdawg/oracle.hpp"
#include "pdawg/pdawg.hpp"
#include "pdawg/pstree.hpp"
#ifdef PDAWG_FAST_RTL
#include "pdawg/rtl.hpp"
#endif

namespace pdawg_cli {

using namespace pdawg;

namespace {

// Returns an empty string when the property holds.
using Check = std::function<std::string(const PString&)>;

struct Property {
  std::string name;
  Check check;
};

struct Corpus {
  AlphabetSpec alphabet;
  std::vector<std::u32string> inputs;
};

void all_strings(const std::u32string& chars, std::size_t max_len, std::vector<std::u32string>& out) {
  std::vector<std::u32string> layer{U""};
  out.push_back(U"");
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::u32string> next;
    for (const auto& s : layer)
      for (char32_t c : chars) next.push_back(s + c);
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
}

std::vector<Corpus> corpora(const SelftestOptions& opt) {
  std::vector<Corpus> out;
  Corpus small{AlphabetSpec::from_chars("a", "xy"), {}};
  all_strings(U"axy", opt.max_len, small.inputs);
  out.push_back(std::move(small));

  Corpus wide{AlphabetSpec::from_chars("ab", "xyz"), {}};
  all_strings(U"abxyz", std::min<std::size_t>(opt.max_len, 4), wide.inputs);
  std::mt19937_64 rng(opt.seed);
  const std::u32string chars = U"abxyz";
  for (int i = 0; i < 100; ++i) {
    std::size_t len = 1 + rng() % (8 * std::max<std::size_t>(opt.max_len, 1));
    std::u32string s;
    for (std::size_t j = 0; j < len; ++j) s += chars[rng() % chars.size()];
    wide.inputs.push_back(std::move(s));
  }
  out.push_back(std::move(wide));
  return out;
}

std::u32string minimize_witness(std::u32string s, const AlphabetSpec& a, const Check& check) {
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
      std::u32string t = s.substr(0, i) + s.substr(i + 1);
      if (!check(PString(t, a)).empty()) {
        s = std::move(t);
        shrunk = true;
        break;
      }
    }
  }
  return s;
}

std::string iso_diff(const Pdawg& a, const Pdawg& b) { return describe_difference(canonical_form(a), canonical_form(b)); }

std::string check_round_trip(const PString& s) {
  PvString x = prev_encode(s);
  if (prev_encode(prev_decode(x)) != x) return "decode/encode round trip broke";
  if (pv_reverse(x) != prev_encode(s.reversed())) return "pv_reverse disagrees with reversing the p-string";
  if (pv_reverse(pv_reverse(x)) != x) return "pv_reverse is not an involution";
  for (std::size_t i = 1; i <= s.size(); ++i)
    for (std::size_t j = i; j <= s.size(); ++j)
      if (slice(x, i, j) != prev_encode(s.substr(i, j)))
        return "re-encoded slice [" + std::to_string(i) + "," + std::to_string(j) + "] differs";
  return {};
}

std::string check_renaming(const PString& s) {
  // Swapping two parameters must not change the encoding.
  const auto& params = s.alphabet().params();
  if (params.size() < 2) return {};
  Char p = *params.begin(), q = *std::next(params.begin());
  std::u32string t = s.text();
  for (auto& c : t) c = c == p ? q : c == q ? p : c;
  return p_match(s, PString(t, s.alphabet())) ? std::string() : "renaming parameters changed the encoding";
}

std::string check_online(const PString& s) {
  PvString w = prev_encode(s);
  OnlineBuilder b;
  for (std::size_t i = 1; i <= w.size(); ++i) {
    b.append(w.at(i));
    PvString prefix = slice(w, 1, i);
    auto d = describe_difference(canonical_form(b.pdawg()), canonical_form(build_oracle_pdawg(prefix)));
    if (!d.empty()) return "prefix " + std::to_string(i) + ": " + d;
  }
  return {};
}

std::string check_size(const PString& s) {
  auto r = build_online(s);
  const std::size_t n = s.size();
  PdawgStats st = r.pdawg.stats();
  if (n >= 3 && st.nodes > 2 * n - 1) return "nodes " + std::to_string(st.nodes) + " > 2n-1";
  if (n >= 3 && st.edges > 3 * n - 4) return "edges " + std::to_string(st.edges) + " > 3n-4";
  std::set<Char> params;
  for (Char c : s.text())
    if (s.alphabet().classify(c) == SymbolClass::Param) params.insert(c);
  if (r.stats.redirected_secondary_edges > (params.size() + 1) * n) return "redirected secondary edges exceed (|Pi|+1)n";
  return {};
}

std::string check_matching(const PString& s) {
  PvString w = prev_encode(s);
  OccurrenceIndex idx(build_online(w).pdawg);
  FactorTable table = enumerate_factors(w);
  for (const auto& [x, ends] : table) {
    if (!p_match_query(idx.pdawg(), x)) return "factor " + x.str() + " rejected";
    if (idx.locate(x) != ends) return "locate " + x.str() + " disagrees with rpos";
    // One-symbol extensions that are not factors must be rejected.
    std::vector<Symbol> cand{Symbol::num(0)};
    for (std::size_t v = 1; v <= x.size(); ++v) cand.push_back(Symbol::num(v));
    for (Char c : s.alphabet().statics()) cand.push_back(Symbol::chr(c));
    for (Symbol c : cand) {
      std::vector<Symbol> y(x.begin(), x.end());
      y.push_back(c);
      PvString py = re_encode(y);
      if (table.count(py)) continue;
      if (p_match_query(idx.pdawg(), py)) return "non-factor " + py.str() + " accepted";
      if (!idx.locate(py).empty()) return "non-factor " + py.str() + " located";
    }
  }
  return {};
}

std::string check_duality(const PString& s) {
  auto g = build_online(s).pdawg;
  PSTree tree = pstree_from_naive(build_pstree_naive(s.reversed()));
  weiner_links(tree);
  DualityReport rep = verify_duality(g, tree);
  if (!rep.all()) return "duality report " + rep.json();
  if (tree_signature(suffix_link_tree_as_pstree(g)) != tree_signature(tree)) return "suffix-link tree differs from the naive tree";
  if (auto v = check_monotonicity(tree); !v.empty()) return v.front();
  return iso_diff(offline_build_pdawg(tree), g);
}

#ifdef PDAWG_FAST_RTL
std::string check_rtl(const PString& s) {
  PString rev = s.reversed();
  PvString ps = prev_encode(rev);
  RtlBuilder b(ps);
  while (!b.done()) {
    b.step();
    PvString suffix = slice(ps, b.start(), ps.size());
    if (tree_signature(b.tree()) != tree_signature(build_pstree_naive(suffix)))
      return "tree differs at suffix " + std::to_string(b.start());
  }
  if (b.counters().max_redirections_per_step > 1) return "more than one redirection in a step";
  auto g = build_online(s).pdawg;
  if (auto d = iso_diff(upward_links_to_pdawg(b.tree()), g); !d.empty()) return d;
  return iso_diff(offline_build_pdawg(b.tree()), g);
}
#endif

std::optional<SelftestFailure> run_properties(const std::string& suite, const std::vector<Property>& props,
                                              const std::vector<Corpus>& cs, std::ostream& log) {
  for (const auto& p : props) {
    std::size_t count = 0;
    for (const auto& c : cs) {
      for (const auto& in : c.inputs) {
        PString s(in, c.alphabet);
        std::string detail;
        try {
          detail = p.check(s);
        } catch (const std::exception& e) {
          detail = std::string("exception: ") + e.what();
        }
        if (!detail.empty()) {
          Check guarded = [&](const PString& t) {
            try {
              return p.check(t);
            } catch (const std::exception& e) {
              return std::string("exception: ") + e.what();
            }
          };
          std::u32string w = minimize_witness(in, c.alphabet, guarded);
          return SelftestFailure{suite, p.name, to_utf8(w), guarded(PString(w, c.alphabet))};
        }
        ++count;
      }
    }
    log << "  " << suite << "/" << p.name << ": " << count << " inputs ok\n";
  }
  return std::nullopt;
}

std::optional<SelftestFailure> run_bounds(std::size_t max_len, std::ostream& log) {
  auto fail = [](std::string prop, std::string w, std::string d) { return SelftestFailure{"bounds", std::move(prop), std::move(w), std::move(d)}; };
  const AlphabetSpec abc = AlphabetSpec::from_chars("abc", "");
  const std::size_t top = std::max<std::size_t>(20, 10 * max_len);
  for (std::size_t n = 3; n <= top; ++n) {
    std::u32string nodes_ext = U"a" + std::u32string(n - 1, U'b');
    std::u32string edges_ext = U"a" + std::u32string(n - 2, U'b') + U"c";
    auto sn = build_online(PString(nodes_ext, abc)).pdawg.stats();
    if (sn.nodes != 2 * n - 1) return fail("nodes-extremal", to_utf8(nodes_ext), "nodes " + std::to_string(sn.nodes));
    auto se = build_online(PString(edges_ext, abc)).pdawg.stats();
    if (se.edges != 3 * n - 4) return fail("edges-extremal", to_utf8(edges_ext), "edges " + std::to_string(se.edges));
  }
  log << "  bounds/extremal families: n = 3.." << top << " ok\n";
  const std::size_t kmax = std::min<std::size_t>(std::max<std::size_t>(max_len, 2), 8);
  for (std::size_t k = 2; k <= kmax; ++k) {
    PString t = t_family(k);
    std::size_t states = build_psauto(t).states.size();
    std::size_t nodes = build_online(t).pdawg.stats().nodes;
    if (states < k * (k - 1) / 2) return fail("psauto-quadratic", t.utf8(), "states " + std::to_string(states));
    if (nodes > 8 * k - 1) return fail("pdawg-linear", t.utf8(), "nodes " + std::to_string(nodes));
  }
  log << "  bounds/T_k: k = 2.." << kmax << " ok\n";
  return std::nullopt;
}

}  // namespace

const std::vector<std::string>& all_suites() {
  static const std::vector<std::string> s{"encodings", "pdawg", "matching", "duality", "rtl", "bounds"};
  return s;
}

std::optional<SelftestFailure> run_selftest(const SelftestOptions& opt, std::ostream& log) {
  const auto cs = corpora(opt);
  for (const auto& suite : opt.suites) {
    log << suite << "\n";
    std::optional<SelftestFailure> f;
    if (suite == "encodings") {
      f = run_properties(suite, {{"round-trip", check_round_trip}, {"renaming", check_renaming}}, cs, log);
    } else if (suite == "pdawg") {
      f = run_properties(suite, {{"oracle-isomorphism", check_online}, {"size-and-work", check_size}}, cs, log);
    } else if (suite == "matching") {
      f = run_properties(suite, {{"query-and-locate", check_matching}}, cs, log);
    } else if (suite == "duality") {
      f = run_properties(suite, {{"duality-and-offline", check_duality}}, cs, log);
    } else if (suite == "rtl") {
#ifdef PDAWG_FAST_RTL
      f = run_properties(suite, {{"right-to-left", check_rtl}}, cs, log);
#else
      log << "  skipped: built without PDAWG_FAST_RTL\n";
#endif
    } else if (suite == "bounds") {
      f = run_bounds(opt.max_len, log);
    }
    if (f) return f;
  }
  return std::nullopt;
}

}  // namespace pdawg_cli
