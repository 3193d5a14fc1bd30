// pdawg: build, query and inspect parameterized DAWG indexes.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pdawg/io.hpp"
#include "pdawg/matcher.hpp"
#include "pdawg/oracle.hpp"
#include "pdawg/pdawg.hpp"
#include "pdawg/pstree.hpp"
#ifdef PDAWG_FAST_RTL
#include "pdawg/rtl.hpp"
#endif
#include "selftest.hpp"

using namespace pdawg;

namespace {

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kCorrupt = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Token characters live in a private-use plane so they never clash with
// ordinary characters.
constexpr Char kTokenBase = 0xF0000;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string strip_final_newline(std::string s) {
  if (!s.empty() && s.back() == '\n') s.pop_back();
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

class Tokenizer {
 public:
  explicit Tokenizer(AlphabetSpec& a) : a_(a) {
    for (const auto& [c, name] : a_.names()) {
      ids_[name] = c;
      next_ = std::max<Char>(next_, c + 1);
    }
  }
  Char intern(const std::string& tok) {
    auto it = ids_.find(tok);
    if (it != ids_.end()) return it->second;
    Char c = next_++;
    ids_[tok] = c;
    a_.set_name(c, tok);
    return c;
  }
  std::optional<Char> find(const std::string& tok) const {
    auto it = ids_.find(tok);
    return it == ids_.end() ? std::nullopt : std::optional<Char>(it->second);
  }

 private:
  AlphabetSpec& a_;
  std::map<std::string, Char> ids_;
  Char next_ = kTokenBase;
};

bool tokenized(const AlphabetSpec& a) { return !a.names().empty() && a.names().begin()->first >= kTokenBase; }

struct BuildArgs {
  std::string input, out, sigma, sigma_file, pi, engine = "online";
  bool pi_auto = false, with_locate = false, tokenize = false;
};

int cmd_build(const BuildArgs& args) {
  if (!args.pi.empty() && args.pi_auto) throw UsageError("--pi and --pi-auto are exclusive");
  if (!args.sigma.empty() && !args.sigma_file.empty()) throw UsageError("--sigma and --sigma-file are exclusive");
  std::string sigma_src = args.sigma_file.empty() ? args.sigma : strip_final_newline(read_file(args.sigma_file));
  std::string raw = strip_final_newline(read_file(args.input));
  const bool auto_pi = args.pi_auto || args.pi.empty();

  AlphabetSpec alphabet;
  std::u32string text;
  if (args.tokenize) {
    // Interning order: Σ tokens, Π tokens, then the text.
    AlphabetSpec names;
    Tokenizer tok(names);
    std::set<Char> statics, params;
    for (const auto& t : split_ws(sigma_src)) statics.insert(tok.intern(t));
    for (const auto& t : split_ws(args.pi)) params.insert(tok.intern(t));
    for (const auto& t : split_ws(raw)) {
      Char c = tok.intern(t);
      if (auto_pi && !statics.count(c)) params.insert(c);
      text += c;
    }
    try {
      alphabet = AlphabetSpec(statics, params, auto_pi);
    } catch (const AlphabetError& e) {
      throw UsageError(e.what());
    }
    for (const auto& [c, n] : names.names()) alphabet.set_name(c, n);
  } else {
    try {
      alphabet = auto_pi ? AlphabetSpec::auto_params(sigma_src) : AlphabetSpec::from_chars(sigma_src, args.pi);
    } catch (const AlphabetError& e) {
      throw UsageError(e.what());
    }
    text = from_utf8(raw);
  }

  PString t;
  try {
    t = PString(text, alphabet);
  } catch (const ClassificationError& e) {
    throw UsageError(std::string("input: ") + e.what());
  }

  StatsExtra extra;
  std::set<Char> seen_s, seen_p;
  for (Char c : t.text()) (alphabet.classify(c) == SymbolClass::Static ? seen_s : seen_p).insert(c);
  extra.sigma_size = seen_s.size();
  extra.pi_size = seen_p.size();

  Pdawg g;
  if (args.engine == "online") {
    auto r = build_online(t);
    extra.redirected_secondary = r.stats.redirected_secondary_edges;
    extra.slinks_deleted = r.stats.suffix_links_deleted;
    g = std::move(r.pdawg);
  } else if (args.engine == "offline") {
#ifdef PDAWG_FAST_RTL
    g = offline_build_pdawg(build_pstree_rtl(t.reversed()).tree);
#else
    g = offline_build_pdawg(pstree_from_naive(build_pstree_naive(t.reversed())));
#endif
  } else if (args.engine == "rtl") {
#ifdef PDAWG_FAST_RTL
    g = upward_links_to_pdawg(build_pstree_rtl(t.reversed()).tree);
#else
    throw UsageError("the rtl engine is not compiled in (PDAWG_FAST_RTL=OFF)");
#endif
  } else {
    throw UsageError("unknown engine: " + args.engine);
  }

  IndexFile f{alphabet, g, std::nullopt};
  if (args.with_locate) f.occurrences.emplace(g);
  if (!args.out.empty()) f.save(args.out);
  std::cout << stats_json(g, extra, &alphabet).dump(2) << "\n";
  return kOk;
}

IndexFile load_index(const std::string& path) {
  std::ifstream probe(path);
  if (!probe) throw UsageError("cannot read " + path);
  return IndexFile::load(path);
}

PString pattern_string(const std::string& pattern, const AlphabetSpec& stored) {
  AlphabetSpec a = stored;
  std::u32string chars;
  if (tokenized(stored)) {
    Tokenizer tok(a);
    for (const auto& t : split_ws(pattern)) {
      auto c = tok.find(t);
      // Unknown tokens are fresh parameters when parameters are automatic.
      if (!c && a.params_auto()) c = tok.intern(t);
      if (!c) throw UsageError("pattern token '" + t + "' is in neither alphabet");
      chars += *c;
    }
  } else {
    chars = from_utf8(pattern);
  }
  try {
    return PString(chars, a);
  } catch (const ClassificationError& e) {
    throw UsageError(std::string("pattern: ") + e.what());
  }
}

int cmd_query(const std::string& index, const std::string& pattern, bool locate, bool begin_positions) {
  IndexFile f = load_index(index);
  PString p = pattern_string(pattern, f.alphabet);
  if (!locate && !begin_positions) {
    std::cout << (p_match_query(f.pdawg, p) ? "true" : "false") << "\n";
    return kOk;
  }
  if (!f.occurrences) f.occurrences.emplace(f.pdawg);
  std::vector<std::size_t> ends = f.occurrences->locate(p);
  Json out = Json::array();
  for (std::size_t e : ends) {
    if (!begin_positions) {
      out.push_back(e);
    } else if (e >= p.size()) {
      // The empty pattern "ends" at 0; its begin position would be 1 past it.
      out.push_back(e - p.size() + 1);
    }
  }
  std::cout << out.dump() << "\n";
  return kOk;
}

int cmd_dot(const std::string& index, const std::string& structure, const std::string& out) {
  IndexFile f = load_index(index);
  std::string dot;
  if (structure == "pdawg") {
    dot = pdawg_dot(f.pdawg, &f.alphabet);
  } else if (structure == "pstree") {
    PSTree tree = suffix_link_tree_as_pstree(f.pdawg);
    weiner_links(tree);
    dot = pstree_dot(tree, &f.alphabet);
  } else if (structure == "psauto") {
    dot = psauto_dot(build_psauto(f.pdawg.text()), &f.alphabet);
  } else {
    throw UsageError("unknown structure: " + structure);
  }
  if (out.empty()) {
    std::cout << dot;
  } else {
    std::ofstream o(out, std::ios::binary);
    if (!o) throw UsageError("cannot write " + out);
    o << dot;
  }
  return kOk;
}

int cmd_selftest(pdawg_cli::SelftestOptions opt, const std::string& suites) {
  opt.suites.clear();
  std::stringstream ss(suites);
  for (std::string s; std::getline(ss, s, ',');) {
    if (s.empty()) continue;
    const auto& known = pdawg_cli::all_suites();
    if (std::find(known.begin(), known.end(), s) == known.end()) throw UsageError("unknown suite: " + s);
    opt.suites.push_back(s);
  }
  auto fail = pdawg_cli::run_selftest(opt, std::cout);
  if (!fail) {
    std::cout << "all suites passed\n";
    return kOk;
  }
  std::cout << "FAIL " << fail->suite << "/" << fail->property << "\n  witness: \"" << fail->witness << "\"\n  " << fail->detail << "\n";
  return kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parameterized DAWG index tool"};
  app.require_subcommand(1);

  BuildArgs b;
  auto* build = app.add_subcommand("build", "Build an index from a text file and print its statistics");
  build->add_option("text", b.input, "Input text file")->required();
  build->add_option("--sigma", b.sigma, "Static characters (tokens with --tokenize)");
  build->add_option("--sigma-file", b.sigma_file, "File listing the static characters");
  build->add_option("--pi", b.pi, "Parameter characters");
  build->add_flag("--pi-auto", b.pi_auto, "Every character outside the static alphabet is a parameter (default without --pi)");
  build->add_option("--out,-o", b.out, "Index file to write");
  build->add_flag("--with-locate", b.with_locate, "Store the occurrence index");
  build->add_option("--engine", b.engine, "online, offline or rtl")->check(CLI::IsMember({"online", "offline", "rtl"}));
  build->add_flag("--tokenize", b.tokenize, "Whitespace-separated tokens are the symbols");

  std::string index, pattern, structure = "pdawg", dot_out;
  bool locate = false, begins = false;
  auto* query = app.add_subcommand("query", "Decide whether a pattern p-matches a factor, or list its occurrences");
  query->add_option("index", index, "Index file")->required();
  query->add_option("pattern", pattern, "Pattern (omitted or \"\" means the empty pattern)");
  query->add_flag("--locate", locate, "Print the sorted end positions");
  query->add_flag("--begin-positions", begins, "Print begin positions instead of end positions");

  auto* dot = app.add_subcommand("dot", "Export a structure as Graphviz");
  dot->add_option("index", index, "Index file")->required();
  dot->add_option("--structure", structure, "pdawg, pstree or psauto")->check(CLI::IsMember({"pdawg", "pstree", "psauto"}));
  dot->add_option("--out,-o", dot_out, "Output file (default stdout)");

  pdawg_cli::SelftestOptions st;
  std::string suites = "encodings,pdawg,matching,duality,rtl,bounds";
  auto* selftest = app.add_subcommand("selftest", "Check the fast structures against the definition-level oracles");
  selftest->add_option("--max-len", st.max_len, "Length of the exhaustive corpus")->check(CLI::Range(0, 12));
  selftest->add_option("--seed", st.seed, "Seed of the random corpus");
  selftest->add_option("--suites", suites, "Comma-separated suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*build) return cmd_build(b);
    if (*query) return cmd_query(index, pattern, locate, begins);
    if (*dot) return cmd_dot(index, structure, dot_out);
    if (*selftest) return cmd_selftest(st, suites);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const FormatError& e) {
    std::cerr << "corrupt index: " << e.what() << "\n";
    return kCorrupt;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
