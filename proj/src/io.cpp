#include "pdawg/io.hpp"

#include <fstream>
#include <sstream>

namespace pdawg {

namespace {

bool printable_code(Char c) { return c <= 0x10FFFF && (c < 0xD800 || c > 0xDFFF); }

std::int64_t exported(NodeId u) { return static_cast<std::int64_t>(u) - 1; }

NodeId arena_id(const Json& j, std::size_t count, const char* what) {
  if (!j.is_number_integer()) throw FormatError(std::string(what) + " is not an integer");
  auto v = j.get<std::int64_t>();
  if (v < 0 || static_cast<std::size_t>(v) >= count) throw FormatError(std::string(what) + " out of range");
  return static_cast<NodeId>(v + 1);
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string label_of(Symbol s, const AlphabetSpec* alphabet) { return dot_escape(symbol_label(s, alphabet)); }

std::string join_labels(const std::vector<Symbol>& syms, const AlphabetSpec* alphabet) {
  std::string out;
  for (std::size_t i = 0; i < syms.size(); ++i) {
    if (i) out += ' ';
    out += label_of(syms[i], alphabet);
  }
  return out;
}

}  // namespace

Json symbol_to_json(Symbol s) {
  if (s.is_num()) return Json{{"n", s.value()}};
  if (printable_code(s.code())) return Json{{"s", to_utf8(std::u32string(1, s.code()))}};
  return Json{{"c", s.code()}};
}

Symbol symbol_from_json(const Json& j) {
  if (!j.is_object() || j.size() != 1) throw FormatError("bad symbol label");
  try {
    if (j.contains("n")) return Symbol::num(j.at("n").get<std::uint64_t>());
    if (j.contains("c")) return Symbol::chr(j.at("c").get<Char>());
    if (j.contains("s")) {
      std::u32string cs = from_utf8(j.at("s").get<std::string>());
      if (cs.size() != 1) throw FormatError("static label must be one character");
      return Symbol::chr(cs[0]);
    }
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad symbol label: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw FormatError(std::string("bad symbol label: ") + e.what());
  }
  throw FormatError("bad symbol label");
}

Json pdawg_to_json(const Pdawg& g) {
  Json nodes = Json::array();
  for (NodeId u = Pdawg::kSource; u < g.arena_size(); ++u) {
    const auto& node = g.node(u);
    Json edges = Json::array();
    node.edges.for_each([&](Symbol a, const Edge& e) {
      edges.push_back(Json::array({symbol_to_json(a), exported(e.target), e.primary}));
    });
    Json slink = node.slink == Pdawg::kTop || node.slink == kNoNode ? Json(nullptr) : Json(exported(node.slink));
    nodes.push_back(Json{{"len", node.len}, {"edges", std::move(edges)}, {"slink", std::move(slink)}});
  }
  Json hist = Json::array();
  for (NodeId u : g.sink_history()) hist.push_back(exported(u));
  Json text = Json::array();
  for (Symbol s : g.text()) text.push_back(symbol_to_json(s));
  return Json{{"nodes", std::move(nodes)}, {"source", 0}, {"sink_history", std::move(hist)}, {"text", std::move(text)}};
}

Pdawg pdawg_from_json(const Json& j) {
  try {
    const Json& nodes = j.at("nodes");
    if (!nodes.is_array() || nodes.empty()) throw FormatError("pdawg has no nodes");
    if (j.at("source") != 0) throw FormatError("source must be node 0");
    const std::size_t count = nodes.size();

    Pdawg g;
    if (nodes[0].at("len") != 0) throw FormatError("source must have len 0");
    for (std::size_t i = 1; i < count; ++i) {
      auto len = nodes[i].at("len").get<std::int64_t>();
      if (len <= 0) throw FormatError("node " + std::to_string(i) + " has a non-positive len");
      g.add_node(len);
    }
    for (std::size_t i = 0; i < count; ++i) {
      const NodeId u = static_cast<NodeId>(i + 1);
      const Json& slink = nodes[i].at("slink");
      if (i == 0) {
        if (!slink.is_null()) throw FormatError("source has a suffix link");
      } else {
        NodeId t = arena_id(slink, count, "suffix link");
        if (g.len(t) >= g.len(u)) throw FormatError("suffix link does not shorten at node " + std::to_string(i));
        g.set_slink(u, t);
      }
      Symbol prev_label;
      bool first = true;
      for (const Json& e : nodes[i].at("edges")) {
        if (!e.is_array() || e.size() != 3) throw FormatError("edge must be [label, target, primary]");
        Symbol a = symbol_from_json(e[0]);
        if (!first && !(prev_label < a)) throw FormatError("edges out of label order at node " + std::to_string(i));
        first = false;
        prev_label = a;
        NodeId t = arena_id(e[1], count, "edge target");
        if (g.len(t) <= g.len(u)) throw FormatError("edge does not lengthen at node " + std::to_string(i));
        g.set_edge(u, a, t);
        if (g.node(u).edges.find(a)->primary != e[2].get<bool>()) throw FormatError("primary flag disagrees with lengths");
      }
    }
    g.clear_sinks();
    for (const Json& h : j.at("sink_history")) g.push_sink(arena_id(h, count, "sink history entry"));
    std::vector<Symbol> text;
    for (const Json& s : j.at("text")) text.push_back(symbol_from_json(s));
    if (g.sink_history().size() != text.size() + 1) throw FormatError("sink history length does not match the text");
    for (std::size_t i = 0; i < g.sink_history().size(); ++i) {
      if (g.len(g.sink_history()[i]) != static_cast<std::int64_t>(i)) throw FormatError("sink history entry has the wrong len");
    }
    try {
      g.set_text(PvString::checked(std::move(text)));
    } catch (const ValidityError& e) {
      throw FormatError(std::string("text: ") + e.what());
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed pdawg: ") + e.what());
  }
}

Json alphabet_to_json(const AlphabetSpec& a) {
  auto chars = [](const std::set<Char>& s) {
    Json out = Json::array();
    for (Char c : s) out.push_back(symbol_to_json(Symbol::chr(c)));
    return out;
  };
  Json names = Json::array();
  for (const auto& [c, name] : a.names()) names.push_back(Json::array({symbol_to_json(Symbol::chr(c)), name}));
  return Json{{"static", chars(a.statics())}, {"param", chars(a.params())}, {"param_auto", a.params_auto()}, {"names", std::move(names)}};
}

AlphabetSpec alphabet_from_json(const Json& j) {
  try {
    auto chars = [](const Json& arr) {
      std::set<Char> out;
      for (const Json& s : arr) {
        Symbol sym = symbol_from_json(s);
        if (!sym.is_static()) throw FormatError("alphabet entry is not a character");
        out.insert(sym.code());
      }
      return out;
    };
    AlphabetSpec a(chars(j.at("static")), chars(j.at("param")), j.at("param_auto").get<bool>());
    for (const Json& n : j.at("names")) a.set_name(symbol_from_json(n.at(0)).code(), n.at(1).get<std::string>());
    return a;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed alphabet: ") + e.what());
  } catch (const AlphabetError& e) {
    throw FormatError(std::string("malformed alphabet: ") + e.what());
  }
}

Json IndexFile::to_json() const {
  Json j{{"format", kFormat},
         {"version", kVersion},
         {"alphabet", alphabet_to_json(alphabet)},
         {"text_length", pdawg.text().size()},
         {"pdawg", pdawg_to_json(pdawg)}};
  if (occurrences) {
    Json iv = Json::array();
    for (NodeId u = Pdawg::kSource; u < occurrences->intervals().size(); ++u) {
      iv.push_back(Json::array({occurrences->intervals()[u].enter, occurrences->intervals()[u].exit}));
    }
    j["occurrences"] = Json{{"intervals", std::move(iv)}, {"positions", occurrences->positions()}};
  }
  return j;
}

IndexFile IndexFile::from_json(const Json& j) {
  try {
    if (!j.is_object() || j.value("format", "") != kFormat) throw FormatError("not a pdawg index");
    if (j.at("version") != kVersion) throw FormatError("unsupported index version " + j.at("version").dump());
    IndexFile f;
    f.alphabet = alphabet_from_json(j.at("alphabet"));
    f.pdawg = pdawg_from_json(j.at("pdawg"));
    if (j.at("text_length") != f.pdawg.text().size()) throw FormatError("text length does not match the pdawg");
    if (j.contains("occurrences")) {
      const Json& occ = j.at("occurrences");
      std::vector<OccurrenceIndex::Interval> iv(1);  // ⊤
      for (const Json& e : occ.at("intervals")) iv.push_back({e.at(0).get<std::uint32_t>(), e.at(1).get<std::uint32_t>()});
      auto pos = occ.at("positions").get<std::vector<std::uint32_t>>();
      try {
        f.occurrences.emplace(f.pdawg, std::move(iv), std::move(pos));
      } catch (const std::runtime_error& e) {
        throw FormatError(e.what());
      }
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed index: ") + e.what());
  }
}

std::string IndexFile::dump() const { return to_json().dump() + "\n"; }

IndexFile IndexFile::parse(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("index is not JSON: ") + e.what());
  }
  return from_json(j);
}

void IndexFile::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << dump();
  if (!out) throw std::runtime_error("write failed: " + path);
}

IndexFile IndexFile::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

Json stats_json(const Pdawg& g, const StatsExtra& extra, const AlphabetSpec* alphabet) {
  PdawgStats s = g.stats();
  return Json{{"n", g.text().size()},
              {"nodes", s.nodes},
              {"edges", s.edges},
              {"primary", s.primary_edges},
              {"secondary", s.secondary_edges},
              {"pi_size", extra.pi_size},
              {"sigma_size", extra.sigma_size},
              {"build_steps", {{"redirected_secondary", extra.redirected_secondary}, {"slinks_deleted", extra.slinks_deleted}}},
              {"prev", alphabet ? g.text().str(*alphabet) : g.text().str()}};
}

std::string pdawg_dot(const Pdawg& g, const AlphabetSpec* alphabet) {
  std::ostringstream os;
  os << "digraph pdawg {\n  rankdir=LR;\n  node [shape=circle];\n";
  const NodeId sink = g.sink();
  for (NodeId u = Pdawg::kSource; u < g.arena_size(); ++u) {
    os << "  n" << exported(u) << " [label=\"" << exported(u) << "\\n" << g.len(u) << "\"";
    if (u == sink) os << " shape=doublecircle";
    os << "];\n";
  }
  for (NodeId u = Pdawg::kSource; u < g.arena_size(); ++u) {
    g.node(u).edges.for_each([&](Symbol a, const Edge& e) {
      os << "  n" << exported(u) << " -> n" << exported(e.target) << " [label=\"" << label_of(a, alphabet) << "\"";
      if (e.primary) os << " color=\"black:black\"";
      os << "];\n";
    });
  }
  for (NodeId u = Pdawg::kSource + 1; u < g.arena_size(); ++u) {
    NodeId t = g.slink(u);
    if (t == Pdawg::kTop || t == kNoNode) continue;
    os << "  n" << exported(u) << " -> n" << exported(t) << " [style=dashed constraint=false];\n";
  }
  os << "}\n";
  return os.str();
}

std::string pstree_dot(const PSTree& tree, const AlphabetSpec* alphabet) {
  std::ostringstream os;
  os << "digraph pstree {\n  node [shape=circle];\n";
  for (TreeNodeId u = 0; u < tree.nodes.size(); ++u) {
    const auto& node = tree.nodes[u];
    os << "  t" << u << " [label=\"" << node.depth;
    if (node.is_suffix) os << "\\n[" << node.suffix_start << "]";
    os << "\"";
    if (node.is_suffix) os << " shape=doublecircle";
    os << "];\n";
  }
  for (TreeNodeId u = 1; u < tree.nodes.size(); ++u) {
    os << "  t" << tree.nodes[u].parent << " -> t" << u << " [label=\"" << join_labels(tree.edge_label(u), alphabet) << "\"];\n";
  }
  for (TreeNodeId u = 0; u < tree.nodes.size(); ++u) {
    tree.nodes[u].weiner.for_each([&](Symbol k, const WeinerLink& l) {
      os << "  t" << u << " -> t" << l.target << " [label=\"" << label_of(k, alphabet) << "\" style=dotted"
         << (l.is_explicit ? "" : " arrowhead=empty") << " constraint=false];\n";
    });
    tree.nodes[u].upward.for_each([&](Symbol k, const UpwardLink& l) {
      os << "  t" << u << " -> t" << l.to << " [label=\"" << label_of(k, alphabet);
      if (l.b) os << "," << label_of(*l.b, alphabet);
      os << "\" style=dotted color=grey constraint=false];\n";
    });
  }
  os << "}\n";
  return os.str();
}

std::string psauto_dot(const PSAuto& a, const AlphabetSpec* alphabet) {
  std::ostringstream os;
  os << "digraph psauto {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (std::size_t s = 0; s < a.states.size(); ++s) {
    os << "  q" << s << " [label=\"" << s << "\"";
    if (a.states[s].accepting) os << " shape=doublecircle";
    if (s == a.initial) os << " style=bold";
    os << "];\n";
  }
  for (std::size_t s = 0; s < a.states.size(); ++s) {
    for (const auto& [sym, t] : a.states[s].transitions) {
      os << "  q" << s << " -> q" << t << " [label=\"" << label_of(sym, alphabet) << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace pdawg
