#include "pdawg/oracle.hpp"

#include <algorithm>

namespace pdawg {

FactorTable enumerate_factors(const PvString& w) {
  FactorTable table;
  const std::size_t n = w.size();
  for (std::size_t start = 1; start <= n + 1; ++start) {
    for (std::size_t end = start - 1; end <= n; ++end) {
      table[slice(w, start, end)].push_back(end);
    }
  }
  for (auto& [x, ends] : table) {
    std::sort(ends.begin(), ends.end());
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
  }
  return table;
}

std::vector<std::size_t> rpos(const PvString& w, const PvString& x) {
  std::vector<std::size_t> out;
  for (std::size_t i = x.size(); i <= w.size(); ++i) {
    if (slice(w, i - x.size() + 1, i) == x) out.push_back(i);
  }
  return out;
}

std::vector<Symbol> right_extensions(const PvString& w, const PvString& y, const std::vector<std::size_t>& ends) {
  std::vector<Symbol> out;
  for (std::size_t i : ends)
    if (i < w.size()) out.push_back(z_adjust(w.at(i + 1), static_cast<std::int64_t>(y.size())));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t OraclePdawg::edge_count() const {
  std::size_t e = 0;
  for (const auto& c : classes) e += c.edges.size();
  return e;
}

std::optional<std::size_t> OraclePdawg::class_of(const PvString& x) const {
  auto it = index.find(x);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

OraclePdawg build_oracle_pdawg(const PvString& w) {
  OraclePdawg g;
  g.text = w;
  FactorTable table = enumerate_factors(w);
  std::map<std::vector<std::size_t>, std::vector<PvString>> groups;
  for (auto& [x, ends] : table) groups[ends].push_back(x);
  for (auto& [ends, members] : groups) {
    std::sort(members.begin(), members.end(),
              [](const PvString& a, const PvString& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
    OracleClass c;
    c.members = std::move(members);
    c.rpos = ends;
    g.classes.push_back(std::move(c));
  }
  std::sort(g.classes.begin(), g.classes.end(), [](const OracleClass& a, const OracleClass& b) {
    return std::pair(a.max().size(), a.rpos.front()) < std::pair(b.max().size(), b.rpos.front());
  });
  for (std::size_t i = 0; i < g.classes.size(); ++i)
    for (const auto& m : g.classes[i].members) g.index[m] = i;
  g.source = *g.class_of(PvString{});

  for (auto& c : g.classes) {
    const PvString& y = c.max();
    for (Symbol b : right_extensions(w, y, c.rpos)) {
      std::vector<Symbol> yb(y.begin(), y.end());
      yb.push_back(b);
      PvString ext = PvString::unchecked(std::move(yb));
      std::size_t t = *g.class_of(ext);
      c.edges.push_back({b, t, g.classes[t].max() == ext});
    }
    if (!c.min().empty()) {
      const PvString& m = c.min();
      c.slink = *g.class_of(re_encode(m.symbols().subspan(1)));
    }
  }
  return g;
}

CanonicalPdawg canonical_form(const OraclePdawg& g) {
  auto name = [&](std::size_t i) {
    return CanonicalNode::Name{static_cast<std::int64_t>(g.classes[i].max().size()),
                               static_cast<std::int64_t>(g.classes[i].rpos.front())};
  };
  CanonicalPdawg out;
  for (std::size_t i = 0; i < g.classes.size(); ++i) {
    CanonicalNode n;
    n.name = name(i);
    for (const auto& e : g.classes[i].edges) n.edges.emplace_back(e.label.key(), name(e.target), e.primary);
    std::sort(n.edges.begin(), n.edges.end());
    if (g.classes[i].slink) n.slink = name(*g.classes[i].slink);
    out.nodes.push_back(std::move(n));
  }
  std::sort(out.nodes.begin(), out.nodes.end());
  return out;
}

Symbol suffix_symbol(const PvString& s, std::size_t p, std::size_t j) {
  return z_adjust(s.at(p + j - 1), static_cast<std::int64_t>(j) - 1);
}

PSTrie build_pstrie(const PvString& pv) {
  PSTrie t;
  t.text = pv;
  t.nodes.emplace_back();
  t.nodes[0].witness = 1;
  const std::size_t n = pv.size();
  for (std::size_t p = 1; p <= n + 1; ++p) {
    std::size_t u = t.root;
    for (std::size_t j = 1; p + j - 1 <= n; ++j) {
      Symbol c = suffix_symbol(pv, p, j);
      auto it = t.nodes[u].children.find(c);
      if (it == t.nodes[u].children.end()) {
        PSTrieNode node;
        node.depth = j;
        node.witness = p;
        t.nodes.push_back(node);
        it = t.nodes[u].children.emplace(c, t.nodes.size() - 1).first;
      }
      u = it->second;
    }
    t.nodes[u].is_suffix = true;
  }
  return t;
}

PSTrie build_pstrie(const PString& t) { return build_pstrie(prev_encode(t)); }

bool PSAuto::accepts(std::span<const Symbol> x) const {
  std::size_t s = initial;
  for (Symbol c : x) {
    auto it = states[s].transitions.find(c);
    if (it == states[s].transitions.end()) return false;
    s = it->second;
  }
  return states[s].accepting;
}

PSAuto minimize(const PSTrie& trie) {
  const std::size_t N = trie.nodes.size();
  std::vector<std::size_t> block(N);
  for (std::size_t s = 0; s < N; ++s) block[s] = trie.nodes[s].is_suffix ? 1 : 0;
  std::size_t blocks = 0;
  for (;;) {
    using Sig = std::pair<std::size_t, std::vector<std::pair<std::uint32_t, std::size_t>>>;
    std::map<Sig, std::size_t> ids;
    std::vector<std::size_t> next(N);
    for (std::size_t s = 0; s < N; ++s) {
      Sig sig{block[s], {}};
      for (const auto& [c, t] : trie.nodes[s].children) sig.second.emplace_back(c.key(), block[t]);
      next[s] = ids.try_emplace(std::move(sig), ids.size()).first->second;
    }
    block = std::move(next);
    if (ids.size() == blocks) break;
    blocks = ids.size();
  }
  PSAuto a;
  a.states.resize(blocks);
  for (std::size_t s = 0; s < N; ++s) {
    auto& st = a.states[block[s]];
    st.accepting = trie.nodes[s].is_suffix;
    for (const auto& [c, t] : trie.nodes[s].children) st.transitions[c] = block[t];
  }
  a.initial = block[trie.root];
  return a;
}

PSAuto build_psauto(const PvString& pv) { return minimize(build_pstrie(pv)); }
PSAuto build_psauto(const PString& t) { return build_psauto(prev_encode(t)); }

NaivePSTree build_pstree_naive(const PvString& pv) {
  PSTrie trie = build_pstrie(pv);
  const std::size_t n = pv.size();
  NaivePSTree tree;
  tree.text = pv;
  auto keep = [&](std::size_t u) {
    return u == trie.root || trie.nodes[u].children.size() != 1 || trie.nodes[u].is_suffix;
  };
  auto make = [&](std::size_t u, std::size_t parent) {
    NaivePSTreeNode node;
    node.parent = parent;
    node.depth = trie.nodes[u].depth;
    node.witness = trie.nodes[u].witness;
    node.is_suffix = trie.nodes[u].is_suffix;
    if (node.is_suffix) node.suffix_start = n + 1 - node.depth;
    tree.nodes.push_back(node);
    return tree.nodes.size() - 1;
  };
  make(trie.root, 0);
  // (trie node, tree node of nearest kept ancestor, first symbol below that ancestor)
  struct Item {
    std::size_t u, anc;
    Symbol first;
  };
  std::vector<Item> stack;
  for (auto it = trie.nodes[trie.root].children.rbegin(); it != trie.nodes[trie.root].children.rend(); ++it)
    stack.push_back({it->second, 0, it->first});
  while (!stack.empty()) {
    Item item = stack.back();
    stack.pop_back();
    std::size_t anc = item.anc;
    bool kept = keep(item.u);
    if (kept) {
      std::size_t id = make(item.u, item.anc);
      tree.nodes[item.anc].children[item.first] = id;
      anc = id;
    }
    const auto& ch = trie.nodes[item.u].children;
    for (auto it = ch.rbegin(); it != ch.rend(); ++it)
      stack.push_back({it->second, anc, kept ? it->first : item.first});
  }
  return tree;
}

NaivePSTree build_pstree_naive(const PString& s) { return build_pstree_naive(prev_encode(s)); }

std::vector<Symbol> NaivePSTree::edge_label(std::size_t u) const {
  std::vector<Symbol> out;
  if (u == root) return out;
  for (std::size_t j = nodes[nodes[u].parent].depth + 1; j <= nodes[u].depth; ++j)
    out.push_back(suffix_symbol(text, nodes[u].witness, j));
  return out;
}

PvString NaivePSTree::path(std::size_t u) const {
  std::vector<Symbol> out;
  for (std::size_t j = 1; j <= nodes[u].depth; ++j) out.push_back(suffix_symbol(text, nodes[u].witness, j));
  return PvString::unchecked(std::move(out));
}

PSTrie decompact(const NaivePSTree& tree) {
  PSTrie t;
  t.text = tree.text;
  t.nodes.emplace_back();
  t.nodes[0].witness = 1;
  t.nodes[0].is_suffix = tree.nodes[tree.root].is_suffix;
  for (std::size_t v = 0; v < tree.nodes.size(); ++v) {
    if (v == tree.root) continue;
    std::size_t u = t.root;
    PvString p = tree.path(v);
    for (std::size_t j = 0; j < p.size(); ++j) {
      auto it = t.nodes[u].children.find(p[j]);
      if (it == t.nodes[u].children.end()) {
        PSTrieNode node;
        node.depth = j + 1;
        node.witness = tree.nodes[v].witness;
        t.nodes.push_back(node);
        it = t.nodes[u].children.emplace(p[j], t.nodes.size() - 1).first;
      }
      u = it->second;
    }
    if (tree.nodes[v].is_suffix) t.nodes[u].is_suffix = true;
  }
  return t;
}

std::vector<std::size_t> scan_occurrences(const PString& t, const PString& p) {
  std::vector<std::size_t> out;
  if (p.empty()) {
    for (std::size_t i = 0; i <= t.size(); ++i) out.push_back(i);
    return out;
  }
  PvString target = prev_encode(p);
  for (std::size_t i = p.size(); i <= t.size(); ++i) {
    PString window = t.substr(i - p.size() + 1, i);
    if (prev_encode(window.text(), p.alphabet()) == target) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> scan_occurrences(const PvString& w, const PvString& p) { return rpos(w, p); }

PString t_family(std::size_t k) {
  std::set<Char> statics, params;
  std::u32string half;
  for (std::size_t i = 1; i <= k; ++i) {
    Char x = 0xE100 + static_cast<Char>(i), a = 0xE200 + static_cast<Char>(i);
    params.insert(x);
    statics.insert(a);
    half += x;
    half += a;
  }
  AlphabetSpec alphabet(statics, params);
  for (std::size_t i = 1; i <= k; ++i) {
    alphabet.set_name(0xE100 + static_cast<Char>(i), "x" + std::to_string(i));
    alphabet.set_name(0xE200 + static_cast<Char>(i), "a" + std::to_string(i));
  }
  return PString(half + half, alphabet);
}

}  // namespace pdawg
