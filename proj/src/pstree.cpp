#include "pdawg/pstree.hpp"

#include <algorithm>
#include <unordered_map>

#include <json.hpp>

namespace pdawg {

std::vector<Symbol> PSTree::edge_label(TreeNodeId u) const {
  std::vector<Symbol> out;
  if (u == kRoot) return out;
  for (std::size_t j = nodes[nodes[u].parent].depth + 1; j <= nodes[u].depth; ++j) out.push_back(symbol_at(u, j));
  return out;
}

PvString PSTree::path(TreeNodeId u) const {
  std::vector<Symbol> out;
  out.reserve(nodes[u].depth);
  for (std::size_t j = 1; j <= nodes[u].depth; ++j) out.push_back(symbol_at(u, j));
  return PvString::unchecked(std::move(out));
}

std::size_t PSTree::link_count() const {
  std::size_t c = 0;
  for (const auto& v : nodes) c += v.weiner.size();
  return c;
}

PSTree pstree_from_naive(const NaivePSTree& naive) {
  PSTree t;
  t.text = naive.text;
  t.suffix_node.assign(naive.text.size() + 2, 0);
  t.nodes.resize(naive.nodes.size());
  for (std::size_t i = 0; i < naive.nodes.size(); ++i) {
    const auto& a = naive.nodes[i];
    auto& b = t.nodes[i];
    b.parent = static_cast<TreeNodeId>(a.parent);
    b.depth = a.depth;
    b.witness = a.witness;
    b.is_suffix = a.is_suffix;
    b.suffix_start = a.suffix_start;
    for (const auto& [c, child] : a.children) b.children.set(c, static_cast<TreeNodeId>(child));
    if (a.is_suffix) t.suffix_node[a.suffix_start] = static_cast<TreeNodeId>(i);
  }
  return t;
}

PSTree suffix_link_tree_as_pstree(const Pdawg& g) {
  const std::size_t n = g.text().size();
  const std::vector<std::int64_t> first_end = min_end_positions(g);
  PSTree t;
  t.text = pv_reverse(g.text());
  t.suffix_node.assign(n + 2, 0);
  t.nodes.resize(g.arena_size() - 1);
  for (NodeId u = Pdawg::kSource; u < g.arena_size(); ++u) {
    auto& node = t.nodes[u - 1];
    node.depth = static_cast<std::size_t>(g.len(u));
    node.parent = u == Pdawg::kSource ? PSTree::kRoot : g.slink(u) - 1;
    node.witness = n - static_cast<std::size_t>(first_end[u]) + 1;
    if (g.sink_history()[node.depth] == u) {
      node.is_suffix = true;
      node.suffix_start = n - node.depth + 1;
      t.suffix_node[node.suffix_start] = u - 1;
    }
  }
  for (TreeNodeId c = 1; c < t.nodes.size(); ++c) {
    auto& parent = t.nodes[t.nodes[c].parent];
    Symbol first = t.first_symbol(c);
    if (parent.children.contains(first)) throw StructuralError("two children share a first symbol");
    parent.children.set(first, c);
  }
  return t;
}

std::vector<std::size_t> next_occurrence(const PvString& s) {
  std::vector<std::size_t> next(s.size() + 2, 0);
  for (std::size_t r = 1; r <= s.size(); ++r) {
    Symbol x = s.at(r);
    if (x.is_num() && !x.is_zero()) next[r - x.value()] = x.value();
  }
  return next;
}

Symbol prepend_label(const PvString& s, const std::vector<std::size_t>& next, std::size_t p, std::size_t d) {
  Symbol x = s.at(p);
  if (x.is_static()) return x;
  return next[p] != 0 && next[p] <= d ? Symbol::num(next[p]) : Symbol::num(0);
}

void weiner_links(PSTree& tree) {
  const std::size_t n = tree.n();
  for (auto& v : tree.nodes) v.weiner.clear();
  std::vector<std::size_t> next = next_occurrence(tree.text);
  std::vector<TreeNodeId> ypath;
  for (std::size_t q = 2; q <= n + 1; ++q) {
    ypath.clear();
    for (TreeNodeId y = tree.suffix_node[q - 1];; y = tree.nodes[y].parent) {
      ypath.push_back(y);
      if (y == PSTree::kRoot) break;
    }
    std::reverse(ypath.begin(), ypath.end());  // by increasing depth
    for (TreeNodeId v = tree.suffix_node[q];; v = tree.nodes[v].parent) {
      std::size_t d = tree.nodes[v].depth;
      Symbol label = prepend_label(tree.text, next, q - 1, d);
      auto it = std::find_if(ypath.begin(), ypath.end(), [&](TreeNodeId y) { return tree.nodes[y].depth >= d + 1; });
      if (it == ypath.end()) throw StructuralError("suffix " + std::to_string(q - 1) + " is too short");
      WeinerLink link{*it, tree.nodes[*it].depth == d + 1};
      if (const WeinerLink* old = tree.nodes[v].weiner.find(label)) {
        if (!(*old == link)) throw StructuralError("inconsistent Weiner link targets");
      } else {
        tree.nodes[v].weiner.set(label, link);
      }
      if (v == PSTree::kRoot) break;
    }
  }
}

void upward_from_weiner(PSTree& tree) {
  for (auto& v : tree.nodes) {
    v.upward.clear();
    v.weiner.for_each([&](Symbol k, const WeinerLink& l) {
      if (l.is_explicit)
        v.upward.set(k, UpwardLink{l.target, std::nullopt});
      else
        v.upward.set(k, UpwardLink{tree.nodes[l.target].parent, tree.first_symbol(l.target)});
    });
  }
}

TreeNodeId simulate_weiner(const PSTree& tree, const UpwardLink& link) {
  if (!link.b) return link.to;
  const TreeNodeId* c = tree.nodes[link.to].children.find(*link.b);
  if (!c) throw StructuralError("upward link names a missing child");
  return *c;
}

Pdawg pdawg_from_links(const PSTree& tree) {
  const std::size_t n = tree.n();
  Pdawg g;
  for (TreeNodeId t = 1; t < tree.nodes.size(); ++t) g.add_node(static_cast<std::int64_t>(tree.nodes[t].depth));
  for (TreeNodeId t = 1; t < tree.nodes.size(); ++t) g.set_slink(t + 1, tree.nodes[t].parent + 1);
  for (TreeNodeId t = 0; t < tree.nodes.size(); ++t) {
    tree.nodes[t].weiner.for_each([&](Symbol k, const WeinerLink& l) {
      g.set_edge(t + 1, k, l.target + 1);
      if (g.node(t + 1).edges.find(k)->primary != l.is_explicit)
        throw StructuralError("explicit flag disagrees with depths");
    });
  }
  g.clear_sinks();
  for (std::size_t i = 0; i <= n; ++i) g.push_sink(tree.suffix_node[n + 1 - i] + 1);
  g.set_text(pv_reverse(tree.text));
  return g;
}

Pdawg offline_build_pdawg(const PSTree& input, OfflineStats* stats) {
  PSTree tree = input;
  const std::size_t n = tree.n();
  if (tree.suffix_node.size() != n + 2) throw StructuralError("suffix node table has the wrong size");
  for (TreeNodeId c = 1; c < tree.nodes.size(); ++c) {
    if (tree.nodes[tree.nodes[c].parent].depth >= tree.nodes[c].depth)
      throw StructuralError("depth inversion at node " + std::to_string(c));
  }
  for (auto& v : tree.nodes) v.weiner.clear();
  std::vector<std::size_t> next = next_occurrence(tree.text);

  // Step 1: the link of every suffix node to the suffix one symbol longer.
  struct Seed {
    Symbol label;
    TreeNodeId from, to;
  };
  std::vector<Seed> seeds;
  for (std::size_t q = 2; q <= n + 1; ++q) {
    TreeNodeId v = tree.suffix_node[q], u = tree.suffix_node[q - 1];
    std::size_t d = tree.nodes[v].depth;
    if (d != n + 1 - q || tree.nodes[u].depth != d + 1) throw StructuralError("suffix node depths are inconsistent");
    seeds.push_back({prepend_label(tree.text, next, q - 1, d), v, u});
  }

  // Step 2: group by label.
  std::stable_sort(seeds.begin(), seeds.end(), [](const Seed& a, const Seed& b) { return a.label < b.label; });

  // Step 3: push every seed towards the root until an ancestor already has
  // the adjusted label; above that point the links exist by induction.
  OfflineStats st;
  st.leaf_links = seeds.size();
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    if (i == 0 || seeds[i].label != seeds[i - 1].label) ++st.groups;
    const Seed& s = seeds[i];
    TreeNodeId x = s.from, t = s.to;
    for (;;) {
      std::size_t d = tree.nodes[x].depth;
      Symbol label = tau(s.label, d);
      if (tree.nodes[x].weiner.contains(label)) break;
      while (t != PSTree::kRoot && tree.nodes[tree.nodes[t].parent].depth >= d + 1) t = tree.nodes[t].parent;
      tree.nodes[x].weiner.set(label, WeinerLink{t, tree.nodes[t].depth == d + 1});
      ++st.propagated;
      if (x == PSTree::kRoot) break;
      x = tree.nodes[x].parent;
    }
  }
  if (stats) *stats = st;
  return pdawg_from_links(tree);
}

std::string DualityReport::json() const {
  nlohmann::ordered_json j;
  for (std::size_t i = 0; i < items.size(); ++i) {
    nlohmann::ordered_json item{{"pass", items[i].pass}};
    if (!items[i].pass) item["witness"] = items[i].witness;
    j["item" + std::to_string(i + 1)] = item;
  }
  return j.dump();
}

DualityReport verify_duality(const Pdawg& g, const PSTree& tree) {
  DualityReport r;
  auto fail = [&](int item, const std::string& why) {
    if (r.items[item].pass) {
      r.items[item].pass = false;
      r.items[item].witness = why;
    }
  };
  const PvString& w = g.text();
  const std::vector<std::int64_t> first_end = min_end_positions(g);
  std::unordered_map<PvString, TreeNodeId, PvStringHash> by_path;
  for (TreeNodeId t = 0; t < tree.nodes.size(); ++t) by_path.emplace(tree.path(t), t);

  std::vector<std::optional<TreeNodeId>> pr(g.arena_size());
  std::vector<PvString> maxs(g.arena_size());
  for (NodeId u = Pdawg::kSource; u < g.arena_size(); ++u) {
    auto e = static_cast<std::size_t>(first_end[u]);
    auto len = static_cast<std::size_t>(g.len(u));
    maxs[u] = slice(w, e - len + 1, e);
    auto it = by_path.find(pv_reverse(maxs[u]));
    if (it == by_path.end())
      fail(0, "node " + maxs[u].str() + " has no tree node " + pv_reverse(maxs[u]).str());
    else
      pr[u] = it->second;
  }
  if (g.arena_size() - 1 != tree.nodes.size())
    fail(0, std::to_string(g.arena_size() - 1) + " PDAWG nodes vs " + std::to_string(tree.nodes.size()) + " tree nodes");

  std::size_t primary = 0, secondary = 0, expl = 0, impl = 0;
  for (const auto& v : tree.nodes)
    v.weiner.for_each([&](Symbol, const WeinerLink& l) { ++(l.is_explicit ? expl : impl); });
  for (NodeId u = Pdawg::kSource; u < g.arena_size(); ++u) {
    g.node(u).edges.for_each([&](Symbol a, const Edge& e) {
      int item = e.primary ? 1 : 2;
      ++(e.primary ? primary : secondary);
      std::string what = std::string(e.primary ? "primary" : "secondary") + " edge (" + maxs[u].str() + ", " +
                         symbol_label(a) + ", " + maxs[e.target].str() + ")";
      if (!pr[u] || !pr[e.target]) return fail(item, what + " has no tree image");
      const WeinerLink* l = tree.nodes[*pr[u]].weiner.find(a);
      if (!l || l->target != *pr[e.target]) return fail(item, what + " has no matching Weiner link");
      if (l->is_explicit != e.primary) return fail(item, what + " maps to a link of the other kind");
    });
  }
  if (primary != expl)
    fail(1, std::to_string(primary) + " primary edges vs " + std::to_string(expl) + " explicit links");
  if (secondary != impl)
    fail(2, std::to_string(secondary) + " secondary edges vs " + std::to_string(impl) + " implicit links");

  for (NodeId u = Pdawg::kSource + 1; u < g.arena_size(); ++u) {
    if (!pr[u] || !pr[g.slink(u)]) {
      fail(3, "suffix link of " + maxs[u].str() + " has no tree image");
      continue;
    }
    if (tree.nodes[*pr[u]].parent != *pr[g.slink(u)] || *pr[u] == PSTree::kRoot)
      fail(3, "suffix link " + maxs[u].str() + " -> " + maxs[g.slink(u)].str() + " is not a tree edge");
  }
  return r;
}

std::vector<std::string> check_monotonicity(const PSTree& tree) {
  std::vector<std::string> out;
  for (TreeNodeId u = 0; u < tree.nodes.size(); ++u) {
    tree.nodes[u].weiner.for_each([&](Symbol k, const WeinerLink&) {
      for (TreeNodeId v = u; v != PSTree::kRoot;) {
        v = tree.nodes[v].parent;
        Symbol want = tau(k, tree.nodes[v].depth);
        if (!tree.nodes[v].weiner.contains(want))
          out.push_back("node " + tree.path(u).str() + " has label " + symbol_label(k) + " but ancestor " +
                        tree.path(v).str() + " lacks " + symbol_label(want));
      }
    });
  }
  return out;
}

std::vector<std::tuple<PvString, PvString, bool>> tree_signature(const PSTree& tree) {
  std::vector<std::tuple<PvString, PvString, bool>> out;
  for (TreeNodeId t = 0; t < tree.nodes.size(); ++t)
    out.emplace_back(tree.path(t), tree.path(tree.nodes[t].parent), tree.nodes[t].is_suffix);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::tuple<PvString, PvString, bool>> tree_signature(const NaivePSTree& tree) {
  std::vector<std::tuple<PvString, PvString, bool>> out;
  for (std::size_t t = 0; t < tree.nodes.size(); ++t)
    out.emplace_back(tree.path(t), tree.path(tree.nodes[t].parent), tree.nodes[t].is_suffix);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pdawg
