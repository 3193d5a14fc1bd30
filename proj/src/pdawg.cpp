#include "pdawg/pdawg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace pdawg {

Pdawg::Pdawg() {
  nodes_.resize(2);
  nodes_[kTop].len = -1;
  nodes_[kSource].len = 0;
  nodes_[kSource].slink = kTop;
  sink_history_.push_back(kSource);
}

NodeId Pdawg::add_node(std::int64_t len) {
  nodes_.emplace_back();
  nodes_.back().len = len;
  return static_cast<NodeId>(nodes_.size() - 1);
}

void Pdawg::set_edge(NodeId u, Symbol a, NodeId v) {
  nodes_[u].edges.set(a, Edge{v, nodes_[v].len == nodes_[u].len + 1});
}

std::optional<NodeId> Pdawg::child(NodeId u, Symbol a) const {
  if (u == kTop) {
    if (a.is_static() || a.is_zero()) return kSource;
    return std::nullopt;
  }
  if (const Edge* e = nodes_[u].edges.find(a)) return e->target;
  return std::nullopt;
}

std::optional<NodeId> Pdawg::trans(NodeId u, std::int64_t i, Symbol a) const {
  if (!a.is_zero()) return child(u, a);
  if (u == kTop) return kSource;
  // W = integer labels b with b = 0 or b > i. In key order these are the
  // suffix starting at Num(i+1), with 0 last, so min≺W is the first entry.
  std::int64_t from = std::max<std::int64_t>(i + 1, 1);
  Symbol start = from > Symbol::kMaxValue ? Symbol::num(0) : Symbol::num(static_cast<std::uint64_t>(from));
  std::pair<Symbol, Edge> w[2];
  std::size_t got = nodes_[u].edges.from(start, w, 2);
  if (got == 0) return std::nullopt;
  if (got == 1) return w[0].second.target;
  return nodes_[w[0].second.target].slink;
}

PdawgStats Pdawg::stats() const {
  PdawgStats s;
  s.nodes = nodes_.size() - 1;
  for (NodeId u = kSource; u < nodes_.size(); ++u) {
    nodes_[u].edges.for_each([&](Symbol, const Edge& e) {
      ++s.edges;
      if (e.primary)
        ++s.primary_edges;
      else
        ++s.secondary_edges;
    });
  }
  // Slinks always point to shorter nodes, so one pass in length order works.
  std::vector<NodeId> order;
  for (NodeId u = kSource; u < nodes_.size(); ++u) order.push_back(u);
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return nodes_[a].len < nodes_[b].len; });
  std::vector<std::size_t> depth(nodes_.size(), 0);
  for (NodeId u : order) {
    if (u == kSource) continue;
    depth[u] = depth[nodes_[u].slink] + 1;
    s.slink_depth = std::max(s.slink_depth, depth[u]);
  }
  return s;
}

OnlineBuilder::OnlineBuilder(bool collect_trace) : collect_trace_(collect_trace) {}

void OnlineBuilder::append(Symbol a) {
  Pdawg& g = g_;
  constexpr NodeId top = Pdawg::kTop;
  const std::int64_t i = static_cast<std::int64_t>(text_.size()) + 1;
  text_.push_back(a);

  ConstructionStep st;
  st.step = static_cast<std::size_t>(i);
  st.symbol = a;

  NodeId u = g.sink();
  NodeId sink = g.add_node(i);

  auto blocked = [&](NodeId x) {
    if (x == top) return false;
    std::int64_t m = g.len(g.slink(x)) + 1;
    return !g.trans(x, m, z_adjust(a, m));
  };
  while (blocked(u)) {
    g.set_edge(u, z_adjust(a, g.len(u)), sink);
    ++st.sink_edges;
    u = g.slink(u);
  }
  st.prelrs_len = g.len(u);

  std::int64_t k;
  NodeId v;
  Symbol au = z_adjust(a, g.len(u));
  if (auto c = g.child(u, au)) {
    k = g.len(u) + 1;
    v = *c;
  } else {
    if (a.is_static()) throw std::logic_error("static symbol reached the non-maximal pre-LRS branch");
    std::uint64_t maxnum = 0;
    bool any = false;
    g.node(u).edges.for_each([&](Symbol b, const Edge&) {
      if (!b.is_num()) return;
      maxnum = any ? (prec_less(maxnum, b.value()) ? b.value() : maxnum) : b.value();
      any = true;
    });
    std::uint64_t cand[2] = {a.value(), maxnum};
    k = static_cast<std::int64_t>(prec_min(cand));
    v = *g.trans(u, k - 1, Symbol::num(0));
    g.set_edge(u, au, sink);
    ++st.sink_edges;
    u = g.slink(u);
  }
  st.lrs_len = k;
  st.v_len = g.len(v);

  if (g.len(v) == k) {
    g.set_slink(sink, v);
  } else {
    st.split = true;
    NodeId vp = g.add_node(k);
    while (u != top) {
      Symbol b = z_adjust(a, g.len(u));
      auto c = g.child(u, b);
      if (!c || *c != v) break;
      g.set_edge(u, b, vp);
      ++st.redirected;
      u = g.slink(u);
    }
    g.node(v).edges.for_each([&](Symbol b, const Edge& e) {
      if (!z_adjust(b, k).is_zero()) g.set_edge(vp, b, e.target);
    });
    if (auto z = g.trans(v, k, Symbol::num(0))) g.set_edge(vp, Symbol::num(0), *z);
    g.set_slink(vp, g.slink(v));
    g.set_slink(v, vp);
    g.set_slink(sink, vp);
    stats_.suffix_links_deleted += 1;
  }
  stats_.redirected_secondary_edges += st.redirected;

  g.push_sink(sink);
  if (collect_trace_) stats_.trace.push_back(st);
}

BuildResult build_online(const PvString& w, bool collect_trace) {
  OnlineBuilder b(collect_trace);
  for (Symbol a : w) b.append(a);
  BuildResult r{b.take(), b.stats()};
  r.pdawg.set_text(w);
  return r;
}

BuildResult build_online(const PString& t, bool collect_trace) { return build_online(prev_encode(t), collect_trace); }

std::vector<NodeId> slink_tree_preorder(const Pdawg& g, std::vector<std::vector<NodeId>>* children_out) {
  std::vector<std::vector<NodeId>> children(g.arena_size());
  for (NodeId u = Pdawg::kSource + 1; u < g.arena_size(); ++u) children[g.slink(u)].push_back(u);
  std::vector<NodeId> order;
  order.reserve(g.arena_size());
  std::vector<NodeId> stack{Pdawg::kSource};
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    order.push_back(u);
    for (auto it = children[u].rbegin(); it != children[u].rend(); ++it) stack.push_back(*it);
  }
  if (children_out) *children_out = std::move(children);
  return order;
}

std::vector<std::int64_t> min_end_positions(const Pdawg& g) {
  const std::size_t N = g.arena_size();
  std::vector<std::int64_t> first_end(N, std::numeric_limits<std::int64_t>::max());
  const auto& hist = g.sink_history();
  for (std::size_t e = 0; e < hist.size(); ++e) first_end[hist[e]] = std::min<std::int64_t>(first_end[hist[e]], e);
  // Children before parents: process by decreasing len.
  std::vector<NodeId> order;
  for (NodeId u = Pdawg::kSource; u < N; ++u) order.push_back(u);
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return g.len(a) > g.len(b); });
  for (NodeId u : order)
    if (u != Pdawg::kSource) first_end[g.slink(u)] = std::min(first_end[g.slink(u)], first_end[u]);
  return first_end;
}

CanonicalPdawg canonical_form(const Pdawg& g) {
  const std::size_t N = g.arena_size();
  std::vector<std::int64_t> first_end = min_end_positions(g);
  auto name = [&](NodeId u) { return CanonicalNode::Name{g.len(u), first_end[u]}; };
  CanonicalPdawg c;
  for (NodeId u = Pdawg::kSource; u < N; ++u) {
    CanonicalNode n;
    n.name = name(u);
    g.node(u).edges.for_each([&](Symbol b, const Edge& e) { n.edges.emplace_back(b.key(), name(e.target), e.primary); });
    if (u != Pdawg::kSource) n.slink = name(g.slink(u));
    c.nodes.push_back(std::move(n));
  }
  std::sort(c.nodes.begin(), c.nodes.end());
  return c;
}

namespace {

std::string show(const CanonicalNode::Name& n) {
  return "(len " + std::to_string(n.first) + ", end " + std::to_string(n.second) + ")";
}

std::string show(const CanonicalNode& n) {
  std::ostringstream os;
  os << show(n.name) << " slink=" << (n.slink ? show(*n.slink) : "-") << " edges=[";
  for (const auto& [k, t, p] : n.edges)
    os << " " << symbol_label(Symbol::from_key(k)) << "->" << show(t) << (p ? "P" : "S");
  os << " ]";
  return os.str();
}

}  // namespace

std::string describe_difference(const CanonicalPdawg& a, const CanonicalPdawg& b) {
  if (a == b) return {};
  std::map<CanonicalNode::Name, const CanonicalNode*> ma, mb;
  for (const auto& n : a.nodes) ma[n.name] = &n;
  for (const auto& n : b.nodes) mb[n.name] = &n;
  for (const auto& [name, n] : ma) {
    auto it = mb.find(name);
    if (it == mb.end()) return "node " + show(name) + " only on the left";
    if (!(*n == *it->second)) return "left " + show(*n) + " vs right " + show(*it->second);
  }
  for (const auto& [name, n] : mb)
    if (!ma.count(name)) return "node " + show(name) + " only on the right";
  return "differ";
}

std::string symbol_label(Symbol s, const AlphabetSpec* alphabet) {
  if (s.is_num()) return std::to_string(s.value());
  return alphabet ? alphabet->name(s.code()) : to_utf8(std::u32string(1, s.code()));
}

}  // namespace pdawg
