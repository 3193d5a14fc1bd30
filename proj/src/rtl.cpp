#include "pdawg/rtl.hpp"

#include <algorithm>

namespace pdawg {

namespace {

Symbol num_from(std::size_t v) { return v > Symbol::kMaxValue ? Symbol::num(0) : Symbol::num(v); }

}  // namespace

RtlBuilder::RtlBuilder(PvString s, bool collect_steps) : collect_(collect_steps) {
  tree_.text = std::move(s);
  const std::size_t n = tree_.n();
  next_ = next_occurrence(tree_.text);
  tree_.suffix_node.assign(n + 2, PSTree::kRoot);
  tree_.nodes.emplace_back();
  tree_.nodes[0].is_suffix = true;
  tree_.nodes[0].suffix_start = n + 1;
  tree_.nodes[0].witness = n + 1;
  implicit_in_.emplace_back();
  q_ = n + 1;
}

// Whether the shortest string of w, of length m, can be prepended with the
// current symbol; `label` is already adjusted to depth m.
bool RtlBuilder::extends(TreeNodeId w, std::size_t m, Symbol label) const {
  const auto& up = tree_.nodes[w].upward;
  if (!label.is_zero()) return up.contains(label);
  std::pair<Symbol, UpwardLink> e[1];
  return up.from(num_from(m + 1), e, 1) == 1;
}

TreeNodeId RtlBuilder::parent_target(const UpwardLink& l) const {
  return l.b ? l.to : tree_.nodes[l.to].parent;
}

TreeNodeId RtlBuilder::trans_zero(TreeNodeId w, std::size_t i) const {
  std::pair<Symbol, UpwardLink> e[2];
  std::size_t got = tree_.nodes[w].upward.from(num_from(std::max<std::size_t>(i + 1, 1)), e, 2);
  if (got == 0) throw StructuralError("no 0-transition where one must exist");
  if (got == 1) return simulate_weiner(tree_, e[0].second);
  return parent_target(e[0].second);
}

void RtlBuilder::set_link(TreeNodeId src, Symbol label, TreeNodeId target, RtlStep& st) {
  auto& nodes = tree_.nodes;
  if (nodes[target].depth == nodes[src].depth + 1) {
    nodes[src].upward.set(label, UpwardLink{target, std::nullopt});
  } else {
    nodes[src].upward.set(label, UpwardLink{nodes[target].parent, tree_.first_symbol(target)});
    implicit_in_[target].emplace_back(src, label);
  }
  ++st.links_created;
}

TreeNodeId RtlBuilder::split(TreeNodeId v, std::size_t depth, RtlStep& st) {
  auto& nodes = tree_.nodes;
  const TreeNodeId p = nodes[v].parent;
  const Symbol b_old = tree_.first_symbol(v);
  const Symbol b_new = tree_.symbol_at(v, depth + 1);

  const auto mid = static_cast<TreeNodeId>(nodes.size());
  nodes.emplace_back();
  implicit_in_.emplace_back();
  nodes[mid].parent = p;
  nodes[mid].depth = depth;
  nodes[mid].witness = nodes[v].witness;
  nodes[p].children.set(b_old, mid);
  nodes[mid].children.set(b_new, v);
  nodes[v].parent = mid;

  // Implicit links into v: shallow sources now reach mid with an unchanged
  // upward form, sources one level above mid become explicit links to it,
  // and deeper sources keep v but hang below mid.
  std::vector<std::pair<TreeNodeId, Symbol>> keep;
  for (const auto& [src, label] : implicit_in_[v]) {
    std::size_t ds = nodes[src].depth;
    if (ds + 1 < depth) {
      implicit_in_[mid].emplace_back(src, label);
    } else if (ds + 1 == depth) {
      nodes[src].upward.set(label, UpwardLink{mid, std::nullopt});
      ++st.redirections;
    } else {
      nodes[src].upward.set(label, UpwardLink{mid, b_new});
      ++st.rehangs;
      keep.emplace_back(src, label);
    }
  }
  implicit_in_[v] = std::move(keep);
  return mid;
}

void RtlBuilder::link_split(TreeNodeId mid, TreeNodeId v, RtlStep& st) {
  auto& nodes = tree_.nodes;
  const std::size_t depth = nodes[mid].depth;

  // Links of mid: labels that still fit in depth keep v's targets, the
  // others collapse into one 0-link.
  std::vector<std::pair<Symbol, TreeNodeId>> copies;
  nodes[v].upward.for_each([&](Symbol k, const UpwardLink& l) {
    if (k.is_static() || (!k.is_zero() && k.value() <= depth)) copies.emplace_back(k, simulate_weiner(tree_, l));
  });
  std::pair<Symbol, UpwardLink> e[2];
  std::size_t got = nodes[v].upward.from(num_from(depth + 1), e, 2);
  if (got == 1) copies.emplace_back(Symbol::num(0), simulate_weiner(tree_, e[0].second));
  if (got == 2) copies.emplace_back(Symbol::num(0), parent_target(e[0].second));
  for (const auto& [k, t] : copies) set_link(mid, k, t, st);
}

void RtlBuilder::step() {
  if (done()) return;
  auto& nodes = tree_.nodes;
  const std::size_t n = tree_.n();
  const std::size_t q = q_ - 1;
  const std::size_t len = n - q + 1;
  RtlStep st;
  st.step = len;

  const Symbol k = prepend_label(tree_.text, next_, q, len - 1);
  std::vector<TreeNodeId> pending;
  TreeNodeId w = tree_.suffix_node[q + 1];
  bool above_root = false;
  for (;;) {
    ++st.climb_visits;
    std::size_t m = w == PSTree::kRoot ? 0 : nodes[nodes[w].parent].depth + 1;
    if (extends(w, m, tau(k, m))) break;
    pending.push_back(w);
    if (w == PSTree::kRoot) {
      above_root = true;
      break;
    }
    w = nodes[w].parent;
  }

  std::size_t depth;
  TreeNodeId v;
  if (above_root) {
    depth = 0;
    v = PSTree::kRoot;
  } else if (const UpwardLink* l = nodes[w].upward.find(tau(k, nodes[w].depth))) {
    depth = nodes[w].depth + 1;
    v = simulate_weiner(tree_, *l);
  } else {
    if (k.is_static()) throw StructuralError("static label without a link at the stopping node");
    std::uint64_t maxnum = 0;
    bool any = false;
    nodes[w].upward.for_each([&](Symbol b, const UpwardLink&) {
      if (!b.is_num()) return;
      maxnum = any && !prec_less(maxnum, b.value()) ? maxnum : b.value();
      any = true;
    });
    std::uint64_t cand[2] = {k.value(), maxnum};
    depth = static_cast<std::size_t>(prec_min(cand));
    v = trans_zero(w, depth - 1);
    pending.push_back(w);
  }

  TreeNodeId parent = v;
  if (nodes[v].depth != depth) {
    st.split = true;
    parent = split(v, depth, st);
  }

  const auto leaf = static_cast<TreeNodeId>(nodes.size());
  nodes.emplace_back();
  implicit_in_.emplace_back();
  nodes[leaf].parent = parent;
  nodes[leaf].depth = len;
  nodes[leaf].witness = q;
  nodes[leaf].is_suffix = true;
  nodes[leaf].suffix_start = q;
  Symbol first = tree_.symbol_at(leaf, nodes[parent].depth + 1);
  if (nodes[parent].children.contains(first)) throw StructuralError("new leaf collides with an existing edge");
  nodes[parent].children.set(first, leaf);
  tree_.suffix_node[q] = leaf;

  // The split node's links are derived only once the pending links exist,
  // since the node being split may itself be among them.
  for (TreeNodeId src : pending) set_link(src, tau(k, nodes[src].depth), leaf, st);
  if (st.split) link_split(parent, v, st);

  q_ = q;
  counters_.redirections += st.redirections;
  counters_.rehangs += st.rehangs;
  counters_.climb_visits += st.climb_visits;
  counters_.links_created += st.links_created;
  counters_.max_redirections_per_step = std::max(counters_.max_redirections_per_step, st.redirections);
  if (collect_) counters_.steps.push_back(st);
}

RtlResult build_pstree_rtl(const PvString& s, bool collect_steps) {
  RtlBuilder b(s, collect_steps);
  while (!b.done()) b.step();
  RtlCounters c = b.counters();
  return {b.take(), std::move(c)};
}

RtlResult build_pstree_rtl(const PString& s, bool collect_steps) { return build_pstree_rtl(prev_encode(s), collect_steps); }

void weiner_from_upward(PSTree& tree) {
  for (auto& v : tree.nodes) {
    v.weiner.clear();
    v.upward.for_each([&](Symbol k, const UpwardLink& l) {
      v.weiner.set(k, WeinerLink{simulate_weiner(tree, l), !l.b});
    });
  }
}

Pdawg upward_links_to_pdawg(const PSTree& tree) {
  PSTree copy = tree;
  weiner_from_upward(copy);
  return pdawg_from_links(copy);
}

}  // namespace pdawg
