#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdawg/edge_map.hpp"
#include "pdawg/oracle.hpp"
#include "pdawg/pdawg.hpp"

namespace pdawg {

using TreeNodeId = std::uint32_t;

class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct WeinerLink {
  TreeNodeId target = 0;
  bool is_explicit = false;
  bool operator==(const WeinerLink&) const = default;
};

/// Explicit links point at their target (b absent). Implicit links point at
/// the target's parent, with b the first symbol of the edge down to it.
struct UpwardLink {
  TreeNodeId to = 0;
  std::optional<Symbol> b;
  bool operator==(const UpwardLink&) const = default;
};

struct PSTreeNode {
  TreeNodeId parent = 0;
  std::size_t depth = 0;
  std::size_t witness = 0;  // start (1-based) of a suffix passing through this node
  bool is_suffix = false;
  std::size_t suffix_start = 0;
  EdgeMap<TreeNodeId> children;  // keyed by first symbol of the edge label
  EdgeMap<WeinerLink> weiner;
  EdgeMap<UpwardLink> upward;
};

/// Parameterized suffix tree of a p-string S. Node 0 is the root and
/// suffix_node[q] is the node of suffix q (q = n+1 is the root).
struct PSTree {
  std::vector<PSTreeNode> nodes;
  PvString text;  // <S>
  std::vector<TreeNodeId> suffix_node;

  static constexpr TreeNodeId kRoot = 0;

  std::size_t n() const { return text.size(); }
  /// Symbol at depth j on the path to u.
  Symbol symbol_at(TreeNodeId u, std::size_t j) const { return suffix_symbol(text, nodes[u].witness, j); }
  Symbol first_symbol(TreeNodeId u) const { return symbol_at(u, nodes[nodes[u].parent].depth + 1); }
  std::vector<Symbol> edge_label(TreeNodeId u) const;
  PvString path(TreeNodeId u) const;
  std::size_t link_count() const;
};

PSTree pstree_from_naive(const NaivePSTree& naive);

/// Reads PSTree(reverse T) off the suffix links of PDAWG(T).
PSTree suffix_link_tree_as_pstree(const Pdawg& g);

/// Prepend label of S[p] in front of a window of length d starting at p+1:
/// the static symbol, or the distance to the next occurrence of the
/// parameter if it lies within the window, else 0. `next` holds forward
/// distances (0 when none).
Symbol prepend_label(const PvString& s, const std::vector<std::size_t>& next, std::size_t p, std::size_t d);
std::vector<std::size_t> next_occurrence(const PvString& s);

/// τ: the label of the same prepend as seen from an ancestor of depth d.
inline Symbol tau(Symbol k, std::size_t d) { return k.is_num() && k.value() > d ? Symbol::num(0) : k; }

/// Fills every node's `weiner` map by definition. Throws StructuralError if
/// the tree is not a p-suffix tree of its text.
void weiner_links(PSTree& tree);

/// Derives `upward` from `weiner`.
void upward_from_weiner(PSTree& tree);
TreeNodeId simulate_weiner(const PSTree& tree, const UpwardLink& link);

struct OfflineStats {
  std::size_t leaf_links = 0;
  std::size_t groups = 0;
  std::size_t propagated = 0;
};

/// PDAWG(reverse S) from PSTree(S) without links: leaf links, sorting by
/// label, bottom-up propagation. Existing links in `tree` are ignored.
Pdawg offline_build_pdawg(const PSTree& tree, OfflineStats* stats = nullptr);

/// Builds the PDAWG whose nodes are the tree nodes, whose edges are the
/// Weiner links and whose suffix links are the tree edges.
Pdawg pdawg_from_links(const PSTree& tree);

struct DualityItem {
  bool pass = true;
  std::string witness;
};

struct DualityReport {
  std::array<DualityItem, 4> items;
  bool all() const { return items[0].pass && items[1].pass && items[2].pass && items[3].pass; }
  std::string json() const;
};

/// Checks the node, primary/explicit, secondary/implicit and
/// suffix-link/tree-edge correspondences. `tree` must carry Weiner links.
DualityReport verify_duality(const Pdawg& g, const PSTree& tree);

/// Violations of the Weiner-link monotonicity property, empty if none.
std::vector<std::string> check_monotonicity(const PSTree& tree);

/// Sorted (path, parent path, is_suffix) triples; equal for equal trees.
std::vector<std::tuple<PvString, PvString, bool>> tree_signature(const PSTree& tree);
std::vector<std::tuple<PvString, PvString, bool>> tree_signature(const NaivePSTree& tree);

}  // namespace pdawg
