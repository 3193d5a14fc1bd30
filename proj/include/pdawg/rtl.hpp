#pragma once

// Right-to-left online construction of PSTree(S) with upward Weiner links.
// Available when built with PDAWG_FAST_RTL.

#include <vector>

#include "pdawg/pstree.hpp"

namespace pdawg {

struct RtlStep {
  std::size_t step = 0;          // number of suffixes inserted so far
  std::size_t redirections = 0;  // upward links turned explicit onto the new inner node
  std::size_t rehangs = 0;       // implicit links into the split node whose parent changed
  std::size_t climb_visits = 0;
  std::size_t links_created = 0;
  bool split = false;
};

struct RtlCounters {
  std::size_t redirections = 0;
  std::size_t rehangs = 0;
  std::size_t climb_visits = 0;
  std::size_t links_created = 0;
  std::size_t max_redirections_per_step = 0;
  std::vector<RtlStep> steps;
};

class RtlBuilder {
 public:
  /// `s` is <S>; suffixes are inserted from the shortest to the longest.
  explicit RtlBuilder(PvString s, bool collect_steps = false);

  bool done() const { return q_ == 1; }
  /// Inserts the next longer suffix.
  void step();
  /// Start position of the shortest suffix not yet inserted plus one, i.e.
  /// the tree holds the suffixes of S[q..].
  std::size_t start() const { return q_; }

  const PSTree& tree() const { return tree_; }
  const RtlCounters& counters() const { return counters_; }
  PSTree take() { return std::move(tree_); }

 private:
  bool extends(TreeNodeId w, std::size_t m, Symbol label) const;
  TreeNodeId trans_zero(TreeNodeId w, std::size_t i) const;
  TreeNodeId parent_target(const UpwardLink& l) const;
  void set_link(TreeNodeId src, Symbol label, TreeNodeId target, RtlStep& st);
  TreeNodeId split(TreeNodeId v, std::size_t depth, RtlStep& st);
  void link_split(TreeNodeId mid, TreeNodeId v, RtlStep& st);

  PSTree tree_;
  std::vector<std::size_t> next_;
  std::vector<std::vector<std::pair<TreeNodeId, Symbol>>> implicit_in_;
  std::size_t q_;
  bool collect_;
  RtlCounters counters_;
};

struct RtlResult {
  PSTree tree;
  RtlCounters counters;
};

RtlResult build_pstree_rtl(const PvString& s, bool collect_steps = false);
RtlResult build_pstree_rtl(const PString& s, bool collect_steps = false);

/// Fills `weiner` by simulating every upward link.
void weiner_from_upward(PSTree& tree);

/// PDAWG(reverse S) read off the upward links of an RTL-built tree.
Pdawg upward_links_to_pdawg(const PSTree& tree);

}  // namespace pdawg
