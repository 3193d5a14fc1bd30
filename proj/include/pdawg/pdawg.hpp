#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "pdawg/edge_map.hpp"
#include "pdawg/pstring.hpp"

namespace pdawg {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

struct Edge {
  NodeId target = kNoNode;
  bool primary = false;
  bool operator==(const Edge&) const = default;
};

struct PdawgNode {
  std::int64_t len = 0;
  NodeId slink = kNoNode;
  EdgeMap<Edge> edges;
};

struct PdawgStats {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t primary_edges = 0;
  std::size_t secondary_edges = 0;
  std::size_t slink_depth = 0;
};

/// Arena id 0 is the dummy node ⊤ (len -1), id 1 the source. ⊤'s edges are
/// virtual: every static symbol and 0 lead to the source. Exported ids are
/// arena ids minus one, so the source is 0 outside the library.
class Pdawg {
 public:
  static constexpr NodeId kTop = 0;
  static constexpr NodeId kSource = 1;

  Pdawg();

  NodeId add_node(std::int64_t len);
  /// Sets child(u, a) = v; the primary flag follows from the lengths.
  void set_edge(NodeId u, Symbol a, NodeId v);
  void set_slink(NodeId u, NodeId v) { nodes_[u].slink = v; }

  const PdawgNode& node(NodeId u) const { return nodes_[u]; }
  std::size_t arena_size() const { return nodes_.size(); }
  std::int64_t len(NodeId u) const { return nodes_[u].len; }
  NodeId slink(NodeId u) const { return nodes_[u].slink; }

  std::optional<NodeId> child(NodeId u, Symbol a) const;
  /// Transition from a class member of length i by the symbol a, where a has
  /// already been adjusted to context length i.
  std::optional<NodeId> trans(NodeId u, std::int64_t i, Symbol a) const;

  NodeId sink() const { return sink_history_.back(); }
  /// Entry i is the node holding the prefix of length i.
  const std::vector<NodeId>& sink_history() const { return sink_history_; }
  void push_sink(NodeId u) { sink_history_.push_back(u); }
  void clear_sinks() { sink_history_.clear(); }

  const PvString& text() const { return text_; }
  void set_text(PvString t) { text_ = std::move(t); }

  /// Counts exclude ⊤ and its virtual edges.
  PdawgStats stats() const;

 private:
  std::vector<PdawgNode> nodes_;
  std::vector<NodeId> sink_history_;
  PvString text_;
};

struct ConstructionStep {
  std::size_t step = 0;
  Symbol symbol;
  std::int64_t prelrs_len = 0;  // length of the pre-LRS node, not of the pre-LRS itself
  std::int64_t lrs_len = 0;
  std::int64_t v_len = 0;
  bool split = false;
  std::size_t redirected = 0;
  std::size_t sink_edges = 0;
};

struct ConstructionStats {
  std::size_t redirected_secondary_edges = 0;
  std::size_t suffix_links_deleted = 0;
  std::vector<ConstructionStep> trace;
};

/// Left-to-right online construction, one pv-symbol at a time.
class OnlineBuilder {
 public:
  explicit OnlineBuilder(bool collect_trace = false);

  /// `a` is the next symbol of the prev-encoded text.
  void append(Symbol a);

  const Pdawg& pdawg() const { return g_; }
  const ConstructionStats& stats() const { return stats_; }
  Pdawg take() { return std::move(g_); }

 private:
  Pdawg g_;
  ConstructionStats stats_;
  bool collect_trace_;
  std::vector<Symbol> text_;
};

struct BuildResult {
  Pdawg pdawg;
  ConstructionStats stats;
};

BuildResult build_online(const PString& t, bool collect_trace = false);
BuildResult build_online(const PvString& w, bool collect_trace = false);

/// Isomorphism-invariant description of a PDAWG. Every node is named by
/// (len, smallest end position); two PDAWGs of the same text are isomorphic
/// exactly when their canonical forms are equal.
struct CanonicalNode {
  using Name = std::pair<std::int64_t, std::int64_t>;
  Name name;
  std::vector<std::tuple<std::uint32_t, Name, bool>> edges;
  std::optional<Name> slink;
  auto operator<=>(const CanonicalNode&) const = default;
};

struct CanonicalPdawg {
  std::vector<CanonicalNode> nodes;
  bool operator==(const CanonicalPdawg&) const = default;
};

CanonicalPdawg canonical_form(const Pdawg& g);
/// Human-readable first difference, or empty when equal.
std::string describe_difference(const CanonicalPdawg& a, const CanonicalPdawg& b);

/// Smallest end position of every node's class, indexed by arena id.
std::vector<std::int64_t> min_end_positions(const Pdawg& g);

/// Nodes reachable in the reversed suffix-link tree, preorder from the source.
std::vector<NodeId> slink_tree_preorder(const Pdawg& g, std::vector<std::vector<NodeId>>* children = nullptr);

std::string symbol_label(Symbol s, const AlphabetSpec* alphabet = nullptr);

}  // namespace pdawg
