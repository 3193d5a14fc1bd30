#pragma once

#include <optional>
#include <vector>

#include "pdawg/pdawg.hpp"

namespace pdawg {

/// The node reached by reading p from the source, if p is a factor.
std::optional<NodeId> find_node(const Pdawg& g, const PvString& p);

bool p_match_query(const Pdawg& g, const PvString& p);
bool p_match_query(const Pdawg& g, const PString& p);

/// End positions of a node's class are the sink-history indices found in
/// its subtree of the reversed suffix-link tree. A preorder numbering makes
/// every subtree a contiguous block of `positions`.
class OccurrenceIndex {
 public:
  struct Interval {
    std::uint32_t enter = 0, exit = 0;  // half-open block in positions()
    bool operator==(const Interval&) const = default;
  };

  explicit OccurrenceIndex(Pdawg g);
  /// Restores a stored index; throws std::runtime_error when the stored
  /// intervals disagree with the graph.
  OccurrenceIndex(Pdawg g, std::vector<Interval> intervals, std::vector<std::uint32_t> positions);

  const Pdawg& pdawg() const { return g_; }
  const std::vector<Interval>& intervals() const { return intervals_; }
  const std::vector<std::uint32_t>& positions() const { return positions_; }

  /// Sorted end positions of the class of u.
  std::vector<std::size_t> rpos(NodeId u) const;
  /// Sorted 1-based end positions of p. The empty pattern yields 0..n.
  std::vector<std::size_t> locate(const PvString& p) const;
  std::vector<std::size_t> locate(const PString& p) const;

 private:
  void compute(std::vector<Interval>& iv, std::vector<std::uint32_t>& pos) const;

  Pdawg g_;
  std::vector<Interval> intervals_;
  std::vector<std::uint32_t> positions_;
};

}  // namespace pdawg
