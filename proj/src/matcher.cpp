#include "pdawg/matcher.hpp"

#include <algorithm>
#include <stdexcept>

namespace pdawg {

std::optional<NodeId> find_node(const Pdawg& g, const PvString& p) {
  if (p.size() > g.text().size()) return std::nullopt;
  NodeId u = Pdawg::kSource;
  for (std::size_t i = 1; i <= p.size(); ++i) {
    auto next = g.trans(u, static_cast<std::int64_t>(i) - 1, p.at(i));
    if (!next) return std::nullopt;
    u = *next;
  }
  return u;
}

bool p_match_query(const Pdawg& g, const PvString& p) { return find_node(g, p).has_value(); }

bool p_match_query(const Pdawg& g, const PString& p) { return p_match_query(g, prev_encode(p)); }

OccurrenceIndex::OccurrenceIndex(Pdawg g) : g_(std::move(g)) { compute(intervals_, positions_); }

OccurrenceIndex::OccurrenceIndex(Pdawg g, std::vector<Interval> intervals, std::vector<std::uint32_t> positions)
    : g_(std::move(g)), intervals_(std::move(intervals)), positions_(std::move(positions)) {
  std::vector<Interval> iv;
  std::vector<std::uint32_t> pos;
  compute(iv, pos);
  if (iv != intervals_ || pos != positions_) throw std::runtime_error("occurrence index does not match the graph");
}

void OccurrenceIndex::compute(std::vector<Interval>& iv, std::vector<std::uint32_t>& pos) const {
  const std::size_t N = g_.arena_size();
  std::vector<std::int64_t> own(N, -1);
  const auto& hist = g_.sink_history();
  for (std::size_t e = 0; e < hist.size(); ++e) own[hist[e]] = static_cast<std::int64_t>(e);

  std::vector<std::vector<NodeId>> children;
  std::vector<NodeId> order = slink_tree_preorder(g_, &children);
  iv.assign(N, Interval{});
  pos.clear();
  pos.reserve(hist.size());
  for (NodeId u : order) {
    iv[u].enter = static_cast<std::uint32_t>(pos.size());
    if (own[u] >= 0) pos.push_back(static_cast<std::uint32_t>(own[u]));
  }
  // Subtree sizes in positions, accumulated bottom-up over the preorder.
  std::vector<std::uint32_t> count(N, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    NodeId u = *it;
    count[u] += own[u] >= 0 ? 1 : 0;
    for (NodeId c : children[u]) count[u] += count[c];
    iv[u].exit = iv[u].enter + count[u];
  }
}

std::vector<std::size_t> OccurrenceIndex::rpos(NodeId u) const {
  const Interval& iv = intervals_[u];
  std::vector<std::size_t> out(positions_.begin() + iv.enter, positions_.begin() + iv.exit);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> OccurrenceIndex::locate(const PvString& p) const {
  auto u = find_node(g_, p);
  if (!u) return {};
  return rpos(*u);
}

std::vector<std::size_t> OccurrenceIndex::locate(const PString& p) const { return locate(prev_encode(p)); }

}  // namespace pdawg
