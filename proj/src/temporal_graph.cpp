#include "tgx/temporal_graph.hpp"

#include <algorithm>
#include <bit>
#include <utility>

namespace tgx {

TemporalGraph::TemporalGraph(Vertex n, bool directed,
                             std::vector<std::vector<Edge>> snapshots,
                             TemporalGraphOptions options)
    : n_(n),
      lifetime_(static_cast<int>(snapshots.size())),
      directed_(directed),
      snapshots_(std::move(snapshots)) {
  if (n < 1) throw Error("temporal graph needs at least one vertex");
  if (lifetime_ < 1) throw Error("temporal graph needs at least one timestep");

  for (auto& snap : snapshots_) {
    for (Edge& e : snap) {
      if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
        throw Error("edge " + to_string(e) + " has an endpoint outside [0," +
                    std::to_string(n_ - 1) + "]");
      if (e.is_loop() && !options.allow_self_loops)
        throw Error("self-loop " + to_string(e) + " not allowed here");
      if (!directed_) e = e.canonical();
    }
    std::sort(snap.begin(), snap.end());
    snap.erase(std::unique(snap.begin(), snap.end()), snap.end());
  }

  for (const auto& snap : snapshots_)
    underlying_.insert(underlying_.end(), snap.begin(), snap.end());
  std::sort(underlying_.begin(), underlying_.end());
  underlying_.erase(std::unique(underlying_.begin(), underlying_.end()),
                    underlying_.end());

  index_.reserve(underlying_.size());
  for (std::size_t i = 0; i < underlying_.size(); ++i)
    index_[edge_key(underlying_[i])] = static_cast<int>(i);

  const std::size_t words = static_cast<std::size_t>(lifetime_ + 63) / 64;
  activation_.assign(underlying_.size(), std::vector<std::uint64_t>(words, 0));
  for (int t = 1; t <= lifetime_; ++t)
    for (Edge e : snapshots_[static_cast<std::size_t>(t - 1)]) {
      auto& bits = activation_[static_cast<std::size_t>(edge_index(e))];
      bits[static_cast<std::size_t>(t - 1) / 64] |= std::uint64_t{1} << ((t - 1) % 64);
    }
}

const std::vector<Edge>& TemporalGraph::snapshot(int t) const {
  if (t < 1 || t > lifetime_)
    throw Error("timestep " + std::to_string(t) + " out of range [1," +
                std::to_string(lifetime_) + "]");
  return snapshots_[static_cast<std::size_t>(t - 1)];
}

StaticGraph TemporalGraph::underlying_graph() const {
  return StaticGraph(n_, directed_, underlying_);
}

bool TemporalGraph::has_underlying_edge(Edge e) const {
  return edge_index(directed_ ? e : e.canonical()) >= 0;
}

bool TemporalGraph::is_active(Edge e, int t) const {
  if (t < 1 || t > lifetime_) return false;
  int idx = edge_index(directed_ ? e : e.canonical());
  if (idx < 0) return false;
  const auto& bits = activation_[static_cast<std::size_t>(idx)];
  return (bits[static_cast<std::size_t>(t - 1) / 64] >> ((t - 1) % 64)) & 1;
}

int TemporalGraph::next_active(Edge e, int t_min) const {
  int idx = edge_index(directed_ ? e : e.canonical());
  if (idx < 0 || t_min > lifetime_) return 0;
  int from = std::max(t_min, 1) - 1;  // bit position
  const auto& bits = activation_[static_cast<std::size_t>(idx)];
  std::size_t word = static_cast<std::size_t>(from) / 64;
  std::uint64_t mask = bits[word] & (~std::uint64_t{0} << (from % 64));
  while (true) {
    if (mask != 0) {
      int t = static_cast<int>(word * 64) + std::countr_zero(mask) + 1;
      return t <= lifetime_ ? t : 0;
    }
    if (++word >= bits.size()) return 0;
    mask = bits[word];
  }
}

std::vector<bool> TemporalGraph::activation_pattern(Edge e) const {
  int idx = edge_index(directed_ ? e : e.canonical());
  if (idx < 0)
    throw Error("edge " + to_string(e) + " is not in the underlying graph");
  std::vector<bool> pattern(static_cast<std::size_t>(lifetime_));
  const auto& bits = activation_[static_cast<std::size_t>(idx)];
  for (int t = 0; t < lifetime_; ++t)
    pattern[static_cast<std::size_t>(t)] =
        (bits[static_cast<std::size_t>(t) / 64] >> (t % 64)) & 1;
  return pattern;
}

int TemporalGraph::edge_index(Edge e) const {
  auto it = index_.find(edge_key(e));
  return it == index_.end() ? -1 : it->second;
}

}  // namespace tgx
