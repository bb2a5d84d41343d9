#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "tgx/static_graph.hpp"
#include "tgx/types.hpp"

namespace tgx {

struct TemporalGraphOptions {
  // Off by default; transit instances turn it on for delay loops.
  bool allow_self_loops = false;
};

// Temporal graph: fixed vertex set 0..n-1 and one edge set per timestep,
// timesteps indexed 1..T. Undirected edges are canonicalized and duplicates
// within a timestep collapse. Immutable after construction; a per-edge
// activation bitset makes "is e active at t" an O(1) lookup.
class TemporalGraph {
 public:
  TemporalGraph(Vertex n, bool directed, std::vector<std::vector<Edge>> snapshots,
                TemporalGraphOptions options = {});

  Vertex num_vertices() const { return n_; }
  int lifetime() const { return lifetime_; }
  bool directed() const { return directed_; }

  // Edge set of timestep t, t in [1, lifetime]; sorted.
  const std::vector<Edge>& snapshot(int t) const;

  // Union of all snapshots; sorted.
  const std::vector<Edge>& underlying_edges() const { return underlying_; }
  StaticGraph underlying_graph() const;
  bool has_underlying_edge(Edge e) const;

  // Exact orientation for directed graphs, either orientation otherwise.
  bool is_active(Edge e, int t) const;

  // Smallest t >= t_min with e active, or 0 if e never activates again.
  int next_active(Edge e, int t_min) const;

  // Activity of e per timestep, index t-1. Throws if e is not an underlying
  // edge.
  std::vector<bool> activation_pattern(Edge e) const;

  friend bool operator==(const TemporalGraph& a, const TemporalGraph& b) {
    return a.n_ == b.n_ && a.lifetime_ == b.lifetime_ &&
           a.directed_ == b.directed_ && a.snapshots_ == b.snapshots_;
  }

 private:
  int edge_index(Edge e) const;  // -1 when absent

  Vertex n_;
  int lifetime_;
  bool directed_;
  std::vector<std::vector<Edge>> snapshots_;
  std::vector<Edge> underlying_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<std::vector<std::uint64_t>> activation_;  // [edge][word], bit t-1
};

}  // namespace tgx
