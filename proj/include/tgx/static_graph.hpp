#pragma once

#include <cstdint>
#include <vector>

#include "tgx/types.hpp"

namespace tgx {

// Static graph on vertices 0..n-1, optionally directed, optionally
// edge-weighted. Immutable after construction. Undirected edges are stored
// canonically (smaller endpoint first) and duplicates collapse; weights, when
// present, must be >= 1 and cover every edge.
class StaticGraph {
 public:
  explicit StaticGraph(Vertex n, bool directed = false);
  StaticGraph(Vertex n, bool directed, std::vector<Edge> edges);
  StaticGraph(Vertex n, bool directed, std::vector<Edge> edges,
              std::vector<std::int64_t> weights);

  Vertex num_vertices() const { return n_; }
  bool directed() const { return directed_; }

  // Sorted, deduplicated edge list.
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t num_edges() const { return edges_.size(); }
  bool has_edge(Edge e) const;

  bool weighted() const { return !weights_.empty(); }
  std::int64_t weight(Edge e) const;

  // N(v) = {u : (v,u) in E}; out-neighbours for directed graphs.
  const std::vector<Vertex>& neighbours(Vertex v) const;
  const std::vector<Vertex>& in_neighbours(Vertex v) const;

  // |N(v)|; equals the out-degree on directed graphs.
  int degree(Vertex v) const;
  int out_degree(Vertex v) const { return degree(v); }
  int in_degree(Vertex v) const;
  int min_degree() const;

  // Connectivity of the undirected projection.
  bool is_connected() const;

  // Maximum shortest-walk distance over all vertex pairs; throws on
  // disconnected input (infinite diameter).
  int diameter() const;

  friend bool operator==(const StaticGraph&, const StaticGraph&) = default;

 private:
  void check_vertex(Vertex v) const;

  Vertex n_;
  bool directed_;
  std::vector<Edge> edges_;
  std::vector<std::int64_t> weights_;  // aligned with edges_ when weighted
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::vector<Vertex>> in_adj_;  // directed graphs only
};

}  // namespace tgx
