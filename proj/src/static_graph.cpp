#include "tgx/static_graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <utility>

namespace tgx {

namespace {

struct WeightedEdge {
  Edge e;
  std::int64_t w;
};

}  // namespace

StaticGraph::StaticGraph(Vertex n, bool directed)
    : StaticGraph(n, directed, {}, {}) {}

StaticGraph::StaticGraph(Vertex n, bool directed, std::vector<Edge> edges)
    : StaticGraph(n, directed, std::move(edges), {}) {}

StaticGraph::StaticGraph(Vertex n, bool directed, std::vector<Edge> edges,
                         std::vector<std::int64_t> weights)
    : n_(n), directed_(directed) {
  if (n < 1) throw Error("graph needs at least one vertex");
  const bool weighted = !weights.empty();
  if (weighted && weights.size() != edges.size())
    throw Error("weight list does not match edge list");

  std::vector<WeightedEdge> items;
  items.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    Edge e = directed_ ? edges[i] : edges[i].canonical();
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
      throw Error("edge " + to_string(edges[i]) + " has an endpoint outside [0," +
                  std::to_string(n_ - 1) + "]");
    std::int64_t w = weighted ? weights[i] : 0;
    if (weighted && w < 1) throw Error("edge weights must be >= 1");
    items.push_back({e, w});
  }
  std::sort(items.begin(), items.end(),
            [](const WeightedEdge& a, const WeightedEdge& b) { return a.e < b.e; });
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0 && items[i].e == items[i - 1].e) {
      if (weighted && items[i].w != items[i - 1].w)
        throw Error("conflicting weights for edge " + to_string(items[i].e));
      continue;  // duplicates collapse
    }
    edges_.push_back(items[i].e);
    if (weighted) weights_.push_back(items[i].w);
  }

  adj_.assign(n_, {});
  if (directed_) in_adj_.assign(n_, {});
  for (Edge e : edges_) {
    adj_[e.u].push_back(e.v);
    if (directed_) {
      in_adj_[e.v].push_back(e.u);
    } else if (!e.is_loop()) {
      adj_[e.v].push_back(e.u);
    }
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  for (auto& nb : in_adj_) std::sort(nb.begin(), nb.end());
}

bool StaticGraph::has_edge(Edge e) const {
  Edge k = directed_ ? e : e.canonical();
  return std::binary_search(edges_.begin(), edges_.end(), k);
}

std::int64_t StaticGraph::weight(Edge e) const {
  if (!weighted()) throw Error("graph is unweighted");
  Edge k = directed_ ? e : e.canonical();
  auto it = std::lower_bound(edges_.begin(), edges_.end(), k);
  if (it == edges_.end() || *it != k)
    throw Error("edge " + to_string(e) + " is not in the graph");
  return weights_[static_cast<std::size_t>(it - edges_.begin())];
}

const std::vector<Vertex>& StaticGraph::neighbours(Vertex v) const {
  check_vertex(v);
  return adj_[v];
}

const std::vector<Vertex>& StaticGraph::in_neighbours(Vertex v) const {
  check_vertex(v);
  return directed_ ? in_adj_[v] : adj_[v];
}

int StaticGraph::degree(Vertex v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

int StaticGraph::in_degree(Vertex v) const {
  check_vertex(v);
  return static_cast<int>(directed_ ? in_adj_[v].size() : adj_[v].size());
}

int StaticGraph::min_degree() const {
  int best = degree(0);
  for (Vertex v = 1; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

bool StaticGraph::is_connected() const {
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  std::vector<Vertex> stack = {0};
  seen[0] = 1;
  Vertex count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    auto expand = [&](const std::vector<Vertex>& nb) {
      for (Vertex u : nb) {
        if (!seen[u]) {
          seen[u] = 1;
          ++count;
          stack.push_back(u);
        }
      }
    };
    expand(adj_[v]);
    if (directed_) expand(in_adj_[v]);
  }
  return count == n_;
}

int StaticGraph::diameter() const {
  int best = 0;
  std::vector<int> dist(static_cast<std::size_t>(n_));
  for (Vertex s = 0; s < n_; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<Vertex> queue;
    dist[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop();
      for (Vertex u : adj_[v]) {
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          queue.push(u);
        }
      }
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (dist[v] < 0)
        throw Error("infinite diameter: no walk from " + std::to_string(s) +
                    " to " + std::to_string(v));
      best = std::max(best, dist[v]);
    }
  }
  return best;
}

void StaticGraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_)
    throw Error("vertex " + std::to_string(v) + " out of range [0," +
                std::to_string(n_ - 1) + "]");
}

}  // namespace tgx
