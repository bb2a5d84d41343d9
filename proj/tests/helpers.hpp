#pragma once

// Test-only reference implementations, kept independent of the library code
// they cross-check: frequencies by explicit window scans, spanning trees by
// exhaustive enumeration, explorations by breadth-first search over
// (vertex, visited-set) states.

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "tgx/rng.hpp"
#include "tgx/static_graph.hpp"
#include "tgx/temporal_graph.hpp"

namespace testutil {

// Smallest f such that every window of f consecutive timesteps contains an
// activation. The pattern must contain at least one activation.
inline int naive_frequency(const std::vector<bool>& active) {
  const int T = static_cast<int>(active.size());
  for (int f = 1; f <= T; ++f) {
    bool every_window_hit = true;
    for (int t = 1; every_window_hit && t <= T + 1 - f; ++t) {
      bool hit = false;
      for (int k = t; !hit && k <= t + f - 1; ++k) hit = active[k - 1];
      every_window_hit = hit;
    }
    if (every_window_hit) return f;
  }
  return T + 1;  // never active
}

inline bool every_window_hit(const std::vector<bool>& active, int f) {
  const int T = static_cast<int>(active.size());
  for (int t = 1; t <= T + 1 - f; ++t) {
    bool hit = false;
    for (int k = t; !hit && k <= t + f - 1; ++k) hit = active[k - 1];
    if (!hit) return false;
  }
  return true;
}

// Smallest r whose three-point agreement test holds at every t in [r+1, T-r].
inline int naive_regularity(const std::vector<bool>& active) {
  const int T = static_cast<int>(active.size());
  for (int r = 1; r <= T; ++r) {
    bool ok = true;
    for (int t = r + 1; ok && t <= T - r; ++t)
      ok = active[t - r - 1] == active[t - 1] && active[t - 1] == active[t + r - 1];
    if (ok) return r;
  }
  return T;
}

// n = 2 temporal graph holding a single undirected edge with the given
// activation pattern.
inline tgx::TemporalGraph single_edge_graph(const std::vector<bool>& pattern) {
  std::vector<std::vector<tgx::Edge>> snapshots(pattern.size());
  for (std::size_t t = 0; t < pattern.size(); ++t)
    if (pattern[t]) snapshots[t].push_back({0, 1});
  return tgx::TemporalGraph(2, false, std::move(snapshots));
}

// Build a temporal graph from explicit per-edge activation timesteps.
inline tgx::TemporalGraph graph_from_activations(
    tgx::Vertex n, int lifetime,
    const std::map<tgx::Edge, std::set<int>>& activations, bool directed = false) {
  std::vector<std::vector<tgx::Edge>> snapshots(static_cast<std::size_t>(lifetime));
  for (const auto& [e, times] : activations)
    for (int t : times) snapshots[static_cast<std::size_t>(t - 1)].push_back(e);
  return tgx::TemporalGraph(n, directed, std::move(snapshots));
}

// Minimum spanning tree weight by enumerating all (n-1)-edge subsets.
inline long long brute_force_mst_weight(const tgx::StaticGraph& sg) {
  const auto& edges = sg.edges();
  const int m = static_cast<int>(edges.size());
  const int k = sg.num_vertices() - 1;
  long long best = -1;
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::function<void(int, int, long long)> choose = [&](int from, int chosen,
                                                        long long weight) {
    if (best >= 0 && weight >= best) return;
    if (chosen == k) {
      std::vector<tgx::Vertex> parent(static_cast<std::size_t>(sg.num_vertices()));
      for (std::size_t i = 0; i < parent.size(); ++i)
        parent[i] = static_cast<tgx::Vertex>(i);
      std::function<tgx::Vertex(tgx::Vertex)> find = [&](tgx::Vertex v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
      };
      int merged = 0;
      for (int idx : pick) {
        tgx::Edge e = edges[static_cast<std::size_t>(idx)];
        tgx::Vertex a = find(e.u), b = find(e.v);
        if (a == b) return;  // cycle, not a tree
        parent[b] = a;
        ++merged;
      }
      if (merged == k && (best < 0 || weight < best)) best = weight;
      return;
    }
    for (int i = from; i <= m - (k - chosen); ++i) {
      tgx::Edge e = edges[static_cast<std::size_t>(i)];
      if (e.is_loop()) continue;
      pick[static_cast<std::size_t>(chosen)] = i;
      choose(i + 1, chosen + 1, weight + sg.weight(e));
    }
  };
  if (k == 0) return 0;
  choose(0, 0, 0);
  return best;  // -1 when disconnected
}

// Fewest edge steps needed to touch every vertex of a static graph starting
// at `start`; -1 when impossible. BFS over (vertex, visited-set).
inline int static_exploration_optimum(const tgx::StaticGraph& sg, tgx::Vertex start) {
  const int n = sg.num_vertices();
  const unsigned full = (1u << n) - 1;
  std::vector<int> dist(static_cast<std::size_t>(n) << n, -1);
  auto id = [n](tgx::Vertex v, unsigned mask) {
    return (static_cast<std::size_t>(mask) * static_cast<std::size_t>(n)) + v;
  };
  std::queue<std::pair<tgx::Vertex, unsigned>> queue;
  const unsigned start_mask = 1u << start;
  dist[id(start, start_mask)] = 0;
  queue.push({start, start_mask});
  while (!queue.empty()) {
    auto [v, mask] = queue.front();
    queue.pop();
    if (mask == full) return dist[id(v, mask)];
    for (tgx::Vertex u : sg.neighbours(v)) {
      unsigned next = mask | (1u << u);
      if (dist[id(u, next)] < 0) {
        dist[id(u, next)] = dist[id(v, mask)] + 1;
        queue.push({u, next});
      }
    }
  }
  return -1;
}

// Random tree by uniform parent attachment.
inline tgx::StaticGraph random_tree(tgx::Vertex n, tgx::Rng& rng) {
  std::vector<tgx::Edge> edges;
  for (tgx::Vertex v = 1; v < n; ++v)
    edges.push_back({static_cast<tgx::Vertex>(rng.uniform_int(0, v - 1)), v});
  return tgx::StaticGraph(n, false, std::move(edges));
}

inline tgx::StaticGraph random_connected_weighted(tgx::Vertex n, double density,
                                                  int max_weight, tgx::Rng& rng) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<tgx::Edge> edges;
    std::vector<std::int64_t> weights;
    for (tgx::Vertex u = 0; u < n; ++u)
      for (tgx::Vertex v = u + 1; v < n; ++v)
        if (rng.bernoulli(density)) {
          edges.push_back({u, v});
          weights.push_back(rng.uniform_int(1, max_weight));
        }
    tgx::StaticGraph g(n, false, edges, weights);
    if (g.is_connected()) return g;
  }
  throw tgx::Error("no connected weighted graph after 200 draws");
}

// Random activation pattern with at least one activation.
inline std::vector<bool> random_pattern(int lifetime, double p, tgx::Rng& rng) {
  std::vector<bool> pattern(static_cast<std::size_t>(lifetime), false);
  bool any = false;
  for (int t = 0; t < lifetime; ++t) {
    pattern[static_cast<std::size_t>(t)] = rng.bernoulli(p);
    any = any || pattern[static_cast<std::size_t>(t)];
  }
  if (!any) pattern[static_cast<std::size_t>(rng.uniform_int(0, lifetime - 1))] = true;
  return pattern;
}

}  // namespace testutil
