#include "tgx/instance_classes.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace tgx {

namespace {

void check_route(const Route& route, Vertex n, std::size_t route_index) {
  const auto& steps = route.walk.steps;
  auto fail = [&](const std::string& why) {
    throw Error("malformed route " + std::to_string(route_index) + ": " + why);
  };
  if (steps.empty()) fail("no steps");
  if (!route.walk.is_chained()) fail("steps do not chain");
  int prev = 0;
  for (const TemporalStep& s : steps) {
    if (s.edge.u < 0 || s.edge.u >= n || s.edge.v < 0 || s.edge.v >= n)
      fail("edge " + to_string(s.edge) + " out of range");
    if (s.time <= prev) fail("offsets not strictly increasing");
    prev = s.time;
  }
}

}  // namespace

StarInstance gen_star_lower_bound(Vertex n, int r) {
  if (n < 3) throw Error("star instance needs n >= 3");
  if (r < 1) throw Error("regularity parameter must be >= 1");

  std::vector<Edge> full_star;
  for (Vertex leaf = 1; leaf < n; ++leaf) full_star.push_back({0, leaf});

  const int lifetime = r * (2 * n - 1);
  std::vector<std::vector<Edge>> snapshots(static_cast<std::size_t>(lifetime));
  for (int t = 1; t <= lifetime; ++t)
    snapshots[static_cast<std::size_t>(t - 1)] =
        ((t - 1) % r == 0) ? full_star : std::vector<Edge>{{0, 1}};
  return StarInstance{TemporalGraph(n, false, std::move(snapshots)), 1};
}

TemporalGraph gen_transport(const std::vector<Route>& routes, Vertex n, int lifetime) {
  if (routes.empty()) throw Error("transport graph needs at least one route");
  int max_period = 0;
  for (std::size_t i = 0; i < routes.size(); ++i) {
    check_route(routes[i], n, i);
    max_period = std::max(max_period, routes[i].period());
  }
  if (lifetime < max_period)
    throw Error("lifetime must be at least the longest route period (" +
                std::to_string(max_period) + ")");

  std::vector<std::vector<Edge>> snapshots(static_cast<std::size_t>(lifetime));
  for (int t = 1; t <= lifetime; ++t) {
    for (const Route& route : routes) {
      const int offset = (t - 1) % route.period() + 1;
      for (const TemporalStep& s : route.walk.steps)
        if (s.time == offset)
          snapshots[static_cast<std::size_t>(t - 1)].push_back(s.edge);
    }
  }
  return TemporalGraph(n, false, std::move(snapshots), {.allow_self_loops = true});
}

TemporalGraph gen_sequential(const StaticGraph& underlying,
                             const SequentialSchedule& schedule, int lifetime) {
  if (!underlying.directed())
    throw Error("sequential connection graphs need a symmetric directed underlying graph");
  if (lifetime < 1) throw Error("lifetime must be >= 1");
  for (Edge e : underlying.edges()) {
    if (e.is_loop()) throw Error("self-loops are not supported here");
    if (!underlying.has_edge(e.reversed()))
      throw Error("underlying graph is not symmetric: missing " +
                  to_string(e.reversed()));
  }

  const Vertex n = underlying.num_vertices();
  std::vector<std::vector<Edge>> in_edges(static_cast<std::size_t>(n));
  for (Edge e : underlying.edges()) in_edges[e.v].push_back(e);

  std::vector<const std::vector<Edge>*> perm_of(static_cast<std::size_t>(n), nullptr);
  for (const auto& [v, perm] : schedule.perms) {
    if (v < 0 || v >= n) throw Error("schedule refers to vertex out of range");
    perm_of[v] = &perm;
  }
  for (Vertex v = 0; v < n; ++v) {
    const auto& expected = in_edges[v];
    const bool has_perm = perm_of[v] != nullptr && !perm_of[v]->empty();
    if (expected.empty()) {
      if (has_perm)
        throw Error("schedule lists in-edges for vertex " + std::to_string(v) +
                    ", which has none");
      continue;
    }
    if (!has_perm)
      throw Error("schedule is missing the in-edge permutation of vertex " +
                  std::to_string(v));
    std::vector<Edge> sorted = *perm_of[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != expected)
      throw Error("schedule does not permute the in-edges of vertex " +
                  std::to_string(v));
  }

  std::vector<std::vector<Edge>> snapshots(static_cast<std::size_t>(lifetime));
  for (int t = 1; t <= lifetime; ++t)
    for (Vertex v = 0; v < n; ++v) {
      if (in_edges[v].empty()) continue;
      const auto& perm = *perm_of[v];
      snapshots[static_cast<std::size_t>(t - 1)].push_back(
          perm[static_cast<std::size_t>((t - 1) % static_cast<int>(perm.size()))]);
    }
  return TemporalGraph(n, true, std::move(snapshots));
}

BroadcastInstance gen_broadcast(const StaticGraph& underlying, BroadcastPolicy policy,
                                int lifetime, std::uint64_t seed) {
  if (underlying.directed())
    throw Error("pass the underlying graph undirected; it is taken as symmetric");
  const Vertex n = underlying.num_vertices();
  if (n < 2) throw Error("broadcast network needs n >= 2");
  for (Edge e : underlying.edges())
    if (e.is_loop()) throw Error("self-loops are not supported here");
  if (!underlying.is_connected())
    throw Error("underlying graph must be connected");
  if (lifetime < n)
    throw Error("lifetime must be >= n so every vertex broadcasts at least once");

  std::vector<std::vector<Vertex>> active_sets(static_cast<std::size_t>(lifetime));
  if (policy == BroadcastPolicy::round_robin) {
    for (int t = 1; t <= lifetime; ++t)
      active_sets[static_cast<std::size_t>(t - 1)] = {(t - 1) % n};
  } else {
    Rng rng(seed);
    std::vector<int> last_active(static_cast<std::size_t>(n), 0);  // 0 = never
    for (int t = 1; t <= lifetime; ++t) {
      std::vector<Vertex> eligible;
      for (Vertex v = 0; v < n; ++v) {
        bool ok = true;
        if (last_active[v] != 0)
          for (Vertex u : underlying.neighbours(v))
            if (last_active[u] < last_active[v]) {
              ok = false;
              break;
            }
        if (ok) eligible.push_back(v);
      }
      std::vector<Vertex> chosen;
      for (int attempt = 0; attempt < 100 && chosen.empty(); ++attempt)
        for (Vertex v : eligible)
          if (rng.bernoulli(0.5)) chosen.push_back(v);
      if (chosen.empty())
        throw Error("no non-empty broadcast set after 100 draws at timestep " +
                    std::to_string(t));
      // Force stragglers in while the remaining timesteps still cover them.
      std::vector<Vertex> missing;
      for (Vertex v = 0; v < n; ++v)
        if (last_active[v] == 0 &&
            std::find(chosen.begin(), chosen.end(), v) == chosen.end())
          missing.push_back(v);
      while (static_cast<int>(missing.size()) > lifetime - t) {
        std::size_t pick = static_cast<std::size_t>(
            rng.uniform_int(0, static_cast<int>(missing.size()) - 1));
        chosen.push_back(missing[pick]);
        missing.erase(missing.begin() + static_cast<std::ptrdiff_t>(pick));
      }
      std::sort(chosen.begin(), chosen.end());
      for (Vertex v : chosen) last_active[v] = t;
      active_sets[static_cast<std::size_t>(t - 1)] = std::move(chosen);
    }
  }

  std::vector<std::vector<Edge>> snapshots(static_cast<std::size_t>(lifetime));
  for (int t = 1; t <= lifetime; ++t)
    for (Vertex v : active_sets[static_cast<std::size_t>(t - 1)])
      for (Vertex u : underlying.neighbours(v))
        snapshots[static_cast<std::size_t>(t - 1)].push_back({v, u});
  return BroadcastInstance{TemporalGraph(n, true, std::move(snapshots)),
                           BroadcastSchedule{std::move(active_sets)}};
}

TemporalGraph gen_random_frequent(Vertex n, int f, double density,
                                  std::uint64_t seed, int lifetime) {
  if (n < 2) throw Error("need n >= 2");
  if (f < 1) throw Error("frequency bound must be >= 1");
  const int T = lifetime > 0 ? lifetime : 4 * f * n;

  Rng rng(seed);
  StaticGraph underlying = random_connected_graph(n, density, rng);

  std::vector<std::vector<Edge>> snapshots(static_cast<std::size_t>(T));
  for (Edge e : underlying.edges()) {
    // Consecutive activations at most f apart, first one within the first f
    // timesteps, last one within the final f: every window of f is hit.
    int t = rng.uniform_int(1, std::min(f, T));
    while (true) {
      snapshots[static_cast<std::size_t>(t - 1)].push_back(e);
      if (t > T - f) break;
      t += rng.uniform_int(1, f);
    }
  }
  return TemporalGraph(n, false, std::move(snapshots));
}

StaticGraph random_connected_graph(Vertex n, double density, Rng& rng) {
  if (n < 1) throw Error("need n >= 1");
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng.bernoulli(density)) edges.push_back({u, v});
    StaticGraph g(n, false, std::move(edges));
    if (g.is_connected()) return g;
  }
  throw Error("no connected graph in 100 draws; density too low for n = " +
              std::to_string(n));
}

StaticGraph to_symmetric_directed(const StaticGraph& undirected) {
  if (undirected.directed()) throw Error("graph is already directed");
  std::vector<Edge> edges;
  edges.reserve(2 * undirected.num_edges());
  for (Edge e : undirected.edges()) {
    edges.push_back(e);
    if (!e.is_loop()) edges.push_back(e.reversed());
  }
  return StaticGraph(undirected.num_vertices(), true, std::move(edges));
}

SequentialSchedule random_sequential_schedule(const StaticGraph& underlying, Rng& rng) {
  if (!underlying.directed())
    throw Error("sequential schedules are built over symmetric directed graphs");
  SequentialSchedule schedule;
  for (Vertex v = 0; v < underlying.num_vertices(); ++v) {
    std::vector<Edge> in_edges;
    for (Vertex u : underlying.in_neighbours(v)) in_edges.push_back({u, v});
    if (in_edges.empty()) continue;
    rng.shuffle(in_edges);
    schedule.perms[v] = std::move(in_edges);
  }
  return schedule;
}

}  // namespace tgx
