#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "tgx/rng.hpp"
#include "tgx/static_graph.hpp"
#include "tgx/temporal_graph.hpp"
#include "tgx/walk.hpp"

namespace tgx {

// One transit line: a temporal walk that repeats with period equal to the
// timestep of its final step.
struct Route {
  TemporalWalk walk;
  int period() const { return walk.length(); }

  friend bool operator==(const Route&, const Route&) = default;
};

// Per-vertex activation order of its incoming edges.
struct SequentialSchedule {
  std::map<Vertex, std::vector<Edge>> perms;
};

// Which vertices broadcast at each timestep (index t-1).
struct BroadcastSchedule {
  std::vector<std::vector<Vertex>> active_sets;
};

struct StarInstance {
  TemporalGraph graph;
  Vertex start;  // the leaf the sparse timesteps keep connected
};

// Star on n >= 3 vertices with centre 0. The full star is active at
// t = 1, r+1, 2r+1, ...; only edge (0,1) is active otherwise. The designated
// start is vertex 1 and the lifetime is r(2n-1).
StarInstance gen_star_lower_bound(Vertex n, int r);

// Expand periodic routes into snapshots: a route edge with offset o is active
// at every t with ((t-1) mod L)+1 == o, L being the route period. Self-loops
// are permitted (delay stops). Requires lifetime >= max period.
TemporalGraph gen_transport(const std::vector<Route>& routes, Vertex n, int lifetime);

// Each vertex activates exactly one incoming edge per timestep, cycling
// through its permutation. `underlying` must be a symmetric directed graph
// and `schedule` must permute the in-edges of every vertex.
TemporalGraph gen_sequential(const StaticGraph& underlying,
                             const SequentialSchedule& schedule, int lifetime);

enum class BroadcastPolicy { round_robin, greedy_random };

struct BroadcastInstance {
  TemporalGraph graph;
  BroadcastSchedule schedule;
};

// Broadcast schedule over a connected undirected graph (taken as symmetric).
// round_robin activates vertex (t-1) mod n; greedy_random draws a random
// subset of the vertices whose neighbours have all acknowledged since their
// previous broadcast. Requires lifetime >= n so every vertex broadcasts.
BroadcastInstance gen_broadcast(const StaticGraph& underlying, BroadcastPolicy policy,
                                int lifetime, std::uint64_t seed = 0);

// Random connected graph in which every edge recurs within any window of f
// consecutive timesteps (activations are placed at random strides <= f).
// lifetime == 0 picks 4*f*n. Deterministic per seed.
TemporalGraph gen_random_frequent(Vertex n, int f, double density,
                                  std::uint64_t seed, int lifetime = 0);

// Helpers shared by the command line tool and the tests.
StaticGraph random_connected_graph(Vertex n, double density, Rng& rng);
StaticGraph to_symmetric_directed(const StaticGraph& undirected);
SequentialSchedule random_sequential_schedule(const StaticGraph& underlying, Rng& rng);

}  // namespace tgx
