#include "tgx/oracle.hpp"

#include <algorithm>
#include <cstdint>

namespace tgx {

namespace {

using Mask = std::uint32_t;

struct Search {
  // best arrival time per state, pending parents for witness reconstruction
  std::vector<int> best;       // mask * n + v, -1 unreachable
  std::vector<std::int64_t> parent;  // packed predecessor state, -1 at the root
  std::optional<int> optimum;
  std::int64_t final_state = -1;
};

// Earliest-arrival sweep over the timesteps. Each newly reached (vertex,
// visited-set) state is appended to a per-vertex list; every oriented edge
// keeps a cursor into its tail vertex's list, so each (edge, state) pair is
// expanded exactly once, at the edge's first activation after the state
// appears.
Search run_search(const TemporalGraph& g, Vertex start, int n_limit,
                  bool stop_at_full) {
  const Vertex n = g.num_vertices();
  if (n > n_limit)
    throw Error("refusing n = " + std::to_string(n) + " vertices (limit " +
                std::to_string(n_limit) + "; the state space grows as 2^n * n * T)");
  if (n > 24)
    throw Error("graphs over 24 vertices exceed the search table regardless of the limit");
  if (start < 0 || start >= n) throw Error("start vertex out of range");

  const Mask full = (Mask{1} << n) - 1;
  const std::size_t states = static_cast<std::size_t>(Mask{1} << n) * n;

  Search search;
  search.best.assign(states, -1);
  search.parent.assign(states, -1);
  auto state_id = [n](Vertex v, Mask mask) {
    return static_cast<std::size_t>(mask) * n + v;
  };

  struct Reached {
    Mask mask;
    int time;
  };
  std::vector<std::vector<Reached>> reached(static_cast<std::size_t>(n));

  const Mask start_mask = Mask{1} << start;
  search.best[state_id(start, start_mask)] = 0;
  reached[start].push_back({start_mask, 0});
  if (start_mask == full) {
    search.optimum = 0;
    search.final_state = static_cast<std::int64_t>(state_id(start, start_mask));
    return search;
  }

  // One cursor per oriented edge: 2i / 2i+1 for the two orientations of
  // underlying edge i (directed graphs only use 2i).
  std::vector<std::size_t> cursor(2 * g.underlying_edges().size(), 0);
  auto oriented_id = [&](Edge e, bool reverse) {
    auto it = std::lower_bound(g.underlying_edges().begin(),
                               g.underlying_edges().end(),
                               g.directed() ? e : e.canonical());
    return 2 * static_cast<std::size_t>(it - g.underlying_edges().begin()) +
           (reverse ? 1 : 0);
  };

  std::vector<std::pair<Vertex, Mask>> pending;
  for (int t = 1; t <= g.lifetime(); ++t) {
    pending.clear();
    auto traverse = [&](Vertex from, Vertex to, std::size_t id) {
      auto& list = reached[from];
      std::size_t& cur = cursor[id];
      while (cur < list.size() && list[cur].time <= t - 1) {
        const Mask next_mask = list[cur].mask | (Mask{1} << to);
        const std::size_t next_id = state_id(to, next_mask);
        if (search.best[next_id] < 0) {
          search.best[next_id] = t;
          search.parent[next_id] =
              static_cast<std::int64_t>(state_id(from, list[cur].mask));
          pending.emplace_back(to, next_mask);
        }
        ++cur;
      }
    };
    for (Edge e : g.snapshot(t)) {
      if (e.is_loop()) continue;
      traverse(e.u, e.v, oriented_id(e, false));
      if (!g.directed()) traverse(e.v, e.u, oriented_id(e, true));
    }
    for (auto [v, mask] : pending) {
      reached[v].push_back({mask, t});
      if (mask == full && !search.optimum) {
        search.optimum = t;
        search.final_state = static_cast<std::int64_t>(state_id(v, mask));
      }
    }
    if (stop_at_full && search.optimum) break;
  }
  return search;
}

}  // namespace

OracleResult fastest_exploration(const TemporalGraph& g, Vertex start, int n_limit) {
  Search search = run_search(g, start, n_limit, /*stop_at_full=*/true);
  OracleResult result;
  if (!search.optimum) return result;
  result.optimum = search.optimum;
  result.witness.start = start;

  const Vertex n = g.num_vertices();
  std::vector<TemporalStep> steps;
  std::int64_t state = search.final_state;
  while (search.parent[static_cast<std::size_t>(state)] >= 0) {
    const std::int64_t prev = search.parent[static_cast<std::size_t>(state)];
    const Vertex v = static_cast<Vertex>(state % n);
    const Vertex u = static_cast<Vertex>(prev % n);
    steps.push_back({{u, v}, search.best[static_cast<std::size_t>(state)]});
    state = prev;
  }
  std::reverse(steps.begin(), steps.end());
  result.witness.steps = std::move(steps);
  return result;
}

bool exists_exploration_within(const TemporalGraph& g, Vertex start, int ell,
                               bool strict, int n_limit) {
  OracleResult result = fastest_exploration(g, start, n_limit);
  if (!result.feasible()) return false;
  return strict ? *result.optimum < ell : *result.optimum <= ell;
}

std::vector<int> earliest_arrival_table(const TemporalGraph& g, Vertex start,
                                        int n_limit) {
  return run_search(g, start, n_limit, /*stop_at_full=*/false).best;
}

}  // namespace tgx
