#include "tgx/validation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tgx {

namespace {

bool vertex_in_range(const TemporalGraph& g, Vertex v) {
  return v >= 0 && v < g.num_vertices();
}

}  // namespace

std::string format_violations(const ValidationReport& report) {
  std::ostringstream out;
  for (const Violation& v : report.violations)
    out << "RULE " << v.rule << " t=" << v.timestep << ' ' << v.detail << '\n';
  return out.str();
}

ValidationReport validate_temporal_walk(const TemporalGraph& g,
                                        const TemporalWalk& walk) {
  ValidationReport report;
  Vertex at = walk.start;
  if (!vertex_in_range(g, walk.start))
    report.add("walk.vertex_range", 0,
               "start vertex " + std::to_string(walk.start) + " out of range");
  int prev_time = 0;
  for (std::size_t i = 0; i < walk.steps.size(); ++i) {
    const TemporalStep& s = walk.steps[i];
    const std::string step_id = "step " + std::to_string(i + 1);
    bool in_range = vertex_in_range(g, s.edge.u) && vertex_in_range(g, s.edge.v);
    if (!in_range)
      report.add("walk.vertex_range", s.time,
                 step_id + " edge " + to_string(s.edge) + " out of range");
    if (s.edge.u != at)
      report.add("walk.chain", s.time,
                 step_id + " starts at " + std::to_string(s.edge.u) +
                     " instead of " + std::to_string(at));
    if (i > 0 && s.time <= prev_time)
      report.add("walk.order", s.time,
                 step_id + " does not move strictly forward in time");
    if (s.time < 1 || s.time > g.lifetime())
      report.add("walk.time_range", s.time,
                 step_id + " timestep outside [1," +
                     std::to_string(g.lifetime()) + "]");
    else if (in_range && !g.is_active(s.edge, s.time))
      report.add("walk.inactive", s.time,
                 step_id + " edge " + to_string(s.edge) + " is not active");
    prev_time = s.time;
    at = s.edge.v;
  }
  return report;
}

ValidationReport validate_exploration(const TemporalGraph& g,
                                      const TemporalWalk& walk, Vertex start) {
  ValidationReport report = validate_temporal_walk(g, walk);
  if (walk.start != start)
    report.add("exploration.start", 0,
               "walk starts at " + std::to_string(walk.start) + ", expected " +
                   std::to_string(start));
  std::vector<char> visited(static_cast<std::size_t>(g.num_vertices()), 0);
  if (vertex_in_range(g, walk.start)) visited[walk.start] = 1;
  for (const TemporalStep& s : walk.steps) {
    if (vertex_in_range(g, s.edge.u)) visited[s.edge.u] = 1;
    if (vertex_in_range(g, s.edge.v)) visited[s.edge.v] = 1;
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (!visited[v])
      report.add("exploration.missing", 0,
                 "vertex " + std::to_string(v) + " is never visited");
  return report;
}

ValidationReport validate_sequential(const TemporalGraph& g,
                                     const SequentialSchedule& schedule) {
  ValidationReport report;
  if (!g.directed()) {
    report.add("sequential.directed", 0, "graph is not directed");
    return report;
  }
  const Vertex n = g.num_vertices();
  std::vector<std::vector<Edge>> in_edges(static_cast<std::size_t>(n));
  for (Edge e : g.underlying_edges()) {
    if (!g.has_underlying_edge(e.reversed()))
      report.add("sequential.symmetric", 0,
                 "underlying graph has " + to_string(e) + " but not " +
                     to_string(e.reversed()));
    in_edges[e.v].push_back(e);
  }
  if (!report.ok()) return report;

  std::vector<const std::vector<Edge>*> perm_of(static_cast<std::size_t>(n), nullptr);
  for (const auto& [v, perm] : schedule.perms) {
    if (!vertex_in_range(g, v)) {
      report.add("sequential.schedule", 0,
                 "schedule refers to vertex " + std::to_string(v) +
                     ", which is out of range");
      return report;
    }
    perm_of[v] = &perm;
  }
  for (Vertex v = 0; v < n; ++v) {
    const bool has_perm = perm_of[v] != nullptr && !perm_of[v]->empty();
    if (in_edges[v].empty()) {
      if (has_perm)
        report.add("sequential.schedule", 0,
                   "vertex " + std::to_string(v) + " has no in-edges to schedule");
      continue;
    }
    if (!has_perm) {
      report.add("sequential.schedule", 0,
                 "no in-edge permutation for vertex " + std::to_string(v));
      continue;
    }
    std::vector<Edge> sorted = *perm_of[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != in_edges[v])
      report.add("sequential.schedule", 0,
                 "schedule does not permute the in-edges of vertex " +
                     std::to_string(v));
  }
  if (!report.ok()) return report;

  for (int t = 1; t <= g.lifetime(); ++t)
    for (Vertex v = 0; v < n; ++v) {
      if (in_edges[v].empty()) continue;
      const auto& perm = *perm_of[v];
      Edge scheduled =
          perm[static_cast<std::size_t>((t - 1) % static_cast<int>(perm.size()))];
      if (!g.is_active(scheduled, t))
        report.add("sequential.missing", t,
                   "scheduled in-edge " + to_string(scheduled) + " of vertex " +
                       std::to_string(v) + " is inactive");
      for (Edge e : in_edges[v])
        if (e != scheduled && g.is_active(e, t))
          report.add("sequential.extra", t,
                     "in-edge " + to_string(e) + " of vertex " +
                         std::to_string(v) + " is active off schedule");
    }
  return report;
}

ValidationReport validate_sequential(const TemporalGraph& g) {
  ValidationReport report;
  if (!g.directed()) {
    report.add("sequential.directed", 0, "graph is not directed");
    return report;
  }
  const Vertex n = g.num_vertices();
  std::vector<std::vector<Edge>> in_edges(static_cast<std::size_t>(n));
  for (Edge e : g.underlying_edges()) in_edges[e.v].push_back(e);

  SequentialSchedule candidate;
  for (Vertex v = 0; v < n; ++v) {
    const int degree = static_cast<int>(in_edges[v].size());
    if (degree == 0) continue;
    if (degree > g.lifetime()) {
      report.add("sequential.schedule", 0,
                 "vertex " + std::to_string(v) + " has more in-edges (" +
                     std::to_string(degree) + ") than timesteps");
      continue;
    }
    std::vector<Edge> perm;
    for (int t = 1; t <= degree; ++t) {
      std::vector<Edge> active;
      for (Edge e : in_edges[v])
        if (g.is_active(e, t)) active.push_back(e);
      if (active.size() != 1) {
        report.add("sequential.schedule", t,
                   "vertex " + std::to_string(v) + " has " +
                       std::to_string(active.size()) +
                       " active in-edges; cannot read a schedule");
        break;
      }
      perm.push_back(active.front());
    }
    if (static_cast<int>(perm.size()) == degree) candidate.perms[v] = std::move(perm);
  }
  if (!report.ok()) return report;
  return validate_sequential(g, candidate);
}

BroadcastValidation validate_broadcast(const TemporalGraph& g) {
  BroadcastValidation out;
  ValidationReport& report = out.report;
  if (!g.directed()) {
    report.add("broadcast.directed", 0, "graph is not directed");
    return out;
  }
  for (Edge e : g.underlying_edges())
    if (!e.is_loop() && !g.has_underlying_edge(e.reversed())) {
      report.add("broadcast.symmetric", 0,
                 "underlying graph has " + to_string(e) + " but not " +
                     to_string(e.reversed()));
      return out;
    }

  const Vertex n = g.num_vertices();
  const int T = g.lifetime();
  std::vector<std::vector<Vertex>> out_nb(static_cast<std::size_t>(n));
  for (Edge e : g.underlying_edges()) out_nb[e.u].push_back(e.v);

  out.active_sets.assign(static_cast<std::size_t>(T), {});
  std::vector<std::vector<int>> active_times(static_cast<std::size_t>(n));
  for (int t = 1; t <= T; ++t)
    for (Vertex v = 0; v < n; ++v) {
      if (out_nb[v].empty()) continue;
      int active = 0;
      for (Vertex u : out_nb[v])
        if (g.is_active({v, u}, t)) ++active;
      if (active == static_cast<int>(out_nb[v].size())) {
        out.active_sets[static_cast<std::size_t>(t - 1)].push_back(v);
        active_times[v].push_back(t);
      } else if (active != 0) {
        report.add("broadcast.partial", t,
                   "vertex " + std::to_string(v) + " activates " +
                       std::to_string(active) + " of " +
                       std::to_string(out_nb[v].size()) + " out-edges");
      }
    }

  for (Vertex v = 0; v < n; ++v)
    for (std::size_t i = 1; i < active_times[v].size(); ++i) {
      const int t1 = active_times[v][i - 1];
      const int t2 = active_times[v][i];
      for (Vertex u : out_nb[v]) {
        // u must broadcast somewhere in [t1, t2-1]; same-round counts.
        auto it = std::lower_bound(active_times[u].begin(), active_times[u].end(), t1);
        if (it == active_times[u].end() || *it > t2 - 1)
          report.add("broadcast.ack", t2,
                     "vertex " + std::to_string(v) + " rebroadcasts before " +
                         std::to_string(u) + " acknowledged (previous broadcast at t=" +
                         std::to_string(t1) + ")");
      }
    }
  return out;
}

ValidationReport validate_always_connected(const TemporalGraph& g) {
  ValidationReport report;
  const Vertex n = g.num_vertices();
  if (n == 1) return report;
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (int t = 1; t <= g.lifetime(); ++t) {
    for (auto& nb : adj) nb.clear();
    for (Edge e : g.snapshot(t)) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> stack = {0};
    seen[0] = 1;
    Vertex count = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : adj[v])
        if (!seen[u]) {
          seen[u] = 1;
          ++count;
          stack.push_back(u);
        }
    }
    if (count != n)
      for (Vertex v = 0; v < n; ++v)
        if (!seen[v]) {
          report.add("always_connected.snapshot", t,
                     "snapshot is disconnected: vertex " + std::to_string(v) +
                         " unreachable from vertex 0");
          break;
        }
  }
  return report;
}

ValidationReport validate_transport(const TemporalGraph& g,
                                    const std::vector<Route>& routes) {
  ValidationReport report;
  if (g.directed()) {
    report.add("transport.directed", 0, "transit graphs are undirected");
    return report;
  }
  const Vertex n = g.num_vertices();
  for (std::size_t i = 0; i < routes.size(); ++i) {
    const auto& steps = routes[i].walk.steps;
    const std::string route_id = "route " + std::to_string(i);
    if (steps.empty()) {
      report.add("transport.route", 0, route_id + " has no steps");
      continue;
    }
    if (!routes[i].walk.is_chained())
      report.add("transport.route", 0, route_id + " steps do not chain");
    int prev = 0;
    for (const TemporalStep& s : steps) {
      if (s.edge.u < 0 || s.edge.u >= n || s.edge.v < 0 || s.edge.v >= n)
        report.add("transport.route", s.time,
                   route_id + " edge " + to_string(s.edge) + " out of range");
      if (s.time <= prev)
        report.add("transport.route", s.time,
                   route_id + " offsets not strictly increasing");
      prev = s.time;
    }
  }
  if (!report.ok()) return report;

  for (int t = 1; t <= g.lifetime(); ++t) {
    std::set<Edge> expected;
    for (const Route& route : routes) {
      const int offset = (t - 1) % route.period() + 1;
      for (const TemporalStep& s : route.walk.steps)
        if (s.time == offset) expected.insert(s.edge.canonical());
    }
    for (Edge e : g.snapshot(t))
      if (!expected.contains(e))
        report.add("transport.extra", t,
                   "edge " + to_string(e) + " is active but no route schedules it");
    for (Edge e : expected)
      if (!g.is_active(e, t))
        report.add("transport.missing", t,
                   "edge " + to_string(e) + " is scheduled but inactive");
  }
  return report;
}

}  // namespace tgx
