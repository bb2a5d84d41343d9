#pragma once

#include <string>
#include <vector>

#include "tgx/instance_classes.hpp"
#include "tgx/temporal_graph.hpp"
#include "tgx/walk.hpp"

namespace tgx {

struct Violation {
  std::string rule;
  int timestep{};  // 0 when not tied to a timestep
  std::string detail;
};

// Content violations are reported, never thrown, so callers can assert on
// specific rules.
struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  void add(std::string rule, int timestep, std::string detail) {
    violations.push_back({std::move(rule), timestep, std::move(detail)});
  }
};

// One "RULE <id> t=<t> <detail>" line per violation.
std::string format_violations(const ValidationReport& report);

// Chaining, strictly increasing timesteps, per-step activation, timestep and
// vertex ranges.
ValidationReport validate_temporal_walk(const TemporalGraph& g, const TemporalWalk& walk);

// Valid temporal walk that starts at `start` and touches every vertex
// (a one-vertex graph is explored by the empty walk).
ValidationReport validate_exploration(const TemporalGraph& g, const TemporalWalk& walk,
                                      Vertex start);

// Every vertex activates exactly its scheduled in-edge at each timestep.
ValidationReport validate_sequential(const TemporalGraph& g,
                                     const SequentialSchedule& schedule);

// As above, with the candidate schedule read off the first in-degree(v)
// timesteps of each vertex.
ValidationReport validate_sequential(const TemporalGraph& g);

struct BroadcastValidation {
  ValidationReport report;
  // Vertices broadcasting at each timestep (index t-1); filled when the
  // structural checks pass.
  std::vector<std::vector<Vertex>> active_sets;
};

// All-or-nothing out-edge activation per vertex and timestep, plus the
// acknowledgement rule: between consecutive broadcasts of v at t1 < t2, every
// neighbour broadcasts at some t' in [t1, t2-1].
BroadcastValidation validate_broadcast(const TemporalGraph& g);

// Every snapshot, as an undirected projection, connects all n vertices.
ValidationReport validate_always_connected(const TemporalGraph& g);

// Each snapshot equals exactly the union of route edges whose offset matches
// t modulo the route period.
ValidationReport validate_transport(const TemporalGraph& g,
                                    const std::vector<Route>& routes);

}  // namespace tgx
