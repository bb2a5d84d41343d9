#pragma once

#include <vector>

#include "tgx/types.hpp"

namespace tgx {

// Walk in a static graph: oriented steps whose endpoints chain.
struct Walk {
  Vertex start{};
  std::vector<Edge> steps;

  bool is_chained() const {
    Vertex at = start;
    for (Edge e : steps) {
      if (e.u != at) return false;
      at = e.v;
    }
    return true;
  }

  Vertex end() const { return steps.empty() ? start : steps.back().v; }
  std::size_t length() const { return steps.size(); }

  friend bool operator==(const Walk&, const Walk&) = default;
};

struct TemporalStep {
  Edge edge;  // traversal orientation
  int time{};

  friend bool operator==(const TemporalStep&, const TemporalStep&) = default;
};

// Temporal walk: oriented steps with assigned timesteps. Plain data; legality
// against a graph is the validation module's job. Its length is the timestep
// of the final step.
struct TemporalWalk {
  Vertex start{};
  std::vector<TemporalStep> steps;

  int length() const { return steps.empty() ? 0 : steps.back().time; }

  bool is_chained() const {
    Vertex at = start;
    for (const TemporalStep& s : steps) {
      if (s.edge.u != at) return false;
      at = s.edge.v;
    }
    return true;
  }

  bool strictly_increasing() const {
    for (std::size_t i = 1; i < steps.size(); ++i)
      if (steps[i].time <= steps[i - 1].time) return false;
    return true;
  }

  friend bool operator==(const TemporalWalk&, const TemporalWalk&) = default;
};

}  // namespace tgx
