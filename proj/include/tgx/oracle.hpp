#pragma once

#include <optional>
#include <vector>

#include "tgx/temporal_graph.hpp"
#include "tgx/walk.hpp"

namespace tgx {

inline constexpr int kOracleDefaultLimit = 16;

struct OracleResult {
  // Empty when no exploring walk exists within the lifetime.
  std::optional<int> optimum;
  TemporalWalk witness;  // valid exploration when optimum is set
  bool feasible() const { return optimum.has_value(); }
};

// Exact fastest exploration from `start`: earliest-arrival search over
// (vertex, visited-set) states processed timestep by timestep; waiting is
// implicit in keeping earlier states around. Refuses graphs with more than
// n_limit vertices — the table alone is n * 2^n entries.
OracleResult fastest_exploration(const TemporalGraph& g, Vertex start,
                                 int n_limit = kOracleDefaultLimit);

// Decision form: does an exploration of length < ell exist? With
// strict = false the comparison is <= ell.
bool exists_exploration_within(const TemporalGraph& g, Vertex start, int ell,
                               bool strict = true, int n_limit = kOracleDefaultLimit);

// Earliest arrival per (vertex, visited-set), flattened as
// mask * n + vertex; -1 where unreachable. Exposed for cross-checking.
std::vector<int> earliest_arrival_table(const TemporalGraph& g, Vertex start,
                                        int n_limit = kOracleDefaultLimit);

}  // namespace tgx
