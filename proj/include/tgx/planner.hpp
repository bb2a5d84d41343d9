#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tgx/analysis.hpp"
#include "tgx/static_graph.hpp"
#include "tgx/temporal_graph.hpp"
#include "tgx/walk.hpp"

namespace tgx {

// Underlying graph weighted by per-edge frequency. Directed inputs must be
// symmetric; their undirected projection is weighted with the larger of the
// two orientation frequencies.
StaticGraph build_fw_graph(const TemporalGraph& g, const FrequencyTable& table);

struct MstResult {
  std::vector<Edge> edges;
  std::int64_t weight{};
};

// Kruskal with deterministic tie-breaking by (weight, u, v). Throws on
// disconnected input, naming an unreachable vertex.
MstResult minimum_spanning_tree(const StaticGraph& sg);

// Walk from `start` visiting every vertex of a spanning tree, using at most
// 2n-3 steps for n >= 2: a depth-first tour, deepest subtree last, truncated
// right after the final first visit.
Walk tree_exploration_walk(const StaticGraph& tree, Vertex start);

struct Unschedulable : Error {
  Unschedulable(int step, const std::string& message)
      : Error(message), step_index(step) {}
  int step_index;  // 1-based index of the first step that would not fit
};

// Greedy earliest-activation schedule: step i is placed at the smallest
// t > t_{i-1} with its edge active (t_0 = 0). Throws Unschedulable when the
// lifetime runs out first.
TemporalWalk schedule_walk(const TemporalGraph& g, const Walk& walk);

struct SpanningPlan {
  StaticGraph fw_graph;
  std::vector<Edge> mst_edges;
  std::int64_t mst_weight{};
  Walk tree_walk;
};

struct ExploreReport {
  Vertex n{};
  int lifetime{};
  int max_frequency{};            // F_max
  std::int64_t mst_weight{};
  std::int64_t guarantee_2f{};    // 2 * mst_weight
  std::int64_t guarantee_f2n3{};  // max_frequency * (2n - 3)
  int achieved_length{};
};

struct ExploreResult {
  SpanningPlan plan;
  TemporalWalk walk;
  ExploreReport report;
};

// Full pipeline: frequency table, frequency-weighted graph, minimum spanning
// tree, tree walk, greedy schedule. The achieved length never exceeds
// min(guarantee_2f, guarantee_f2n3).
ExploreResult explore(const TemporalGraph& g, Vertex start);

// "key: value" lines with keys n, T, F_max, mst_weight, guarantee_2F,
// guarantee_f2n3, achieved_length.
std::string format_report(const ExploreReport& report);

}  // namespace tgx
