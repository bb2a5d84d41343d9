#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "tgx/temporal_graph.hpp"

namespace tgx {

// Per-edge frequencies over the underlying edge set, optionally with
// regularities. All entries are in [1, lifetime].
class FrequencyTable {
 public:
  const std::vector<Edge>& edges() const { return edges_; }
  int frequency(Edge e) const;
  std::optional<int> regularity(Edge e) const;
  bool has_regularity() const { return !regularity_.empty(); }

  // F_max = max_e f_e; 0 for an edgeless graph.
  int max_frequency() const { return max_frequency_; }

 private:
  friend FrequencyTable frequency_table(const TemporalGraph&, bool, bool);
  int index_of(Edge e) const;

  bool directed_ = false;
  std::vector<Edge> edges_;
  std::vector<int> frequency_;
  std::vector<int> regularity_;
  std::unordered_map<std::uint64_t, int> index_;
  int max_frequency_ = 0;
};

// Smallest window length such that every window of that many consecutive
// timesteps contains an activation of e. Computed as the longest inactive run
// (prefix and suffix included) plus one, in a single pass.
int edge_frequency(const TemporalGraph& g, Edge e);

FrequencyTable frequency_table(const TemporalGraph& g, bool with_regularity = false,
                               bool two_point = false);

// Smallest r such that e's activity agrees across E_{t-r}, E_t and E_{t+r}
// for every t in [r+1, T-r]. With two_point, the test compares E_t against
// E_{t+r} for t in [1, T-r] instead.
int edge_regularity(const TemporalGraph& g, Edge e, bool two_point = false);

// A vertex of a broadcast network is active at t when all of its out-edges
// are. Throws if some timestep activates only part of them, or if v has no
// out-edges at all.
std::vector<bool> vertex_activation_pattern(const TemporalGraph& g, Vertex v);

// Smallest window length such that v broadcasts at least once in every window
// of that many consecutive timesteps.
int vertex_frequency(const TemporalGraph& g, Vertex v);

}  // namespace tgx
