#include "tgx/analysis.hpp"

#include <algorithm>

namespace tgx {

namespace {

// Longest run of consecutive false entries, plus one.
int longest_gap_plus_one(const std::vector<bool>& active) {
  int longest = 0;
  int current = 0;
  for (bool a : active) {
    if (a) {
      current = 0;
    } else {
      ++current;
      longest = std::max(longest, current);
    }
  }
  return longest + 1;
}

int regularity_of_pattern(const std::vector<bool>& active, bool two_point) {
  const int T = static_cast<int>(active.size());
  for (int r = 1; r <= T; ++r) {
    bool ok = true;
    if (two_point) {
      for (int t = 1; ok && t <= T - r; ++t)
        ok = active[static_cast<std::size_t>(t - 1)] ==
             active[static_cast<std::size_t>(t + r - 1)];
    } else {
      for (int t = r + 1; ok && t <= T - r; ++t)
        ok = active[static_cast<std::size_t>(t - r - 1)] ==
                 active[static_cast<std::size_t>(t - 1)] &&
             active[static_cast<std::size_t>(t - 1)] ==
                 active[static_cast<std::size_t>(t + r - 1)];
    }
    if (ok) return r;
  }
  return T;  // unreachable: r = T always satisfies both forms
}

}  // namespace

int FrequencyTable::frequency(Edge e) const {
  return frequency_[static_cast<std::size_t>(index_of(e))];
}

std::optional<int> FrequencyTable::regularity(Edge e) const {
  if (!has_regularity()) return std::nullopt;
  return regularity_[static_cast<std::size_t>(index_of(e))];
}

int FrequencyTable::index_of(Edge e) const {
  auto it = index_.find(edge_key(directed_ ? e : e.canonical()));
  if (it == index_.end())
    throw Error("edge " + to_string(e) + " is not in the underlying graph");
  return it->second;
}

int edge_frequency(const TemporalGraph& g, Edge e) {
  return longest_gap_plus_one(g.activation_pattern(e));
}

int edge_regularity(const TemporalGraph& g, Edge e, bool two_point) {
  return regularity_of_pattern(g.activation_pattern(e), two_point);
}

FrequencyTable frequency_table(const TemporalGraph& g, bool with_regularity,
                               bool two_point) {
  FrequencyTable table;
  table.directed_ = g.directed();
  table.edges_ = g.underlying_edges();
  table.frequency_.reserve(table.edges_.size());
  for (std::size_t i = 0; i < table.edges_.size(); ++i) {
    const auto pattern = g.activation_pattern(table.edges_[i]);
    table.frequency_.push_back(longest_gap_plus_one(pattern));
    if (with_regularity)
      table.regularity_.push_back(regularity_of_pattern(pattern, two_point));
    table.index_[edge_key(table.edges_[i])] = static_cast<int>(i);
  }
  table.max_frequency_ =
      table.frequency_.empty()
          ? 0
          : *std::max_element(table.frequency_.begin(), table.frequency_.end());
  return table;
}

std::vector<bool> vertex_activation_pattern(const TemporalGraph& g, Vertex v) {
  if (!g.directed())
    throw Error("vertex activity is defined on directed broadcast networks");
  if (v < 0 || v >= g.num_vertices())
    throw Error("vertex " + std::to_string(v) + " out of range");

  std::vector<Vertex> out;
  for (Edge e : g.underlying_edges())
    if (e.u == v) out.push_back(e.v);
  if (out.empty())
    throw Error("vertex " + std::to_string(v) + " has no out-edges");

  std::vector<bool> pattern(static_cast<std::size_t>(g.lifetime()));
  for (int t = 1; t <= g.lifetime(); ++t) {
    int active = 0;
    for (Vertex u : out)
      if (g.is_active({v, u}, t)) ++active;
    if (active != 0 && active != static_cast<int>(out.size()))
      throw Error("vertex " + std::to_string(v) + " activates " +
                  std::to_string(active) + " of " + std::to_string(out.size()) +
                  " out-edges at timestep " + std::to_string(t) +
                  "; not a broadcast network");
    pattern[static_cast<std::size_t>(t - 1)] = active != 0;
  }
  return pattern;
}

int vertex_frequency(const TemporalGraph& g, Vertex v) {
  return longest_gap_plus_one(vertex_activation_pattern(g, v));
}

}  // namespace tgx
