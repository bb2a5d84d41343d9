#include "tgx/planner.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

namespace tgx {

namespace {

struct UnionFind {
  explicit UnionFind(Vertex n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  Vertex find(Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
  std::vector<Vertex> parent;
};

}  // namespace

StaticGraph build_fw_graph(const TemporalGraph& g, const FrequencyTable& table) {
  if (!g.directed()) {
    std::vector<Edge> edges = g.underlying_edges();
    std::vector<std::int64_t> weights;
    weights.reserve(edges.size());
    for (Edge e : edges) weights.push_back(table.frequency(e));
    return StaticGraph(g.num_vertices(), false, std::move(edges), std::move(weights));
  }

  // Symmetric directed: undirected projection, weight max over orientations.
  std::map<Edge, std::int64_t> projected;
  for (Edge e : g.underlying_edges()) {
    if (!e.is_loop() && !g.has_underlying_edge(e.reversed()))
      throw Error("underlying graph is directed but not symmetric: " +
                  to_string(e) + " present, " + to_string(e.reversed()) +
                  " missing");
    auto [it, inserted] = projected.try_emplace(e.canonical(), 0);
    it->second = std::max(it->second, static_cast<std::int64_t>(table.frequency(e)));
  }
  std::vector<Edge> edges;
  std::vector<std::int64_t> weights;
  edges.reserve(projected.size());
  for (auto& [e, w] : projected) {
    edges.push_back(e);
    weights.push_back(w);
  }
  return StaticGraph(g.num_vertices(), false, std::move(edges), std::move(weights));
}

MstResult minimum_spanning_tree(const StaticGraph& sg) {
  if (!sg.weighted())
    throw Error("minimum spanning tree needs an edge-weighted graph");

  struct Item {
    std::int64_t w;
    Edge e;
  };
  std::vector<Item> items;
  items.reserve(sg.num_edges());
  for (Edge e : sg.edges()) items.push_back({sg.weight(e), e});
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    return std::tie(a.w, a.e.u, a.e.v) < std::tie(b.w, b.e.u, b.e.v);
  });

  MstResult result;
  UnionFind uf(sg.num_vertices());
  for (const Item& item : items) {
    if (item.e.is_loop()) continue;
    if (uf.unite(item.e.u, item.e.v)) {
      result.edges.push_back(item.e);
      result.weight += item.w;
    }
  }
  if (static_cast<Vertex>(result.edges.size()) != sg.num_vertices() - 1) {
    for (Vertex v = 1; v < sg.num_vertices(); ++v)
      if (uf.find(v) != uf.find(0))
        throw Error("graph is disconnected: vertex " + std::to_string(v) +
                    " is unreachable from vertex 0");
  }
  return result;
}

Walk tree_exploration_walk(const StaticGraph& tree, Vertex start) {
  const Vertex n = tree.num_vertices();
  if (start < 0 || start >= n) throw Error("start vertex out of range");
  if (n == 1) {
    if (!tree.edges().empty()) throw Error("edge set is not a spanning tree");
    return Walk{start, {}};
  }
  if (static_cast<Vertex>(tree.edges().size()) != n - 1 || !tree.is_connected())
    throw Error("edge set is not a spanning tree");

  // Root at start, compute subtree heights, then tour children in ascending
  // height so the deepest branch comes last and the truncated tail is longest.
  std::vector<std::vector<Vertex>> children(static_cast<std::size_t>(n));
  std::vector<Vertex> order;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  seen[start] = 1;
  order.push_back(start);
  for (std::size_t i = 0; i < order.size(); ++i) {
    Vertex v = order[i];
    for (Vertex u : tree.neighbours(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        children[v].push_back(u);
        order.push_back(u);
      }
    }
  }
  std::vector<int> height(static_cast<std::size_t>(n), 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    for (Vertex c : children[*it])
      height[*it] = std::max(height[*it], height[c] + 1);
  for (Vertex v = 0; v < n; ++v)
    std::sort(children[v].begin(), children[v].end(), [&](Vertex a, Vertex b) {
      return std::tie(height[a], a) < std::tie(height[b], b);
    });

  Walk walk{start, {}};
  std::size_t last_discovery = 0;
  std::function<void(Vertex)> tour = [&](Vertex v) {
    for (Vertex c : children[v]) {
      walk.steps.push_back({v, c});
      last_discovery = walk.steps.size();
      tour(c);
      walk.steps.push_back({c, v});
    }
  };
  tour(start);
  walk.steps.resize(last_discovery);
  return walk;
}

TemporalWalk schedule_walk(const TemporalGraph& g, const Walk& walk) {
  if (!walk.is_chained()) throw Error("walk steps do not chain");
  for (Edge e : walk.steps)
    if (!g.has_underlying_edge(e))
      throw Error("edge " + to_string(e) + " is not in the underlying graph");

  TemporalWalk result{walk.start, {}};
  result.steps.reserve(walk.steps.size());
  int t = 0;
  for (std::size_t i = 0; i < walk.steps.size(); ++i) {
    int next = g.next_active(walk.steps[i], t + 1);
    if (next == 0)
      throw Unschedulable(static_cast<int>(i) + 1,
                          "lifetime exhausted before step " +
                              std::to_string(i + 1) + " (edge " +
                              to_string(walk.steps[i]) + ")");
    result.steps.push_back({walk.steps[i], next});
    t = next;
  }
  return result;
}

ExploreResult explore(const TemporalGraph& g, Vertex start) {
  if (start < 0 || start >= g.num_vertices())
    throw Error("start vertex out of range");

  FrequencyTable table = frequency_table(g);
  StaticGraph fw = build_fw_graph(g, table);
  MstResult mst = minimum_spanning_tree(fw);
  StaticGraph tree(fw.num_vertices(), false, mst.edges);
  Walk tree_walk = tree_exploration_walk(tree, start);
  TemporalWalk walk = schedule_walk(g, tree_walk);

  ExploreReport report;
  report.n = g.num_vertices();
  report.lifetime = g.lifetime();
  report.max_frequency = table.max_frequency();
  report.mst_weight = mst.weight;
  report.guarantee_2f = 2 * mst.weight;
  report.guarantee_f2n3 =
      report.n >= 2
          ? static_cast<std::int64_t>(report.max_frequency) * (2 * report.n - 3)
          : 0;
  report.achieved_length = walk.length();

  return ExploreResult{
      SpanningPlan{std::move(fw), std::move(mst.edges), mst.weight,
                   std::move(tree_walk)},
      std::move(walk), report};
}

std::string format_report(const ExploreReport& report) {
  std::ostringstream out;
  out << "n: " << report.n << '\n'
      << "T: " << report.lifetime << '\n'
      << "F_max: " << report.max_frequency << '\n'
      << "mst_weight: " << report.mst_weight << '\n'
      << "guarantee_2F: " << report.guarantee_2f << '\n'
      << "guarantee_f2n3: " << report.guarantee_f2n3 << '\n'
      << "achieved_length: " << report.achieved_length << '\n';
  return out.str();
}

}  // namespace tgx
