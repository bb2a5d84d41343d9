#include <doctest.h>

#include "helpers.hpp"
#include "tgx/instance_classes.hpp"
#include "tgx/oracle.hpp"
#include "tgx/planner.hpp"
#include "tgx/validation.hpp"

using namespace tgx;

TEST_SUITE_BEGIN("planner");

namespace {

TemporalGraph always_active(const StaticGraph& sg, int lifetime) {
  std::vector<std::vector<Edge>> snapshots(static_cast<std::size_t>(lifetime),
                                           sg.edges());
  return TemporalGraph(sg.num_vertices(), sg.directed(), std::move(snapshots));
}

}  // namespace

TEST_CASE("frequency-weighted graph relabels the underlying graph") {
  // triangle with frequencies 1, 2, 3
  auto g = testutil::graph_from_activations(
      3, 6,
      {{{0, 1}, {1, 2, 3, 4, 5, 6}}, {{0, 2}, {1, 3, 5}}, {{1, 2}, {3, 6}}});
  auto fw = build_fw_graph(g, frequency_table(g));
  CHECK(fw.weight({0, 1}) == 1);
  CHECK(fw.weight({0, 2}) == 2);
  CHECK(fw.weight({1, 2}) == 3);
  CHECK_FALSE(fw.directed());
}

TEST_CASE("uniform frequencies give uniform weights") {
  auto g = testutil::graph_from_activations(
      3, 4, {{{0, 1}, {2, 4}}, {{1, 2}, {1, 3}}, {{0, 2}, {2, 4}}});
  auto fw = build_fw_graph(g, frequency_table(g));
  for (Edge e : fw.edges()) CHECK(fw.weight(e) == 2);
}

TEST_CASE("symmetric directed projection takes the larger frequency") {
  // (0,1) active at {1,3,5}: f=2; (1,0) active at {1,4}: f=3
  auto g = testutil::graph_from_activations(
      2, 6, {{{0, 1}, {1, 3, 5}}, {{1, 0}, {1, 4}}}, /*directed=*/true);
  auto fw = build_fw_graph(g, frequency_table(g));
  CHECK_FALSE(fw.directed());
  CHECK(fw.num_edges() == 1);
  CHECK(fw.weight({0, 1}) == 3);
}

TEST_CASE("asymmetric directed graphs are rejected") {
  auto g = testutil::graph_from_activations(3, 2,
                                            {{{0, 1}, {1}}, {{1, 0}, {2}}, {{1, 2}, {1}}},
                                            /*directed=*/true);
  CHECK_THROWS_WITH_AS(build_fw_graph(g, frequency_table(g)),
                       doctest::Contains("not symmetric"), Error);
}

TEST_CASE("minimum spanning tree on small fixed graphs") {
  StaticGraph triangle(3, false, {{0, 1}, {0, 2}, {1, 2}}, {1, 2, 3});
  auto mst = minimum_spanning_tree(triangle);
  CHECK(mst.weight == 3);
  CHECK(mst.edges == std::vector<Edge>{{0, 1}, {0, 2}});

  StaticGraph tree(4, false, {{0, 1}, {1, 2}, {1, 3}}, {5, 1, 7});
  auto same = minimum_spanning_tree(tree);
  CHECK(same.weight == 13);
  CHECK(same.edges.size() == 3);

  StaticGraph cycle(4, false, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, {1, 1, 1, 5});
  CHECK(minimum_spanning_tree(cycle).weight == 3);
}

TEST_CASE("kruskal ties break on the edge order") {
  StaticGraph triangle(3, false, {{0, 1}, {0, 2}, {1, 2}}, {1, 1, 1});
  CHECK(minimum_spanning_tree(triangle).edges ==
        std::vector<Edge>{{0, 1}, {0, 2}});
}

TEST_CASE("minimum spanning tree errors") {
  StaticGraph unweighted(2, false, {{0, 1}});
  CHECK_THROWS_AS(minimum_spanning_tree(unweighted), Error);
  StaticGraph split(4, false, {{0, 1}, {2, 3}}, {1, 1});
  CHECK_THROWS_WITH_AS(minimum_spanning_tree(split),
                       doctest::Contains("vertex 2"), Error);
}

TEST_CASE("minimum spanning tree weight matches exhaustive enumeration") {
  Rng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const Vertex n = static_cast<Vertex>(rng.uniform_int(2, 8));
    auto g = testutil::random_connected_weighted(n, 0.6, 9, rng);
    CHECK(minimum_spanning_tree(g).weight == testutil::brute_force_mst_weight(g));
  }
}

TEST_CASE("tree walk on a path needs no backtracking") {
  StaticGraph path(3, false, {{0, 1}, {1, 2}});
  Walk walk = tree_exploration_walk(path, 0);
  CHECK(walk.steps == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("tree walk from a star centre") {
  StaticGraph star(3, false, {{0, 1}, {0, 2}});
  Walk walk = tree_exploration_walk(star, 0);
  CHECK(walk.steps.size() == 3);  // 2n-3; matches the exhaustive optimum
  CHECK(testutil::static_exploration_optimum(star, 0) == 3);
  CHECK(walk.is_chained());
}

TEST_CASE("tree walk trivial and error cases") {
  CHECK(tree_exploration_walk(StaticGraph(1, false), 0).steps.empty());
  CHECK_THROWS_AS(tree_exploration_walk(StaticGraph(1, false, {{0, 0}}), 0), Error);
  StaticGraph not_tree(3, false, {{0, 1}});
  CHECK_THROWS_WITH_AS(tree_exploration_walk(not_tree, 0),
                       doctest::Contains("not a spanning tree"), Error);
  StaticGraph cycle(3, false, {{0, 1}, {1, 2}, {0, 2}});
  CHECK_THROWS_AS(tree_exploration_walk(cycle, 0), Error);
  StaticGraph path(2, false, {{0, 1}});
  CHECK_THROWS_AS(tree_exploration_walk(path, 2), Error);
}

TEST_CASE("tree walk visits everything within 2n-3 steps from every start") {
  Rng rng(22);
  for (int trial = 0; trial < 80; ++trial) {
    const Vertex n = static_cast<Vertex>(rng.uniform_int(2, 12));
    auto tree = testutil::random_tree(n, rng);
    for (Vertex start = 0; start < n; ++start) {
      Walk walk = tree_exploration_walk(tree, start);
      CHECK(walk.start == start);
      CHECK(walk.is_chained());
      CHECK(walk.steps.size() <= static_cast<std::size_t>(2 * n - 3));
      std::vector<char> seen(static_cast<std::size_t>(n), 0);
      seen[start] = 1;
      for (Edge e : walk.steps) {
        CHECK(tree.has_edge(e));
        seen[e.v] = 1;
      }
      for (Vertex v = 0; v < n; ++v) CHECK(seen[v] == 1);
    }
  }
}

TEST_CASE("greedy schedule takes the earliest activation after each step") {
  // e1 first active at t=2; e2 active at {1,3}
  auto g = testutil::graph_from_activations(3, 3,
                                            {{{0, 1}, {2}}, {{1, 2}, {1, 3}}});
  TemporalWalk scheduled = schedule_walk(g, Walk{0, {{0, 1}, {1, 2}}});
  CHECK(scheduled.steps == std::vector<TemporalStep>{{{0, 1}, 2}, {{1, 2}, 3}});
}

TEST_CASE("always-active edges schedule consecutively") {
  StaticGraph path(4, false, {{0, 1}, {1, 2}, {2, 3}});
  auto g = always_active(path, 5);
  TemporalWalk scheduled = schedule_walk(g, Walk{0, {{0, 1}, {1, 2}, {2, 3}}});
  for (std::size_t i = 0; i < scheduled.steps.size(); ++i)
    CHECK(scheduled.steps[i].time == static_cast<int>(i) + 1);
}

TEST_CASE("repeated edges wait for the next activation") {
  auto g = testutil::graph_from_activations(2, 8, {{{0, 1}, {2, 5, 8}}});
  TemporalWalk scheduled = schedule_walk(g, Walk{0, {{0, 1}, {1, 0}}});
  CHECK(scheduled.steps[0].time == 2);
  CHECK(scheduled.steps[1].time == 5);
}

TEST_CASE("scheduling fails loudly when the lifetime runs out") {
  auto g = testutil::graph_from_activations(3, 1, {{{0, 1}, {1}}, {{1, 2}, {1}}});
  try {
    schedule_walk(g, Walk{0, {{0, 1}, {1, 2}}});
    FAIL("expected Unschedulable");
  } catch (const Unschedulable& e) {
    CHECK(e.step_index == 2);
  }
}

TEST_CASE("schedule rejects foreign edges and broken chains") {
  auto g = testutil::graph_from_activations(3, 2, {{{0, 1}, {1, 2}}});
  CHECK_THROWS_AS(schedule_walk(g, Walk{0, {{0, 1}, {1, 2}}}), Error);
  CHECK_THROWS_AS(schedule_walk(g, Walk{0, {{1, 0}, {1, 0}}}), Error);
}

TEST_CASE("greedy scheduling maps prefixes to prefixes") {
  Rng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = gen_random_frequent(6, 3, 0.6, 400 + trial);
    auto result = explore(g, 0);
    const Walk& walk = result.plan.tree_walk;
    for (std::size_t cut = 0; cut <= walk.steps.size(); ++cut) {
      Walk prefix{walk.start,
                  std::vector<Edge>(walk.steps.begin(),
                                    walk.steps.begin() + static_cast<std::ptrdiff_t>(cut))};
      TemporalWalk scheduled = schedule_walk(g, prefix);
      for (std::size_t i = 0; i < cut; ++i)
        CHECK(scheduled.steps[i] == result.walk.steps[i]);
    }
  }
}

TEST_CASE("exploring an always-active graph stays within 2n-3 timesteps") {
  Rng rng(24);
  for (int trial = 0; trial < 20; ++trial) {
    const Vertex n = static_cast<Vertex>(rng.uniform_int(2, 9));
    auto base = random_connected_graph(n, 0.5, rng);
    auto g = always_active(base, 2 * n);
    auto result = explore(g, static_cast<Vertex>(rng.uniform_int(0, n - 1)));
    CHECK(result.report.achieved_length <= 2 * n - 3);
    CHECK(result.report.max_frequency == 1);
  }
}

TEST_CASE("star instances explore within r*(2n-3) timesteps") {
  for (Vertex n : {4, 5, 6})
    for (int r : {1, 2, 3}) {
      auto instance = gen_star_lower_bound(n, r);
      auto result = explore(instance.graph, instance.start);
      CHECK(result.report.achieved_length <= r * (2 * n - 3));
      CHECK(validate_exploration(instance.graph, result.walk, instance.start).ok());
    }
}

TEST_CASE("bound report is internally consistent") {
  Rng rng(25);
  for (int trial = 0; trial < 40; ++trial) {
    const Vertex n = static_cast<Vertex>(rng.uniform_int(2, 9));
    const int f = rng.uniform_int(1, 4);
    auto g = gen_random_frequent(n, f, 0.5, 900 + static_cast<std::uint64_t>(trial));
    auto result = explore(g, 0);
    CHECK(result.report.guarantee_2f == 2 * result.report.mst_weight);
    CHECK(result.report.achieved_length <= result.report.guarantee_2f);
    CHECK(result.report.achieved_length <= result.report.guarantee_f2n3);
    CHECK(result.report.max_frequency <= f);
    CHECK(static_cast<Vertex>(result.plan.mst_edges.size()) == n - 1);
    CHECK(validate_exploration(g, result.walk, 0).ok());
  }
}

TEST_CASE("exploration of a 3-frequent graph beats the bound and meets the oracle") {
  auto g = gen_random_frequent(6, 3, 0.6, 77);
  auto result = explore(g, 0);
  CHECK(result.report.achieved_length <= 27);  // 3 * (2*6 - 3)
  auto oracle = fastest_exploration(g, 0);
  REQUIRE(oracle.feasible());
  CHECK(*oracle.optimum <= result.report.achieved_length);
}

TEST_CASE("explore fails loudly on a too-short lifetime") {
  auto g = testutil::graph_from_activations(3, 1, {{{0, 1}, {1}}, {{1, 2}, {1}}});
  CHECK_THROWS_AS(explore(g, 0), Unschedulable);
}

TEST_CASE("explore propagates disconnectedness") {
  auto g = testutil::graph_from_activations(4, 2, {{{0, 1}, {1}}, {{2, 3}, {2}}});
  CHECK_THROWS_WITH_AS(explore(g, 0), doctest::Contains("disconnected"), Error);
}

TEST_CASE("single-vertex graphs explore with the empty walk") {
  TemporalGraph g(1, false, {{{0, 0}}}, {.allow_self_loops = true});
  auto result = explore(g, 0);
  CHECK(result.walk.steps.empty());
  CHECK(result.report.achieved_length == 0);
}

TEST_SUITE_END();
