#include <doctest.h>

#include "helpers.hpp"
#include "tgx/static_graph.hpp"
#include "tgx/temporal_graph.hpp"
#include "tgx/walk.hpp"

using namespace tgx;

TEST_SUITE_BEGIN("core_model");

TEST_CASE("underlying graph is the union of the snapshots") {
  TemporalGraph g(3, false, {{{0, 1}}, {{1, 2}}});
  CHECK(g.underlying_edges() == std::vector<Edge>{{0, 1}, {1, 2}});

  TemporalGraph repeated(2, false, {{{0, 1}}, {{0, 1}}});
  CHECK(repeated.underlying_edges() == std::vector<Edge>{{0, 1}});

  TemporalGraph directed(2, true, {{{0, 1}}, {{1, 0}}});
  CHECK(directed.underlying_edges() == std::vector<Edge>{{0, 1}, {1, 0}});
}

TEST_CASE("underlying membership is snapshot membership somewhere") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Vertex n = static_cast<Vertex>(rng.uniform_int(2, 6));
    const int T = rng.uniform_int(1, 12);
    std::vector<std::vector<Edge>> snapshots(static_cast<std::size_t>(T));
    for (auto& snap : snapshots)
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
          if (rng.bernoulli(0.3)) snap.push_back({u, v});
    TemporalGraph g(n, false, snapshots);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) {
        bool somewhere = false;
        for (int t = 1; t <= T && !somewhere; ++t) somewhere = g.is_active({u, v}, t);
        CHECK(g.has_underlying_edge({u, v}) == somewhere);
      }
  }
}

TEST_CASE("undirected edges canonicalize either way") {
  TemporalGraph a(3, false, {{{0, 1}, {2, 1}}});
  TemporalGraph b(3, false, {{{1, 0}, {1, 2}}});
  CHECK(a == b);
  CHECK(a.is_active({1, 0}, 1));
  CHECK(a.is_active({0, 1}, 1));
}

TEST_CASE("construction rejects bad input") {
  CHECK_THROWS_AS(TemporalGraph(2, false, {{{0, 2}}}), Error);
  CHECK_THROWS_AS(TemporalGraph(2, false, {{{0, 0}}}), Error);  // loop
  CHECK_NOTHROW(TemporalGraph(2, false, {{{0, 0}}}, {.allow_self_loops = true}));
  CHECK_THROWS_AS(TemporalGraph(2, false, {}), Error);  // no timesteps
}

TEST_CASE("duplicate activations collapse") {
  TemporalGraph g(2, false, {{{0, 1}, {1, 0}, {0, 1}}});
  CHECK(g.snapshot(1).size() == 1);
}

TEST_CASE("degree of stars and isolated vertices") {
  StaticGraph star(4, false, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(star.degree(0) == 3);
  CHECK(star.degree(1) == 1);
  StaticGraph isolated(3, false, {{0, 1}});
  CHECK(isolated.degree(2) == 0);
  CHECK_THROWS_AS(isolated.degree(3), Error);
}

TEST_CASE("directed degrees are split") {
  StaticGraph g(3, true, {{0, 1}, {0, 2}, {2, 0}});
  CHECK(g.out_degree(0) == 2);
  CHECK(g.in_degree(0) == 1);
  CHECK(g.in_degree(1) == 1);
  CHECK(g.out_degree(1) == 0);
}

TEST_CASE("diameter") {
  StaticGraph path(4, false, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(path.diameter() == 3);

  std::vector<Edge> complete;
  for (Vertex u = 0; u < 5; ++u)
    for (Vertex v = u + 1; v < 5; ++v) complete.push_back({u, v});
  CHECK(StaticGraph(5, false, complete).diameter() == 1);

  StaticGraph split(4, false, {{0, 1}, {2, 3}});
  CHECK_THROWS_WITH_AS(split.diameter(),
                       doctest::Contains("infinite diameter"), Error);
}

TEST_CASE("diameter of paths matches the hop count") {
  for (Vertex k = 2; k <= 12; ++k) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < k; ++v) edges.push_back({v, static_cast<Vertex>(v + 1)});
    CHECK(StaticGraph(k, false, edges).diameter() == k - 1);
  }
}

TEST_CASE("connectivity") {
  CHECK(StaticGraph(2, false, {{0, 1}}).is_connected());
  CHECK_FALSE(StaticGraph(3, false, {{0, 1}}).is_connected());
  CHECK(StaticGraph(1, false).is_connected());
  // symmetric directed graphs are checked on the undirected projection
  CHECK(StaticGraph(2, true, {{0, 1}}).is_connected());
}

TEST_CASE("walk chaining") {
  Walk ok{0, {{0, 1}, {1, 2}}};
  CHECK(ok.is_chained());
  CHECK(ok.end() == 2);
  Walk broken{0, {{0, 1}, {2, 1}}};
  CHECK_FALSE(broken.is_chained());
  Walk wrong_start{1, {{0, 1}}};
  CHECK_FALSE(wrong_start.is_chained());
}

TEST_CASE("temporal walk invariant helpers") {
  TemporalWalk walk{0, {{{0, 1}, 2}, {{1, 2}, 5}}};
  CHECK(walk.is_chained());
  CHECK(walk.strictly_increasing());
  CHECK(walk.length() == 5);
  TemporalWalk stalled{0, {{{0, 1}, 2}, {{1, 0}, 2}}};
  CHECK_FALSE(stalled.strictly_increasing());
  CHECK(TemporalWalk{3, {}}.length() == 0);
}

TEST_CASE("next_active scans the activation bitset") {
  TemporalGraph g = testutil::single_edge_graph(
      {false, true, false, false, true, false});
  CHECK(g.next_active({0, 1}, 1) == 2);
  CHECK(g.next_active({0, 1}, 2) == 2);
  CHECK(g.next_active({0, 1}, 3) == 5);
  CHECK(g.next_active({0, 1}, 6) == 0);
  CHECK(g.next_active({1, 0}, 1) == 2);  // canonical lookup
}

TEST_SUITE_END();
