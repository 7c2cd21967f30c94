#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "restoration/graph.hpp"
#include "restoration/random_gen.hpp"
#include "support.hpp"

using namespace restoration;
namespace ts = restoration::test_support;

TEST_CASE("edges canonicalize their endpoints") {
  Edge e(5, 2);
  CHECK(e.u == 2);
  CHECK(e.v == 5);
  CHECK(Edge(2, 5) == e);
  CHECK(Edge(1, 2) < Edge(1, 3));
  CHECK(Edge(1, 9) < Edge(2, 3));
  CHECK_THROWS_AS(Edge(4, 4), std::invalid_argument);
}

TEST_CASE("fault sets stay sorted and deduplicated") {
  FaultSet fs({Edge(3, 4), Edge(1, 2), Edge(3, 4)});
  CHECK(fs.size() == 2);
  CHECK(fs.edges()[0] == Edge(1, 2));
  CHECK(fs.contains(Edge(4, 3)));
  fs.insert(Edge(0, 9));
  CHECK(fs.edges()[0] == Edge(0, 9));
  fs.insert(Edge(0, 9));
  CHECK(fs.size() == 3);
  fs.erase(Edge(1, 2));
  CHECK(!fs.contains(Edge(1, 2)));
  CHECK(fs.size() == 2);
  fs.erase(Edge(7, 8));  // absent, no-op
  CHECK(fs.size() == 2);

  FaultSet sub({Edge(0, 9)});
  CHECK(sub.subset_of(fs));
  CHECK(!fs.subset_of(sub));
  CHECK(FaultSet{}.subset_of(sub));
  // Lexicographic comparison over sorted edges.
  CHECK(FaultSet({Edge(1, 2)}) < FaultSet({Edge(1, 3)}));
  CHECK(FaultSet({Edge(1, 2)}) < FaultSet({Edge(1, 2), Edge(5, 6)}));
}

TEST_CASE("graph construction validates its input") {
  CHECK_THROWS_AS(Graph(3, {{0, 3}}, false), std::invalid_argument);   // out of range
  CHECK_THROWS_AS(Graph(3, {{1, 1}}, false), std::invalid_argument);   // self loop
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}, false), std::invalid_argument);  // parallel
  CHECK_THROWS_AS(Graph(3, {{0, 1, 0}}, true), std::invalid_argument);  // weight < 1
  CHECK_THROWS_AS(Graph(3, {{0, 1, 2}}, false), std::invalid_argument);  // unit violation
  CHECK_THROWS_AS(Graph(-1, {}, false), std::invalid_argument);

  Graph g(4, {{2, 1}, {0, 1}, {1, 3, 1}}, false);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(Edge(2, 1)));
  CHECK(!g.has_edge(0, 3));
  CHECK(!g.has_edge(0, 0));
  CHECK(g.weight(Edge(0, 1)) == 1);
  CHECK_THROWS_AS(g.weight(Edge(0, 3)), std::invalid_argument);
  // Canonical edge order and sorted adjacency.
  CHECK(g.edges()[0] == Edge(0, 1));
  CHECK(g.edges()[1] == Edge(1, 2));
  CHECK(g.edges()[2] == Edge(1, 3));
  REQUIRE(g.neighbors(1).size() == 3);
  CHECK(g.neighbors(1)[0].to == 0);
  CHECK(g.neighbors(1)[1].to == 2);
  CHECK(g.neighbors(1)[2].to == 3);
  CHECK_THROWS_AS(g.neighbors(9), std::out_of_range);
}

TEST_CASE("graph equality is structural") {
  Graph a(3, {{0, 1}, {1, 2}}, false);
  Graph b(3, {{1, 2}, {0, 1}}, false);  // same edges, different input order
  CHECK(a == b);
  CHECK(!(a == Graph(3, {{0, 1}}, false)));
  CHECK(!(a == Graph(4, {{0, 1}, {1, 2}}, false)));
  Graph wa(3, {{0, 1, 2}, {1, 2, 1}}, true);
  Graph wb(3, {{0, 1, 3}, {1, 2, 1}}, true);
  CHECK(!(wa == wb));
}

TEST_CASE("distances match edge relaxation on random graphs") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    Rng rng = Rng::fork(401, s);
    bool weighted = s % 2 == 1;
    Graph g = random_graph(rng, rng.uniform(2, 14), 0.3, weighted);
    FaultSet removed;
    for (const Edge& e : g.edges())
      if (rng.chance(0.2)) removed.insert(e);
    Vertex src = rng.uniform(0, g.vertex_count() - 1);
    CHECK(distances(g, removed, src) == ts::bellman_ford(g, removed, src));
  }
}

TEST_CASE("masked distance and reachability") {
  Graph g = ts::path_graph(5);
  CHECK(masked_distance(g, {}, 0, 4) == 4);
  CHECK(masked_distance(g, {}, 2, 2) == 0);
  FaultSet cut({Edge(1, 2)});
  CHECK(!reachable(masked_distance(g, cut, 0, 4)));
  CHECK(reachable(masked_distance(g, cut, 0, 1)));
  CHECK_THROWS_AS(masked_distance(g, {}, 0, 99), std::out_of_range);
  CHECK_THROWS_AS(distances(g, {}, -1), std::out_of_range);
}

TEST_CASE("grid distances are rectilinear") {
  Rng rng(7);
  Graph g = grid_graph(rng, 4, 5, false);
  auto dist = distances(g, {}, 0);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 5; ++c) CHECK(dist[r * 5 + c] == r + c);
  CHECK_THROWS_AS(grid_graph(rng, 0, 3, false), std::invalid_argument);
}

TEST_CASE("shortest path ties break toward the smallest predecessor") {
  // Diamond: two equal routes 0-1-3 and 0-2-3.
  Graph g(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, false);
  Path p = shortest_path(g, {}, 0, 3);
  CHECK(p.vertices == std::vector<Vertex>{0, 1, 3});
  // Masking the tie-winning edge reroutes through the other side.
  Path p2 = shortest_path(g, FaultSet({Edge(1, 3)}), 0, 3);
  CHECK(p2.vertices == std::vector<Vertex>{0, 2, 3});
}

TEST_CASE("shortest path handles trivial and impossible queries") {
  Graph g = ts::path_graph(4);
  CHECK(shortest_path(g, {}, 2, 2).vertices == std::vector<Vertex>{2});
  CHECK_THROWS_AS(shortest_path(g, FaultSet({Edge(1, 2)}), 0, 3), std::runtime_error);
  CHECK_THROWS_AS(shortest_path(g, {}, 0, 9), std::out_of_range);
}

TEST_CASE("shortest path is valid, optimal, and reproducible on random graphs") {
  for (std::uint64_t s = 0; s < 25; ++s) {
    Rng rng = Rng::fork(402, s);
    Graph g = random_graph(rng, rng.uniform(2, 12), 0.4, s % 2 == 0);
    FaultSet removed;
    for (const Edge& e : g.edges())
      if (rng.chance(0.15)) removed.insert(e);
    auto dist = distances(g, removed, 0);
    for (Vertex t = 0; t < g.vertex_count(); ++t) {
      if (!reachable(dist[t])) continue;
      Path p = shortest_path(g, removed, 0, t);
      CHECK(p.front() == 0);
      CHECK(p.back() == t);
      if (p.hops() > 0) CHECK(path_length(g, p) == dist[t]);
      CHECK(is_shortest(g, removed, p));
      CHECK(shortest_path(g, removed, 0, t) == p);  // deterministic
    }
  }
}

TEST_CASE("path length and shortest checks reject malformed paths") {
  Graph g = ts::path_graph(4);
  CHECK(path_length(g, Path({0, 1, 2})) == 2);
  CHECK(path_length(g, Path({2})) == 0);
  CHECK_THROWS_AS(path_length(g, Path(std::vector<Vertex>{})), std::invalid_argument);
  CHECK_THROWS_AS(path_length(g, Path({0, 2})), std::invalid_argument);  // absent edge
  CHECK(is_shortest(g, {}, Path({0, 1, 2})));
  CHECK_THROWS_AS(is_shortest(g, FaultSet({Edge(1, 2)}), Path({0, 1, 2})),
                  std::invalid_argument);  // uses a removed edge
  // A valid but non-shortest walk from end to end does not exist on a path
  // graph, so check via a cycle instead.
  Graph cyc(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, false);
  CHECK(!is_shortest(cyc, {}, Path({0, 1, 2, 3})));
  CHECK(is_shortest(cyc, {}, Path({0, 3})));
}

TEST_CASE("weighted graphs prefer light detours over direct edges") {
  Graph g(3, {{0, 2, 10}, {0, 1, 2}, {1, 2, 3}}, true);
  CHECK(masked_distance(g, {}, 0, 2) == 5);
  Path p = shortest_path(g, {}, 0, 2);
  CHECK(p.vertices == std::vector<Vertex>{0, 1, 2});
  CHECK(masked_distance(g, FaultSet({Edge(0, 1)}), 0, 2) == 10);
}

TEST_CASE("rng streams are deterministic and distinct") {
  Rng a = Rng::fork(99, 0);
  Rng b = Rng::fork(99, 0);
  Rng c = Rng::fork(99, 1);
  bool diverged = false;
  for (int i = 0; i < 16; ++i) {
    auto x = a.next();
    CHECK(x == b.next());
    if (x != c.next()) diverged = true;
  }
  CHECK(diverged);
  Rng r(12345);
  for (int i = 0; i < 200; ++i) {
    int v = r.uniform(3, 7);
    CHECK(v >= 3);
    CHECK(v <= 7);
  }
  CHECK_THROWS_AS(r.uniform(5, 4), std::invalid_argument);
  CHECK(!r.chance(0.0));
  CHECK(r.chance(1.0));
}
