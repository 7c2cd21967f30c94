#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "restoration/greedy.hpp"
#include "restoration/poly.hpp"
#include "support.hpp"

using namespace restoration;
namespace ts = restoration::test_support;

TEST_CASE("closed-form reach agrees with the product-state walk everywhere") {
  auto insts = ts::corpus({.count = 25, .seed = 31, .n_max = 10, .f_min = 2, .f_max = 4});
  auto winsts = ts::corpus(
      {.count = 10, .seed = 32, .n_max = 10, .f_min = 2, .f_max = 3, .weighted = true});
  insts.insert(insts.end(), winsts.begin(), winsts.end());
  for (const auto& inst : insts) {
    PathIndex idx(inst.g, inst.pi);
    int l = idx.last();
    for (int a = 0; a <= l; ++a)
      for (int b = a; b <= l; ++b) {
        Vertex va = idx.vertex_at(a), vb = idx.vertex_at(b);
        Weight span = idx.span_length(a, b);
        for (const Edge& base : inst.faults)
          for (const Edge& gen : inst.faults)
            for (Side side : {Side::kLeft, Side::kRight}) {
              bool formula = base_fault_reach(inst, va, vb, base, gen, side);
              bool walk = ts::product_state_walk(inst, va, vb, base, gen, side) < span;
              CHECK(formula == walk);
            }
      }
  }
}

TEST_CASE("gadget gamma graphs match the hand-derived adjacency") {
  auto inst = ts::gadget_instance();
  // Canonical fault order: 0 = (12,13), 1 = (14,15), 2 = (18,19).
  REQUIRE(inst.faults.edges() ==
          std::vector<Edge>{Edge(12, 13), Edge(14, 15), Edge(18, 19)});

  GammaGraph gl = build_gamma(inst, 0, 9, inst.faults, Side::kLeft);
  REQUIRE(gl.adj.size() == 3);
  CHECK(gl.adj[0] == std::vector<int>{0});     // (12,13) reachable via itself only
  CHECK(gl.adj[1] == std::vector<int>{0, 1});  // bridge via either left-side fault
  CHECK(gl.adj[2] == std::vector<int>{0, 1});  // far fault still enters from the left

  GammaGraph gr = build_gamma(inst, 0, 9, inst.faults, Side::kRight);
  REQUIRE(gr.adj.size() == 3);
  CHECK(gr.adj[0] == std::vector<int>{1, 2});
  CHECK(gr.adj[1] == std::vector<int>{1, 2});
  CHECK(gr.adj[2] == std::vector<int>{2});
}

TEST_CASE("gadget reduction saturates on a non-minimum set") {
  auto inst = ts::gadget_instance();
  ReduceStats stats;
  FaultSet reduced = fault_reduce(inst, 0, 9, &stats);
  CHECK(reduced == FaultSet({Edge(12, 13), Edge(14, 15)}));
  CHECK(stats.iterations == 1);
  CHECK(stats.sizes == std::vector<int>{3, 2});
  CHECK(stats.left_saturated);
  CHECK(stats.right_saturated);
  CHECK(stats.valid);
  // The oracle minimum is strictly smaller: saturation certifies validity,
  // not minimality.
  CHECK(min_fault_set(inst, 0, 9).size() == 1);
  CHECK(min_fault_set(inst, 0, 9).subset_of(reduced));
}

TEST_CASE("reduction output always keeps the subpath shortest") {
  auto insts = ts::corpus({.count = 25, .seed = 33, .f_min = 3, .f_max = 5});
  for (const auto& inst : insts) {
    PathIndex idx(inst.g, inst.pi);
    int l = idx.last();
    for (int a = 0; a <= l; ++a)
      for (int b = a; b <= l; b += 2) {
        ReduceStats stats;
        FaultSet fi = fault_reduce(inst, idx.vertex_at(a), idx.vertex_at(b), &stats);
        CHECK(stats.valid);
        CHECK(stats.left_saturated);
        CHECK(stats.right_saturated);
        CHECK(fi.subset_of(inst.faults));
        CHECK(is_shortest(inst.g, fi, idx.slice(a, b)));
        // Each exchange strictly shrinks, so iteration count is bounded by
        // the starting size.
        CHECK(stats.iterations <= inst.faults.size());
        for (std::size_t i = 1; i < stats.sizes.size(); ++i)
          CHECK(stats.sizes[i] < stats.sizes[i - 1]);
        // Never smaller than the true minimum.
        CHECK(fi.size() >= min_fault_set(inst, idx.vertex_at(a), idx.vertex_at(b)).size());
      }
  }
  auto inst = ts::gadget_instance();
  CHECK_THROWS_AS(fault_reduce(inst, 9, 0), std::invalid_argument);
}

TEST_CASE("matching certificates agree with max flow and Hall") {
  Rng rng(34);
  for (int trial = 0; trial < 120; ++trial) {
    int n_left = rng.uniform(0, 8);
    int n_right = rng.uniform(1, 8);
    std::vector<std::vector<int>> adj(n_left);
    for (int i = 0; i < n_left; ++i)
      for (int j = 0; j < n_right; ++j)
        if (rng.chance(0.3)) adj[i].push_back(j);

    MatchingResult res = max_bipartite_matching(adj, n_right);
    CHECK(res.size == ts::flow_matching_size(adj, n_right));
    CHECK(res.saturating == (res.size == n_left));

    // The matching itself is consistent.
    std::set<int> used;
    int matched = 0;
    for (int i = 0; i < n_left; ++i) {
      int r = res.match_of_left[i];
      if (r < 0) continue;
      ++matched;
      CHECK(std::find(adj[i].begin(), adj[i].end(), r) != adj[i].end());
      CHECK(used.insert(r).second);
    }
    CHECK(matched == res.size);

    if (!res.saturating) {
      // The witness is a genuine Hall violator with its exact neighborhood.
      CHECK(!res.violator.empty());
      CHECK(static_cast<int>(res.violator_neighborhood.size()) <
            static_cast<int>(res.violator.size()));
      std::set<int> nbhd;
      for (int lv : res.violator)
        for (int rv : adj[lv]) nbhd.insert(rv);
      CHECK(std::vector<int>(nbhd.begin(), nbhd.end()) == res.violator_neighborhood);
    } else {
      CHECK(res.violator.empty());
    }
  }
}

namespace {

// Both scan modes must land on crossing points: every subpath reduces within
// budget, and extending any non-final subpath by one position does not.
void check_crossing_points(const ReplacementInstance& inst, const Decomposition& d,
                           int budget) {
  PathIndex idx(inst.g, inst.pi);
  for (int i = 0; i < d.q(); ++i) {
    auto [a, b] = subpath_span(d, idx, i);
    CHECK(fault_reduce(inst, idx.vertex_at(a), idx.vertex_at(b)).size() <= budget);
    if (i < d.q() - 1)
      CHECK(fault_reduce(inst, idx.vertex_at(a), idx.vertex_at(b + 1)).size() > budget);
  }
}

void check_trace(const ReplacementInstance& inst, const PolyTrace& trace) {
  for (const ReduceStats& st : trace.reduce_calls) {
    CHECK(st.valid);
    CHECK(st.left_saturated);
    CHECK(st.right_saturated);
    CHECK(st.iterations <= inst.faults.size());
    REQUIRE(!st.sizes.empty());
    CHECK(st.sizes.front() == inst.faults.size());
    CHECK(static_cast<int>(st.sizes.size()) == st.iterations + 1);
    for (std::size_t i = 1; i < st.sizes.size(); ++i) CHECK(st.sizes[i] < st.sizes[i - 1]);
  }
}

}  // namespace

TEST_CASE("polynomial decomposition verifies and lands on crossing points") {
  auto insts = ts::corpus({.count = 20, .seed = 35, .f_min = 4, .f_max = 6});
  for (const auto& inst : insts) {
    int f = inst.faults.size();
    for (int k : {1, 2, 4}) {
      if (k > f) continue;
      int budget = f / k;
      for (bool linear : {false, true}) {
        PolyTrace trace;
        Decomposition d = compute_subpaths(inst, k, linear, &trace);
        CHECK(!d.alternating);
        CHECK(verify_decomposition(inst, d, budget).pass);
        CHECK(d.q() <= 8 * k + 1);
        check_crossing_points(inst, d, budget);
        check_trace(inst, trace);
      }
    }
  }
}

TEST_CASE("weighted polynomial decomposition uses separators and verifies") {
  auto insts = ts::corpus({.count = 15, .seed = 36, .f_min = 3, .f_max = 5, .weighted = true});
  for (const auto& inst : insts) {
    int f = inst.faults.size();
    for (int k : {1, 2}) {
      if (k > f) continue;
      int budget = f / k;
      for (bool linear : {false, true}) {
        PolyTrace trace;
        Decomposition d = compute_subpaths_weighted(inst, k, linear, &trace);
        CHECK(d.alternating);
        CHECK(verify_decomposition(inst, d, budget).pass);
        CHECK(d.q() <= 8 * k + 1);
        check_crossing_points(inst, d, budget);
        check_trace(inst, trace);
      }
    }
  }
}

TEST_CASE("polynomial decomposition on the gadget") {
  auto inst = ts::gadget_instance();
  for (int k : {1, 2, 3}) {
    Decomposition d = compute_subpaths(inst, k);
    int budget = 3 / k;
    CHECK(verify_decomposition(inst, d, budget).pass);
    check_crossing_points(inst, d, budget);
  }
  CHECK_THROWS_AS(compute_subpaths(inst, 0), std::invalid_argument);
  CHECK_THROWS_AS(compute_subpaths(inst, 4), std::invalid_argument);
}

TEST_CASE("heavy edges push the tiling form to the weighted variant") {
  Graph g(6,
          {{0, 1, 1}, {1, 2, 6}, {2, 5, 1}, {1, 3, 1}, {3, 2, 1}, {1, 4, 1}, {4, 2, 1}},
          true);
  FaultSet faults({Edge(1, 3), Edge(1, 4)});
  auto inst = make_instance(std::move(g), std::move(faults), 0, 5);

  // Budget 1 cannot absorb the heavy edge: both detours must be masked.
  CHECK_THROWS_AS(compute_subpaths(inst, 2), std::runtime_error);
  Decomposition d = compute_subpaths_weighted(inst, 2);
  CHECK(verify_decomposition(inst, d, 1).pass);
  CHECK(d.separators == std::vector<Edge>{Edge(1, 2)});

  // Budget 2 tiles straight through.
  Decomposition d2 = compute_subpaths(inst, 1);
  CHECK(verify_decomposition(inst, d2, 2).pass);
  CHECK(d2.q() == 1);
}

TEST_CASE("single-vertex spans decompose trivially") {
  auto inst = make_instance(ts::path_graph(5), FaultSet({Edge(0, 1)}), 3, 3);
  for (auto* fn : {&compute_subpaths, &compute_subpaths_weighted}) {
    Decomposition d = fn(inst, 1, false, nullptr);
    CHECK(d.q() == 1);
    CHECK(d.boundaries == std::vector<Vertex>{3, 3});
    CHECK(verify_decomposition(inst, d, 0).pass);
  }
}

TEST_CASE("reduction is never larger than the full set and respects subset rule") {
  // Every intermediate candidate stays within the instance faults; spot-check
  // via the public API on the lower-bound style chords from the gadget plus
  // random corpora already covered above.
  auto inst = ts::gadget_instance();
  FaultSet fi = fault_reduce(inst, 0, 5);
  CHECK(fi.subset_of(inst.faults));
  FaultSet fj = fault_reduce(inst, 2, 7);
  CHECK(fj.subset_of(inst.faults));
  CHECK(fj.empty());  // interior span sees no shortcut at all
}
