// support.hpp - shared fixtures plus reference implementations that solve
// the same problems as the library with deliberately different algorithms,
// so agreement between the two is meaningful.
#pragma once

#include <climits>
#include <cstdint>
#include <queue>
#include <utility>
#include <vector>

#include "restoration/greedy.hpp"
#include "restoration/instance.hpp"
#include "restoration/oracle.hpp"
#include "restoration/poly.hpp"
#include "restoration/random_gen.hpp"

namespace restoration::test_support {

// Plain edge relaxation, n-1 rounds, no queue and no early exit. Cross-checks
// the BFS/Dijkstra pair behind distances().
inline std::vector<Weight> bellman_ford(const Graph& g, const FaultSet& removed,
                                        Vertex source) {
  int n = g.vertex_count();
  std::vector<Weight> dist(n, kUnreachable);
  dist[source] = 0;
  for (int round = 0; round + 1 < n; ++round) {
    bool changed = false;
    for (int i = 0; i < g.edge_count(); ++i) {
      const Edge& e = g.edges()[i];
      if (removed.contains(e)) continue;
      Weight w = g.weights()[i];
      if (reachable(dist[e.u]) && dist[e.u] + w < dist[e.v]) {
        dist[e.v] = dist[e.u] + w;
        changed = true;
      }
      if (reachable(dist[e.v]) && dist[e.v] + w < dist[e.u]) {
        dist[e.u] = dist[e.v] + w;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return dist;
}

// Full bitmask sweep over every fault subset: smallest qualifying size wins,
// ties broken by FaultSet comparison. No enumeration-order shortcuts.
inline FaultSet brute_min_fault_set(const ReplacementInstance& inst, Vertex a, Vertex b) {
  PathIndex idx(inst.g, inst.pi);
  Weight len = idx.span_length(idx.position(a), idx.position(b));
  const std::vector<Edge>& all = inst.faults.edges();
  int f = static_cast<int>(all.size());
  int best_size = INT_MAX;
  FaultSet best;
  for (std::uint32_t mask = 0; mask < (1u << f); ++mask) {
    std::vector<Edge> chosen;
    for (int i = 0; i < f; ++i)
      if (mask & (1u << i)) chosen.push_back(all[i]);
    FaultSet cand(std::move(chosen));
    if (masked_distance(inst.g, cand, a, b) != len) continue;
    if (cand.size() < best_size || (cand.size() == best_size && cand < best)) {
      best_size = cand.size();
      best = std::move(cand);
    }
  }
  return best;
}

// Maximum bipartite matching via unit-capacity max flow (Edmonds-Karp over a
// dense residual matrix); nothing shared with the augmenting-DFS version.
inline int flow_matching_size(const std::vector<std::vector<int>>& adj, int n_right) {
  int n_left = static_cast<int>(adj.size());
  int n = n_left + n_right + 2, src = 0, sink = n - 1;
  std::vector<std::vector<int>> cap(n, std::vector<int>(n, 0));
  for (int i = 0; i < n_left; ++i) cap[src][1 + i] = 1;
  for (int i = 0; i < n_left; ++i)
    for (int j : adj[i]) cap[1 + i][1 + n_left + j] = 1;
  for (int j = 0; j < n_right; ++j) cap[1 + n_left + j][sink] = 1;

  int flow = 0;
  while (true) {
    std::vector<int> parent(n, -1);
    parent[src] = src;
    std::queue<int> q;
    q.push(src);
    while (!q.empty() && parent[sink] < 0) {
      int u = q.front();
      q.pop();
      for (int v = 0; v < n; ++v)
        if (parent[v] < 0 && cap[u][v] > 0) {
          parent[v] = u;
          q.push(v);
        }
    }
    if (parent[sink] < 0) break;
    for (int v = sink; v != src; v = parent[v]) {
      --cap[parent[v]][v];
      ++cap[v][parent[v]];
    }
    ++flow;
  }
  return flow;
}

// Shortest start->finish walk that crosses no fault before `base`, crosses
// base, and later crosses `generator`. Dijkstra over (vertex, phase) with
// phase 0 = no fault seen yet, 1 = base crossed, 2 = generator also crossed.
// The closed-form distance formula must agree with this exactly.
inline Weight product_state_walk(const ReplacementInstance& inst, Vertex a, Vertex b,
                                 const Edge& base, const Edge& generator, Side side) {
  const Graph& g = inst.g;
  Vertex start = side == Side::kLeft ? a : b;
  Vertex finish = side == Side::kLeft ? b : a;
  int n = g.vertex_count();
  auto id = [n](Vertex v, int phase) { return phase * n + v; };
  std::vector<Weight> dist(3 * n, kUnreachable);
  using Item = std::pair<Weight, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[id(start, 0)] = 0;
  pq.emplace(0, id(start, 0));
  while (!pq.empty()) {
    auto [d, su] = pq.top();
    pq.pop();
    if (d > dist[su]) continue;
    int phase = su / n;
    Vertex u = su % n;
    for (const auto& nb : g.neighbors(u)) {
      Edge e(u, nb.to);
      int np = phase;
      if (phase == 0) {
        if (e == base)
          np = base == generator ? 2 : 1;
        else if (inst.faults.contains(e))
          continue;  // base must be the first fault on the walk
      } else if (phase == 1 && e == generator) {
        np = 2;
      }
      Weight nd = d + nb.w;
      if (nd < dist[id(nb.to, np)]) {
        dist[id(nb.to, np)] = nd;
        pq.emplace(nd, id(nb.to, np));
      }
    }
  }
  return dist[id(finish, 2)];
}

// A path 0..9 with a funnel gadget hanging off it. Exchange-based reduction
// over the whole span terminates on {(12,13),(14,15)} although {(14,15)}
// alone keeps the path shortest, making it the canonical "saturating but not
// minimum" example. Layout:
//
//     0 --10--11--> 14            15 --16--17--> 9
//     0 --12==13--> 14 ==bridge== 15 --18==19--> 9      (== are faults)
//
// plus the plain path 0-1-...-9; all three faults sit on the gadget.
inline ReplacementInstance gadget_instance() {
  std::vector<EdgeSpec> es;
  for (int i = 0; i < 9; ++i) es.push_back({i, i + 1, 1});
  es.push_back({0, 10, 1});
  es.push_back({10, 11, 1});
  es.push_back({11, 14, 1});
  es.push_back({0, 12, 1});
  es.push_back({12, 13, 1});
  es.push_back({13, 14, 1});
  es.push_back({14, 15, 1});
  es.push_back({15, 16, 1});
  es.push_back({16, 17, 1});
  es.push_back({17, 9, 1});
  es.push_back({15, 18, 1});
  es.push_back({18, 19, 1});
  es.push_back({19, 9, 1});
  Graph g(20, es, false);
  FaultSet faults({Edge(12, 13), Edge(14, 15), Edge(18, 19)});
  return make_instance(std::move(g), std::move(faults), 0, 9);
}

inline Graph path_graph(int n) {
  std::vector<EdgeSpec> es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1, 1});
  return Graph(n, es, false);
}

struct CorpusSpec {
  int count = 40;
  std::uint64_t seed = 1;
  int n_min = 6, n_max = 12;
  double p = 0.35;
  int f_min = 2, f_max = 4;
  bool weighted = false;
};

// Seeded instances, faults biased onto shortest paths; deterministic.
inline std::vector<ReplacementInstance> corpus(const CorpusSpec& cs) {
  std::vector<ReplacementInstance> out;
  for (std::uint64_t i = 0; static_cast<int>(out.size()) < cs.count; ++i) {
    Rng rng = Rng::fork(cs.seed, i);
    RandomInstanceSpec spec;
    spec.n_min = cs.n_min;
    spec.n_max = cs.n_max;
    spec.edge_probability = cs.p;
    spec.faults_min = cs.f_min;
    spec.faults_max = cs.f_max;
    spec.weighted = cs.weighted;
    out.push_back(random_instance(rng, spec));
  }
  return out;
}

}  // namespace restoration::test_support
