#include "restoration/greedy.hpp"

#include <algorithm>
#include <stdexcept>

namespace restoration {

namespace {

void check_budget(int budget) {
  if (budget < 1) throw std::invalid_argument("budget must be >= 1");
}

// Largest j in [lo..last] with min_fault_size(from, j) <= budget, given that
// lo qualifies. Feasibility is monotone: a fault set certifying a longer
// prefix certifies every shorter one, so the feasible j form a prefix range
// and a linear scan stops at the true maximum.
int farthest_within_budget(FaultOracle& oracle, int from, int lo, int budget) {
  int j = lo;
  while (j < oracle.index().last() && oracle.min_fault_size_at(from, j + 1) <= budget) ++j;
  return j;
}

}  // namespace

Decomposition greedy_decompose(const ReplacementInstance& inst, int budget) {
  FaultOracle oracle(inst);
  return greedy_decompose(oracle, budget);
}

Decomposition greedy_decompose(FaultOracle& oracle, int budget) {
  check_budget(budget);
  const PathIndex& idx = oracle.index();
  Decomposition d;
  d.alternating = false;
  d.boundaries.push_back(idx.vertex_at(0));
  if (idx.last() == 0) {
    d.fault_sets.push_back(FaultSet{});
    d.boundaries.push_back(idx.vertex_at(0));
    return d;
  }
  int x = 0;
  while (x < idx.last()) {
    // A unit-weight edge has no strictly shorter detour, so on unweighted
    // instances progress is guaranteed. A heavy edge on a weighted instance
    // can need more faults than the budget allows; the tiling form cannot
    // express that, hence the alternating variant below.
    if (oracle.min_fault_size_at(x, x + 1) > budget)
      throw std::runtime_error("cannot absorb edge at position " + std::to_string(x) +
                               " within budget " + std::to_string(budget));
    int y = farthest_within_budget(oracle, x, x + 1, budget);
    d.fault_sets.push_back(oracle.min_fault_set_at(x, y));
    d.boundaries.push_back(idx.vertex_at(y));
    x = y;
  }
  return d;
}

Decomposition greedy_decompose_weighted(const ReplacementInstance& inst, int budget) {
  FaultOracle oracle(inst);
  return greedy_decompose_weighted(oracle, budget);
}

Decomposition greedy_decompose_weighted(FaultOracle& oracle, int budget) {
  check_budget(budget);
  const PathIndex& idx = oracle.index();
  int l = idx.last();
  Decomposition d;
  d.alternating = true;
  d.boundaries.push_back(idx.vertex_at(0));
  int x = 0;
  while (true) {
    // The empty subpath at x always qualifies, so y is well defined.
    int y = farthest_within_budget(oracle, x, x, budget);
    d.fault_sets.push_back(oracle.min_fault_set_at(x, y));
    if (y == l) {
      d.boundaries.push_back(idx.vertex_at(l));
      break;
    }
    d.separators.push_back(Edge(idx.vertex_at(y), idx.vertex_at(y + 1)));
    d.boundaries.push_back(idx.vertex_at(y + 1));
    x = y + 1;
  }
  return d;
}

Decomposition baseline_decompose(const ReplacementInstance& inst, int k,
                                 std::span<const Edge> order) {
  int f = inst.faults.size();
  if (k < 1 || k > f) throw std::invalid_argument("k out of range [1, |F|]");

  std::vector<Edge> perm(order.begin(), order.end());
  if (perm.empty()) {
    perm = inst.faults.edges();  // canonical order
  } else if (FaultSet(perm) != inst.faults || static_cast<int>(perm.size()) != f) {
    throw std::invalid_argument("order is not a permutation of the fault set");
  }
  FaultSet masked(std::vector<Edge>(perm.begin(), perm.begin() + (f - k)));

  PathIndex idx(inst.g, inst.pi);
  int l = idx.last();
  Decomposition d;
  d.alternating = false;
  d.boundaries.push_back(idx.vertex_at(0));
  if (l == 0) {
    d.fault_sets.push_back(masked);
    d.boundaries.push_back(idx.vertex_at(0));
    return d;
  }
  int x = 0;
  while (x < l) {
    // pi avoids all faults, so dist[] bounds the subpath weight from below;
    // equality means pi[x..j] is shortest in the masked graph.
    std::vector<Weight> dist = distances(inst.g, masked, idx.vertex_at(x));
    int y = x;
    while (y < l && dist[idx.vertex_at(y + 1)] == idx.span_length(x, y + 1)) ++y;
    if (y == x)
      throw std::runtime_error("heavy edge at position " + std::to_string(x) +
                               " is not shortest in the masked graph");
    d.fault_sets.push_back(masked);
    d.boundaries.push_back(idx.vertex_at(y));
    x = y;
  }
  return d;
}

}  // namespace restoration
