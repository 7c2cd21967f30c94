// poly.hpp - polynomial-time decomposition. Replaces the oracle's subset
// enumeration with a distance formula for "which fault can be the first one
// on a short detour", a bipartite matching certificate, and a Hall-violator
// exchange that shrinks candidate fault sets until both matchings saturate.
#pragma once

#include <memory>
#include <vector>

#include "restoration/instance.hpp"

namespace restoration {

// Which end of the subpath the probing traversal starts from.
enum class Side { kLeft, kRight };

// Lazily cached single-source distances in g and in g minus the instance
// faults. Sources repeat heavily across formula evaluations (subpath
// endpoints and fault endpoints), so each SSSP runs once.
class DistanceCache {
 public:
  DistanceCache(const Graph& g, const FaultSet& faults);

  const std::vector<Weight>& full(Vertex source);    // distances in g
  const std::vector<Weight>& masked(Vertex source);  // distances in g minus faults

 private:
  const Graph* g_;
  const FaultSet* faults_;
  std::vector<std::unique_ptr<std::vector<Weight>>> full_, masked_;  // per source
};

// True iff some walk from a to b, strictly shorter than pi[a..b], crosses
// `generator` and meets `base` as its first fault when traversed from the
// side's end (a for kLeft, b for kRight). Evaluated in closed form from
// cached distances: fault-free leg to one endpoint of base, any-graph legs
// across to generator and on to the far end, plus both fault weights. Walks
// may repeat vertices; that is deliberate.
bool base_fault_reach(const ReplacementInstance& inst, Vertex a, Vertex b, const Edge& base,
                      const Edge& generator, Side side);
bool base_fault_reach(const ReplacementInstance& inst, DistanceCache& cache, Vertex a,
                      Vertex b, Weight span, const Edge& base, const Edge& generator,
                      Side side);

// Bipartite reachability between a candidate fault set (left) and the full
// fault set (right): adj[i] lists the right indices whose edge can serve as
// the side-first fault on a short detour through left edge i.
struct GammaGraph {
  std::vector<Edge> left;   // candidate set, canonical order
  std::vector<Edge> right;  // instance fault set, canonical order
  std::vector<std::vector<int>> adj;
  Side side = Side::kLeft;
};

GammaGraph build_gamma(const ReplacementInstance& inst, Vertex a, Vertex b,
                       const FaultSet& candidate, Side side);
GammaGraph build_gamma(const ReplacementInstance& inst, DistanceCache& cache, Vertex a,
                       Vertex b, Weight span, const FaultSet& candidate, Side side);

// Maximum matching plus, when the left side is not saturated, a Hall
// violator: a left subset A with |N(A)| < |A| and its exact neighborhood.
struct MatchingResult {
  std::vector<int> match_of_left;  // right index or -1 per left vertex
  int size = 0;
  bool saturating = false;
  std::vector<int> violator;               // left indices, only if !saturating
  std::vector<int> violator_neighborhood;  // right indices of N(violator)
};

MatchingResult max_bipartite_matching(const std::vector<std::vector<int>>& adj, int n_right);
MatchingResult matching_with_witness(const GammaGraph& gamma);

// Diagnostics for one fault_reduce run; sizes holds |F_i| after each
// iteration starting from the initial |F|.
struct ReduceStats {
  int a_pos = 0, b_pos = 0;
  int iterations = 0;
  std::vector<int> sizes;
  bool left_saturated = false, right_saturated = false;
  bool valid = false;  // returned set keeps the subpath shortest
};

struct PolyTrace {
  std::vector<ReduceStats> reduce_calls;
};

// Starts from the full fault set and, while either side's matching leaves
// the candidate unsaturated, swaps the Hall violator for its neighborhood
// (left side first). Each swap strictly shrinks the candidate, so at most
// |F| iterations run. The result keeps pi[a..b] shortest and saturates both
// matchings; it need not be minimum.
FaultSet fault_reduce(const ReplacementInstance& inst, Vertex a, Vertex b,
                      ReduceStats* stats = nullptr);

// Walks pi left to right; each boundary is placed by searching for a
// crossing point y where fault_reduce fits the budget floor(|F|/k) at y but
// not at y+1 (binary search by default, full scan with linear_scan). At most
// 8k+1 subpaths. Unweighted instances only; the weighted variant below
// diverts unabsorbable edges into separators.
Decomposition compute_subpaths(const ReplacementInstance& inst, int k,
                               bool linear_scan = false, PolyTrace* trace = nullptr);

Decomposition compute_subpaths_weighted(const ReplacementInstance& inst, int k,
                                        bool linear_scan = false, PolyTrace* trace = nullptr);

}  // namespace restoration
