// instance.hpp - a replacement-path instance (graph, fault set, endpoints,
// canonical surviving shortest path) and the decomposition record produced by
// the decomposers.
#pragma once

#include <vector>

#include "restoration/graph.hpp"

namespace restoration {

// A graph with a fault set and the canonical shortest s-t path that survives
// the faults. pi is always the deterministic shortest_path(g, faults, s, t),
// so independently computed instances agree edge for edge.
struct ReplacementInstance {
  Graph g;
  FaultSet faults;
  Vertex s = 0;
  Vertex t = 0;
  Path pi;
};

// Builds an instance, computing pi. Throws std::invalid_argument if a fault
// edge is absent from g and std::runtime_error if t is unreachable in g minus
// faults.
ReplacementInstance make_instance(Graph g, FaultSet faults, Vertex s, Vertex t);

// Same but with a caller-supplied path; validates that pi runs s -> t, is
// simple, avoids the faults, and is shortest in g minus faults.
ReplacementInstance make_instance(Graph g, FaultSet faults, Vertex s, Vertex t, Path pi);

// Position lookup along pi plus prefix weights, used for subpath slicing.
class PathIndex {
 public:
  PathIndex(const Graph& g, const Path& pi);

  bool on_path(Vertex v) const { return pos_[v] >= 0; }
  // Index of v on pi; throws std::invalid_argument if v is off the path.
  int position(Vertex v) const;
  int last() const { return static_cast<int>(prefix_.size()) - 1; }
  Vertex vertex_at(int i) const;
  // Weight of pi[i..j].
  Weight span_length(int i, int j) const { return prefix_[j] - prefix_[i]; }
  Path slice(int i, int j) const;

 private:
  const Path* pi_;
  std::vector<int> pos_;       // vertex -> index on pi, or -1
  std::vector<Weight> prefix_;  // prefix_[i] = weight of pi[0..i]
};

// How a decomposition divides pi into q consecutive subpaths.
//
// boundaries holds x_0..x_q with x_0 = s and x_q = t. In the tiling form
// (alternating == false) subpath i runs pi[x_i .. x_{i+1}] and separators is
// empty. In the alternating form x_{i+1} is the first vertex of subpath i+1,
// separators[i] is the pi edge ending at x_{i+1}, and subpath i runs from x_i
// to the vertex before x_{i+1} (possibly empty). The last subpath always ends
// at t. fault_sets[i] is what subpath i needs removed to be shortest.
struct Decomposition {
  std::vector<Vertex> boundaries;
  std::vector<FaultSet> fault_sets;
  std::vector<Edge> separators;
  bool alternating = false;

  int q() const { return static_cast<int>(fault_sets.size()); }

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// Start/end positions of subpath i on pi under the decomposition's form.
// Requires a structurally valid decomposition (see verify_decomposition for
// the tolerant check).
std::pair<int, int> subpath_span(const Decomposition& d, const PathIndex& idx, int i);

}  // namespace restoration
