// graph.hpp - undirected graphs with positive integer weights, fault sets,
// paths, and the shortest-path primitives everything else is built on.
#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace restoration {

using Vertex = int;
using Weight = long long;

// Sentinel for unreachable vertices. Kept well below max() so sums of a few
// distances never overflow.
inline constexpr Weight kUnreachable = std::numeric_limits<Weight>::max() / 4;

inline bool reachable(Weight d) { return d < kUnreachable; }

// Undirected edge identified by its endpoints; stored with u < v so that set
// membership is orientation-free.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b);

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

// A set of edges with canonical (sorted, deduplicated) storage. Lexicographic
// ordering over the sorted edge list makes "smallest" fault sets well defined.
class FaultSet {
 public:
  FaultSet() = default;
  explicit FaultSet(std::vector<Edge> edges);

  bool contains(const Edge& e) const;
  void insert(const Edge& e);
  void erase(const Edge& e);
  bool subset_of(const FaultSet& other) const;

  int size() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return edges_.empty(); }
  const std::vector<Edge>& edges() const { return edges_; }
  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }

  friend auto operator<=>(const FaultSet&, const FaultSet&) = default;

 private:
  std::vector<Edge> edges_;  // sorted, unique
};

std::string to_string(const FaultSet& fs);

// Vertex sequence v_0..v_l. A single vertex is a valid (zero-length) path.
struct Path {
  std::vector<Vertex> vertices;

  Path() = default;
  explicit Path(std::vector<Vertex> vs) : vertices(std::move(vs)) {}

  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  bool empty() const { return vertices.empty(); }
  // Number of edges, not vertices.
  int hops() const { return static_cast<int>(vertices.size()) - 1; }

  friend bool operator==(const Path&, const Path&) = default;
};

std::string to_string(const Path& p);

struct EdgeSpec {
  Vertex u = 0;
  Vertex v = 0;
  Weight w = 1;
};

// Immutable undirected graph. Unweighted graphs carry weight 1 on every edge
// so all length arithmetic is uniform. Self loops and parallel edges are
// rejected at construction.
class Graph {
 public:
  struct Neighbor {
    Vertex to;
    Weight w;
  };

  Graph() = default;  // empty graph, useful as a placeholder before assignment
  Graph(int n, std::span<const EdgeSpec> edges, bool weighted);
  Graph(int n, std::initializer_list<EdgeSpec> edges, bool weighted)
      : Graph(n, std::span<const EdgeSpec>(edges.begin(), edges.size()), weighted) {}

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool weighted() const { return weighted_; }

  bool has_vertex(Vertex v) const { return v >= 0 && v < n_; }
  bool has_edge(Vertex u, Vertex v) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }
  Weight weight(const Edge& e) const;  // throws if the edge is absent

  // Canonically sorted edge list; weights_[i] belongs to edges()[i].
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Weight>& weights() const { return weights_; }
  // Neighbors sorted by vertex id; the basis for deterministic tie-breaking.
  const std::vector<Neighbor>& neighbors(Vertex u) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  int n_ = 0;
  bool weighted_ = false;
  std::vector<Edge> edges_;
  std::vector<Weight> weights_;
  std::vector<std::vector<Neighbor>> adj_;
  std::unordered_map<std::uint64_t, int> index_;  // canonical (u,v) -> edge index
};

// Single-source distances in g with `removed` masked out. Entry d[v] is the
// shortest-path length from source to v, or kUnreachable.
std::vector<Weight> distances(const Graph& g, const FaultSet& removed, Vertex source);

// Point-to-point distance with early exit once the target settles.
Weight masked_distance(const Graph& g, const FaultSet& removed, Vertex s, Vertex t);

// Deterministic shortest path: walking back from t, among equal-length
// predecessors the smallest vertex id wins. Throws std::runtime_error if t is
// unreachable from s in g minus removed.
Path shortest_path(const Graph& g, const FaultSet& removed, Vertex s, Vertex t);

// Total weight of p in g; throws std::invalid_argument if p uses an absent
// edge or is empty.
Weight path_length(const Graph& g, const Path& p);

// True iff p is exactly as long as the masked distance between its endpoints.
// Throws std::invalid_argument if p uses an absent or removed edge.
bool is_shortest(const Graph& g, const FaultSet& removed, const Path& p);

}  // namespace restoration
