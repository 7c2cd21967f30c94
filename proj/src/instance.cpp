#include "restoration/instance.hpp"

#include <stdexcept>

namespace restoration {

namespace {

void check_faults_exist(const Graph& g, const FaultSet& faults) {
  for (const Edge& e : faults)
    if (!g.has_edge(e)) throw std::invalid_argument("fault edge not in graph: " + to_string(e));
}

}  // namespace

ReplacementInstance make_instance(Graph g, FaultSet faults, Vertex s, Vertex t) {
  check_faults_exist(g, faults);
  Path pi = shortest_path(g, faults, s, t);
  return ReplacementInstance{std::move(g), std::move(faults), s, t, std::move(pi)};
}

ReplacementInstance make_instance(Graph g, FaultSet faults, Vertex s, Vertex t, Path pi) {
  check_faults_exist(g, faults);
  if (pi.empty() || pi.front() != s || pi.back() != t)
    throw std::invalid_argument("path endpoints do not match s,t");
  std::vector<char> seen(g.vertex_count(), 0);
  for (Vertex v : pi.vertices) {
    if (!g.has_vertex(v)) throw std::out_of_range("path vertex out of range");
    if (seen[v]++) throw std::invalid_argument("path is not simple");
  }
  if (!is_shortest(g, faults, pi))  // also rejects absent/removed edges
    throw std::invalid_argument("path is not shortest after removing faults");
  return ReplacementInstance{std::move(g), std::move(faults), s, t, std::move(pi)};
}

PathIndex::PathIndex(const Graph& g, const Path& pi) : pi_(&pi) {
  if (pi.empty()) throw std::invalid_argument("empty path");
  pos_.assign(g.vertex_count(), -1);
  prefix_.resize(pi.vertices.size());
  prefix_[0] = 0;
  for (std::size_t i = 0; i < pi.vertices.size(); ++i) {
    Vertex v = pi.vertices[i];
    if (pos_[v] >= 0) throw std::invalid_argument("path is not simple");
    pos_[v] = static_cast<int>(i);
    if (i > 0) prefix_[i] = prefix_[i - 1] + g.weight(Edge(pi.vertices[i - 1], v));
  }
}

int PathIndex::position(Vertex v) const {
  if (v < 0 || v >= static_cast<int>(pos_.size()) || pos_[v] < 0)
    throw std::invalid_argument("vertex not on path: " + std::to_string(v));
  return pos_[v];
}

Vertex PathIndex::vertex_at(int i) const {
  if (i < 0 || i > last()) throw std::out_of_range("path index out of range");
  return pi_->vertices[i];
}

Path PathIndex::slice(int i, int j) const {
  if (i < 0 || j > last() || i > j) throw std::out_of_range("bad slice bounds");
  return Path(std::vector<Vertex>(pi_->vertices.begin() + i, pi_->vertices.begin() + j + 1));
}

std::pair<int, int> subpath_span(const Decomposition& d, const PathIndex& idx, int i) {
  if (i < 0 || i >= d.q()) throw std::out_of_range("subpath index out of range");
  int a = idx.position(d.boundaries[i]);
  if (!d.alternating || i == d.q() - 1) return {a, idx.position(d.boundaries[i + 1])};
  // Alternating form: the separator edge ending at boundary i+1 is not part
  // of subpath i.
  return {a, idx.position(d.boundaries[i + 1]) - 1};
}

}  // namespace restoration
