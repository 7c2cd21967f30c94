#include "restoration/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace restoration {

namespace {

std::uint64_t edge_key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

}  // namespace

Edge::Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {
  if (a == b) throw std::invalid_argument("self loop: (" + std::to_string(a) + ")");
}

std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

FaultSet::FaultSet(std::vector<Edge> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool FaultSet::contains(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

void FaultSet::insert(const Edge& e) {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) edges_.insert(it, e);
}

void FaultSet::erase(const Edge& e) {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) edges_.erase(it);
}

bool FaultSet::subset_of(const FaultSet& other) const {
  return std::includes(other.edges_.begin(), other.edges_.end(), edges_.begin(), edges_.end());
}

std::string to_string(const FaultSet& fs) {
  std::string out = "{";
  for (int i = 0; i < fs.size(); ++i) {
    if (i) out += ",";
    out += to_string(fs.edges()[i]);
  }
  return out + "}";
}

std::string to_string(const Path& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p.vertices[i]);
  }
  return out + "]";
}

Graph::Graph(int n, std::span<const EdgeSpec> edges, bool weighted)
    : n_(n), weighted_(weighted) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  std::vector<std::pair<Edge, Weight>> recs;
  recs.reserve(edges.size());
  for (const auto& es : edges) {
    if (!has_vertex(es.u) || !has_vertex(es.v))
      throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(es.u) +
                                  "," + std::to_string(es.v) + ")");
    if (es.u == es.v)
      throw std::invalid_argument("self loop: (" + std::to_string(es.u) + ")");
    if (es.w < 1) throw std::invalid_argument("edge weight must be >= 1");
    if (!weighted && es.w != 1)
      throw std::invalid_argument("unweighted graph with non-unit weight");
    recs.emplace_back(Edge(es.u, es.v), es.w);
  }
  std::sort(recs.begin(), recs.end());
  for (std::size_t i = 1; i < recs.size(); ++i)
    if (recs[i].first == recs[i - 1].first)
      throw std::invalid_argument("parallel edge: " + to_string(recs[i].first));

  edges_.reserve(recs.size());
  weights_.reserve(recs.size());
  adj_.assign(n_, {});
  for (const auto& [e, w] : recs) {
    index_.emplace(edge_key(e.u, e.v), static_cast<int>(edges_.size()));
    edges_.push_back(e);
    weights_.push_back(w);
    adj_[e.u].push_back({e.v, w});
    adj_[e.v].push_back({e.u, w});
  }
  for (auto& nbrs : adj_)
    std::sort(nbrs.begin(), nbrs.end(),
              [](const Neighbor& a, const Neighbor& b) { return a.to < b.to; });
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!has_vertex(u) || !has_vertex(v) || u == v) return false;
  return index_.count(edge_key(u, v)) > 0;
}

Weight Graph::weight(const Edge& e) const {
  auto it = index_.find(edge_key(e.u, e.v));
  if (it == index_.end()) throw std::invalid_argument("absent edge: " + to_string(e));
  return weights_[it->second];
}

const std::vector<Graph::Neighbor>& Graph::neighbors(Vertex u) const {
  if (!has_vertex(u)) throw std::out_of_range("vertex out of range: " + std::to_string(u));
  return adj_[u];
}

bool operator==(const Graph& a, const Graph& b) {
  return a.n_ == b.n_ && a.weighted_ == b.weighted_ && a.edges_ == b.edges_ &&
         a.weights_ == b.weights_;
}

namespace {

// Shared SSSP core; stops early once `target` (if any) is settled.
std::vector<Weight> sssp(const Graph& g, const FaultSet& removed, Vertex source,
                         Vertex target) {
  if (!g.has_vertex(source))
    throw std::out_of_range("source out of range: " + std::to_string(source));
  std::vector<Weight> dist(g.vertex_count(), kUnreachable);
  dist[source] = 0;
  if (!g.weighted()) {
    std::queue<Vertex> q;
    q.push(source);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      if (u == target) return dist;
      for (const auto& nb : g.neighbors(u)) {
        if (dist[nb.to] != kUnreachable) continue;
        if (removed.contains(Edge(u, nb.to))) continue;
        dist[nb.to] = dist[u] + 1;
        q.push(nb.to);
      }
    }
    return dist;
  }
  using Item = std::pair<Weight, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  pq.emplace(0, source);
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d > dist[u]) continue;
    if (u == target) return dist;
    for (const auto& nb : g.neighbors(u)) {
      if (removed.contains(Edge(u, nb.to))) continue;
      Weight nd = d + nb.w;
      if (nd < dist[nb.to]) {
        dist[nb.to] = nd;
        pq.emplace(nd, nb.to);
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<Weight> distances(const Graph& g, const FaultSet& removed, Vertex source) {
  return sssp(g, removed, source, -1);
}

Weight masked_distance(const Graph& g, const FaultSet& removed, Vertex s, Vertex t) {
  if (!g.has_vertex(t)) throw std::out_of_range("target out of range: " + std::to_string(t));
  return sssp(g, removed, s, t)[t];
}

Path shortest_path(const Graph& g, const FaultSet& removed, Vertex s, Vertex t) {
  if (!g.has_vertex(s) || !g.has_vertex(t))
    throw std::out_of_range("endpoint out of range");
  std::vector<Weight> dist = distances(g, removed, s);
  if (!reachable(dist[t]))
    throw std::runtime_error("disconnected: no path " + std::to_string(s) + " -> " +
                             std::to_string(t));
  std::vector<Vertex> rev{t};
  Vertex cur = t;
  while (cur != s) {
    Vertex pick = -1;
    // neighbors are sorted by id, so the first predecessor on some shortest
    // path is the smallest one.
    for (const auto& nb : g.neighbors(cur)) {
      if (removed.contains(Edge(cur, nb.to))) continue;
      if (dist[nb.to] + nb.w == dist[cur]) {
        pick = nb.to;
        break;
      }
    }
    if (pick < 0) throw std::logic_error("broken predecessor chain");
    rev.push_back(pick);
    cur = pick;
  }
  std::reverse(rev.begin(), rev.end());
  return Path(std::move(rev));
}

Weight path_length(const Graph& g, const Path& p) {
  if (p.empty()) throw std::invalid_argument("empty path");
  Weight len = 0;
  for (std::size_t i = 1; i < p.vertices.size(); ++i)
    len += g.weight(Edge(p.vertices[i - 1], p.vertices[i]));  // throws if absent
  return len;
}

bool is_shortest(const Graph& g, const FaultSet& removed, const Path& p) {
  if (p.empty()) throw std::invalid_argument("empty path");
  if (!g.has_vertex(p.front()) || !g.has_vertex(p.back()))
    throw std::out_of_range("path endpoint out of range");
  Weight len = 0;
  for (std::size_t i = 1; i < p.vertices.size(); ++i) {
    Edge e(p.vertices[i - 1], p.vertices[i]);
    if (removed.contains(e))
      throw std::invalid_argument("path uses removed edge " + to_string(e));
    len += g.weight(e);  // throws if absent
  }
  return masked_distance(g, removed, p.front(), p.back()) == len;
}

}  // namespace restoration
