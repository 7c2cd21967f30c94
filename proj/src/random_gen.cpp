#include "restoration/random_gen.hpp"

#include <cmath>
#include <stdexcept>

namespace restoration {

std::uint64_t Rng::next() {
  // splitmix64: tiny, well mixed, identical everywhere.
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

int Rng::uniform(int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("empty range");
  std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  std::uint64_t limit = ~0ull - ~0ull % span;  // rejection keeps it unbiased
  std::uint64_t r;
  do {
    r = next();
  } while (r >= limit);
  return lo + static_cast<int>(r % span);
}

bool Rng::chance(double p) {
  if (p <= 0) return false;
  if (p >= 1) return true;
  return next() < static_cast<std::uint64_t>(p * 18446744073709551615.0);
}

Rng Rng::fork(std::uint64_t seed, std::uint64_t stream) {
  Rng mixer(seed ^ (0x9e3779b97f4a7c15ull * (stream + 1)));
  mixer.next();
  return mixer;
}

Graph random_graph(Rng& rng, int n, double p, bool weighted, Weight wmin, Weight wmax) {
  std::vector<EdgeSpec> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(p)) {
        Weight w = weighted ? rng.uniform(static_cast<int>(wmin), static_cast<int>(wmax)) : 1;
        edges.push_back({u, v, w});
      }
  return Graph(n, edges, weighted);
}

Graph grid_graph(Rng& rng, int rows, int cols, bool weighted, Weight wmin, Weight wmax) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("degenerate grid");
  std::vector<EdgeSpec> edges;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      Weight w1 = weighted ? rng.uniform(static_cast<int>(wmin), static_cast<int>(wmax)) : 1;
      Weight w2 = weighted ? rng.uniform(static_cast<int>(wmin), static_cast<int>(wmax)) : 1;
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1), w1});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c), w2});
    }
  return Graph(rows * cols, edges, weighted);
}

std::optional<ReplacementInstance> sample_instance(Rng& rng, const Graph& g, int fault_count,
                                                   int retries) {
  int n = g.vertex_count();
  int m = g.edge_count();
  if (n < 2 || m < fault_count || fault_count < 0) return std::nullopt;
  for (int attempt = 0; attempt < retries; ++attempt) {
    Vertex s = rng.uniform(0, n - 1);
    Vertex t = rng.uniform(0, n - 1);
    if (s == t) continue;
    // Sample distinct edge indices, then insist s-t stays connected.
    std::vector<int> pool(m);
    for (int i = 0; i < m; ++i) pool[i] = i;
    std::vector<Edge> chosen;
    for (int i = 0; i < fault_count; ++i) {
      int j = rng.uniform(i, m - 1);
      std::swap(pool[i], pool[j]);
      chosen.push_back(g.edges()[pool[i]]);
    }
    FaultSet faults(std::move(chosen));
    if (!reachable(masked_distance(g, faults, s, t))) continue;
    return make_instance(g, std::move(faults), s, t);
  }
  return std::nullopt;
}

std::optional<ReplacementInstance> sample_instance_on_path(Rng& rng, const Graph& g,
                                                           int fault_count, int retries) {
  int n = g.vertex_count();
  if (n < 2 || g.edge_count() < fault_count || fault_count < 0) return std::nullopt;
  for (int attempt = 0; attempt < retries; ++attempt) {
    Vertex s = rng.uniform(0, n - 1);
    Vertex t = rng.uniform(0, n - 1);
    if (s == t || !reachable(masked_distance(g, {}, s, t))) continue;
    FaultSet faults;
    bool ok = true;
    for (int i = 0; i < fault_count && ok; ++i) {
      Path p = shortest_path(g, faults, s, t);
      // Try a random path edge first, then rotate through the rest; any of
      // them is fine as long as s-t stays connected afterwards.
      int start = rng.uniform(0, p.hops() - 1);
      ok = false;
      for (int off = 0; off < p.hops(); ++off) {
        int j = (start + off) % p.hops();
        Edge e(p.vertices[j], p.vertices[j + 1]);
        faults.insert(e);
        if (reachable(masked_distance(g, faults, s, t))) {
          ok = true;
          break;
        }
        faults.erase(e);
      }
    }
    if (!ok) continue;
    return make_instance(g, std::move(faults), s, t);
  }
  return std::nullopt;
}

ReplacementInstance random_instance(Rng& rng, const RandomInstanceSpec& spec) {
  for (int round = 0;; ++round) {
    if (round > 1000) throw std::runtime_error("instance sampling failed to converge");
    int n = rng.uniform(spec.n_min, spec.n_max);
    Graph g = random_graph(rng, n, spec.edge_probability, spec.weighted, spec.weight_min,
                           spec.weight_max);
    int f = rng.uniform(spec.faults_min, spec.faults_max);
    auto inst = spec.on_path_faults ? sample_instance_on_path(rng, g, f)
                                    : sample_instance(rng, g, f);
    if (inst) return std::move(*inst);
  }
}

}  // namespace restoration
