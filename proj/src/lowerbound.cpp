#include "restoration/lowerbound.hpp"

#include <stdexcept>

#include "restoration/oracle.hpp"

namespace restoration {

namespace {

// Chords for one copy, in 0-based ids shifted by `off`. The two fans nest
// around the midpoint: E1 runs from low powers of two to high vertices, E2
// mirrors it. `skip_last_e2` drops the innermost E2 chord (odd fault count).
void append_copy(int g, int off, bool skip_last_e2, std::vector<EdgeSpec>& chords,
                 FaultSet& copy_faults) {
  int top = 1 << (g + 1);  // one past the last 1-based label
  for (int j = 0; j <= g - 3; ++j) {
    EdgeSpec e1{off + (1 << j) - 1, off + top - (1 << (j + 2)) - 1, 1};
    chords.push_back(e1);
    copy_faults.insert(Edge(e1.u, e1.v));
    if (skip_last_e2 && j == g - 3) continue;
    EdgeSpec e2{off + (1 << (j + 2)) - 1, off + top - (1 << j) - 1, 1};
    chords.push_back(e2);
    copy_faults.insert(Edge(e2.u, e2.v));
  }
}

LowerBoundInstance build(std::span<const int> gs, bool odd_single) {
  if (gs.empty()) throw std::invalid_argument("need at least one copy");
  for (int g : gs)
    if (g < 3) throw std::invalid_argument("degenerate size parameter: g must be >= 3");

  LowerBoundInstance lbi;
  lbi.g_params.assign(gs.begin(), gs.end());
  lbi.copies = static_cast<int>(gs.size());

  std::vector<EdgeSpec> edges;
  std::vector<Edge> all_faults;
  int off = 0;
  for (int c = 0; c < lbi.copies; ++c) {
    int g = gs[c];
    int n_copy = (1 << (g + 1)) - 1;
    FaultSet copy_faults;
    append_copy(g, off, odd_single, edges, copy_faults);
    for (const Edge& e : copy_faults) all_faults.push_back(e);
    lbi.per_copy_faults.push_back(std::move(copy_faults));
    lbi.half_arcs.emplace_back(off, off + (1 << g) - 1);
    lbi.half_arcs.emplace_back(off + (1 << g) - 1, off + n_copy - 1);
    off += n_copy - 1;  // glue: this copy's last vertex is the next one's first
  }
  int n = off + 1;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1});

  Graph g(n, edges, false);
  lbi.instance = make_instance(std::move(g), FaultSet(std::move(all_faults)), 0, n - 1);
  return lbi;
}

}  // namespace

LowerBoundInstance gen_single(int g) {
  int gs[] = {g};
  return build(gs, false);
}

LowerBoundInstance gen_single_odd(int g) {
  int gs[] = {g};
  return build(gs, true);
}

LowerBoundInstance gen_glued(int g, int copies) {
  if (copies < 1) throw std::invalid_argument("copies must be >= 1");
  std::vector<int> gs(copies, g);
  return gen_glued(gs);
}

LowerBoundInstance gen_glued(std::span<const int> gs) { return build(gs, false); }

int half_arc_min_fault(const LowerBoundInstance& lbi, int arc_index) {
  if (arc_index < 0 || arc_index >= static_cast<int>(lbi.half_arcs.size()))
    throw std::out_of_range("half-arc index out of range");
  auto [a, b] = lbi.half_arcs[arc_index];
  return min_fault_set(lbi.instance, a, b).size();
}

}  // namespace restoration
