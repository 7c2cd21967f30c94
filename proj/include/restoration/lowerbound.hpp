// lowerbound.hpp - generator for the hard instance family: a long path whose
// endpoints are also joined by two nested fans of chords, all of which are
// faults. The surviving path is the unique replacement path, and restoring
// either half of it needs all but one of the chords removed, so few subpaths
// force large per-subpath fault sets. Gluing copies end to end scales the
// effect to any fault count.
#pragma once

#include <span>
#include <utility>
#include <vector>

#include "restoration/instance.hpp"

namespace restoration {

// A generated hard instance plus the bookkeeping tests need: which vertices
// delimit each copy's two half-arcs and which faults belong to which copy.
struct LowerBoundInstance {
  ReplacementInstance instance;
  std::vector<int> g_params;  // size exponent per copy; copy c has 2^(g+1)-1 vertices
  int copies = 1;
  std::vector<std::pair<Vertex, Vertex>> half_arcs;  // 2 per copy, in path order
  std::vector<FaultSet> per_copy_faults;
};

// One copy with parameter g >= 3: vertices 0..2^(g+1)-2 in a path, plus
// chord fault sets E1 = {(2^j - 1, 2^(g+1) - 2^(j+2) - 1)} and
// E2 = {(2^(j+2) - 1, 2^(g+1) - 2^j - 1)} for 0 <= j <= g-3, giving
// |F| = 2(g-2). Throws std::invalid_argument for g < 3 (no chords fit).
LowerBoundInstance gen_single(int g);

// Same with the last E2 chord dropped from both the graph and the fault
// set, for odd fault counts: |F| = 2(g-2) - 1.
LowerBoundInstance gen_single_odd(int g);

// copies >= 1 single instances glued end to end: each copy's last vertex is
// identified with the next copy's first. Mixed sizes cover fault counts not
// divisible by the copy count.
LowerBoundInstance gen_glued(int g, int copies);
LowerBoundInstance gen_glued(std::span<const int> gs);

// Oracle minimum fault set size over half-arc `arc_index` (0-based, path
// order). For a full copy this is one less than the copy's fault count.
int half_arc_min_fault(const LowerBoundInstance& lbi, int arc_index);

}  // namespace restoration
