// oracle.hpp - exponential-time ground truth: minimum fault sets for
// subpaths, the restorability decision procedure, and the decomposition
// verifier. Intended for desk-scale inputs (|F| <= ~12, n <= ~64); the
// polynomial decomposer is checked against this, never the other way around.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "restoration/instance.hpp"

namespace restoration {

// Memoizes minimum fault sets per subpath of pi. Holds a reference to the
// instance, which must outlive the oracle.
class FaultOracle {
 public:
  explicit FaultOracle(const ReplacementInstance& inst);

  const ReplacementInstance& instance() const { return *inst_; }
  const PathIndex& index() const { return idx_; }

  // Smallest F' (by size, then lexicographically over canonically sorted
  // edges) such that pi[a..b] is shortest in g minus F'. a and b must lie on
  // pi with a not after b. Always exists: the full fault set qualifies.
  const FaultSet& min_fault_set(Vertex a, Vertex b);
  const FaultSet& min_fault_set_at(int apos, int bpos);  // by pi positions
  int min_fault_size_at(int apos, int bpos);

 private:
  const ReplacementInstance* inst_;
  PathIndex idx_;
  std::map<std::pair<int, int>, FaultSet> memo_;
};

FaultSet min_fault_set(const ReplacementInstance& inst, Vertex a, Vertex b);

// Outcome of a (q, r) restorability query. r_min is the smallest r' such
// that pi splits into at most q consecutive subpaths each needing at most r'
// faults removed; the pair is restorable iff r_min <= r. When restorable,
// witness holds a tiling decomposition with every fault set of size <= r and
// at most q subpaths.
struct RestorabilityVerdict {
  bool restorable = false;
  int r_min = 0;
  std::optional<Decomposition> witness;
};

RestorabilityVerdict restorable_check(const ReplacementInstance& inst, int q, int r);
RestorabilityVerdict restorable_check(FaultOracle& oracle, int q, int r);

struct VerifierCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifierReport {
  bool pass = false;
  std::vector<VerifierCheck> checks;
};

// Re-derives every claim a decomposition makes: boundaries lie on pi in
// order with the right endpoints, separators (alternating form) are exactly
// the pi edges between consecutive subpaths, every fault set is a subset of
// the instance faults within budget, and every subpath is shortest once its
// fault set is removed. Malformed input yields failing checks, not throws.
VerifierReport verify_decomposition(const ReplacementInstance& inst, const Decomposition& d,
                                    int budget);

}  // namespace restoration
