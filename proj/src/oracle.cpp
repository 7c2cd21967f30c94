#include "restoration/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace restoration {

namespace {

// Advance sel to the next k-combination of {0..n-1} in lexicographic order.
bool next_combination(std::vector<int>& sel, int n) {
  int k = static_cast<int>(sel.size());
  for (int i = k - 1; i >= 0; --i) {
    if (sel[i] < n - (k - i)) {
      ++sel[i];
      for (int j = i + 1; j < k; ++j) sel[j] = sel[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

FaultOracle::FaultOracle(const ReplacementInstance& inst)
    : inst_(&inst), idx_(inst.g, inst.pi) {}

const FaultSet& FaultOracle::min_fault_set(Vertex a, Vertex b) {
  return min_fault_set_at(idx_.position(a), idx_.position(b));
}

const FaultSet& FaultOracle::min_fault_set_at(int apos, int bpos) {
  if (apos > bpos) throw std::invalid_argument("subpath endpoints out of order");
  auto key = std::make_pair(apos, bpos);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  Vertex a = idx_.vertex_at(apos);
  Vertex b = idx_.vertex_at(bpos);
  Weight len = idx_.span_length(apos, bpos);
  const std::vector<Edge>& all = inst_->faults.edges();
  int f = static_cast<int>(all.size());

  // Subsets by cardinality, lexicographic within each cardinality; masking
  // more edges only lengthens other routes, so the first hit is minimum.
  for (int c = 0; c <= f; ++c) {
    std::vector<int> sel(c);
    for (int i = 0; i < c; ++i) sel[i] = i;
    do {
      std::vector<Edge> chosen;
      chosen.reserve(c);
      for (int i : sel) chosen.push_back(all[i]);
      FaultSet cand(std::move(chosen));
      // The subpath avoids every fault, so its length always bounds the
      // masked distance; equality means no strictly shorter route survives.
      if (masked_distance(inst_->g, cand, a, b) == len)
        return memo_.emplace(key, std::move(cand)).first->second;
    } while (next_combination(sel, f));
  }
  throw std::logic_error("full fault set did not certify subpath");  // unreachable
}

int FaultOracle::min_fault_size_at(int apos, int bpos) {
  return min_fault_set_at(apos, bpos).size();
}

FaultSet min_fault_set(const ReplacementInstance& inst, Vertex a, Vertex b) {
  FaultOracle oracle(inst);
  return oracle.min_fault_set(a, b);
}

RestorabilityVerdict restorable_check(const ReplacementInstance& inst, int q, int r) {
  FaultOracle oracle(inst);
  return restorable_check(oracle, q, r);
}

RestorabilityVerdict restorable_check(FaultOracle& oracle, int q, int r) {
  if (q < 1) throw std::invalid_argument("subpath count must be >= 1");
  if (r < 0) throw std::invalid_argument("fault budget must be >= 0");
  const ReplacementInstance& inst = oracle.instance();
  const PathIndex& idx = oracle.index();
  int l = idx.last();

  RestorabilityVerdict verdict;
  if (l == 0) {
    verdict.restorable = true;
    verdict.r_min = 0;
    verdict.witness = Decomposition{{inst.s, inst.t}, {FaultSet{}}, {}, false};
    return verdict;
  }

  // best[c][j]: over partitions of pi[0..j] into at most c subpaths, the
  // minimum possible value of the largest per-subpath min fault set. Extra
  // subpaths beyond one per edge can only be empty, so clamp q.
  int qc = std::min(q, l);
  constexpr int kInfSize = 1 << 20;
  std::vector<std::vector<int>> best(qc + 1, std::vector<int>(l + 1, kInfSize));
  std::vector<std::vector<int>> prev(qc + 1, std::vector<int>(l + 1, -1));
  best[0][0] = 0;
  for (int c = 1; c <= qc; ++c) {
    best[c][0] = 0;
    for (int j = 1; j <= l; ++j) {
      best[c][j] = best[c - 1][j];  // spend a piece on nothing
      prev[c][j] = -2;
      for (int i = 0; i < j; ++i) {
        if (best[c - 1][i] >= kInfSize) continue;
        int cand = std::max(best[c - 1][i], oracle.min_fault_size_at(i, j));
        if (cand < best[c][j]) {
          best[c][j] = cand;
          prev[c][j] = i;
        }
      }
    }
  }

  verdict.r_min = best[qc][l];
  verdict.restorable = verdict.r_min <= r;
  if (!verdict.restorable) return verdict;

  // Walk back through the DP, skipping the no-op transitions so the witness
  // has no empty subpaths.
  std::vector<int> cuts{l};
  int c = qc, j = l;
  while (j > 0) {
    if (prev[c][j] == -2) {
      --c;
      continue;
    }
    j = prev[c][j];
    --c;
    cuts.push_back(j);
  }
  std::reverse(cuts.begin(), cuts.end());

  Decomposition d;
  d.alternating = false;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    d.boundaries.push_back(idx.vertex_at(cuts[i]));
    if (i > 0) d.fault_sets.push_back(oracle.min_fault_set_at(cuts[i - 1], cuts[i]));
  }
  verdict.witness = std::move(d);
  return verdict;
}

namespace {

void add_check(VerifierReport& rep, const std::string& name, bool pass,
               const std::string& detail) {
  rep.checks.push_back({name, pass, detail});
  rep.pass = rep.pass && pass;
}

}  // namespace

VerifierReport verify_decomposition(const ReplacementInstance& inst, const Decomposition& d,
                                    int budget) {
  VerifierReport rep;
  rep.pass = true;
  PathIndex idx(inst.g, inst.pi);

  // Check 1: boundary structure.
  std::string bdetail = "ok";
  bool bpass = true;
  int q = d.q();
  if (q < 1) {
    bpass = false;
    bdetail = "no subpaths";
  } else if (static_cast<int>(d.boundaries.size()) != q + 1) {
    bpass = false;
    bdetail = "boundary count " + std::to_string(d.boundaries.size()) + " != q+1";
  } else {
    std::vector<int> pos;
    for (Vertex v : d.boundaries) {
      if (!inst.g.has_vertex(v) || !idx.on_path(v)) {
        bpass = false;
        bdetail = "boundary " + std::to_string(v) + " not on path";
        break;
      }
      pos.push_back(idx.position(v));
    }
    if (bpass) {
      if (d.boundaries.front() != inst.s || d.boundaries.back() != inst.t) {
        bpass = false;
        bdetail = "boundaries do not start at s and end at t";
      }
      for (std::size_t i = 1; bpass && i < pos.size(); ++i) {
        int gap = d.alternating && i + 1 < pos.size() ? 1 : 0;
        if (pos[i] - pos[i - 1] < gap) {
          bpass = false;
          bdetail = "boundaries out of order at index " + std::to_string(i);
        }
      }
    }
  }
  add_check(rep, "boundaries", bpass, bdetail);

  // Check 2: separators are exactly the pi edges between consecutive
  // subpaths (alternating form only).
  bool spass = true;
  std::string sdetail = d.alternating ? "ok" : "tiling form, no separators";
  if (!d.alternating && !d.separators.empty()) {
    spass = false;
    sdetail = "separators present in tiling form";
  } else if (d.alternating) {
    if (static_cast<int>(d.separators.size()) != q - 1) {
      spass = false;
      sdetail = "separator count " + std::to_string(d.separators.size()) + " != q-1";
    } else if (bpass) {
      for (int i = 0; i + 1 < q; ++i) {
        int head = idx.position(d.boundaries[i + 1]);
        Edge on_pi(idx.vertex_at(head - 1), idx.vertex_at(head));
        if (d.separators[i] != on_pi) {
          spass = false;
          sdetail = "separator " + std::to_string(i) + " is " + to_string(d.separators[i]) +
                    ", expected " + to_string(on_pi);
          break;
        }
      }
    } else {
      spass = false;
      sdetail = "not checkable: bad boundaries";
    }
  }
  add_check(rep, "separators", spass, sdetail);

  // Check 3: fault sets are subsets of the instance faults, within budget.
  bool fpass = true;
  std::string fdetail = "ok";
  for (int i = 0; i < q; ++i) {
    if (!d.fault_sets[i].subset_of(inst.faults)) {
      fpass = false;
      fdetail = "fault set " + std::to_string(i) + " not a subset of the instance faults";
      break;
    }
    if (d.fault_sets[i].size() > budget) {
      fpass = false;
      fdetail = "fault set " + std::to_string(i) + " has size " +
                std::to_string(d.fault_sets[i].size()) + " > budget " + std::to_string(budget);
      break;
    }
  }
  add_check(rep, "fault_budget", fpass, fdetail);

  // Check 4: every subpath is shortest once its fault set is removed.
  bool ppass = true;
  std::string pdetail = "ok";
  if (!bpass || !spass) {
    ppass = false;
    pdetail = "not checkable: bad structure";
  } else {
    for (int i = 0; i < q; ++i) {
      auto [a, b] = subpath_span(d, idx, i);
      Path sub = idx.slice(a, b);
      bool ok = false;
      std::string why = "not shortest under " + to_string(d.fault_sets[i]);
      try {
        ok = is_shortest(inst.g, d.fault_sets[i], sub);
      } catch (const std::invalid_argument& e) {
        why = e.what();  // e.g. the fault set removes an edge the subpath uses
      }
      if (!ok) {
        ppass = false;
        pdetail = "subpath " + std::to_string(i) + " (" + to_string(sub) + "): " + why;
        break;
      }
    }
  }
  add_check(rep, "subpaths_shortest", ppass, pdetail);
  return rep;
}

}  // namespace restoration
