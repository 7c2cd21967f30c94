#include "restoration/poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace restoration {

DistanceCache::DistanceCache(const Graph& g, const FaultSet& faults)
    : g_(&g), faults_(&faults), full_(g.vertex_count()), masked_(g.vertex_count()) {}

const std::vector<Weight>& DistanceCache::full(Vertex source) {
  auto& slot = full_.at(source);
  if (!slot) slot = std::make_unique<std::vector<Weight>>(distances(*g_, FaultSet{}, source));
  return *slot;
}

const std::vector<Weight>& DistanceCache::masked(Vertex source) {
  auto& slot = masked_.at(source);
  if (!slot) slot = std::make_unique<std::vector<Weight>>(distances(*g_, *faults_, source));
  return *slot;
}

bool base_fault_reach(const ReplacementInstance& inst, DistanceCache& cache, Vertex a,
                      Vertex b, Weight span, const Edge& base, const Edge& generator,
                      Side side) {
  Vertex start = side == Side::kLeft ? a : b;
  Vertex finish = side == Side::kLeft ? b : a;
  const std::vector<Weight>& from_start = cache.masked(start);  // fault-free prefix
  const std::vector<Weight>& to_finish = cache.full(finish);    // suffix may hit faults

  Weight w_base = inst.g.weight(base);
  Weight w_gen = inst.g.weight(generator);
  Weight best = kUnreachable;
  for (auto [p, pq] : {std::pair{base.u, base.v}, std::pair{base.v, base.u}}) {
    Weight head = from_start[p];
    if (!reachable(head)) continue;
    if (base == generator) {
      // start -> p, cross the fault once, q -> finish.
      if (reachable(to_finish[pq])) best = std::min(best, head + w_base + to_finish[pq]);
      continue;
    }
    const std::vector<Weight>& from_pq = cache.full(pq);
    for (auto [u, v] : {std::pair{generator.u, generator.v},
                        std::pair{generator.v, generator.u}}) {
      if (!reachable(from_pq[u]) || !reachable(to_finish[v])) continue;
      best = std::min(best, head + w_base + from_pq[u] + w_gen + to_finish[v]);
    }
  }
  return best < span;
}

bool base_fault_reach(const ReplacementInstance& inst, Vertex a, Vertex b, const Edge& base,
                      const Edge& generator, Side side) {
  PathIndex idx(inst.g, inst.pi);
  DistanceCache cache(inst.g, inst.faults);
  Weight span = idx.span_length(idx.position(a), idx.position(b));
  return base_fault_reach(inst, cache, a, b, span, base, generator, side);
}

GammaGraph build_gamma(const ReplacementInstance& inst, DistanceCache& cache, Vertex a,
                       Vertex b, Weight span, const FaultSet& candidate, Side side) {
  GammaGraph gamma;
  gamma.left = candidate.edges();
  gamma.right = inst.faults.edges();
  gamma.side = side;
  gamma.adj.resize(gamma.left.size());
  for (std::size_t i = 0; i < gamma.left.size(); ++i)
    for (std::size_t j = 0; j < gamma.right.size(); ++j)
      if (base_fault_reach(inst, cache, a, b, span, gamma.right[j], gamma.left[i], side))
        gamma.adj[i].push_back(static_cast<int>(j));
  return gamma;
}

GammaGraph build_gamma(const ReplacementInstance& inst, Vertex a, Vertex b,
                       const FaultSet& candidate, Side side) {
  PathIndex idx(inst.g, inst.pi);
  DistanceCache cache(inst.g, inst.faults);
  Weight span = idx.span_length(idx.position(a), idx.position(b));
  return build_gamma(inst, cache, a, b, span, candidate, side);
}

namespace {

bool try_augment(const std::vector<std::vector<int>>& adj, int lv,
                 std::vector<int>& match_of_left, std::vector<int>& match_of_right,
                 std::vector<char>& used) {
  for (int rv : adj[lv]) {
    if (used[rv]) continue;
    used[rv] = 1;
    if (match_of_right[rv] < 0 ||
        try_augment(adj, match_of_right[rv], match_of_left, match_of_right, used)) {
      match_of_left[lv] = rv;
      match_of_right[rv] = lv;
      return true;
    }
  }
  return false;
}

}  // namespace

MatchingResult max_bipartite_matching(const std::vector<std::vector<int>>& adj, int n_right) {
  int n_left = static_cast<int>(adj.size());
  MatchingResult res;
  res.match_of_left.assign(n_left, -1);
  std::vector<int> match_of_right(n_right, -1);
  for (int lv = 0; lv < n_left; ++lv) {
    std::vector<char> used(n_right, 0);
    if (try_augment(adj, lv, res.match_of_left, match_of_right, used)) ++res.size;
  }
  res.saturating = res.size == n_left;
  if (res.saturating) return res;

  // Alternating reachability from the unmatched left vertices: every right
  // vertex reached is matched back into the set, so the reachable left
  // vertices violate Hall's condition and their neighborhood is exactly the
  // reachable right vertices.
  std::vector<char> seen_l(n_left, 0), seen_r(n_right, 0);
  std::vector<int> stack;
  for (int lv = 0; lv < n_left; ++lv)
    if (res.match_of_left[lv] < 0) {
      seen_l[lv] = 1;
      stack.push_back(lv);
    }
  while (!stack.empty()) {
    int lv = stack.back();
    stack.pop_back();
    for (int rv : adj[lv]) {
      if (seen_r[rv]) continue;
      seen_r[rv] = 1;
      int back = match_of_right[rv];
      if (back >= 0 && !seen_l[back]) {
        seen_l[back] = 1;
        stack.push_back(back);
      }
    }
  }
  for (int lv = 0; lv < n_left; ++lv)
    if (seen_l[lv]) res.violator.push_back(lv);
  for (int rv = 0; rv < n_right; ++rv)
    if (seen_r[rv]) res.violator_neighborhood.push_back(rv);
  return res;
}

MatchingResult matching_with_witness(const GammaGraph& gamma) {
  return max_bipartite_matching(gamma.adj, static_cast<int>(gamma.right.size()));
}

namespace {

struct PolyContext {
  const ReplacementInstance& inst;
  PathIndex idx;
  DistanceCache cache;

  explicit PolyContext(const ReplacementInstance& in)
      : inst(in), idx(in.g, in.pi), cache(in.g, in.faults) {}
};

FaultSet reduce_subpath(PolyContext& ctx, int apos, int bpos, ReduceStats* stats) {
  Vertex a = ctx.idx.vertex_at(apos);
  Vertex b = ctx.idx.vertex_at(bpos);
  Weight span = ctx.idx.span_length(apos, bpos);

  FaultSet fi = ctx.inst.faults;
  ReduceStats local;
  local.a_pos = apos;
  local.b_pos = bpos;
  local.sizes.push_back(fi.size());
  while (true) {
    GammaGraph gl = build_gamma(ctx.inst, ctx.cache, a, b, span, fi, Side::kLeft);
    MatchingResult ml = matching_with_witness(gl);
    GammaGraph gr = build_gamma(ctx.inst, ctx.cache, a, b, span, fi, Side::kRight);
    MatchingResult mr = matching_with_witness(gr);
    if (ml.saturating && mr.saturating) {
      local.left_saturated = true;
      local.right_saturated = true;
      break;
    }
    // Left violator first when both sides fall short.
    const GammaGraph& gamma = ml.saturating ? gr : gl;
    const MatchingResult& m = ml.saturating ? mr : ml;
    int before = fi.size();
    for (int lv : m.violator) fi.erase(gamma.left[lv]);
    for (int rv : m.violator_neighborhood) fi.insert(gamma.right[rv]);
    if (fi.size() >= before)
      throw std::logic_error("exchange failed to shrink the candidate fault set");
    ++local.iterations;
    local.sizes.push_back(fi.size());
  }
  if (stats) {
    local.valid = is_shortest(ctx.inst.g, fi, ctx.idx.slice(apos, bpos));
    *stats = std::move(local);
  }
  return fi;
}

FaultSet reduce_traced(PolyContext& ctx, int apos, int bpos, PolyTrace* trace) {
  if (!trace) return reduce_subpath(ctx, apos, bpos, nullptr);
  ReduceStats stats;
  FaultSet fi = reduce_subpath(ctx, apos, bpos, &stats);
  trace->reduce_calls.push_back(std::move(stats));
  return fi;
}

int checked_budget(const ReplacementInstance& inst, int k) {
  int f = inst.faults.size();
  if (k < 1 || k > f) throw std::invalid_argument("k out of range [1, |F|]");
  return f / k;
}

Decomposition trivial_decomposition(const ReplacementInstance& inst, bool alternating) {
  return Decomposition{{inst.s, inst.t}, {FaultSet{}}, {}, alternating};
}

}  // namespace

FaultSet fault_reduce(const ReplacementInstance& inst, Vertex a, Vertex b,
                      ReduceStats* stats) {
  PolyContext ctx(inst);
  int apos = ctx.idx.position(a);
  int bpos = ctx.idx.position(b);
  if (apos > bpos) throw std::invalid_argument("subpath endpoints out of order");
  return reduce_subpath(ctx, apos, bpos, stats);
}

Decomposition compute_subpaths(const ReplacementInstance& inst, int k, bool linear_scan,
                               PolyTrace* trace) {
  int budget = checked_budget(inst, k);
  PolyContext ctx(inst);
  int l = ctx.idx.last();
  if (l == 0) return trivial_decomposition(inst, false);

  Decomposition d;
  d.alternating = false;
  d.boundaries.push_back(ctx.idx.vertex_at(0));
  int x = 0;
  while (x < l) {
    std::map<int, FaultSet> probed;
    auto fits = [&](int y) {
      auto it = probed.find(y);
      if (it == probed.end())
        it = probed.emplace(y, reduce_traced(ctx, x, y, trace)).first;
      return it->second.size() <= budget;
    };
    int y;
    if (fits(l)) {
      y = l;
    } else if (!fits(x + 1)) {
      // Cannot happen on unit weights: a single pi edge admits no strictly
      // shorter walk, so its reduction always collapses to the empty set.
      throw std::runtime_error("edge at position " + std::to_string(x) +
                               " exceeds the budget; use the weighted form");
    } else if (linear_scan) {
      y = x + 1;
      while (y + 1 < l && fits(y + 1)) ++y;
    } else {
      // Crossing point: lo stays reducible within budget, hi does not.
      int lo = x + 1, hi = l;
      while (hi - lo > 1) {
        int mid = lo + (hi - lo) / 2;
        (fits(mid) ? lo : hi) = mid;
      }
      y = lo;
    }
    d.fault_sets.push_back(probed.at(y));
    d.boundaries.push_back(ctx.idx.vertex_at(y));
    x = y;
  }
  return d;
}

Decomposition compute_subpaths_weighted(const ReplacementInstance& inst, int k,
                                        bool linear_scan, PolyTrace* trace) {
  int budget = checked_budget(inst, k);
  PolyContext ctx(inst);
  int l = ctx.idx.last();

  Decomposition d;
  d.alternating = true;
  d.boundaries.push_back(ctx.idx.vertex_at(0));
  int x = 0;
  while (true) {
    std::map<int, FaultSet> probed;
    auto fits = [&](int y) {
      auto it = probed.find(y);
      if (it == probed.end())
        it = probed.emplace(y, reduce_traced(ctx, x, y, trace)).first;
      return it->second.size() <= budget;
    };
    if (fits(l)) {
      d.fault_sets.push_back(probed.at(l));
      d.boundaries.push_back(ctx.idx.vertex_at(l));
      break;
    }
    int y;
    if (!fits(x))
      throw std::logic_error("empty subpath failed to reduce");  // unreachable
    if (linear_scan) {
      y = x;
      while (y + 1 < l && fits(y + 1)) ++y;
    } else {
      int lo = x, hi = l;
      while (hi - lo > 1) {
        int mid = lo + (hi - lo) / 2;
        (fits(mid) ? lo : hi) = mid;
      }
      y = lo;
    }
    // The next pi edge becomes a separator; the subpath keeps what fit.
    d.fault_sets.push_back(probed.at(y));
    d.separators.push_back(Edge(ctx.idx.vertex_at(y), ctx.idx.vertex_at(y + 1)));
    d.boundaries.push_back(ctx.idx.vertex_at(y + 1));
    x = y + 1;
  }
  return d;
}

}  // namespace restoration
