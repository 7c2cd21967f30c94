// random_gen.hpp - seeded instance generation for experiments and property
// tests. All randomness flows through Rng, whose outputs depend only on the
// seed (rejection sampling, no platform-defined distributions), so a fixed
// seed reproduces every instance byte for byte.
#pragma once

#include <cstdint>
#include <optional>

#include "restoration/instance.hpp"

namespace restoration {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();  // splitmix64 step
  // Uniform in [lo, hi] via rejection; requires lo <= hi.
  int uniform(int lo, int hi);
  // True with probability p (p in [0, 1]).
  bool chance(double p);
  // Deterministic per-trial stream derived from a base seed.
  static Rng fork(std::uint64_t seed, std::uint64_t stream);

 private:
  std::uint64_t state_;
};

// Erdos-Renyi graph; each pair becomes an edge with probability p. Weights
// are 1, or uniform in [wmin, wmax] when weighted.
Graph random_graph(Rng& rng, int n, double p, bool weighted, Weight wmin = 1,
                   Weight wmax = 10);

// rows x cols lattice.
Graph grid_graph(Rng& rng, int rows, int cols, bool weighted, Weight wmin = 1,
                 Weight wmax = 10);

// Random endpoints plus `fault_count` random faults that keep s-t connected.
// Returns nullopt when the graph cannot host such an instance within the
// retry bounds (e.g. too sparse); callers regenerate the graph then.
std::optional<ReplacementInstance> sample_instance(Rng& rng, const Graph& g, int fault_count,
                                                   int retries = 200);

// Like sample_instance, but each fault is drawn from the current shortest
// s-t path, recomputed after every removal. Uniform fault placement in a
// sparse graph rarely touches the shortest path at all; this variant forces
// detours so decompositions actually have work to do.
std::optional<ReplacementInstance> sample_instance_on_path(Rng& rng, const Graph& g,
                                                           int fault_count, int retries = 200);

struct RandomInstanceSpec {
  int n_min = 10, n_max = 40;
  double edge_probability = 0.15;
  int faults_min = 4, faults_max = 8;
  bool on_path_faults = true;  // bias faults onto shortest paths
  bool weighted = false;
  Weight weight_min = 1, weight_max = 10;
};

// Full pipeline with regeneration: draws graphs until one yields a valid
// instance. Deterministic given the rng state.
ReplacementInstance random_instance(Rng& rng, const RandomInstanceSpec& spec);

}  // namespace restoration
