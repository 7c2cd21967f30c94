#include "restoration/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "restoration/greedy.hpp"
#include "restoration/poly.hpp"
#include "restoration/random_gen.hpp"

namespace restoration {

namespace {

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

int budget_for(const std::string& algo, int f, int k) {
  return algo == "baseline" ? f - k : f / k;
}

Decomposition run_algo(const ReplacementInstance& inst, const std::string& algo, int k,
                       bool weighted_form, bool linear_scan) {
  int f = inst.faults.size();
  if (algo == "greedy")
    return weighted_form ? greedy_decompose_weighted(inst, f / k)
                         : greedy_decompose(inst, f / k);
  if (algo == "poly")
    return weighted_form ? compute_subpaths_weighted(inst, k, linear_scan)
                         : compute_subpaths(inst, k, linear_scan);
  if (algo == "baseline") return baseline_decompose(inst, k);
  throw std::invalid_argument("unknown algorithm: " + algo);
}

}  // namespace

CommandResult cmd_decompose(const DecomposeArgs& args) {
  Graph g = load_graph(args.graph_path);
  FaultSet faults = load_faults(args.faults_path, g);
  int f = faults.size();
  if (args.k < 1 || args.k > f)
    throw std::invalid_argument("k out of range [1, " + std::to_string(f) + "]");
  ReplacementInstance inst = make_instance(std::move(g), std::move(faults), args.s, args.t);

  bool weighted_form = args.weighted.value_or(inst.g.weighted());
  Decomposition d = run_algo(inst, args.algo, args.k, weighted_form, args.linear_scan);
  int budget = budget_for(args.algo, f, args.k);
  VerifierReport rep = verify_decomposition(inst, d, budget);

  ordered_json j = decomposition_to_json(d, budget);
  j["algo"] = args.algo;
  j["k"] = args.k;
  j["verdict"] = verifier_report_to_json(rep);
  return {rep.pass ? 0 : 1, dump(j)};
}

CommandResult cmd_verify(const VerifyArgs& args) {
  Graph g = load_graph(args.graph_path);
  FaultSet faults = load_faults(args.faults_path, g);
  auto [d, stored_budget] = decomposition_from_json(nlohmann::json::parse(read_file(args.decomposition_path)));
  if (d.boundaries.empty()) throw std::runtime_error("decomposition has no boundaries");
  int budget = args.budget.value_or(stored_budget);
  ReplacementInstance inst =
      make_instance(std::move(g), std::move(faults), d.boundaries.front(), d.boundaries.back());
  VerifierReport rep = verify_decomposition(inst, d, budget);
  ordered_json j = verifier_report_to_json(rep);
  j["budget"] = budget;
  return {rep.pass ? 0 : 1, dump(j)};
}

CommandResult cmd_lowerbound(const LowerboundArgs& args) {
  LowerBoundInstance lbi = gen_glued(args.g, args.copies);
  int per_copy = lbi.per_copy_faults.front().size();
  int q = 2 * args.copies;
  int r = args.r.value_or(per_copy - 2);
  if (r < 0) throw std::invalid_argument("negative fault budget r");

  FaultOracle oracle(lbi.instance);
  RestorabilityVerdict verdict = restorable_check(oracle, q, r);

  ordered_json j;
  j["g"] = args.g;
  j["copies"] = args.copies;
  j["faults"] = lbi.instance.faults.size();
  j["q"] = q;
  j["r"] = r;
  j["restorable"] = verdict.restorable;
  j["r_min"] = verdict.r_min;
  // r_min as a function of the allowed subpath count, through one past the
  // tested q; the curve flattens once more pieces stop helping.
  ordered_json frontier = ordered_json::array();
  for (int qq = 1; qq <= q + 1; ++qq) {
    RestorabilityVerdict v = restorable_check(oracle, qq, r);
    frontier.push_back(ordered_json{{"q", qq}, {"r_min", v.r_min}});
  }
  j["frontier"] = frontier;
  bool expected = args.r.has_value() || !verdict.restorable;
  j["expected_not_restorable"] = !args.r.has_value();
  return {expected ? 0 : 1, dump(j)};
}

CommandResult cmd_gen(const GenArgs& args) {
  LowerBoundInstance lbi;
  if (!args.gs.empty()) {
    lbi = gen_glued(args.gs);
  } else if (args.odd) {
    if (args.copies != 1) throw std::invalid_argument("odd variant is single-copy only");
    lbi = gen_single_odd(args.g);
  } else {
    lbi = gen_glued(args.g, args.copies);
  }
  ordered_json j = lowerbound_to_json(lbi);
  if (!args.out_prefix.empty()) {
    save_graph(args.out_prefix + ".graph", lbi.instance.g);
    save_faults(args.out_prefix + ".faults", lbi.instance.faults);
    write_file(args.out_prefix + ".json", dump(j));
  }
  return {0, dump(j)};
}

// ---------------------------------------------------------------------------
// experiment

namespace {

struct ExperimentConfig {
  std::uint64_t seed = 20240917;
  int trials = 200;
  bool weighted = false;
  // graph model
  std::string graph_model = "random";  // random | grid | file
  int n_min = 10, n_max = 40;
  double edge_probability = 0.15;
  int rows = 6, cols = 6;
  std::string graph_path;
  // fault model: "path" re-samples each fault from the current shortest path
  // (guarantees detours), "random" scatters faults uniformly, "file" is fixed.
  std::string fault_model = "path";
  int faults_min = 4, faults_max = 8;
  std::string faults_path;
  std::optional<Vertex> s, t;  // required for the file fault model
  // weights
  Weight weight_min = 1, weight_max = 10;
  std::vector<int> ks{1, 2, 4};
  std::vector<std::string> algos{"greedy", "poly", "baseline"};
};

ExperimentConfig parse_config(const nlohmann::json& j, std::vector<std::string>& errors) {
  ExperimentConfig cfg;
  auto get_int = [&](const nlohmann::json& node, const char* path, int lo, int fallback) {
    if (!node.contains(path)) return fallback;
    if (!node.at(path).is_number_integer()) {
      errors.push_back(std::string(path) + ": must be an integer");
      return fallback;
    }
    int v = node.at(path).get<int>();
    if (v < lo) errors.push_back(std::string(path) + ": must be >= " + std::to_string(lo));
    return v;
  };

  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  cfg.trials = get_int(j, "trials", 1, cfg.trials);
  if (j.contains("weighted")) cfg.weighted = j.at("weighted").get<bool>();

  if (j.contains("graph")) {
    const auto& gj = j.at("graph");
    cfg.graph_model = gj.value("model", cfg.graph_model);
    if (cfg.graph_model == "random") {
      if (gj.contains("n")) cfg.n_min = cfg.n_max = get_int(gj, "n", 2, cfg.n_max);
      cfg.n_min = get_int(gj, "n_min", 2, cfg.n_min);
      cfg.n_max = get_int(gj, "n_max", cfg.n_min, cfg.n_max);
      if (gj.contains("p")) cfg.edge_probability = gj.at("p").get<double>();
      if (cfg.edge_probability <= 0 || cfg.edge_probability > 1)
        errors.push_back("graph.p: must be in (0, 1]");
    } else if (cfg.graph_model == "grid") {
      cfg.rows = get_int(gj, "rows", 1, cfg.rows);
      cfg.cols = get_int(gj, "cols", 1, cfg.cols);
    } else if (cfg.graph_model == "file") {
      cfg.graph_path = gj.value("path", "");
      if (cfg.graph_path.empty()) errors.push_back("graph.path: required for the file model");
    } else {
      errors.push_back("graph.model: must be one of random|grid|file");
    }
  }
  if (j.contains("faults")) {
    const auto& fj = j.at("faults");
    cfg.fault_model = fj.value("model", cfg.fault_model);
    if (cfg.fault_model == "path" || cfg.fault_model == "random") {
      if (fj.contains("count")) cfg.faults_min = cfg.faults_max = get_int(fj, "count", 1, cfg.faults_max);
      cfg.faults_min = get_int(fj, "count_min", 1, cfg.faults_min);
      cfg.faults_max = get_int(fj, "count_max", cfg.faults_min, cfg.faults_max);
    } else if (cfg.fault_model == "file") {
      cfg.faults_path = fj.value("path", "");
      if (cfg.faults_path.empty()) errors.push_back("faults.path: required for the file model");
      if (!j.contains("s") || !j.contains("t"))
        errors.push_back("s, t: required with a fault file");
    } else {
      errors.push_back("faults.model: must be one of path|random|file");
    }
  }
  if (j.contains("s")) cfg.s = j.at("s").get<Vertex>();
  if (j.contains("t")) cfg.t = j.at("t").get<Vertex>();
  if (j.contains("weights")) {
    cfg.weight_min = get_int(j.at("weights"), "min", 1, static_cast<int>(cfg.weight_min));
    cfg.weight_max = get_int(j.at("weights"), "max", static_cast<int>(cfg.weight_min),
                             static_cast<int>(cfg.weight_max));
  }
  if (j.contains("ks")) {
    cfg.ks = j.at("ks").get<std::vector<int>>();
    if (cfg.ks.empty()) errors.push_back("ks: must list at least one k");
    for (int k : cfg.ks)
      if (k < 1) errors.push_back("ks: every k must be >= 1");
  }
  if (j.contains("algos")) {
    cfg.algos = j.at("algos").get<std::vector<std::string>>();
    if (cfg.algos.size() == 1 && cfg.algos[0] == "all")
      cfg.algos = {"greedy", "poly", "baseline"};
    for (const auto& a : cfg.algos)
      if (a != "greedy" && a != "poly" && a != "baseline")
        errors.push_back("algos: unknown algorithm '" + a + "'");
  }
  return cfg;
}

ordered_json config_echo(const ExperimentConfig& cfg) {
  ordered_json j;
  j["seed"] = cfg.seed;
  j["trials"] = cfg.trials;
  j["weighted"] = cfg.weighted;
  ordered_json gj{{"model", cfg.graph_model}};
  if (cfg.graph_model == "random") {
    gj["n_min"] = cfg.n_min;
    gj["n_max"] = cfg.n_max;
    gj["p"] = cfg.edge_probability;
  } else if (cfg.graph_model == "grid") {
    gj["rows"] = cfg.rows;
    gj["cols"] = cfg.cols;
  } else {
    gj["path"] = cfg.graph_path;
  }
  j["graph"] = gj;
  ordered_json fj{{"model", cfg.fault_model}};
  if (cfg.fault_model == "random") {
    fj["count_min"] = cfg.faults_min;
    fj["count_max"] = cfg.faults_max;
  } else {
    fj["path"] = cfg.faults_path;
  }
  j["faults"] = fj;
  if (cfg.weighted) j["weights"] = ordered_json{{"min", cfg.weight_min}, {"max", cfg.weight_max}};
  j["ks"] = cfg.ks;
  j["algos"] = cfg.algos;
  return j;
}

ReplacementInstance make_trial_instance(const ExperimentConfig& cfg, Rng& rng) {
  if (cfg.fault_model == "file") {
    Graph g = load_graph(cfg.graph_path);
    FaultSet faults = load_faults(cfg.faults_path, g);
    return make_instance(std::move(g), std::move(faults), *cfg.s, *cfg.t);
  }
  bool on_path = cfg.fault_model == "path";
  if (cfg.graph_model == "random") {
    RandomInstanceSpec spec;
    spec.n_min = cfg.n_min;
    spec.n_max = cfg.n_max;
    spec.edge_probability = cfg.edge_probability;
    spec.faults_min = cfg.faults_min;
    spec.faults_max = cfg.faults_max;
    spec.on_path_faults = on_path;
    spec.weighted = cfg.weighted;
    spec.weight_min = cfg.weight_min;
    spec.weight_max = cfg.weight_max;
    return random_instance(rng, spec);
  }
  // grid or file graph with sampled faults
  for (int round = 0;; ++round) {
    if (round > 1000) throw std::runtime_error("instance sampling failed to converge");
    Graph g = cfg.graph_model == "grid"
                  ? grid_graph(rng, cfg.rows, cfg.cols, cfg.weighted, cfg.weight_min,
                               cfg.weight_max)
                  : load_graph(cfg.graph_path);
    int f = rng.uniform(cfg.faults_min, cfg.faults_max);
    auto inst = on_path ? sample_instance_on_path(rng, g, f) : sample_instance(rng, g, f);
    if (inst) return std::move(*inst);
  }
}

std::string format_margin(int q, int denom) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", static_cast<double>(q) / denom);
  return buf;
}

}  // namespace

CommandResult cmd_experiment(const ExperimentArgs& args) {
  nlohmann::json raw = nlohmann::json::object();
  if (!args.config_path.empty()) raw = nlohmann::json::parse(read_file(args.config_path));
  std::vector<std::string> errors;
  ExperimentConfig cfg = parse_config(raw, errors);
  if (!errors.empty()) {
    ordered_json j;
    j["errors"] = errors;
    throw std::runtime_error("invalid config:\n" + dump(j));
  }

  ordered_json records = ordered_json::array();
  std::ostringstream csv;
  csv << "trial,digest,algo,k,budget,q,max_fault_set,verifier_pass";
  if (args.timing) csv << ",wall_ms";
  csv << "\n";

  struct Agg {
    int max_q = 0;
    int denom = 1;
    bool all_pass = true;
    int records = 0;
  };
  std::map<std::pair<std::string, int>, Agg> aggs;
  bool all_pass = true;

  for (int trial = 0; trial < cfg.trials; ++trial) {
    Rng rng = Rng::fork(cfg.seed, static_cast<std::uint64_t>(trial));
    ReplacementInstance inst = make_trial_instance(cfg, rng);
    int f = inst.faults.size();
    std::string digest = instance_digest(inst);

    for (const std::string& algo : cfg.algos) {
      for (int k : cfg.ks) {
        if (k > f) continue;  // the decomposers require 1 <= k <= |F|
        auto t0 = std::chrono::steady_clock::now();
        Decomposition d = run_algo(inst, algo, k, cfg.weighted, false);
        auto t1 = std::chrono::steady_clock::now();
        int budget = budget_for(algo, f, k);
        VerifierReport rep = verify_decomposition(inst, d, budget);
        int max_fs = 0;
        for (const FaultSet& fs : d.fault_sets) max_fs = std::max(max_fs, fs.size());

        ordered_json rec;
        rec["trial"] = trial;
        rec["digest"] = digest;
        rec["algo"] = algo;
        rec["k"] = k;
        rec["budget"] = budget;
        rec["q"] = d.q();
        rec["max_fault_set"] = max_fs;
        rec["verifier_pass"] = rep.pass;
        double wall_ms =
            std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count() / 1000.0;
        if (args.timing) rec["wall_ms"] = wall_ms;
        records.push_back(rec);

        csv << trial << ',' << digest << ',' << algo << ',' << k << ',' << budget << ','
            << d.q() << ',' << max_fs << ',' << (rep.pass ? 1 : 0);
        if (args.timing) {
          char buf[32];
          std::snprintf(buf, sizeof buf, "%.3f", wall_ms);
          csv << ',' << buf;
        }
        csv << '\n';

        Agg& agg = aggs[{algo, k}];
        agg.max_q = std::max(agg.max_q, d.q());
        agg.denom = algo == "baseline" ? k + 1 : 8 * k + 1;
        agg.all_pass = agg.all_pass && rep.pass;
        ++agg.records;
        all_pass = all_pass && rep.pass;
      }
    }
  }

  ordered_json j;
  j["config"] = config_echo(cfg);
  j["records"] = records;
  ordered_json per = ordered_json::array();
  for (const auto& [key, agg] : aggs) {
    per.push_back(ordered_json{{"algo", key.first},
                               {"k", key.second},
                               {"records", agg.records},
                               {"max_q", agg.max_q},
                               {"q_bound", agg.denom},
                               {"max_margin", format_margin(agg.max_q, agg.denom)},
                               {"all_pass", agg.all_pass}});
  }
  j["aggregates"] = ordered_json{{"records", records.size()}, {"all_pass", all_pass},
                                 {"per_algo_k", per}};
  std::string text = dump(j);
  if (!args.out_prefix.empty()) {
    write_file(args.out_prefix + ".json", text);
    write_file(args.out_prefix + ".csv", csv.str());
  }
  return {all_pass ? 0 : 1, text};
}

}  // namespace restoration
