// Command line front end: decompose replacement paths, verify decompositions,
// generate and probe the hard instance family, and run randomized experiments.
#include <cstdio>
#include <exception>
#include <string>

#include "CLI11.hpp"
#include "restoration/commands.hpp"

int main(int argc, char** argv) {
  using namespace restoration;

  CLI::App app{"shortest replacement path decomposition toolkit"};
  app.require_subcommand(1);

  DecomposeArgs dec;
  auto* sub_dec = app.add_subcommand("decompose", "split a replacement path into low-fault subpaths");
  sub_dec->add_option("--graph", dec.graph_path, "graph file")->required();
  sub_dec->add_option("--faults", dec.faults_path, "fault edge file")->required();
  sub_dec->add_option("--s", dec.s, "source vertex")->required();
  sub_dec->add_option("--t", dec.t, "target vertex")->required();
  sub_dec->add_option("--k", dec.k, "trade-off parameter (1 <= k <= |F|)")->required();
  sub_dec->add_option("--algo", dec.algo, "greedy | poly | baseline")
      ->check(CLI::IsMember({"greedy", "poly", "baseline"}));
  bool force_weighted = false, force_unweighted = false;
  sub_dec->add_flag("--weighted", force_weighted, "force the alternating weighted form");
  sub_dec->add_flag("--unweighted", force_unweighted, "force the contiguous unweighted form");
  sub_dec->add_flag("--linear-scan", dec.linear_scan,
                    "replace the crossing-point search with a linear scan");

  VerifyArgs ver;
  auto* sub_ver = app.add_subcommand("verify", "check a decomposition against its instance");
  sub_ver->add_option("--graph", ver.graph_path, "graph file")->required();
  sub_ver->add_option("--faults", ver.faults_path, "fault edge file")->required();
  sub_ver->add_option("--decomposition", ver.decomposition_path, "decomposition json")->required();
  int budget_override = -1;
  sub_ver->add_option("--budget", budget_override, "override the per-subpath fault budget");

  LowerboundArgs lb;
  auto* sub_lb = app.add_subcommand("lowerbound", "probe restorability of the hard family");
  sub_lb->add_option("--g", lb.g, "size parameter (>= 3)");
  sub_lb->add_option("--copies", lb.copies, "number of glued copies");
  int r_override = -1;
  sub_lb->add_option("--r", r_override, "fault budget to test (default: per-copy faults - 2)");

  GenArgs gen;
  auto* sub_gen = app.add_subcommand("gen", "emit a hard-family instance");
  sub_gen->add_option("--g", gen.g, "size parameter (>= 3)");
  sub_gen->add_option("--copies", gen.copies, "number of glued copies");
  sub_gen->add_flag("--odd", gen.odd, "odd variant (drops one chord)");
  sub_gen->add_option("--gs", gen.gs, "explicit per-copy size parameters");
  sub_gen->add_option("--out", gen.out_prefix, "write <out>.graph/.faults/.json");

  ExperimentArgs exp;
  auto* sub_exp = app.add_subcommand("experiment", "run a seeded decomposition experiment");
  sub_exp->add_option("--config", exp.config_path, "json config (defaults used when omitted)");
  sub_exp->add_option("--out", exp.out_prefix, "write <out>.json and <out>.csv");
  sub_exp->add_flag("--timing", exp.timing,
                    "include wall-clock fields (breaks byte reproducibility)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Exit 0 for --help/--version, 2 for every usage error.
    int cli_code = app.exit(e);
    return cli_code == 0 ? 0 : 2;
  }

  try {
    CommandResult res;
    if (*sub_dec) {
      if (force_weighted && force_unweighted)
        throw std::invalid_argument("--weighted and --unweighted are mutually exclusive");
      if (force_weighted) dec.weighted = true;
      if (force_unweighted) dec.weighted = false;
      res = cmd_decompose(dec);
    } else if (*sub_ver) {
      if (budget_override >= 0) ver.budget = budget_override;
      res = cmd_verify(ver);
    } else if (*sub_lb) {
      if (r_override >= 0) lb.r = r_override;
      res = cmd_lowerbound(lb);
    } else if (*sub_gen) {
      res = cmd_gen(gen);
    } else {
      res = cmd_experiment(exp);
    }
    std::fputs(res.output.c_str(), stdout);
    return res.exit_code;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
