// cmlab: configuration-model laboratory.
//
// Exit codes: 0 success, 2 bad input (spec, flags, invalid parameters),
// 3 simple-graph rejection exhausted.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cmlab/branching.hpp"
#include "cmlab/census.hpp"
#include "cmlab/configuration.hpp"
#include "cmlab/error.hpp"
#include "cmlab/experiments.hpp"
#include "cmlab/io.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitExhausted = 3;

struct Common {
  std::string dist;
  std::size_t n = 100'000;
  std::size_t trials = 1;
  std::uint64_t seed = 1;
  std::string out;
  unsigned threads = 0;
  bool timing = false;
};

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(c.out);
  if (!file) throw cmlab::Error(cmlab::ErrorCode::SpecParse, "cannot write " + c.out);
  file << text;
}

void add_output(CLI::App* cmd, Common& c, std::string& format) {
  cmd->add_option("--out", c.out, "Output file (default stdout)");
  cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Configuration-model giant component and percolation laboratory"};
  app.require_subcommand(1);

  Common c;
  int k_max = 20;
  int giant_k = 10;
  std::string giant_format = "json";
  std::string sweep_format = "csv";
  std::string local_format = "json";
  bool simple = false;
  int max_attempts = 1000;
  std::string grid = "0.1:0.9:0.1";
  std::string property;
  std::uint64_t samples = 100'000;
  std::string edges_path;
  std::string degrees_out;

  auto* analyze = app.add_subcommand("analyze", "Branching-process quantities of a degree distribution");
  analyze->add_option("--dist", c.dist, "Distribution spec (JSON)")->required();
  analyze->add_option("--kmax", k_max, "Largest k for rho_k")->check(CLI::PositiveNumber);
  analyze->add_option("--out", c.out, "Output file (default stdout)");

  auto* giant = app.add_subcommand("giant", "Largest and small components of sampled graphs");
  giant->add_option("--dist", c.dist, "Distribution spec (JSON)")->required();
  giant->add_option("--n", c.n, "Vertices per graph")->check(CLI::PositiveNumber);
  giant->add_option("--trials", c.trials, "Independent graphs")->check(CLI::PositiveNumber);
  giant->add_option("--seed", c.seed, "Master seed");
  giant->add_option("--kmax", giant_k, "Report N_k/n for k <= kmax")->check(CLI::PositiveNumber);
  giant->add_flag("--simple", simple, "Condition on simplicity by rejection");
  giant->add_option("--max-attempts", max_attempts, "Rejection attempts per simple graph")->check(CLI::PositiveNumber);
  giant->add_option("--threads", c.threads, "Worker threads (output does not depend on it)");
  giant->add_flag("--timing", c.timing, "Include runtime_ms in JSON output");
  add_output(giant, c, giant_format);

  auto* sweep = app.add_subcommand("sweep", "Edge percolation over a grid of retention probabilities");
  sweep->add_option("--dist", c.dist, "Distribution spec (JSON)")->required();
  sweep->add_option("--n", c.n, "Vertices per graph")->check(CLI::PositiveNumber);
  sweep->add_option("--trials", c.trials, "Independent graphs")->check(CLI::PositiveNumber);
  sweep->add_option("--seed", c.seed, "Master seed");
  sweep->add_option("--p", grid, "Comma list or start:stop:step");
  sweep->add_option("--threads", c.threads, "Worker threads (output does not depend on it)");
  add_output(sweep, c, sweep_format);

  auto* local = app.add_subcommand("local", "Counts of a local property, whole graph and giant component");
  local->add_option("--dist", c.dist, "Distribution spec (JSON)")->required();
  local->add_option("--n", c.n, "Vertices per graph")->check(CLI::PositiveNumber);
  local->add_option("--seed", c.seed, "Master seed");
  local->add_option("--property", property,
                    "root-degree:D | component-size:K | component-at-least:K | max-degree-ball:DELTA:T, joined by '+'")
      ->required();
  local->add_option("--samples", samples, "Branching-process samples")->check(CLI::PositiveNumber);
  local->add_flag("--timing", c.timing, "Include runtime_ms in JSON output");
  add_output(local, c, local_format);

  auto* sample_cmd = app.add_subcommand("sample", "Write a sampled degree sequence and configuration multigraph");
  sample_cmd->add_option("--dist", c.dist, "Distribution spec (JSON)")->required();
  sample_cmd->add_option("--n", c.n, "Vertices per graph")->check(CLI::PositiveNumber);
  sample_cmd->add_option("--seed", c.seed, "Master seed");
  sample_cmd->add_flag("--simple", simple, "Condition on simplicity by rejection");
  sample_cmd->add_option("--max-attempts", max_attempts, "Rejection attempts per simple graph")->check(CLI::PositiveNumber);
  sample_cmd->add_option("--degrees-out", degrees_out, "Also write the degree sequence here");
  sample_cmd->add_option("--out", c.out, "Edge list output (default stdout)");

  auto* census_cmd = app.add_subcommand("census", "Component census of an edge list");
  census_cmd->add_option("--edges", edges_path, "Edge list file")->required();
  census_cmd->add_option("--out", c.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (analyze->parsed()) {
      const auto d = cmlab::read_distribution(c.dist);
      const auto report = cmlab::analyze(d, k_max);
      if (report.contains("caveat")) std::cerr << "warning: " << report["caveat"].get<std::string>() << '\n';
      emit(c, report.dump(2) + "\n");
    } else if (giant->parsed()) {
      const auto d = cmlab::read_distribution(c.dist);
      cmlab::GiantOptions opt;
      opt.n = c.n;
      opt.trials = c.trials;
      opt.seed = c.seed;
      opt.simple = simple;
      opt.max_attempts = max_attempts;
      opt.k_report = giant_k;
      opt.threads = c.threads;
      const auto records = cmlab::run_giant(d, opt);
      emit(c, giant_format == "csv" ? cmlab::records_to_csv(records) : cmlab::records_to_json(records, c.timing).dump(2) + "\n");
    } else if (sweep->parsed()) {
      const auto d = cmlab::read_distribution(c.dist);
      cmlab::SweepOptions opt;
      opt.n = c.n;
      opt.grid = cmlab::parse_grid(grid);
      opt.trials = c.trials;
      opt.seed = c.seed;
      opt.threads = c.threads;
      const auto rows = cmlab::run_percolation_sweep(d, opt);
      emit(c, sweep_format == "json" ? cmlab::sweep_to_json(rows).dump(2) + "\n" : cmlab::sweep_to_csv(rows));
    } else if (local->parsed()) {
      const auto d = cmlab::read_distribution(c.dist);
      cmlab::LocalOptions opt;
      opt.n = c.n;
      opt.seed = c.seed;
      opt.tree_samples = samples;
      const auto rec = cmlab::run_local_census(d, cmlab::LocalProperty::parse(property), opt);
      emit(c, local_format == "csv" ? cmlab::records_to_csv({rec}) : cmlab::records_to_json({rec}, c.timing).dump(2) + "\n");
    } else if (sample_cmd->parsed()) {
      const auto d = cmlab::read_distribution(c.dist);
      cmlab::Rng rng(cmlab::derive_seed(c.seed, 0));
      const auto ds = cmlab::sample_degree_sequence(d, c.n, rng);
      if (!degrees_out.empty()) {
        std::ofstream file(degrees_out);
        cmlab::write_degree_sequence(file, ds);
      }
      cmlab::MultiGraph g;
      if (simple) {
        auto s = cmlab::sample_simple(ds, rng, max_attempts);
        if (s.exhausted()) {
          throw cmlab::Error(cmlab::ErrorCode::Exhausted,
                             "no simple graph after " + std::to_string(s.attempts) + " attempts");
        }
        g = std::move(*s.graph);
      } else {
        g = cmlab::sample_multigraph(ds, rng);
      }
      std::ostringstream text;
      cmlab::write_edge_list(text, g);
      emit(c, text.str());
    } else if (census_cmd->parsed()) {
      std::ifstream in(edges_path);
      if (!in) throw cmlab::Error(cmlab::ErrorCode::SpecParse, "cannot open " + edges_path);
      const auto g = cmlab::read_edge_list(in);
      emit(c, cmlab::census_to_json(cmlab::components(g)).dump(2) + "\n");
    }
  } catch (const cmlab::Error& e) {
    std::cerr << "error [" << cmlab::to_string(e.code()) << "]: " << e.what() << '\n';
    return e.code() == cmlab::ErrorCode::Exhausted ? kExitExhausted : kExitInput;
  }
  return 0;
}
