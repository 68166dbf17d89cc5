#pragma once

// Seeded experiments that put simulation next to the branching-process
// prediction. Trial i of a run with master seed s uses the stream
// derive_seed(s, i), so output does not depend on the number of threads.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cmlab/distribution.hpp"
#include "cmlab/io.hpp"
#include "cmlab/local.hpp"

namespace cmlab {

struct ExperimentRecord {
  std::string experiment;
  Json params = Json::object();
  std::vector<std::pair<std::string, double>> observed;
  std::vector<std::pair<std::string, std::optional<double>>> predicted;  // same keys as observed
  std::int64_t runtime_ms = 0;

  double observed_value(const std::string& key) const;
  std::optional<double> predicted_value(const std::string& key) const;
};

/// rho(D) where it is the limiting giant fraction: 0 when E(D) = 0, nullopt
/// when Pr(D >= 3) = 0 with E(D) > 0.
std::optional<double> predicted_rho(const Distribution& d);
/// rho_1..rho_kmax, with the E(D) = 0 case (isolated root) handled.
std::vector<double> predicted_rho_k(const Distribution& d, int k_max);

/// Branching-process summary of D as a JSON report.
Json analyze(const Distribution& d, int k_max);

/// Runs fn(0..count-1) on up to `threads` workers (0 = hardware concurrency).
void parallel_trials(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

struct GiantOptions {
  std::size_t n = 100'000;
  std::size_t trials = 1;
  std::uint64_t seed = 1;
  bool simple = false;
  int max_attempts = 1000;
  int k_report = 10;
  unsigned threads = 0;
};

/// Per trial: degree sequence from D, configuration multigraph (or simple
/// graph by rejection), census. Observed L1/n, L2/n, N_k/n for k <= k_report
/// against rho, 0, rho_k. Throws Error(Exhausted) if rejection fails.
std::vector<ExperimentRecord> run_giant(const Distribution& d, const GiantOptions& options);

struct SweepOptions {
  std::size_t n = 100'000;
  std::vector<double> grid;
  std::size_t trials = 1;
  std::uint64_t seed = 1;
  unsigned threads = 0;
};

struct SweepRow {
  double p = 0.0;
  std::size_t trial = 0;
  double l1 = 0.0;  // L1 / n
  double l2 = 0.0;  // L2 / n
  std::optional<double> rho;  // rho(D_p)
  double conf_distance = 0.0;  // d_conf(red degrees, D_p)
};

/// One base multigraph per trial (the graph run_giant builds for that
/// trial), percolated at every grid value with its own colouring stream.
std::vector<SweepRow> run_percolation_sweep(const Distribution& d, const SweepOptions& options);

/// CSV with a leading "#" version line.
std::string sweep_to_csv(const std::vector<SweepRow>& rows);
Json sweep_to_json(const std::vector<SweepRow>& rows);

struct LocalOptions {
  std::size_t n = 100'000;
  std::uint64_t seed = 1;
  std::uint64_t tree_samples = 100'000;
};

/// Whole-graph and giant-restricted counts of P against the tree
/// probability and, for root-degree properties, r_d (1 - (1 - x_+)^d).
ExperimentRecord run_local_census(const Distribution& d, const LocalProperty& property,
                                  const LocalOptions& options);

Json records_to_json(const std::vector<ExperimentRecord>& records, bool with_timing = false);
/// Long format: experiment,trial,key,observed,predicted.
std::string records_to_csv(const std::vector<ExperimentRecord>& records);

/// "0.1,0.5,0.9" or "start:stop:step". Throws Error(SpecParse) and
/// Error(BadProbability).
std::vector<double> parse_grid(const std::string& text);

}  // namespace cmlab
