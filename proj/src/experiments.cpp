#include "cmlab/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <sstream>
#include <thread>

#include "cmlab/branching.hpp"
#include "cmlab/census.hpp"
#include "cmlab/configuration.hpp"
#include "cmlab/error.hpp"
#include "cmlab/percolation.hpp"

namespace cmlab {

namespace {

std::string number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

Json optional_number(const std::optional<double>& x) { return x ? Json(*x) : Json(nullptr); }

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

double ExperimentRecord::observed_value(const std::string& key) const {
  for (const auto& [k, v] : observed) {
    if (k == key) return v;
  }
  throw std::out_of_range("no observed value '" + key + "'");
}

std::optional<double> ExperimentRecord::predicted_value(const std::string& key) const {
  for (const auto& [k, v] : predicted) {
    if (k == key) return v;
  }
  throw std::out_of_range("no predicted value '" + key + "'");
}

std::optional<double> predicted_rho(const Distribution& d) {
  if (mean(d) == 0.0) return 0.0;
  if (d.tail(3) == 0.0) return std::nullopt;
  return rho(d);
}

std::vector<double> predicted_rho_k(const Distribution& d, int k_max) {
  if (mean(d) == 0.0) {
    std::vector<double> out(static_cast<std::size_t>(k_max), 0.0);
    out[0] = 1.0;
    return out;
  }
  return rho_k_table(d, k_max).rho_k;
}

Json analyze(const Distribution& d, int k_max) {
  Json report;
  report["distribution"] = to_json(d);
  const double mu = mean(d);
  report["mean"] = mu;
  report["offspring_mean"] = mu > 0.0 ? Json(mean(offspring(d))) : Json(nullptr);
  report["supercriticality"] = supercriticality(d);

  const bool solvable = mu > 0.0 && d.tail(3) > 0.0;
  if (solvable) {
    const auto sol = solve_x_plus(d);
    report["x_plus"] = sol.x_plus;
    report["rho"] = sol.rho;
    report["iterations"] = sol.iterations;
    report["residual"] = sol.residual;
    report["converged"] = sol.converged;
  } else {
    report["x_plus"] = nullptr;
    report["rho"] = mu == 0.0 ? Json(0.0) : Json(nullptr);
  }

  const auto rho_k = predicted_rho_k(d, k_max);
  report["rho_k"] = rho_k;
  double listed = 0.0;
  for (const double r : rho_k) listed += r;
  report["rho_k_tail"] = 1.0 - listed;

  report["p_c"] = second_factorial_moment(d) > 0.0 ? Json(critical_percolation(d)) : Json(nullptr);

  Json fractions = Json::object();
  if (solvable) {
    for (const auto& [value, prob] : d.masses()) {
      fractions[std::to_string(value)] = giant_degree_fraction(d, static_cast<int>(value));
    }
  }
  report["giant_fraction_by_degree"] = solvable ? fractions : Json(nullptr);
  if (mu > 0.0 && !solvable) {
    report["caveat"] =
        "degenerate distribution: Pr(D >= 3) = 0 (for example D supported on {0,2}); "
        "the survival fixed point does not describe the largest component";
  }
  return report;
}

void parallel_trials(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  std::vector<std::exception_ptr> errors(count);
  auto run = [&](std::size_t i) {
    try {
      fn(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) run(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) run(i);
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::vector<ExperimentRecord> run_giant(const Distribution& d, const GiantOptions& options) {
  const auto rho_pred = predicted_rho(d);
  const auto rho_k = predicted_rho_k(d, options.k_report);
  const auto n = static_cast<double>(options.n);

  std::vector<ExperimentRecord> records(options.trials);
  parallel_trials(options.trials, options.threads, [&](std::size_t trial) {
    const auto start = std::chrono::steady_clock::now();
    const auto trial_seed = derive_seed(options.seed, trial);
    Rng rng(trial_seed);
    const auto ds = sample_degree_sequence(d, options.n, rng);

    auto& rec = records[trial];
    rec.experiment = "giant";
    rec.params = {{"n", options.n},        {"trial", trial},
                  {"seed", options.seed},  {"trial_seed", trial_seed},
                  {"simple", options.simple}, {"conf_distance", conf_distance(ds, d)}};

    MultiGraph g;
    if (options.simple) {
      auto s = sample_simple(ds, rng, options.max_attempts);
      rec.params["attempts"] = s.attempts;
      if (s.exhausted()) {
        throw Error(ErrorCode::Exhausted, "trial " + std::to_string(trial) + ": no simple graph after " +
                                              std::to_string(s.attempts) + " attempts");
      }
      g = std::move(*s.graph);
    } else {
      g = sample_multigraph(ds, rng);
    }
    const auto census = components(g);
    rec.observed.emplace_back("L1/n", static_cast<double>(census.largest()) / n);
    rec.predicted.emplace_back("L1/n", rho_pred);
    rec.observed.emplace_back("L2/n", static_cast<double>(census.second_largest()) / n);
    rec.predicted.emplace_back("L2/n", 0.0);
    for (int k = 1; k <= options.k_report; ++k) {
      const auto key = "N_" + std::to_string(k) + "/n";
      rec.observed.emplace_back(key, static_cast<double>(census.vertices_in_size(static_cast<std::uint64_t>(k))) / n);
      rec.predicted.emplace_back(key, rho_k[static_cast<std::size_t>(k - 1)]);
    }
    rec.runtime_ms = elapsed_ms(start);
  });
  return records;
}

std::vector<SweepRow> run_percolation_sweep(const Distribution& d, const SweepOptions& options) {
  const auto& grid = options.grid;
  std::vector<std::optional<double>> rho_pred;
  std::vector<Distribution> thinned;
  for (const double p : grid) {
    thinned.push_back(thin(d, p));
    rho_pred.push_back(predicted_rho(thinned.back()));
  }
  const auto n = static_cast<double>(options.n);

  std::vector<SweepRow> rows(grid.size() * options.trials);
  parallel_trials(options.trials, options.threads, [&](std::size_t trial) {
    const auto trial_seed = derive_seed(options.seed, trial);
    Rng rng(trial_seed);
    const auto ds = sample_degree_sequence(d, options.n, rng);
    const auto g = sample_multigraph(ds, rng);
    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
      Rng color_rng(derive_seed(trial_seed, gi + 1));
      const auto parts = split(color_edges(g, grid[gi], color_rng));
      const auto census = components(parts.red);
      auto& row = rows[gi * options.trials + trial];
      row.p = grid[gi];
      row.trial = trial;
      row.l1 = static_cast<double>(census.largest()) / n;
      row.l2 = static_cast<double>(census.second_largest()) / n;
      row.rho = rho_pred[gi];
      row.conf_distance = conf_distance(parts.red_degrees, thinned[gi]);
    }
  });
  return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "# cmlab percolation-sweep v1\n";
  out << "p,trial,L1/n,L2/n,rho(D_p),conf_distance\n";
  for (const auto& r : rows) {
    out << number(r.p) << ',' << r.trial << ',' << number(r.l1) << ',' << number(r.l2) << ','
        << (r.rho ? number(*r.rho) : std::string()) << ',' << number(r.conf_distance) << '\n';
  }
  return out.str();
}

Json sweep_to_json(const std::vector<SweepRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back({{"p", r.p},
                   {"trial", r.trial},
                   {"L1/n", r.l1},
                   {"L2/n", r.l2},
                   {"rho(D_p)", optional_number(r.rho)},
                   {"conf_distance", r.conf_distance}});
  }
  return out;
}

ExperimentRecord run_local_census(const Distribution& d, const LocalProperty& property,
                                  const LocalOptions& options) {
  if (!property.radius()) throw Error(ErrorCode::UnboundedRadius, property.to_string() + " has no finite radius");
  const auto start = std::chrono::steady_clock::now();
  const auto graph_seed = derive_seed(options.seed, 0);
  Rng rng(graph_seed);
  const auto g = sample_multigraph(sample_degree_sequence(d, options.n, rng), rng);
  const auto n = static_cast<double>(options.n);

  Rng tree_rng(derive_seed(options.seed, 1));
  const auto tree = tree_property_probability(d, property, options.tree_samples, tree_rng);

  std::optional<double> giant_pred;
  if (property.kind() == LocalProperty::Kind::RootDegree && mean(d) > 0.0 && d.tail(3) > 0.0) {
    giant_pred = giant_degree_fraction(d, property.first());
  }

  ExperimentRecord rec;
  rec.experiment = "local";
  rec.params = {{"n", options.n},
                {"seed", options.seed},
                {"property", property.to_string()},
                {"radius", *property.radius()},
                {"tree_samples", options.tree_samples},
                {"tree_half_width", tree.half_width}};
  rec.observed.emplace_back("count/n", static_cast<double>(count_property(g, property)) / n);
  rec.predicted.emplace_back("count/n", tree.estimate);
  rec.observed.emplace_back("giant_count/n", static_cast<double>(count_property_in_giant(g, property)) / n);
  rec.predicted.emplace_back("giant_count/n", giant_pred);
  rec.observed.emplace_back("L1/n", static_cast<double>(components(g).largest()) / n);
  rec.predicted.emplace_back("L1/n", predicted_rho(d));
  rec.runtime_ms = elapsed_ms(start);
  return rec;
}

Json records_to_json(const std::vector<ExperimentRecord>& records, bool with_timing) {
  Json out = Json::array();
  for (const auto& rec : records) {
    Json observed = Json::object();
    Json predicted = Json::object();
    for (const auto& [k, v] : rec.observed) observed[k] = v;
    for (const auto& [k, v] : rec.predicted) predicted[k] = optional_number(v);
    Json item = {{"experiment", rec.experiment}, {"params", rec.params}, {"observed", observed}, {"predicted", predicted}};
    if (with_timing) item["runtime_ms"] = rec.runtime_ms;
    out.push_back(std::move(item));
  }
  return out;
}

std::string records_to_csv(const std::vector<ExperimentRecord>& records) {
  std::ostringstream out;
  out << "# cmlab records v1\n";
  out << "experiment,trial,key,observed,predicted\n";
  for (const auto& rec : records) {
    const auto trial = rec.params.contains("trial") ? rec.params["trial"].get<std::size_t>() : 0;
    for (std::size_t i = 0; i < rec.observed.size(); ++i) {
      const auto& pred = rec.predicted[i].second;
      out << rec.experiment << ',' << trial << ',' << rec.observed[i].first << ',' << number(rec.observed[i].second)
          << ',' << (pred ? number(*pred) : std::string()) << '\n';
    }
  }
  return out.str();
}

std::vector<double> parse_grid(const std::string& text) {
  auto to_double = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw Error(ErrorCode::SpecParse, "bad grid value '" + s + "' in '" + text + "'");
    return v;
  };
  std::vector<double> grid;
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
    if (parts.size() != 3) throw Error(ErrorCode::SpecParse, "grid range must be start:stop:step");
    const double lo = to_double(parts[0]), hi = to_double(parts[1]), step = to_double(parts[2]);
    if (!(step > 0.0)) throw Error(ErrorCode::SpecParse, "grid step must be positive");
    const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
    // Snapped to 12 significant digits, the precision of the CSV output.
    for (long i = 0; i <= count; ++i) grid.push_back(std::stod(number(lo + static_cast<double>(i) * step)));
  } else {
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) grid.push_back(to_double(item));
  }
  if (grid.empty()) throw Error(ErrorCode::SpecParse, "empty grid");
  for (const double p : grid) {
    if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::BadProbability, "grid value " + number(p) + " outside [0,1]");
  }
  return grid;
}

}  // namespace cmlab
