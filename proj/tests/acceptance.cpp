// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Simulation criteria read their numbers from experiment
// records; oracle criteria compare library output with tests/oracles.hpp.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cmlab/branching.hpp"
#include "cmlab/census.hpp"
#include "cmlab/experiments.hpp"
#include "exact_laws.hpp"

namespace {

using namespace cmlab;

const Distribution kCubic = Distribution::point(3);
const Distribution kMixture({{1, 0.5}, {3, 0.5}});

struct Outcome {
  bool passed = true;
  std::string detail;

  // Records the first failing check, or the last summary when all pass.
  void check(bool ok, const std::string& what) {
    if (!ok && passed) {
      passed = false;
      detail = what;
    } else if (passed) {
      detail = what;
    }
  }
};

std::string fmt(const char* pattern, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

GiantOptions mixture_giant_options() {
  GiantOptions opt;
  opt.n = 100'000;
  opt.trials = 5;
  opt.seed = 20'240'601;
  return opt;
}

Outcome giant_law() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  const auto records = run_giant(kMixture, mixture_giant_options());
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  double worst = 0.0, worst_l2 = 0.0;
  for (const auto& rec : records) {
    out.check(std::abs(*rec.predicted_value("L1/n") - 22.0 / 27.0) <= 1e-11, "predicted rho differs from 22/27");
    worst = std::max(worst, std::abs(rec.observed_value("L1/n") - 22.0 / 27.0));
    worst_l2 = std::max(worst_l2, rec.observed_value("L2/n"));
  }
  out.check(worst <= 0.02, fmt("max |L1/n - 22/27| = %.4f (<= 0.02)", worst));
  out.check(worst_l2 <= 0.01, fmt("max L2/n = %.5f (<= 0.01)", worst_l2));
  out.check(seconds <= 5.0, fmt("max |L1/n - 22/27| = %.4f, max L2/n = %.5f, %.2f s for 5 trials (<= 5 s)", worst,
                                worst_l2, seconds));
  return out;
}

Outcome small_components() {
  Outcome out;
  double worst = 0.0;
  for (const auto& rec : run_giant(kMixture, mixture_giant_options())) {
    out.check(std::abs(*rec.predicted_value("N_2/n") - 0.125) <= 1e-15, "predicted rho_2 differs from 1/8");
    worst = std::max(worst, std::abs(rec.observed_value("N_2/n") - 0.125));
  }
  out.check(worst <= 0.01, fmt("max |N_2/n - 1/8| = %.4f (<= 0.01)", worst));

  GiantOptions matching;
  matching.n = 100'000;
  matching.trials = 3;
  for (const auto& rec : run_giant(Distribution::point(1), matching)) {
    out.check(rec.observed_value("N_2/n") == 1.0, fmt("matching N_2/n = %.6f, expected 1", rec.observed_value("N_2/n")));
  }
  out.check(out.passed, fmt("max |N_2/n - 1/8| = %.4f (<= 0.01); matching N_2 = n", worst));
  return out;
}

Outcome percolation_agreement() {
  Outcome out;
  SweepOptions opt;
  opt.n = 100'000;
  opt.trials = 5;
  opt.seed = 777;
  opt.grid = {0.45, 0.55, 0.6};
  const auto rows = run_percolation_sweep(kCubic, opt);
  double worst = 0.0, max_sub = 0.0, min_margin = 1.0;
  for (const auto& row : rows) {
    if (row.p == 0.6) {
      out.check(std::abs(*row.rho - 19.0 / 27.0) <= 1e-11, "predicted rho(D_0.6) differs from 19/27");
      worst = std::max(worst, std::abs(row.l1 - 19.0 / 27.0));
    } else if (row.p == 0.45) {
      max_sub = std::max(max_sub, row.l1);
    } else {
      min_margin = std::min(min_margin, row.l1 - (*row.rho - 0.02));
    }
  }
  out.check(worst <= 0.02, fmt("p=0.6: max |L1/n - 19/27| = %.4f (<= 0.02)", worst));
  out.check(max_sub <= 0.05, fmt("p=0.45: max L1/n = %.4f (<= 0.05)", max_sub));
  out.check(min_margin >= 0.0, fmt("p=0.55: min L1/n - (rho - 0.02) = %.4f (>= 0)", min_margin));
  const double pc = analyze(kCubic, 1)["p_c"].get<double>();
  out.check(pc == 0.5, fmt("p_c = %.17g, expected exactly 0.5", pc));
  out.check(out.passed, fmt("p=0.6 max dev %.4f; p=0.45 max L1/n %.4f; p=0.55 margin %.4f; p_c = 0.5", worst, max_sub,
                            min_margin));
  return out;
}

Outcome giant_local_counts() {
  Outcome out;
  LocalOptions opt;
  opt.n = 100'000;
  opt.seed = 4242;
  const auto deg3 = run_local_census(kMixture, LocalProperty::root_degree(3), opt);
  const auto deg1 = run_local_census(kMixture, LocalProperty::root_degree(1), opt);
  const double dev3 = std::abs(deg3.observed_value("giant_count/n") - 13.0 / 27.0);
  const double dev1 = std::abs(deg1.observed_value("giant_count/n") - 1.0 / 3.0);
  const double sum = *deg3.predicted_value("giant_count/n") + *deg1.predicted_value("giant_count/n");
  out.check(dev3 <= 0.02, fmt("degree 3: |giant/n - 13/27| = %.4f (<= 0.02)", dev3));
  out.check(dev1 <= 0.02, fmt("degree 1: |giant/n - 1/3| = %.4f (<= 0.02)", dev1));
  out.check(std::abs(sum - *deg3.predicted_value("L1/n")) <= 1e-12, fmt("predictions sum %.17g != rho", sum));
  out.check(std::abs(sum - 22.0 / 27.0) <= 1e-12, fmt("predictions sum %.17g, |sum - 22/27| > 1e-12", sum));
  out.check(out.passed, fmt("deviations %.4f (deg 3), %.4f (deg 1); |sum - 22/27| = %.2e", dev3, dev1,
                            std::abs(sum - 22.0 / 27.0)));
  return out;
}

Outcome oracle_equivalence() {
  Outcome out;
  Rng rng(1357);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const auto d = oracle::random_distribution(rng, 1 + static_cast<int>(uniform_below(rng, 5)));
    if (mean(d) == 0.0) {
      --i;
      continue;
    }
    const auto table = rho_k_table(d, 6);
    const auto brute = oracle::enumerate_tree_sizes(d, 6);
    for (int k = 1; k <= 6; ++k) worst = std::max(worst, std::abs(table.at(k) - brute[static_cast<std::size_t>(k)]));
  }
  out.check(worst <= 1e-10, fmt("rho_k vs enumeration: max |diff| = %.2e (<= 1e-10)", worst));

  // Sizes k <= 20 are decided the same under any cap >= 20.
  constexpr int kSamples = 1'000'000;
  const auto table = rho_k_table(kMixture, 20);
  const Sampler root(kMixture), child(offspring(kMixture));
  std::vector<double> hist(21, 0.0);
  for (int i = 0; i < kSamples; ++i) {
    if (const auto size = sample_tree_size(root, child, rng, 20)) hist[*size] += 1.0;
  }
  double worst_z = 0.0;
  for (int k = 1; k <= 20; ++k) {
    const double p = table.at(k);
    const double dev = std::abs(hist[static_cast<std::size_t>(k)] / kSamples - p);
    const double se = std::sqrt(p * (1.0 - p) / kSamples);
    if (se == 0.0) {
      out.check(dev == 0.0, fmt("k=%d: impossible size observed", k));
      continue;
    }
    worst_z = std::max(worst_z, dev / se);
  }
  out.check(worst_z <= 4.0, fmt("max |diff| %.2e; tree-size histogram max deviation %.2f SE (<= 4)", worst, worst_z));
  return out;
}

Outcome criterion_and_continuity() {
  Outcome out;
  Rng rng(2468);
  int agree = 0, checked = 0;
  double worst = 0.0;
  while (checked < 100) {
    const auto d = oracle::random_distribution(rng, 3 + static_cast<int>(uniform_below(rng, 6)));
    if (d.tail(3) == 0.0 || std::abs(supercriticality(d)) <= 1e-3) continue;
    ++checked;
    const double r = rho(d);
    agree += (r > 1e-6) == (supercriticality(d) > 0.0);
    worst = std::max(worst, std::abs(rho(thin(d, 0.9999)) - r));
  }
  out.check(agree == 100, fmt("sign agreement %d/100", agree));
  out.check(worst <= 0.01, fmt("sign agreement %d/100; max |rho(thin(D,0.9999)) - rho(D)| = %.2e (<= 0.01)", agree,
                               worst));
  return out;
}

Outcome structural_suite() {
  Outcome out;
  Rng rng(97531);
  const Distribution d({{1, 0.3}, {2, 0.3}, {3, 0.2}, {4, 0.2}});
  const auto ds = sample_degree_sequence(d, 400, rng);
  constexpr int kDelta = 3;
  const std::vector<std::pair<LocalProperty, int>> qs{
      {LocalProperty::conjunction({LocalProperty::root_degree(3), LocalProperty::max_degree_ball(kDelta, 1)}), 1},
      {LocalProperty::conjunction({LocalProperty::component_size_exactly(2), LocalProperty::max_degree_ball(kDelta, 2)}),
       2}};

  auto pairing = sample_pairing(ds, rng);
  auto graph = to_multigraph(pairing);
  auto census = components(graph);
  std::vector<double> q_count;
  for (const auto& [q, t] : qs) q_count.push_back(static_cast<double>(count_property(graph, q)));

  double worst_nk = 0.0, worst_q = 0.0;
  bool degrees_kept = true;
  for (int s = 0; s < 10'000; ++s) {
    const std::size_t m = pairing.pairs().size();
    const std::size_t i = uniform_below(rng, m);
    std::size_t j = uniform_below(rng, m - 1);
    if (j >= i) ++j;
    pairing = apply_switching(pairing, i, j, rng);
    graph = to_multigraph(pairing);
    degrees_kept = degrees_kept && graph.degrees() == ds.degrees();
    const auto next = components(graph);
    for (const std::uint64_t k : {1, 2, 3, 5}) {
      const double change = std::abs(static_cast<double>(next.vertices_in_size(k)) -
                                      static_cast<double>(census.vertices_in_size(k)));
      worst_nk = std::max(worst_nk, change / (4.0 * static_cast<double>(k)));
    }
    census = next;
    for (std::size_t qi = 0; qi < qs.size(); ++qi) {
      const double now = static_cast<double>(count_property(graph, qs[qi].first));
      worst_q = std::max(worst_q, std::abs(now - q_count[qi]) / (16.0 * std::pow(kDelta, qs[qi].second)));
      q_count[qi] = now;
    }
  }
  out.check(degrees_kept, "a switching changed the degree sequence");
  out.check(worst_nk <= 1.0, fmt("max |dN_k| / 4k = %.3f (<= 1)", worst_nk));
  out.check(worst_q <= 1.0, fmt("max |dN_Q| / 16 Delta^t = %.3f (<= 1)", worst_q));

  std::vector<Distribution> corpus{kCubic, kMixture, Distribution({{1, 0.75}, {3, 0.25}}),
                                   Distribution({{0, 0.2}, {2, 0.3}, {5, 0.5}}), Distribution::poisson(2.5)};
  for (int i = 0; i < 30; ++i) corpus.push_back(oracle::random_distribution(rng, 1 + static_cast<int>(uniform_below(rng, 9))));
  double worst_commute = 0.0;
  for (const auto& dist : corpus) {
    for (const double p : {0.2, 0.5, 0.77, 1.0}) {
      const auto dp = thin(dist, p);
      if (mean(dp) == 0.0) continue;
      const auto a = offspring(dp);
      const auto b = thin(offspring(dist), p);
      const auto len = std::max(a.dense().size(), b.dense().size());
      for (std::size_t v = 0; v < len; ++v) {
        worst_commute = std::max(worst_commute, std::abs(a.pmf(static_cast<std::int64_t>(v)) -
                                                         b.pmf(static_cast<std::int64_t>(v))));
      }
    }
  }
  out.check(worst_commute <= 1e-12, fmt("thinning/offspring commutation max |diff| = %.2e (<= 1e-12)", worst_commute));
  out.check(out.passed, fmt("10^4 switchings: max |dN_k|/4k = %.3f, max |dN_Q|/16Delta^t = %.3f; commutation %.1e",
                            worst_nk, worst_q, worst_commute));
  return out;
}

Outcome exact_law_micro_tests() {
  Outcome out;
  Rng rng(8642);
  int pairing_tests = 0, red_blue_tests = 0, conditions = 0, condition_rejections = 0;
  for (const int stubs : {2, 4, 6, 8}) {
    for (const auto& parts : oracle::partitions(stubs)) {
      const DegreeSequence ds(parts);
      const auto r = oracle::pairing_uniformity(ds, 1'000'000, rng, 1e-3);
      ++pairing_tests;
      out.check(r.passed(), fmt("pairing uniformity failed for 2m=%d: stat %.2f > %.2f", stubs, r.statistic, r.critical));
      const auto rb = oracle::red_blue_independence(ds, 0.5, 1'000'000, rng, 1e-3);
      ++red_blue_tests;
      conditions += rb.conditions;
      condition_rejections += rb.condition_rejections;
      out.check(rb.combined.passed(), fmt("red/blue independence failed for 2m=%d: stat %.2f > %.2f (dof %.0f)", stubs,
                                          rb.combined.statistic, rb.combined.critical, rb.combined.dof));
    }
  }
  out.check(out.passed, fmt("%d pairing and %d red/blue chi-square tests at alpha 1e-3; "
                            "%d of %d single-d' tests reject (%.1f expected by chance)",
                            pairing_tests, red_blue_tests, condition_rejections, conditions, 1e-3 * conditions));
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"giant-component law", giant_law},
      {"small components", small_components},
      {"percolation agreement", percolation_agreement},
      {"giant-restricted local counts", giant_local_counts},
      {"oracle equivalence", oracle_equivalence},
      {"criterion and continuity", criterion_and_continuity},
      {"structural/Lipschitz suite", structural_suite},
      {"exact-law micro-tests", exact_law_micro_tests},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.passed;
    std::printf("%s  %s: %s\n", o.passed ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
