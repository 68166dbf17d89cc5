#include "cmlab/branching.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cmlab/error.hpp"

namespace cmlab {

namespace {

double pgf(const std::vector<double>& pmf, double y) {
  double acc = 0.0;
  for (auto it = pmf.rbegin(); it != pmf.rend(); ++it) acc = acc * y + *it;
  return acc;
}

}  // namespace

SurvivalSolution solve_x_plus(const Distribution& d, double tol) {
  if (!(mean(d) > 0.0)) throw Error(ErrorCode::ZeroMean, "survival probability needs E(D) > 0");
  if (!(d.tail(3) > 0.0)) {
    throw Error(ErrorCode::DegenerateDistribution,
                "Pr(D >= 3) = 0: the giant component is not governed by the survival probability "
                "(e.g. D supported on {0,2})");
  }
  const auto z = offspring(d).dense();

  SurvivalSolution sol;
  double y = 0.0;
  for (;;) {
    const double next = pgf(z, y);
    ++sol.iterations;
    const double step = std::abs(next - y);
    y = next;
    if (step < tol) {
      sol.converged = true;
      break;
    }
    if (sol.iterations >= kMaxIterations) break;
  }
  sol.x_plus = std::clamp(1.0 - y, 0.0, 1.0);

  const auto q = size_biased(d).dense();
  const double complement = 1.0 - sol.x_plus;
  double sum = 0.0;
  for (std::size_t i = 1; i < q.size(); ++i) sum += q[i] * std::pow(complement, static_cast<double>(i - 1));
  sol.residual = std::abs(sol.x_plus - (1.0 - sum));

  sol.rho = 1.0 - pgf(d.dense(), complement);
  return sol;
}

double rho(const Distribution& d, double tol) { return solve_x_plus(d, tol).rho; }

double giant_degree_fraction(const Distribution& d, int degree, double tol) {
  const auto sol = solve_x_plus(d, tol);
  const double r = d.pmf(degree);
  if (r == 0.0) return 0.0;
  return r * (1.0 - std::pow(1.0 - sol.x_plus, degree));
}

ProgenyTable rho_k_table(const Distribution& d, int k_max) {
  if (k_max < 1) throw Error(ErrorCode::InvalidDistribution, "k_max must be at least 1");
  const auto z = offspring(d).dense();
  const auto& r = d.dense();
  const auto K = static_cast<std::size_t>(k_max);

  // copies[j][t] = Pr(j independent copies of |T^1| sum to t), t < K.
  // Each copy has size >= 1, so j <= K - 1 suffices.
  const std::size_t max_copies = std::min<std::size_t>(r.size() - 1, K - 1);
  std::vector<std::vector<double>> copies(max_copies + 1, std::vector<double>(K, 0.0));
  copies[0][0] = 1.0;
  std::vector<double> one_type(K + 1, 0.0);  // one_type[s] = Pr(|T^1| = s)

  for (std::size_t t = 0; t < K; ++t) {
    for (std::size_t j = 1; j <= max_copies; ++j) {
      double acc = 0.0;
      for (std::size_t u = 1; u <= t; ++u) acc += one_type[u] * copies[j - 1][t - u];
      copies[j][t] = acc;
    }
    double f = 0.0;
    for (std::size_t j = 0; j < z.size() && j <= max_copies; ++j) f += z[j] * copies[j][t];
    one_type[t + 1] = f;
  }

  ProgenyTable table;
  table.k_max = k_max;
  table.rho_k.assign(K, 0.0);
  double total = 0.0;
  for (std::size_t k = 1; k <= K; ++k) {
    double acc = 0.0;
    for (std::size_t j = 0; j < r.size() && j <= max_copies; ++j) acc += r[j] * copies[j][k - 1];
    table.rho_k[k - 1] = acc;
    total += acc;
  }
  table.tail = 1.0 - total;
  return table;
}

double critical_percolation(const Distribution& d) {
  const double denom = second_factorial_moment(d);
  if (!(denom > 0.0)) throw Error(ErrorCode::NoThreshold, "E(D(D-1)) = 0: no percolation threshold");
  return mean(d) / denom;
}

std::optional<std::uint64_t> sample_tree_size(const Sampler& root, const Sampler& child, Rng& rng,
                                              std::uint64_t cap) {
  auto pending = static_cast<std::uint64_t>(root(rng));
  std::uint64_t size = 1 + pending;
  while (size <= cap && pending > 0) {
    --pending;
    const auto c = static_cast<std::uint64_t>(child(rng));
    size += c;
    pending += c;
  }
  if (size > cap) return std::nullopt;
  return size;
}

std::optional<std::uint64_t> sample_tree_size(const Distribution& d, Rng& rng, std::uint64_t cap) {
  return sample_tree_size(Sampler(d), Sampler(offspring(d)), rng, cap);
}

namespace {

RootedNeighborhood grow_tree(const Sampler& root, const Sampler* child, Rng& rng, int depth) {
  RootedNeighborhood tree;
  tree.root = 0;
  tree.depth = depth;
  tree.vertices.push_back(0);
  tree.distance.push_back(0);
  tree.degree.push_back(static_cast<int>(root(rng)));
  for (std::size_t head = 0; head < tree.vertices.size(); ++head) {
    if (tree.distance[head] >= depth) continue;
    const int children = head == 0 ? tree.degree[0] : tree.degree[head] - 1;
    for (int c = 0; c < children; ++c) {
      const auto id = static_cast<std::uint32_t>(tree.vertices.size());
      tree.vertices.push_back(id);
      tree.distance.push_back(tree.distance[head] + 1);
      tree.degree.push_back(1 + static_cast<int>((*child)(rng)));
      tree.edges.emplace_back(static_cast<std::uint32_t>(head), id);
    }
  }
  finalize_tree_flag(tree);
  return tree;
}

}  // namespace

RootedNeighborhood sample_truncated_tree(const Distribution& d, Rng& rng, int depth) {
  if (depth < 0) throw Error(ErrorCode::InsufficientRadius, "negative depth");
  const Sampler root(d);
  if (mean(d) == 0.0) return grow_tree(root, nullptr, rng, depth);
  const Sampler child(offspring(d));
  return grow_tree(root, &child, rng, depth);
}

PropertyEstimate tree_property_probability(const Distribution& d, const LocalProperty& property,
                                           std::uint64_t samples, Rng& rng) {
  const auto radius = property.radius();
  if (!radius) throw Error(ErrorCode::UnboundedRadius, property.to_string() + " has no finite radius");
  if (samples == 0) throw Error(ErrorCode::InvalidDistribution, "need at least one sample");
  const Sampler root(d);
  const bool has_children = mean(d) > 0.0;
  const Sampler child = has_children ? Sampler(offspring(d)) : root;
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const auto tree = grow_tree(root, &child, rng, *radius);
    if (evaluate_property(tree, property)) ++hits;
  }
  PropertyEstimate out;
  out.samples = samples;
  out.estimate = static_cast<double>(hits) / static_cast<double>(samples);
  out.half_width = 1.96 * std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(samples));
  return out;
}

}  // namespace cmlab
