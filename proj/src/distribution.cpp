#include "cmlab/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cmlab/error.hpp"

namespace cmlab {

namespace {

void trim(std::vector<double>& pmf) {
  while (pmf.size() > 1 && pmf.back() == 0.0) pmf.pop_back();
}

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::BadProbability, "probability " + std::to_string(p) + " outside [0,1]");
  }
}

// rows[j][i] = C(j,i) p^i (1-p)^(j-i) via Pascal's rule; all terms are
// non-negative so there is no cancellation.
std::vector<std::vector<double>> binomial_rows(std::size_t max_j, double p) {
  std::vector<std::vector<double>> rows(max_j + 1);
  rows[0] = {1.0};
  const double q = 1.0 - p;
  for (std::size_t j = 1; j <= max_j; ++j) {
    const auto& prev = rows[j - 1];
    auto& row = rows[j];
    row.assign(j + 1, 0.0);
    for (std::size_t i = 0; i <= j; ++i) {
      double v = 0.0;
      if (i < j) v += q * prev[i];
      if (i > 0) v += p * prev[i - 1];
      row[i] = v;
    }
  }
  return rows;
}

}  // namespace

Distribution::Distribution(std::vector<double> pmf, double truncation)
    : pmf_(std::move(pmf)), truncation_(truncation) {
  if (pmf_.empty()) pmf_ = {1.0};
  trim(pmf_);
}

Distribution::Distribution(std::vector<Mass> masses) {
  if (masses.empty()) throw Error(ErrorCode::InvalidDistribution, "distribution has no masses");
  std::sort(masses.begin(), masses.end());
  double total = 0.0;
  for (std::size_t k = 0; k < masses.size(); ++k) {
    const auto [value, prob] = masses[k];
    if (value < 0) {
      throw Error(ErrorCode::InvalidDistribution, "negative support value " + std::to_string(value));
    }
    if (!(prob >= 0.0) || !std::isfinite(prob)) {
      throw Error(ErrorCode::InvalidDistribution, "invalid probability at value " + std::to_string(value));
    }
    if (k > 0 && masses[k - 1].first == value) {
      throw Error(ErrorCode::InvalidDistribution, "duplicate support value " + std::to_string(value));
    }
    total += prob;
  }
  if (std::abs(total - 1.0) > kSumTolerance) {
    throw Error(ErrorCode::InvalidDistribution,
                "masses sum to " + std::to_string(total) + ", outside 1 +/- 1e-9");
  }
  pmf_.assign(static_cast<std::size_t>(masses.back().first) + 1, 0.0);
  for (const auto& [value, prob] : masses) pmf_[static_cast<std::size_t>(value)] = prob / total;
  truncation_ = 1.0 - total;
  trim(pmf_);
  if (pmf_.size() == 1 && pmf_[0] == 0.0) {
    throw Error(ErrorCode::InvalidDistribution, "all masses are zero");
  }
}

Distribution Distribution::point(std::int64_t value) { return Distribution({{value, 1.0}}); }

Distribution Distribution::from_pmf(const std::vector<double>& pmf) {
  std::vector<Mass> masses;
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    if (pmf[i] != 0.0) masses.emplace_back(static_cast<std::int64_t>(i), pmf[i]);
  }
  return Distribution(std::move(masses));
}

Distribution Distribution::poisson(double lambda, double tail) {
  if (!(lambda > 0.0)) throw Error(ErrorCode::InvalidDistribution, "poisson rate must be positive");
  std::vector<Mass> masses;
  double term = std::exp(-lambda);
  double total = 0.0;
  for (std::int64_t k = 0; 1.0 - total > tail || static_cast<double>(k) < lambda; ++k) {
    masses.emplace_back(k, term);
    total += term;
    term *= lambda / static_cast<double>(k + 1);
  }
  return Distribution(std::move(masses));
}

double Distribution::pmf(std::int64_t value) const {
  if (value < 0 || value > max_value()) return 0.0;
  return pmf_[static_cast<std::size_t>(value)];
}

std::vector<Distribution::Mass> Distribution::masses() const {
  std::vector<Mass> out;
  for (std::size_t i = 0; i < pmf_.size(); ++i) {
    if (pmf_[i] > 0.0) out.emplace_back(static_cast<std::int64_t>(i), pmf_[i]);
  }
  return out;
}

double Distribution::tail(std::int64_t value) const {
  double s = 0.0;
  for (auto i = std::max<std::int64_t>(value, 0); i <= max_value(); ++i) s += pmf_[static_cast<std::size_t>(i)];
  return s;
}

double mean(const Distribution& d) {
  const auto& r = d.dense();
  double s = 0.0;
  for (std::size_t i = 1; i < r.size(); ++i) s += static_cast<double>(i) * r[i];
  return s;
}

double second_factorial_moment(const Distribution& d) {
  const auto& r = d.dense();
  double s = 0.0;
  for (std::size_t i = 2; i < r.size(); ++i) s += static_cast<double>(i) * static_cast<double>(i - 1) * r[i];
  return s;
}

double supercriticality(const Distribution& d) {
  const auto& r = d.dense();
  double s = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto x = static_cast<double>(i);
    s += x * (x - 2.0) * r[i];
  }
  return s;
}

Distribution size_biased(const Distribution& d) {
  const double mu = mean(d);
  if (!(mu > 0.0)) throw Error(ErrorCode::ZeroMean, "size-biasing needs E(D) > 0");
  const auto& r = d.dense();
  std::vector<double> q(r.size(), 0.0);
  for (std::size_t i = 1; i < r.size(); ++i) q[i] = static_cast<double>(i) * r[i] / mu;
  return Distribution(std::move(q), d.truncation_mass());
}

Distribution offspring(const Distribution& d) {
  const double mu = mean(d);
  if (!(mu > 0.0)) throw Error(ErrorCode::ZeroMean, "offspring law needs E(D) > 0");
  const auto& r = d.dense();
  std::vector<double> z(r.size() - 1, 0.0);
  for (std::size_t i = 0; i + 1 < r.size(); ++i) z[i] = static_cast<double>(i + 1) * r[i + 1] / mu;
  return Distribution(std::move(z), d.truncation_mass());
}

Distribution thin(const Distribution& d, double p) {
  check_probability(p);
  const auto& r = d.dense();
  const auto rows = binomial_rows(r.size() - 1, p);
  std::vector<double> out(r.size(), 0.0);
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (r[j] == 0.0) continue;
    for (std::size_t i = 0; i <= j; ++i) out[i] += r[j] * rows[j][i];
  }
  return Distribution(std::move(out), d.truncation_mass());
}

Eigen::MatrixXd joint_thinning_matrix(const Distribution& d, double p) {
  check_probability(p);
  const auto& r = d.dense();
  const auto size = static_cast<Eigen::Index>(r.size());
  const auto rows = binomial_rows(r.size() - 1, p);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(size, size);
  for (Eigen::Index j = 0; j < size; ++j) {
    for (Eigen::Index i = 0; i <= j; ++i) {
      m(i, j) = r[static_cast<std::size_t>(j)] * rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    }
  }
  return m;
}

Sampler::Sampler(const Distribution& d) : cdf_(d.dense().size()) {
  std::partial_sum(d.dense().begin(), d.dense().end(), cdf_.begin());
  // The last entry is a positive mass after trimming; pin it so every u in
  // [0,1) lands inside the support.
  cdf_.back() = 1.0;
}

std::int64_t Sampler::operator()(Rng& rng) const {
  const double u = uniform01(rng);
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  return static_cast<std::int64_t>(it - cdf_.begin());
}

std::int64_t sample(const Distribution& d, Rng& rng) { return Sampler(d)(rng); }

}  // namespace cmlab
