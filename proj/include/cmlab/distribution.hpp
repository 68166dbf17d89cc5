#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "cmlab/random.hpp"

namespace cmlab {

/// A finitely supported probability distribution on the non-negative
/// integers. Immutable after construction.
///
/// Construction accepts (value, probability) pairs in any order, rejects
/// negative probabilities, duplicate values and totals outside
/// [1 - 1e-9, 1 + 1e-9], then renormalizes. The missing (or excess) mass is
/// kept as truncation_mass() so callers that truncated an infinite law can
/// see what was dropped.
class Distribution {
 public:
  using Mass = std::pair<std::int64_t, double>;

  static constexpr double kSumTolerance = 1e-9;

  explicit Distribution(std::vector<Mass> masses);

  /// Point mass at `value`.
  static Distribution point(std::int64_t value);
  /// Dense probabilities indexed by value.
  static Distribution from_pmf(const std::vector<double>& pmf);
  /// Poisson(lambda) truncated once the remaining tail is below `tail`.
  static Distribution poisson(double lambda, double tail = 1e-10);

  /// Pr(D = value); zero off the support.
  double pmf(std::int64_t value) const;
  /// Largest value with positive probability.
  std::int64_t max_value() const { return static_cast<std::int64_t>(pmf_.size()) - 1; }
  /// Dense probabilities for 0..max_value().
  const std::vector<double>& dense() const { return pmf_; }
  /// Strictly increasing (value, probability) list of the support.
  std::vector<Mass> masses() const;
  double truncation_mass() const { return truncation_; }

  /// Pr(D >= value).
  double tail(std::int64_t value) const;

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  friend Distribution size_biased(const Distribution&);
  friend Distribution offspring(const Distribution&);
  friend Distribution thin(const Distribution&, double);

  // Derived laws: masses already sum to 1 up to round-off, no renormalizing.
  Distribution(std::vector<double> pmf, double truncation);

  std::vector<double> pmf_;
  double truncation_ = 0.0;
};

double mean(const Distribution& d);
/// E(D(D-1)).
double second_factorial_moment(const Distribution& d);
/// E(D(D-2)); positive exactly when the branching process is supercritical.
double supercriticality(const Distribution& d);

/// D*: Pr(D* = i) = i Pr(D = i) / E(D). Throws ZeroMean.
Distribution size_biased(const Distribution& d);
/// Z = D* - 1, the offspring law after the root. Throws ZeroMean.
Distribution offspring(const Distribution& d);

/// D_p: number of survivors when each of D items is kept with probability p.
/// Throws BadProbability unless 0 <= p <= 1.
Distribution thin(const Distribution& d, double p);

/// Matrix M with M(i, j) = Pr(D = j) C(j, i) p^i (1-p)^(j-i) for i <= j and
/// zero below the diagonal. Row sums give Pr(D_p = i), column sums Pr(D = j).
Eigen::MatrixXd joint_thinning_matrix(const Distribution& d, double p);

/// Draw by inversion of the cumulative masses.
std::int64_t sample(const Distribution& d, Rng& rng);

/// Inverse-CDF sampler with the cumulative table precomputed, for hot loops.
class Sampler {
 public:
  explicit Sampler(const Distribution& d);
  std::int64_t operator()(Rng& rng) const;

 private:
  std::vector<double> cdf_;
};

}  // namespace cmlab
