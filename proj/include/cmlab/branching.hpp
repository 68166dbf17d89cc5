#pragma once

// The branching process T_D: root with D children, every later vertex with
// Z = D* - 1 children. Closed-form quantities (survival, finite-size
// probabilities, percolation threshold) and Monte Carlo samplers.

#include <cstdint>
#include <optional>
#include <vector>

#include "cmlab/distribution.hpp"
#include "cmlab/local.hpp"
#include "cmlab/random.hpp"

namespace cmlab {

struct SurvivalSolution {
  double x_plus = 0.0;  // survival probability of the one-type tree T^1
  double rho = 0.0;     // survival probability of T_D
  long iterations = 0;
  double residual = 0.0;  // |x - (1 - sum_i q_i (1-x)^(i-1))| at x_plus
  bool converged = false;
};

inline constexpr double kDefaultTolerance = 1e-12;
inline constexpr long kMaxIterations = 1'000'000;
inline constexpr std::uint64_t kDefaultTreeCap = 10'000;

/// Largest root x_+ in [0,1] of x = 1 - sum_i (i r_i / E(D)) (1-x)^(i-1).
///
/// Iterates the extinction probability y <- E[y^Z] from y = 0, which
/// increases monotonically to the smallest fixed point, and returns
/// x_+ = 1 - y. Stops when a step is below `tol` or after kMaxIterations;
/// near criticality the cap may be hit, which is reported through
/// `converged` and `residual` rather than an error.
///
/// Throws ZeroMean if E(D) = 0 and DegenerateDistribution if Pr(D >= 3) = 0.
SurvivalSolution solve_x_plus(const Distribution& d, double tol = kDefaultTolerance);

/// rho(D) = 1 - sum_i r_i (1 - x_+)^i.
double rho(const Distribution& d, double tol = kDefaultTolerance);

/// r_d (1 - (1 - x_+)^d): the limiting fraction of vertices of degree d in
/// the giant component.
double giant_degree_fraction(const Distribution& d, int degree, double tol = kDefaultTolerance);

/// Pr(|T_D| = k) for k = 1..k_max.
struct ProgenyTable {
  int k_max = 0;
  std::vector<double> rho_k;  // rho_k[k - 1]
  double tail = 0.0;          // 1 - sum_k rho_k

  double at(int k) const { return k >= 1 && k <= k_max ? rho_k[static_cast<std::size_t>(k - 1)] : 0.0; }
};

/// Exact finite-size probabilities by truncated convolution: the size of
/// T^1 is 1 plus the sizes of Z independent copies, and |T_D| - 1 is the sum
/// of D such copies. O(k_max^2 * min(k_max, max D)). Throws ZeroMean.
ProgenyTable rho_k_table(const Distribution& d, int k_max);

/// E(D) / E(D(D-1)). Throws NoThreshold when E(D(D-1)) = 0.
double critical_percolation(const Distribution& d);

/// |T_D| by breadth-first simulation, or nullopt once it exceeds `cap`.
std::optional<std::uint64_t> sample_tree_size(const Distribution& d, Rng& rng,
                                              std::uint64_t cap = kDefaultTreeCap);

/// Same, reusing prebuilt samplers for D and Z.
std::optional<std::uint64_t> sample_tree_size(const Sampler& root, const Sampler& child, Rng& rng,
                                              std::uint64_t cap);

/// T_D truncated at depth t, as a rooted neighbourhood. Vertices at depth t
/// also get their offspring count drawn so every recorded degree is the
/// degree in the full tree.
RootedNeighborhood sample_truncated_tree(const Distribution& d, Rng& rng, int depth);

struct PropertyEstimate {
  double estimate = 0.0;
  double half_width = 0.0;  // 95% normal-approximation half-width
  std::uint64_t samples = 0;
};

/// Monte Carlo estimate of Pr(T_D in P) from trees truncated at the
/// property's radius. Throws UnboundedRadius.
PropertyEstimate tree_property_probability(const Distribution& d, const LocalProperty& property,
                                           std::uint64_t samples, Rng& rng);

}  // namespace cmlab
