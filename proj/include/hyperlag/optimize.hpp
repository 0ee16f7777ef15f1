#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "hyperlag/hypercore.hpp"
#include "hyperlag/rational.hpp"

namespace hyperlag {

enum class StepRule { kBacktracking, kFixed };

struct OptimizerConfig {
  int restarts = 16;
  int max_iters = 5000;
  StepRule step_rule = StepRule::kBacktracking;
  /// Step length for StepRule::kFixed; backtracking always starts from 1.0.
  double fixed_step = 0.5;
  /// Stop once the KKT residual falls to this level.
  double tolerance = 1e-12;
  std::uint64_t seed = 0;
  int grid_resolution = 30;
  int threads = 1;
  /// Newton refinement of the KKT system restricted to the support.
  bool polish = true;

  /// Throws std::invalid_argument on out-of-range fields.
  void validate() const;
};

inline constexpr double kSupportEpsilon = 1e-8;
inline constexpr double kArmijo = 1e-4;

struct OptimizationResult {
  double value = 0.0;
  WeightVector<double> argmax;
  std::vector<Vertex> support;
  double stationarity_residual = 0.0;
  int starts_converged = 0;
};

/// Euclidean projection onto {x >= 0, sum x = 1} (sort-based, O(n log n)).
Eigen::VectorXd project_to_simplex(const Eigen::VectorXd& v);

/// Smooth objective on the simplex. The Hessian is optional; without it the
/// Newton polish differences the gradient.
struct SimplexObjective {
  std::function<double(const Eigen::VectorXd&)> value;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> gradient;
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> hessian;
};

struct AscentOptions {
  int max_iters = 5000;
  StepRule step_rule = StepRule::kBacktracking;
  double fixed_step = 0.5;
  double tolerance = 1e-12;
  bool polish = true;
};

struct AscentResult {
  Eigen::VectorXd x;
  double value = 0.0;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// KKT residual at a simplex point: max over the support of |g_i - mu| and
/// over the rest of max(0, g_i - mu), where mu = x . g.
double kkt_residual(const Eigen::VectorXd& x, const Eigen::VectorXd& grad);

/// Projected gradient ascent with Armijo backtracking (halving from 1.0),
/// followed by an optional Newton polish on the support.
AscentResult projected_gradient_ascent(const SimplexObjective& f, const Eigen::VectorXd& start,
                                       const AscentOptions& options);

SimplexObjective lagrangian_objective(const UniformHypergraph& g);

/// Multi-start maximization of λ(G, .). The value is a lower bound on λ(G),
/// never a certificate of optimality.
OptimizationResult maximize_lagrangian(const UniformHypergraph& g, const OptimizerConfig& cfg = {});

struct GridOracleResult {
  Rational value;               ///< exact max over the lattice
  std::vector<int> argmax;      ///< lattice coordinates a_i, sum N
  double as_double() const { return to_double(value); }
};

/// Max of λ(G, a/N) over all a with sum N, in exact arithmetic. Guarded to
/// n <= 8 unless `allow_large`. Working guarantee (empirical, not proven):
/// λ(G) - r^2/N <= oracle <= λ(G).
GridOracleResult grid_oracle(const UniformHypergraph& g, int resolution, bool allow_large = false);

struct StationarityReport {
  bool pass = false;
  double residual = 0.0;
  double multiplier = 0.0;        ///< r λ(G, x)
  Eigen::VectorXd residuals;      ///< per-coordinate residual
};

StationarityReport verify_stationarity(const UniformHypergraph& g, const WeightVector<double>& x, double tol);

/// Classes of the transitive closure of "L(i\j) and L(j\i) are both empty",
/// each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> symmetry_reduce(const UniformHypergraph& g);

/// Start points for maximize_lagrangian: uniform, one class-weighted start
/// per symmetry class, then seeded Dirichlet(1) draws.
std::vector<Eigen::VectorXd> restart_points(const UniformHypergraph& g, const OptimizerConfig& cfg,
                                            const std::vector<std::vector<Vertex>>& classes);

}  // namespace hyperlag
