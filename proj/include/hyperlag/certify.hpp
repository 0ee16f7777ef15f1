#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "hyperlag/closedform.hpp"
#include "hyperlag/constructions.hpp"
#include "hyperlag/hypercore.hpp"
#include "hyperlag/optimize.hpp"
#include "hyperlag/surd.hpp"

namespace hyperlag {

enum class TheoremKind { kT1, kT3 };

/// T1 is the three-part construction with constant 2/25; T3(k) the
/// (2k+1)-part construction with constant alpha_k / 6.
struct TheoremId {
  TheoremKind kind = TheoremKind::kT1;
  std::int64_t k = 0;

  static TheoremId t1() { return {TheoremKind::kT1, 0}; }
  static TheoremId t3(std::int64_t k) { return {TheoremKind::kT3, k}; }
  std::string name() const;
  /// Bound every small subgraph must respect: 2/25 or alpha_k / 6.
  Surd constant() const;
};

enum class Method { kExact, kGridRefine, kSampled };
std::string to_string(Method m);

/// pass <=> bound_found <= bound_claimed + tol and every exact check passed.
struct CaseVerdict {
  std::string case_name;
  Surd bound_claimed;
  double bound_found = 0.0;
  Method method = Method::kExact;
  double tol = 0.0;
  bool pass = false;
  std::optional<std::vector<double>> witness;
  std::vector<CheckStep> checks;
};

CaseVerdict make_verdict(std::string name, Surd claimed, double found, Method method, double tol,
                         std::vector<CheckStep> checks = {}, std::optional<std::vector<double>> witness = std::nullopt);

struct CertificateParameters {
  int s = 6;
  std::optional<int> t;
  int grid_resolution = 200;
  int refine_iters = 2000;
  int top_candidates = 100;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  double profile_tol = 1e-7;
};

struct CertificateReport {
  TheoremId theorem;
  std::vector<CaseVerdict> cases;
  long profiles_checked = 0;
  bool overall = false;
  CertificateParameters parameters;
};

/// Replaces the edges inside `part` by the star {v1, v2, vj}, 3 <= j <= |part|,
/// anchored at the two lowest labels. 3-graphs only.
UniformHypergraph reduce_star(const UniformHypergraph& m, std::vector<Vertex> part);

struct SimplexSearchResult {
  double value = 0.0;
  Eigen::VectorXd argmax;
  long grid_points = 0;
};

/// Barycentric lattice of the given resolution, then projected-gradient
/// refinement from the best `top_candidates` lattice points.
SimplexSearchResult grid_refine_maximize(const SimplexObjective& f, int dim, int resolution, int top_candidates,
                                         int refine_iters);

/// λ(a, b, c, d) for the three-part construction, as a simplex objective.
SimplexObjective theorem1_bound_objective();
/// Bound over (w1, a, b) for the (2k+1)-part construction.
SimplexObjective theorem3_bound_objective(std::int64_t k);
/// f_b2k(x0) on the 2-simplex (x0, x1); x1 is slack.
SimplexObjective b2k_objective(std::int64_t k);

/// The reduced graph N for one part-size profile: template expansion plus the
/// star on the part that received the adder.
UniformHypergraph profile_graph(const TheoremId& theorem, const std::vector<int>& sizes);

struct ProfileReport {
  long profiles = 0;
  double max_value = 0.0;
  std::vector<int> worst_profile;
  std::vector<std::vector<int>> failures;
  bool pass = false;
};

/// Every part-size profile with total at most s (head parts of T3 taken in
/// non-increasing order, since permuting them gives an isomorphic graph),
/// optimized and compared with the theorem constant.
ProfileReport enumerate_profiles_and_bound(const TheoremId& theorem, int s, double tol,
                                           const OptimizerConfig& cfg = {});

CertificateReport certify_theorem1(const CertificateParameters& params = {});
CertificateReport certify_theorem3(std::int64_t k, CertificateParameters params = {});

struct DensityGainReport {
  TheoremId theorem;
  int t = 0;
  std::optional<int> s;
  std::optional<double> c;
  std::optional<std::uint64_t> seed;
  long base_edges = 0;
  long adder_edges = 0;
  /// Adder size at which the gain is exactly zero for exact part sizes:
  /// 3 t^2 / 25 for T1, c0 t^2 for T3.
  Surd break_even_edges;
  Rational lower_bound;   ///< |E(G*)| / t^3
  Surd target;            ///< 2/25 or alpha_k / 6
  Surd margin;            ///< lower_bound - target
  Surd predicted_margin;  ///< (|E(adder)| - break_even_edges) / t^3
  bool pass = false;
};

/// Uniform-weight lower bound of G*(t) built from an explicit adder placed
/// on the adder part (V1 for T1, the tail part for T3).
DensityGainReport density_gain_with_adder(const TheoremId& theorem, int t, const UniformHypergraph& adder);

/// Same, with the adder generated by generate_sparse_adder. GeneratorFailure
/// propagates.
DensityGainReport check_blowup_density_gain(const TheoremId& theorem, int t, int s, double c, std::uint64_t seed,
                                            long max_attempts = 1000000);

}  // namespace hyperlag
