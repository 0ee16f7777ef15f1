#include <gtest/gtest.h>

#include <random>

#include "hyperlag/optimize.hpp"
#include "test_support.hpp"

using namespace hyperlag;
using hyperlag::testing::random_hypergraph;
using hyperlag::testing::random_simplex_point;

namespace {

UniformHypergraph complete(int r, int n) {
  std::mt19937_64 rng(0);
  return random_hypergraph(rng, r, n, 1.0);
}

}  // namespace

TEST(ProjectToSimplex, LandsOnTheSimplexAndFixesItsPoints) {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> noise(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    Eigen::VectorXd v(6);
    for (int i = 0; i < 6; ++i) v[i] = noise(rng);
    const Eigen::VectorXd p = project_to_simplex(v);
    EXPECT_NEAR(p.sum(), 1.0, 1e-12);
    EXPECT_GE(p.minCoeff(), 0.0);
    // Optimality: (v - p) . (q - p) <= 0 for any simplex point q.
    const Eigen::VectorXd q = random_simplex_point(rng, 6);
    EXPECT_LE((v - p).dot(q - p), 1e-12);
    EXPECT_TRUE(project_to_simplex(p).isApprox(p, 1e-12));
  }
}

TEST(MaximizeLagrangian, KnownValues) {
  EXPECT_NEAR(maximize_lagrangian(complete(3, 5)).value, 0.08, 1e-12);
  EXPECT_NEAR(maximize_lagrangian(complete(3, 4)).value, 1.0 / 16, 1e-12);
  EXPECT_NEAR(maximize_lagrangian(UniformHypergraph(3, 3, {{1, 2, 3}})).value, 1.0 / 27, 1e-12);
  // K_4^{3-}: three edges on four vertices, λ = 4/81 at (1/3, 2/9, 2/9, 2/9).
  const auto r = maximize_lagrangian(UniformHypergraph(3, 4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}}));
  EXPECT_NEAR(r.value, 4.0 / 81, 1e-12);
  EXPECT_NEAR(r.argmax.weight(1), 1.0 / 3, 1e-8);
}

TEST(MaximizeLagrangian, EmptyGraphIsZero) {
  const auto r = maximize_lagrangian(UniformHypergraph(3, 5));
  EXPECT_EQ(r.value, 0.0);
  EXPECT_DOUBLE_EQ(r.argmax.weight(3), 0.2);
}

TEST(MaximizeLagrangian, DeterministicAcrossSeedsAndThreads) {
  std::mt19937_64 rng(32);
  const auto g = random_hypergraph(rng, 3, 7, 0.4);
  OptimizerConfig cfg;
  cfg.seed = 99;
  const auto a = maximize_lagrangian(g, cfg);
  const auto b = maximize_lagrangian(g, cfg);
  cfg.threads = 4;
  const auto c = maximize_lagrangian(g, cfg);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.argmax.values(), b.argmax.values());
  EXPECT_EQ(a.value, c.value);
  EXPECT_EQ(a.support, c.support);
}

TEST(MaximizeLagrangian, FixedStepRuleAlsoConverges) {
  OptimizerConfig cfg;
  cfg.step_rule = StepRule::kFixed;
  cfg.fixed_step = 0.5;
  EXPECT_NEAR(maximize_lagrangian(complete(3, 5), cfg).value, 0.08, 1e-9);
}

TEST(OptimizerConfig, ValidatesRanges) {
  OptimizerConfig cfg;
  cfg.restarts = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.threads = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.tolerance = -1;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(FactSuite, BlowupInvariance) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + trial % 4;
    const auto g = random_hypergraph(rng, 3, n, 0.5);
    const int m = 2 + trial % 2;
    const auto b = blowup(g, BlowupSpec::constant(n, m));
    const double lg = maximize_lagrangian(g).value;
    const double lb = maximize_lagrangian(b).value;
    EXPECT_NEAR(lg, lb, 2e-6) << "trial " << trial;
  }
}

TEST(FactSuite, MonotoneUnderEdgeAddition) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 30; ++trial) {
    const auto small = random_hypergraph(rng, 3, 6, 0.3);
    auto edges = small.edges();
    const auto extra = random_hypergraph(rng, 3, 6, 0.2).edges();
    edges.insert(edges.end(), extra.begin(), extra.end());
    const UniformHypergraph big(3, 6, edges);
    EXPECT_LE(maximize_lagrangian(small).value, maximize_lagrangian(big).value + 1e-12);
  }
}

TEST(GridOracle, ExactLatticeMaximum) {
  // K_5^3 on the lattice of resolution 10: uniform point (2,2,2,2,2) is on it.
  const auto r = grid_oracle(complete(3, 5), 10);
  EXPECT_EQ(r.value, make_rational(2, 25));
  EXPECT_EQ(r.argmax, (std::vector<int>{2, 2, 2, 2, 2}));
  EXPECT_THROW(grid_oracle(complete(3, 9), 5), std::invalid_argument);
  EXPECT_NO_THROW(grid_oracle(UniformHypergraph(3, 9, {{1, 2, 3}}), 3, true));
}

TEST(GridOracle, AgreesWithOptimizer) {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + trial % 4;
    const auto g = random_hypergraph(rng, 3, n, 0.5);
    const auto opt = maximize_lagrangian(g);
    const auto oracle = grid_oracle(g, 30);
    EXPECT_LE(oracle.as_double(), opt.value + 1e-12) << "trial " << trial;
    EXPECT_LE(opt.value - oracle.as_double(), 9.0 / 30 + 1e-9) << "trial " << trial;
    if (!g.empty()) { EXPECT_TRUE(verify_stationarity(g, opt.argmax, 1e-6).pass) << "trial " << trial; }
  }
}

TEST(Stationarity, DetectsNonStationaryPoints) {
  const auto g = complete(3, 5);
  Eigen::VectorXd x(5);
  x << 0.4, 0.3, 0.1, 0.1, 0.1;
  const auto report = verify_stationarity(g, WeightVector<double>(x), 1e-6);
  EXPECT_FALSE(report.pass);
  EXPECT_GT(report.residual, 1e-3);
  const auto good = verify_stationarity(g, WeightVector<double>::uniform(5), 1e-12);
  EXPECT_TRUE(good.pass);
  EXPECT_NEAR(good.multiplier, 3 * 0.08, 1e-15);
}

TEST(SymmetryReduce, TwinClasses) {
  EXPECT_EQ(symmetry_reduce(complete(3, 4)).size(), 1u);
  // Blow-up classes are twins.
  const auto b = blowup(UniformHypergraph(3, 3, {{1, 2, 3}}), BlowupSpec({2, 2, 3}));
  const auto classes = symmetry_reduce(b);
  ASSERT_EQ(classes.size(), 3u);
  EXPECT_EQ(classes[2], (std::vector<Vertex>{5, 6, 7}));
}

TEST(RestartPoints, UniformFirstThenSeeded) {
  const auto g = blowup(UniformHypergraph(3, 3, {{1, 2, 3}}), BlowupSpec({2, 2, 2}));
  OptimizerConfig cfg;
  cfg.restarts = 8;
  const auto classes = symmetry_reduce(g);
  const auto starts = restart_points(g, cfg, classes);
  ASSERT_EQ(starts.size(), 8u);
  EXPECT_TRUE(starts[0].isApprox(Eigen::VectorXd::Constant(6, 1.0 / 6)));
  for (const auto& s : starts) EXPECT_NEAR(s.sum(), 1.0, 1e-12);
  EXPECT_EQ(restart_points(g, cfg, classes), starts);
  cfg.seed = 1;
  EXPECT_NE(restart_points(g, cfg, classes).back(), starts.back());
}

TEST(ProjectedGradientAscent, ReportsConvergence) {
  const auto g = complete(3, 5);
  AscentOptions options;
  Eigen::VectorXd start(5);
  start << 0.5, 0.2, 0.1, 0.1, 0.1;
  const auto r = projected_gradient_ascent(lagrangian_objective(g), start, options);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, 0.08, 1e-12);
  EXPECT_LE(r.residual, 1e-10);
}
