#include <gtest/gtest.h>

#include <random>

#include "hyperlag/constructions.hpp"
#include "hyperlag/closedform.hpp"
#include "test_support.hpp"

using namespace hyperlag;
using hyperlag::testing::random_hypergraph;

TEST(Theorem1Base, EdgeCountFormula) {
  for (int t : {10, 15, 20, 25, 50}) {
    const auto g = build_theorem1_base(t);
    const long expected = (2L * t * t * t - 3L * t * t) / 25;
    EXPECT_EQ(static_cast<long>(g.edge_count()), expected) << "t=" << t;
    EXPECT_EQ(g.order(), t);
  }
  EXPECT_EQ(build_theorem1_base(25).edge_count(), 1175u);
  EXPECT_THROW(build_theorem1_base(12), std::invalid_argument);
  EXPECT_THROW(build_theorem1_base(5), std::invalid_argument);
}

TEST(B2k, EdgesMeetTheCore) {
  EXPECT_EQ(build_b2k(1, 6).edge_count(), 16u);
  // C(n,3) - C(n-2k,3).
  EXPECT_EQ(build_b2k(2, 9).edge_count(), 84u - 10u);
  const auto g = build_b2k(2, 9);
  for (const auto& e : g.edges()) EXPECT_LE(e.front(), 4);
}

TEST(Patterns, Theorem1Shape) {
  const auto p = theorem1_pattern();
  EXPECT_NO_THROW(p.validate());
  EXPECT_EQ(p.parts.size(), 3u);
  EXPECT_EQ(p.part_weights[0], Surd(make_rational(2, 5)));
  EXPECT_EQ(p.part_weights[2], Surd(make_rational(1, 5)));
}

TEST(Patterns, Theorem3WeightsSumToOne) {
  for (std::int64_t k = 2; k <= 6; ++k) {
    const auto p = build_theorem3_pattern(k);
    EXPECT_NO_THROW(p.validate());
    EXPECT_EQ(p.parts.size(), static_cast<std::size_t>(2 * k + 1));
    EXPECT_EQ(p.part_weights.back(), theorem3_last_part_weight(k));
  }
}

TEST(Patterns, ValidateRejectsBadWeightsAndTemplates) {
  auto p = theorem1_pattern();
  p.part_weights[0] = Surd(make_rational(1, 2));
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = theorem1_pattern();
  p.templates.push_back({0, 1, 5});
  EXPECT_THROW(p.validate(), std::invalid_argument);
}

TEST(InstantiatePattern, SizesSumToT) {
  for (int t : {20, 57, 100}) {
    const auto inst = instantiate_pattern(build_theorem3_pattern(2), t);
    int total = 0;
    for (int s : inst.sizes) total += s;
    EXPECT_EQ(total, t);
    EXPECT_EQ(inst.graph.order(), t);
    EXPECT_EQ(inst.blocks.back().second, t);
  }
}

TEST(InstantiatePattern, EdgeCountTracksTheDeficit) {
  // |E(G(t))| ~ alpha/6 t^3 - c0 t^2 up to rounding of the part sizes.
  const std::int64_t k = 2;
  const int t = 400;
  const auto inst = instantiate_pattern(build_theorem3_pattern(k), t);
  const double predicted = alpha_k(k).to_double() / 6 * t * t * t - theorem3_c0(k).to_double() * t * t;
  EXPECT_NEAR(static_cast<double>(inst.graph.edge_count()) / predicted, 1.0, 5e-3);
}

TEST(ExpandTemplates, SmallPartsContributeNothing) {
  const auto g = expand_templates(3, {1, 2, 1}, theorem1_pattern().templates);
  // V1V2V3: 1*2*1; V1V1V2: none; V2V2V3: 1.
  EXPECT_EQ(g.edge_count(), 3u);
  const auto blocks = part_blocks({2, 0, 3});
  EXPECT_EQ(blocks[1].second, blocks[1].first - 1);
}

TEST(LocalSparsity, DetectsDenseSmallSets) {
  // Three edges inside {1,2,3,4} violate s=4 (at most 2 allowed).
  const UniformHypergraph bad(3, 6, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}});
  const auto r = check_local_sparsity(bad, 4);
  EXPECT_FALSE(r.sparse);
  EXPECT_EQ(r.witness, (std::vector<Vertex>{1, 2, 3, 4}));
  const UniformHypergraph ok(3, 6, {{1, 2, 3}, {1, 2, 4}, {3, 5, 6}});
  EXPECT_TRUE(check_local_sparsity(ok, 4).sparse);
  EXPECT_THROW(check_local_sparsity(ok, 2), std::invalid_argument);
}

TEST(LocalSparsity, FastAgreesWithNaive) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> pick_n(4, 12), pick_s(3, 6);
  std::uniform_real_distribution<double> pick_p(0.01, 0.25);
  int violations = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = pick_n(rng);
    const int s = pick_s(rng);
    const auto g = random_hypergraph(rng, 3, n, pick_p(rng));
    const auto fast = check_local_sparsity(g, s);
    const auto naive = check_local_sparsity_naive(g, s);
    EXPECT_EQ(fast.sparse, naive.sparse) << "trial " << trial << " n=" << n << " s=" << s;
    if (!fast.sparse) {
      ++violations;
      // The fast witness must itself be a violation.
      const auto sub = induced_subgraph(g, fast.witness);
      const int size = static_cast<int>(fast.witness.size());
      EXPECT_LE(size, s);
      EXPECT_GT(static_cast<int>(sub.graph.edge_count()), size - 2);
    }
  }
  EXPECT_GT(violations, 10);
  EXPECT_LT(violations, 90);
}

TEST(SparseAdder, ReachesTargetAndPassesChecker) {
  const SparseAdderParams p{4, 0.1, 30, 3, 0, 1000000};
  EXPECT_EQ(p.target_edges(), 90);
  const auto a = generate_sparse_adder(p);
  EXPECT_GE(a.edge_count(), 90u);
  EXPECT_TRUE(check_local_sparsity(a, 4).sparse);
}

TEST(SparseAdder, DeterministicPerSeed) {
  SparseAdderParams p{5, 0.1, 25, 3, 7, 1000000};
  const auto a = generate_sparse_adder(p);
  EXPECT_EQ(a, generate_sparse_adder(p));
  p.seed = 8;
  EXPECT_NE(a, generate_sparse_adder(p));
  EXPECT_TRUE(check_local_sparsity(a, 5).sparse);
}

TEST(SparseAdder, FailsLoudly) {
  const SparseAdderParams p{4, 5.0, 10, 3, 0, 1000};
  EXPECT_THROW(generate_sparse_adder(p), GeneratorFailure);
  EXPECT_THROW(generate_sparse_adder({2, 0.1, 10, 3, 0, 10}), std::invalid_argument);
  EXPECT_THROW(generate_sparse_adder({4, -1.0, 10, 3, 0, 10}), std::invalid_argument);
}

TEST(AssembleGStar, MapsAdderOntoThePart) {
  const auto base = build_theorem1_base(10);
  const UniformHypergraph adder(3, 4, {{1, 2, 3}, {2, 3, 4}});
  const auto g = assemble_gstar(base, adder, {1, 2, 3, 4});
  EXPECT_EQ(g.edge_count(), base.edge_count() + 2);
  EXPECT_TRUE(g.contains({2, 3, 4}));
  EXPECT_THROW(assemble_gstar(base, adder, {1, 2, 3}), std::invalid_argument);
  // V2V2V3 edge {5,6,9} already exists in base.
  EXPECT_THROW(assemble_gstar(base, UniformHypergraph(3, 3, {{1, 2, 3}}), {5, 6, 9}), std::invalid_argument);
}

TEST(GStar, MetadataDescribesTheBuild) {
  const auto g1 = build_gstar_theorem1(25, 4, 0.1, 3);
  EXPECT_EQ(g1.metadata.kind, "gstar-t1");
  EXPECT_EQ(g1.metadata.parts.size(), 3u);
  EXPECT_EQ(g1.graph.edge_count(), g1.base.edge_count() + g1.adder.edge_count());
  EXPECT_EQ(g1.target_part.size(), 10u);
  const auto g3 = build_gstar_theorem3(2, 60, 4, 0.1, 3);
  EXPECT_EQ(g3.metadata.kind, "gstar-t3");
  EXPECT_EQ(g3.metadata.parts.size(), 5u);
  EXPECT_EQ(g3.target_part.back(), 60);
}
