#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hyperlag/closedform.hpp"
#include "hyperlag/polynomial.hpp"
#include "hyperlag/surd.hpp"

using namespace hyperlag;

// ---------------------------------------------------------------------------
// Surd

TEST(SquareFree, Decomposition) {
  EXPECT_EQ(square_free_decomposition(12), (std::pair<std::int64_t, std::int64_t>{2, 3}));
  EXPECT_EQ(square_free_decomposition(165), (std::pair<std::int64_t, std::int64_t>{1, 165}));
  EXPECT_EQ(square_free_decomposition(49), (std::pair<std::int64_t, std::int64_t>{7, 1}));
  EXPECT_TRUE(is_perfect_square(144));
  EXPECT_FALSE(is_perfect_square(143));
}

TEST(Surd, SqrtNormalizesTheRadicand) {
  const Surd s = Surd::sqrt(make_rational(12, 49));  // 2 sqrt(3) / 7
  EXPECT_EQ(s.radicand(), 3);
  EXPECT_EQ(s.surd_part(), make_rational(2, 7));
  EXPECT_TRUE(Surd::sqrt(make_rational(9, 4)).is_rational());
  EXPECT_EQ(Surd::sqrt(make_rational(9, 4)), Surd(make_rational(3, 2)));
  EXPECT_THROW(Surd::sqrt(make_rational(-1)), std::domain_error);
  EXPECT_THROW(Surd(Rational(1), Rational(1), 12), std::invalid_argument);
}

TEST(Surd, MixedRadicandsThrow) {
  EXPECT_THROW(Surd::sqrt(2) + Surd::sqrt(3), std::domain_error);
  EXPECT_NO_THROW(Surd::sqrt(2) + Surd(1));
}

class SurdField : public ::testing::TestWithParam<std::int64_t> {};

TEST_P(SurdField, FieldLawsAndOrdering) {
  const std::int64_t d = GetParam();
  std::mt19937_64 rng(static_cast<std::uint64_t>(d));
  std::uniform_int_distribution<int> num(-30, 30), den(1, 12);
  auto draw = [&] { return Surd(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)), d); };
  for (int trial = 0; trial < 200; ++trial) {
    const Surd a = draw(), b = draw(), c = draw();
    EXPECT_EQ((a + b) - b, a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    if (b.sign() != 0) { EXPECT_EQ((a * b) / b, a); }
    EXPECT_TRUE((a * a.conjugate()).is_rational());
    EXPECT_EQ((a * a.conjugate()).rational_part(), a.norm());
    // Exact order agrees with floating point whenever the gap is visible.
    const double gap = a.to_double() - b.to_double();
    if (std::abs(gap) > 1e-9) { EXPECT_EQ(a < b, gap < 0); }
    EXPECT_EQ(a.sign(), a.to_double() > 0 ? 1 : (a.to_double() < 0 ? -1 : 0));
  }
}

INSTANTIATE_TEST_SUITE_P(NonSquareRadicands, SurdField, ::testing::Values(3, 7, 11, 15, 19));

TEST(Surd, SignOfNearCancellation) {
  // 99 - 70 sqrt(2) ~ 0.00505 > 0, and 70 sqrt(2) - 99 < 0.
  const Surd s(Rational(99), Rational(-70), 2);
  EXPECT_EQ(s.sign(), 1);
  EXPECT_EQ((-s).sign(), -1);
  EXPECT_EQ(pow(Surd::sqrt(7), 2), Surd(7));
}

TEST(Surd, KeyInequalities) {
  EXPECT_GT(Surd::sqrt(165) / Surd(18), Surd(make_rational(11, 16)));
  EXPECT_GT(Surd::sqrt(make_rational(71, 144)), Surd(make_rational(11, 16)));
  EXPECT_LT(Surd(make_rational(7)) - Surd::sqrt(5), Surd(make_rational(5)));
}

// ---------------------------------------------------------------------------
// RationalPolynomial

namespace {

RationalPolynomial random_poly(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  std::vector<Rational> c;
  for (int i = 0; i <= degree; ++i) c.push_back(make_rational(num(rng), den(rng)));
  return RationalPolynomial(c);
}

}  // namespace

TEST(RationalPolynomial, MultiplicationRoundTripsThroughEvaluation) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_poly(rng, trial % 5);
    const auto q = random_poly(rng, (trial / 5) % 4);
    const auto pq = p * q;
    if (!p.is_zero() && !q.is_zero()) { EXPECT_EQ(pq.degree(), p.degree() + q.degree()); }
    for (int i = -3; i <= 3; ++i) {
      const Rational x = make_rational(i, 3);
      EXPECT_EQ(pq(x), p(x) * q(x));
      EXPECT_EQ((p + q)(x), p(x) + q(x));
      EXPECT_EQ(p.compose(q)(x), p(q(x)));
    }
    EXPECT_EQ(pq.derivative(), p.derivative() * q + p * q.derivative());
  }
}

TEST(RationalPolynomial, TrimsAndPrints) {
  const RationalPolynomial p({Rational(1), Rational(0), Rational(0)});
  EXPECT_EQ(p.degree(), 0);
  EXPECT_EQ(RationalPolynomial().degree(), -1);
  EXPECT_EQ((p - p).degree(), -1);
  const auto x = RationalPolynomial::variable();
  EXPECT_EQ(pow(x + RationalPolynomial::constant(1), 2),
            RationalPolynomial({Rational(1), Rational(2), Rational(1)}));
  EXPECT_FALSE((x * x).to_string("b").empty());
}

TEST(RationalPolynomial, EvaluatesInDoubleAndSurd) {
  const auto p = RationalPolynomial({Rational(-2), Rational(0), Rational(1)});  // x^2 - 2
  EXPECT_EQ(p(Surd::sqrt(2)), Surd(0));
  EXPECT_NEAR(p(1.5), 0.25, 1e-15);
}

// ---------------------------------------------------------------------------
// Closed forms

TEST(AlphaK, KnownValues) {
  const Surd a2 = alpha_k(2);
  EXPECT_EQ(a2.rational_part(), make_rational(20, 81));
  EXPECT_EQ(a2.surd_part(), make_rational(14, 81));
  EXPECT_EQ(a2.radicand(), 7);
  EXPECT_NEAR(a2.to_double(), 0.704204, 1e-6);
  EXPECT_EQ(alpha_k(1), Surd::sqrt(3) / Surd(3));
  EXPECT_THROW(alpha_k(0), std::invalid_argument);
}

TEST(AlphaK, IncreasesTowardOne) {
  for (std::int64_t k = 1; k < 12; ++k) {
    // Consecutive radicands differ, so compare in floating point.
    EXPECT_LT(alpha_k(k).to_double(), alpha_k(k + 1).to_double());
    EXPECT_LT(alpha_k(k + 1), Surd(1));
  }
}

TEST(FB2k, MaximumChainPassesForSmallK) {
  for (std::int64_t k = 1; k <= 8; ++k) {
    const auto steps = verify_b2k_maximum(k);
    for (const auto& s : steps) EXPECT_TRUE(s.pass) << "k=" << k << " " << s.name << ": " << s.detail;
  }
}

TEST(FB2k, ValueAtAstarIsAlphaOverSix) {
  for (std::int64_t k = 1; k <= 6; ++k) {
    EXPECT_EQ(f_b2k(astar_weight(k), k), alpha_k(k) / Surd(6)) << "k=" << k;
    EXPECT_EQ(f_b2k_prime(astar_weight(k), k), Surd(0)) << "k=" << k;
  }
}

TEST(FB2k, PolynomialMatchesTemplate) {
  for (std::int64_t k = 1; k <= 4; ++k) {
    for (int i = 0; i <= 6; ++i) {
      const Rational a = make_rational(i, 6);
      EXPECT_EQ(f_b2k_polynomial(k)(a), f_b2k(a, k));
      EXPECT_EQ(f_b2k_prime_polynomial(k), f_b2k_polynomial(k).derivative());
    }
  }
}

TEST(NonSquare, BothRoutesAgree) {
  for (std::int64_t k = 1; k <= 200; ++k) {
    const auto routes = non_square_4k_minus_1_routes(k);
    EXPECT_TRUE(routes.by_mod4 && routes.by_isqrt) << "k=" << k;
    EXPECT_TRUE(is_non_square_4k_minus_1(k));
  }
}

TEST(Theorem1, BoundPolynomialValues) {
  const Rational two5 = make_rational(2, 5);
  EXPECT_EQ(theorem1_bound_poly(Rational(0), two5, two5, make_rational(1, 5)), make_rational(2, 25));
  EXPECT_THROW(theorem1_bound_poly(0.5, 0.5, 0.5, 0.0), std::invalid_argument);
  EXPECT_THROW(theorem1_bound_poly(-0.1, 0.5, 0.3, 0.3), std::invalid_argument);
}

TEST(Theorem1, QuarticIdentityCoefficientForCoefficient) {
  const auto report = verify_theorem1_quartic_identity();
  EXPECT_TRUE(report.identity);
  EXPECT_EQ(report.lhs, report.rhs);
  const auto b = RationalPolynomial::variable();
  auto c = [](std::int64_t n) { return RationalPolynomial::constant(Rational(n)); };
  const auto lhs = pow(c(8) * b - c(4), 2) * (c(19) * b * b - c(10) * b + c(1)) - pow(b * b - c(10) * b + c(4), 2);
  const auto rhs = c(9) * b * (c(5) * b - c(2)) * (c(9) * b - c(4)) * (c(3) * b - c(2));
  EXPECT_EQ(lhs, rhs);
  EXPECT_EQ(report.roots.size(), 4u);
  EXPECT_TRUE(report.all_roots_infeasible);
}

TEST(Theorem1, D0CaseSteps) {
  for (const auto& s : verify_theorem1_d0_case()) EXPECT_TRUE(s.pass) << s.name << ": " << s.detail;
  EXPECT_EQ(theorem1_d0_critical_point(), (Surd(7) - Surd::sqrt(5)) / Surd(11));
  EXPECT_LT(theorem1_d0_cubic(theorem1_d0_critical_point().to_double()), 0.076);
}

TEST(Theorem3, EndpointIdentityIsOneSixteenth) {
  const Rational half = make_rational(1, 2);
  EXPECT_EQ(theorem3_cubic_tail()(half), make_rational(1, 16));
  EXPECT_EQ(half * (1 - half) * (1 - half) / 2, make_rational(1, 16));
}

TEST(Theorem3, BoundChainPasses) {
  for (std::int64_t k = 2; k <= 8; ++k) {
    const auto chain = theorem3_bound_chain(k);
    for (const auto& s : chain.steps) EXPECT_TRUE(s.pass) << "k=" << k << " " << s.name << ": " << s.detail;
    EXPECT_TRUE(chain.pass);
    EXPECT_EQ(chain.g_half, f_b2k(make_rational(1, 2), k));
  }
  EXPECT_THROW(theorem3_bound_chain(1), std::invalid_argument);
}

TEST(Theorem3, DeficitClosedForms) {
  for (std::int64_t k = 2; k <= 7; ++k) {
    EXPECT_EQ(theorem3_c0(k), theorem3_c0_closed_form(k)) << "k=" << k;
    EXPECT_EQ(theorem3_c1(k), theorem3_c1_closed_form(k)) << "k=" << k;
    EXPECT_GT(theorem3_c1(k), Surd(0));
    const Surd total = Surd(2 * k) * theorem3_head_part_weight(k) + theorem3_last_part_weight(k);
    EXPECT_EQ(total, Surd(1));
  }
}

TEST(Theorem3, BoundAtZeroAnchorIsFB2k) {
  for (int i = 0; i <= 10; ++i) {
    const Rational w = make_rational(i, 10);
    EXPECT_EQ(theorem3_bound(w, Rational(0), 3), f_b2k(w, 3));
  }
}
