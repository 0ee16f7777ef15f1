// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "hyperlag/certify.hpp"
#include "hyperlag/closedform.hpp"
#include "hyperlag/constructions.hpp"
#include "hyperlag/optimize.hpp"
#include "test_support.hpp"

using namespace hyperlag;
using hyperlag::testing::random_hypergraph;
using hyperlag::testing::random_rational_point;
using hyperlag::testing::random_simplex_point;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Outcome counts_theorem1() {
  const auto start = Clock::now();
  std::ostringstream detail;
  bool pass = true;
  for (int t : {10, 15, 20, 25, 50}) {
    const Rational expected = make_rational(2 * t * t * t, 25) - make_rational(3 * t * t, 25);
    const Rational got(static_cast<long>(build_theorem1_base(t).edge_count()));
    pass = pass && got == expected;
    detail << "t=" << t << ":" << got << " ";
  }
  const double elapsed = seconds_since(start);
  detail << "in " << elapsed << "s";
  return {pass && elapsed < 1.0, detail.str()};
}

Outcome bound_polynomial_optimum() {
  const auto start = Clock::now();
  const auto r = grid_refine_maximize(theorem1_bound_objective(), 4, 200, 100, 2000);
  const double elapsed = seconds_since(start);
  double dist = 0.0;
  const double expected[4] = {0.0, 0.4, 0.4, 0.2};
  for (int i = 0; i < 4; ++i) dist = std::max(dist, std::abs(r.argmax[i] - expected[i]));
  std::ostringstream detail;
  detail.precision(15);
  detail << "max " << r.value << ", argmax distance " << dist << ", " << elapsed << "s";
  return {std::abs(r.value - 0.08) <= 1e-9 && dist <= 1e-4 && elapsed < 30.0, detail.str()};
}

Outcome quartic_identity() {
  const auto b = RationalPolynomial::variable();
  auto c = [](std::int64_t n) { return RationalPolynomial::constant(Rational(n)); };
  const auto lhs = pow(c(8) * b - c(4), 2) * (c(19) * b * b - c(10) * b + c(1)) - pow(b * b - c(10) * b + c(4), 2);
  const auto rhs = c(9) * b * (c(5) * b - c(2)) * (c(9) * b - c(4)) * (c(3) * b - c(2));
  const auto report = verify_theorem1_quartic_identity();
  return {lhs == rhs && report.identity && report.all_roots_infeasible, lhs.to_string("b")};
}

Outcome alpha_cross_check() {
  const auto start = Clock::now();
  std::ostringstream detail;
  bool pass = true;
  for (std::int64_t k = 2; k <= 6; ++k) {
    const auto r = grid_refine_maximize(b2k_objective(k), 2, 1000, 10, 2000);
    const double gap = std::abs(6 * r.value - alpha_k(k).to_double());
    const double where = std::abs(r.argmax[0] - astar_weight(k).to_double());
    pass = pass && gap <= 1e-10 && where <= 1e-8;
    detail << "k=" << k << " gap " << gap << " argmax " << where << "; ";
  }
  const double elapsed = seconds_since(start);
  detail << elapsed << "s";
  return {pass && elapsed < 5.0, detail.str()};
}

Outcome endpoint_identity() {
  const Rational w = make_rational(1, 2);
  const Rational value = make_rational(11, 54) * w * w * w - make_rational(5, 9) * w * w + make_rational(5, 18) * w +
                         make_rational(1, 27);
  return {value == make_rational(1, 16) && theorem3_cubic_tail()(w) == value, to_fraction_string(value)};
}

Outcome theorem3_certification() {
  std::ostringstream detail;
  bool pass = true;
  for (std::int64_t k = 2; k <= 5; ++k) {
    const auto start = Clock::now();
    CertificateParameters p;
    p.tol = 1e-8;
    const auto report = certify_theorem3(k, p);
    const double elapsed = seconds_since(start);
    double global = 0.0;
    for (const auto& v : report.cases)
      if (v.case_name == "global") global = v.bound_found;
    const bool ok = report.overall && global <= alpha_k(k).to_double() / 6 + 1e-8 && elapsed < 60.0;
    pass = pass && ok;
    detail << "k=" << k << (ok ? " ok " : " FAILED ") << elapsed << "s; ";
  }
  // The k = 2 surd inequality quoted alongside the chain.
  pass = pass && Surd::sqrt(165) / Surd(18) > Surd(make_rational(11, 16));
  return {pass, detail.str()};
}

Outcome sparse_adder() {
  const auto adder = generate_sparse_adder({4, 0.1, 30, 3, 0, 1000000});
  bool pass = adder.edge_count() >= 90 && check_local_sparsity(adder, 4).sparse;
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> pick_n(4, 12), pick_s(3, 6);
  std::uniform_real_distribution<double> pick_p(0.01, 0.25);
  int agree = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int s = pick_s(rng);
    const auto g = random_hypergraph(rng, 3, pick_n(rng), pick_p(rng));
    agree += check_local_sparsity(g, s).sparse == check_local_sparsity_naive(g, s).sparse ? 1 : 0;
  }
  pass = pass && agree == 100;
  return {pass, std::to_string(adder.edge_count()) + " adder edges, checkers agree on " + std::to_string(agree) + "/100"};
}

Outcome fact_suite() {
  std::mt19937_64 rng(8);
  bool gradient = true, euler = true, blowup_ok = true, monotone = true;
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + trial % 4;
    const auto g = random_hypergraph(rng, 3, n, 0.5);
    const Eigen::VectorXd x = random_simplex_point(rng, n);
    const Eigen::VectorXd grad = lagrangian_gradient(g, x);
    for (int i = 0; i < n; ++i) {
      Eigen::VectorXd up = x, down = x;
      up[i] += 1e-6;
      down[i] -= 1e-6;
      const double fd = (lagrangian_value(g, up) - lagrangian_value(g, down)) / 2e-6;
      gradient = gradient && std::abs(fd - grad[i]) <= 1e-5 * std::max(1.0, std::abs(grad[i]));
    }
    const VectorXq q = random_rational_point(rng, n, 13);
    const VectorXq qgrad = lagrangian_gradient(g, q);
    euler = euler && q.dot(qgrad) == 3 * lagrangian_value(g, q);
    const int m = 2 + trial % 2;
    const double lg = maximize_lagrangian(g).value;
    blowup_ok = blowup_ok && std::abs(lg - maximize_lagrangian(blowup(g, BlowupSpec::constant(n, m))).value) <= 2e-6;
    auto edges = g.edges();
    const auto extra = random_hypergraph(rng, 3, n, 0.3).edges();
    edges.insert(edges.end(), extra.begin(), extra.end());
    monotone = monotone && lg <= maximize_lagrangian(UniformHypergraph(3, n, edges)).value + 1e-12;
  }
  std::ostringstream detail;
  detail << "gradient " << gradient << ", euler " << euler << ", blow-up " << blowup_ok << ", monotone " << monotone;
  return {gradient && euler && blowup_ok && monotone, detail.str()};
}

Outcome density_gain() {
  std::vector<Edge> edges;
  for (Vertex a = 1; a <= 10; ++a)
    for (Vertex b = a + 1; b <= 10; ++b)
      for (Vertex c = b + 1; c <= 10; ++c)
        if (edges.size() < 100) edges.push_back({a, b, c});
  const auto r = density_gain_with_adder(TheoremId::t1(), 25, UniformHypergraph(3, 10, edges));
  const bool pass = r.lower_bound == make_rational(1275, 15625) &&
                    r.lower_bound == make_rational(2, 25) + make_rational(1, 25 * 25) && r.pass;
  return {pass, "lower bound " + to_fraction_string(r.lower_bound)};
}

Outcome oracle_equivalence() {
  std::mt19937_64 rng(10);
  std::uniform_int_distribution<int> pick_n(3, 6);
  std::uniform_real_distribution<double> pick_p(0.2, 0.9);
  double worst_gap = 0.0;
  bool pass = true;
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = random_hypergraph(rng, 3, pick_n(rng), pick_p(rng));
    const auto opt = maximize_lagrangian(g);
    const double oracle = grid_oracle(g, 30).as_double();
    const double gap = std::abs(opt.value - oracle);
    worst_gap = std::max(worst_gap, gap);
    pass = pass && gap <= 9.0 / 30 + 1e-9 && oracle <= opt.value + 1e-12;
    if (!g.empty()) pass = pass && verify_stationarity(g, opt.argmax, 1e-6).pass;
  }
  return {pass, "worst gap " + std::to_string(worst_gap)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 theorem-1 construction counts", counts_theorem1},
      {"2 bound-polynomial optimum", bound_polynomial_optimum},
      {"3 quartic identity", quartic_identity},
      {"4 alpha_k cross-check", alpha_cross_check},
      {"5 endpoint identity", endpoint_identity},
      {"6 theorem-3 certification", theorem3_certification},
      {"7 sparse adder", sparse_adder},
      {"8 fact suite", fact_suite},
      {"9 density gain", density_gain},
      {"10 oracle equivalence", oracle_equivalence},
  };
  bool all = true;
  for (const auto& [name, run] : criteria) {
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    all = all && outcome.pass;
    std::cout << (outcome.pass ? "PASS " : "FAIL ") << name << " -- " << outcome.detail << std::endl;
  }
  return all ? 0 : 1;
}
