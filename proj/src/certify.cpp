#include "hyperlag/certify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "hyperlag/polynomial.hpp"

namespace hyperlag {

namespace {

std::string describe(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

CheckStep check(std::string name, bool pass, std::string detail = {}) {
  return {std::move(name), pass, std::move(detail)};
}

void append(std::vector<CheckStep>& out, const std::vector<CheckStep>& more, const std::string& prefix = {}) {
  for (const auto& step : more) out.push_back({prefix + step.name, step.pass, step.detail});
}

std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

/// Exact Gauss-Jordan elimination; throws if the matrix is singular.
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::logic_error("singular linear system");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational factor = a[row][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[row][j] -= factor * a[col][j];
      b[row] -= factor * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

/// Max of p over [0, 1] from its complete list of critical points. Checks
/// that every candidate is a root of p' and that p' has no other roots.
struct UnivariateMax {
  Rational value;
  Rational at;
  std::vector<CheckStep> checks;
};

UnivariateMax exact_max_on_unit_interval(const RationalPolynomial& p, const std::vector<Rational>& critical,
                                         const std::string& label) {
  const RationalPolynomial dp = p.derivative();
  UnivariateMax out;
  bool roots = true;
  for (const auto& c : critical) roots = roots && dp(c) == 0;
  out.checks.push_back(check(label + "_critical_points", roots && dp.degree() == static_cast<int>(critical.size()),
                             "d/dx " + p.to_string("x") + " = " + dp.to_string("x")));
  std::vector<Rational> candidates = critical;
  candidates.push_back(Rational(0));
  candidates.push_back(Rational(1));
  out.value = p(candidates.front());
  out.at = candidates.front();
  for (const auto& c : candidates) {
    if (c < 0 || c > 1) continue;
    const Rational v = p(c);
    if (v > out.value) {
      out.value = v;
      out.at = c;
    }
  }
  return out;
}

/// f restricted to the face where only the `keep` coordinates are non-zero.
SimplexObjective face_objective(const SimplexObjective& f, int full_dim, std::vector<int> keep) {
  auto embed = [full_dim, keep](const Eigen::VectorXd& y) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(full_dim);
    for (std::size_t i = 0; i < keep.size(); ++i) x[keep[i]] = y[static_cast<Eigen::Index>(i)];
    return x;
  };
  SimplexObjective face;
  face.value = [f, embed](const Eigen::VectorXd& y) { return f.value(embed(y)); };
  face.gradient = [f, embed, keep](const Eigen::VectorXd& y) {
    const Eigen::VectorXd g = f.gradient(embed(y));
    Eigen::VectorXd out(static_cast<Eigen::Index>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i) out[static_cast<Eigen::Index>(i)] = g[keep[i]];
    return out;
  };
  if (f.hessian) {
    face.hessian = [f, embed, keep](const Eigen::VectorXd& y) {
      const Eigen::MatrixXd h = f.hessian(embed(y));
      const auto m = static_cast<Eigen::Index>(keep.size());
      Eigen::MatrixXd out(m, m);
      for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < m; ++j) out(i, j) = h(keep[i], keep[j]);
      return out;
    };
  }
  return face;
}

/// Calls visit(counts) for every composition of `total` into `dim` parts.
void for_each_composition(int dim, int total, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> counts(static_cast<std::size_t>(dim), 0);
  std::function<void(int, int)> rec = [&](int index, int remaining) {
    if (index == dim - 1) {
      counts[static_cast<std::size_t>(index)] = remaining;
      visit(counts);
      return;
    }
    for (int c = 0; c <= remaining; ++c) {
      counts[static_cast<std::size_t>(index)] = c;
      rec(index + 1, remaining - c);
    }
  };
  rec(0, total);
}

std::vector<Vertex> block_members(std::pair<Vertex, Vertex> block) {
  std::vector<Vertex> out;
  for (Vertex v = block.first; v <= block.second; ++v) out.push_back(v);
  return out;
}

double sup_distance(const Eigen::VectorXd& x, const std::vector<double>& target) {
  double d = 0.0;
  for (std::size_t i = 0; i < target.size(); ++i) d = std::max(d, std::abs(x[static_cast<Eigen::Index>(i)] - target[i]));
  return d;
}

CaseVerdict profiles_verdict(const TheoremId& theorem, const CertificateParameters& params, long& profiles_checked) {
  OptimizerConfig cfg;
  cfg.seed = params.seed;
  const ProfileReport report = enumerate_profiles_and_bound(theorem, params.s, params.profile_tol, cfg);
  profiles_checked = report.profiles;
  std::ostringstream worst;
  for (std::size_t i = 0; i < report.worst_profile.size(); ++i) worst << (i ? "," : "") << report.worst_profile[i];
  std::vector<CheckStep> checks{check("no_profile_exceeds_constant", report.failures.empty(),
                                      std::to_string(report.profiles) + " profiles with total <= " +
                                          std::to_string(params.s) + ", worst (" + worst.str() + ")")};
  return make_verdict("profiles", theorem.constant(), report.max_value, Method::kSampled, params.profile_tol,
                      std::move(checks));
}

}  // namespace

std::string TheoremId::name() const {
  return kind == TheoremKind::kT1 ? std::string("T1") : "T3(k=" + std::to_string(k) + ")";
}

Surd TheoremId::constant() const {
  if (kind == TheoremKind::kT1) return Surd(make_rational(2, 25));
  return alpha_k(k) / Surd(6);
}

std::string to_string(Method m) {
  switch (m) {
    case Method::kExact:
      return "exact";
    case Method::kGridRefine:
      return "grid+refine";
    case Method::kSampled:
      return "sampled";
  }
  return "unknown";
}

CaseVerdict make_verdict(std::string name, Surd claimed, double found, Method method, double tol,
                         std::vector<CheckStep> checks, std::optional<std::vector<double>> witness) {
  CaseVerdict v;
  v.case_name = std::move(name);
  v.bound_found = found;
  v.method = method;
  v.tol = tol;
  v.pass = found <= claimed.to_double() + tol && all_pass(checks);
  v.bound_claimed = std::move(claimed);
  v.checks = std::move(checks);
  v.witness = std::move(witness);
  return v;
}

UniformHypergraph reduce_star(const UniformHypergraph& m, std::vector<Vertex> part) {
  if (m.arity() != 3) throw std::invalid_argument("reduce_star is defined for 3-graphs");
  std::sort(part.begin(), part.end());
  if (std::adjacent_find(part.begin(), part.end()) != part.end())
    throw std::invalid_argument("reduce_star: repeated vertex in part");
  for (Vertex v : part)
    if (v < 1 || v > m.order()) throw std::invalid_argument("reduce_star: vertex " + std::to_string(v) + " out of range");

  std::vector<bool> inside(static_cast<std::size_t>(m.order()) + 1, false);
  for (Vertex v : part) inside[static_cast<std::size_t>(v)] = true;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m.edge_count(); ++i) {
    const auto e = m.edge(i);
    if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return inside[static_cast<std::size_t>(v)]; })) continue;
    edges.emplace_back(e.begin(), e.end());
  }
  for (std::size_t j = 2; j < part.size(); ++j) edges.push_back({part[0], part[1], part[j]});
  return UniformHypergraph(3, m.order(), std::move(edges));
}

SimplexSearchResult grid_refine_maximize(const SimplexObjective& f, int dim, int resolution, int top_candidates,
                                         int refine_iters) {
  if (dim < 1) throw std::invalid_argument("grid_refine_maximize needs dim >= 1");
  if (resolution < 1) throw std::invalid_argument("grid resolution must be >= 1");
  if (top_candidates < 1) throw std::invalid_argument("need at least one refinement candidate");

  using Entry = std::pair<double, std::vector<int>>;
  auto worse = [](const Entry& a, const Entry& b) { return a.first > b.first; };
  std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> best(worse);
  SimplexSearchResult out;
  Eigen::VectorXd x(dim);
  for_each_composition(dim, resolution, [&](const std::vector<int>& counts) {
    for (int i = 0; i < dim; ++i) x[i] = static_cast<double>(counts[static_cast<std::size_t>(i)]) / resolution;
    const double value = f.value(x);
    ++out.grid_points;
    if (static_cast<int>(best.size()) < top_candidates) {
      best.emplace(value, counts);
    } else if (value > best.top().first) {
      best.pop();
      best.emplace(value, counts);
    }
  });

  AscentOptions options;
  options.max_iters = refine_iters;
  options.tolerance = 1e-14;
  out.value = -std::numeric_limits<double>::infinity();
  while (!best.empty()) {
    const auto [grid_value, counts] = best.top();
    best.pop();
    for (int i = 0; i < dim; ++i) x[i] = static_cast<double>(counts[static_cast<std::size_t>(i)]) / resolution;
    if (grid_value > out.value) {
      out.value = grid_value;
      out.argmax = x;
    }
    if (refine_iters <= 0) continue;
    const AscentResult refined = projected_gradient_ascent(f, x, options);
    if (refined.value > out.value) {
      out.value = refined.value;
      out.argmax = refined.x;
    }
  }
  return out;
}

SimplexObjective theorem1_bound_objective() {
  SimplexObjective f;
  f.value = [](const Eigen::VectorXd& x) { return theorem1_bound_poly_unchecked(x[0], x[1], x[2], x[3]); };
  f.gradient = [](const Eigen::VectorXd& x) {
    const double a = x[0], b = x[1], c = x[2], d = x[3];
    Eigen::VectorXd g(4);
    g << (a / 2 + b) * c + c * d + a * b / 2, (a + b) * c + c * d + a * a / 4,
        a * a / 4 + a * b + b * b / 2 + (a + b) * d + c * d, (a + b) * c + c * c / 2;
    return g;
  };
  f.hessian = [](const Eigen::VectorXd& x) {
    const double a = x[0], b = x[1], c = x[2], d = x[3];
    Eigen::MatrixXd h(4, 4);
    h << (b + c) / 2, c + a / 2, a / 2 + b + d, c,  //
        c + a / 2, c, a + b + d, c,                 //
        a / 2 + b + d, a + b + d, d, a + b + c,     //
        c, c, a + b + c, 0.0;
    return h;
  };
  return f;
}

SimplexObjective theorem3_bound_objective(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("theorem3_bound_objective needs k >= 1");
  const double c3 = to_double(binomial_q(2 * k, 3)) / (8.0 * static_cast<double>(k * k * k));
  const double c2 = to_double(binomial_q(2 * k, 2)) / (4.0 * static_cast<double>(k * k));
  SimplexObjective f;
  // x = (w1, a, b); the head term uses (1 - w1) literally, as theorem3_bound does.
  f.value = [c3, c2](const Eigen::VectorXd& x) {
    const double w = x[0], a = x[1], b = x[2];
    return c3 * w * w * w + c2 * w * w * (1.0 - w) + w * (a * a / 4 + a * b + b * b / 2) + a * a * b / 4;
  };
  f.gradient = [c3, c2](const Eigen::VectorXd& x) {
    const double w = x[0], a = x[1], b = x[2];
    Eigen::VectorXd g(3);
    g << 3 * c3 * w * w + c2 * (2 * w - 3 * w * w) + a * a / 4 + a * b + b * b / 2, w * (a / 2 + b) + a * b / 2,
        w * (a + b) + a * a / 4;
    return g;
  };
  f.hessian = [c3, c2](const Eigen::VectorXd& x) {
    const double w = x[0], a = x[1], b = x[2];
    Eigen::MatrixXd h(3, 3);
    h << 6 * c3 * w + c2 * (2 - 6 * w), a / 2 + b, a + b,  //
        a / 2 + b, (w + b) / 2, w + a / 2,                  //
        a + b, w + a / 2, w;
    return h;
  };
  return f;
}

SimplexObjective b2k_objective(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("b2k_objective needs k >= 1");
  SimplexObjective f;
  f.value = [k](const Eigen::VectorXd& x) { return f_b2k(x[0], k); };
  f.gradient = [k](const Eigen::VectorXd& x) {
    Eigen::VectorXd g(2);
    g << f_b2k_prime(x[0], k), 0.0;
    return g;
  };
  return f;
}

UniformHypergraph profile_graph(const TheoremId& theorem, const std::vector<int>& sizes) {
  const PartitionPattern pattern =
      theorem.kind == TheoremKind::kT1 ? theorem1_pattern() : build_theorem3_pattern(theorem.k);
  if (sizes.size() != pattern.parts.size())
    throw std::invalid_argument("profile has " + std::to_string(sizes.size()) + " parts, pattern has " +
                                std::to_string(pattern.parts.size()));
  const auto blocks = part_blocks(sizes);
  const std::size_t adder_part = theorem.kind == TheoremKind::kT1 ? 0 : sizes.size() - 1;
  return reduce_star(expand_templates(3, sizes, pattern.templates), block_members(blocks[adder_part]));
}

ProfileReport enumerate_profiles_and_bound(const TheoremId& theorem, int s, double tol, const OptimizerConfig& cfg) {
  if (s < 1) throw std::invalid_argument("profile size bound s must be >= 1");
  const std::size_t parts = theorem.kind == TheoremKind::kT1 ? 3 : static_cast<std::size_t>(2 * theorem.k + 1);
  const std::size_t head = theorem.kind == TheoremKind::kT1 ? 0 : parts - 1;
  const double constant = theorem.constant().to_double();

  ProfileReport report;
  std::vector<int> sizes(parts, 0);
  auto visit = [&] {
    int total = 0;
    for (int v : sizes) total += v;
    if (total == 0) return;
    const UniformHypergraph n = profile_graph(theorem, sizes);
    const double value = maximize_lagrangian(n, cfg).value;
    ++report.profiles;
    if (report.worst_profile.empty() || value > report.max_value) {
      report.max_value = value;
      report.worst_profile = sizes;
    }
    if (value > constant + tol) report.failures.push_back(sizes);
  };
  // Head parts of T3 are interchangeable, so they are enumerated non-increasing.
  std::function<void(std::size_t, int)> rec = [&](std::size_t index, int remaining) {
    if (index == parts) {
      visit();
      return;
    }
    int cap = remaining;
    if (index > 0 && index < head) cap = std::min(cap, sizes[index - 1]);
    for (int v = 0; v <= cap; ++v) {
      sizes[index] = v;
      rec(index + 1, remaining - v);
    }
    sizes[index] = 0;
  };
  rec(0, s);
  report.pass = report.failures.empty();
  return report;
}

CertificateReport certify_theorem1(const CertificateParameters& params) {
  const Surd two_25(make_rational(2, 25));
  const Rational two_25_q = make_rational(2, 25);
  const double tol = params.tol;
  const SimplexObjective full = theorem1_bound_objective();
  const int face_grid = std::max(params.grid_resolution / 2, 20);
  auto face_max = [&](std::vector<int> keep) {
    return grid_refine_maximize(face_objective(full, 4, std::move(keep)), 3, face_grid, 20, params.refine_iters);
  };

  CertificateReport report;
  report.theorem = TheoremId::t1();
  report.parameters = params;

  // c = 0: only a^2 b / 4 survives, and d only takes mass away from a, b.
  {
    std::vector<CheckStep> checks;
    const RationalPolynomial x = RationalPolynomial::variable();
    const RationalPolynomial p = x * x * (RationalPolynomial::constant(1) - x) * RationalPolynomial::constant(make_rational(1, 4));
    auto mx = exact_max_on_unit_interval(p, {Rational(0), make_rational(2, 3)}, "a2b_over_4");
    append(checks, mx.checks);
    checks.push_back(check("a2b_over_4_max", mx.value == make_rational(1, 27) && mx.at == make_rational(2, 3),
                           "max " + to_fraction_string(mx.value) + " at a = " + to_fraction_string(mx.at)));
    // (a/2)(a/2) b <= ((a + b) / 3)^3 <= 1/27, equality at a/2 = b.
    const Rational a = make_rational(2, 3), b = make_rational(1, 3);
    checks.push_back(check("am_gm_equality", a * a * b / 4 == (a / 2 + a / 2 + b) * (a / 2 + a / 2 + b) * (a / 2 + a / 2 + b) / 27,
                           "equality at (a, b) = (2/3, 1/3)"));
    checks.push_back(check("below_2_25", mx.value < two_25_q, "1/27 < 2/25"));
    const auto numeric = face_max({0, 1, 3});
    checks.push_back(check("face_numeric", numeric.value <= to_double(mx.value) + tol, describe(numeric.value)));
    report.cases.push_back(make_verdict("c=0", two_25, to_double(mx.value), Method::kExact, tol, std::move(checks),
                                        to_std(numeric.argmax)));
  }

  // a = 0: b^2 c / 2 + b c d + c^2 d / 2 on (b, c, d).
  {
    std::vector<CheckStep> checks;
    // Interior stationarity, divided through by b resp. c: c = b/2 + d, d = c/2.
    const Rational h = make_rational(1, 2);
    const auto sol = solve_exact({{-h, Rational(1), Rational(-1)}, {Rational(0), -h, Rational(1)}, {Rational(1), Rational(1), Rational(1)}},
                                 {Rational(0), Rational(0), Rational(1)});
    const Rational& b = sol[0];
    const Rational& c = sol[1];
    const Rational& d = sol[2];
    checks.push_back(check("kkt_linear_solve", b == make_rational(2, 5) && c == make_rational(2, 5) && d == make_rational(1, 5),
                           "(b, c, d) = (" + to_fraction_string(b) + ", " + to_fraction_string(c) + ", " +
                               to_fraction_string(d) + ")"));
    const Rational gb = b * c + c * d, gc = b * b / 2 + b * d + c * d, gd = b * c + c * c / 2;
    checks.push_back(check("kkt_equal_partials", gb == gc && gc == gd, "common partial " + to_fraction_string(gb)));
    const Rational value = theorem1_bound_poly(Rational(0), b, c, d);
    checks.push_back(check("value_2_25", value == two_25_q, to_fraction_string(value)));
    // Boundary of the face: b = 0 gives c^2 d / 2, d = 0 gives b^2 c / 2, c = 0 gives 0.
    const RationalPolynomial x = RationalPolynomial::variable();
    const RationalPolynomial p = x * x * (RationalPolynomial::constant(1) - x) * RationalPolynomial::constant(h);
    auto mx = exact_max_on_unit_interval(p, {Rational(0), make_rational(2, 3)}, "x2y_over_2");
    append(checks, mx.checks);
    checks.push_back(check("boundary_b0_d0_max_2_27", mx.value == make_rational(2, 27) && mx.value < two_25_q,
                           "c^2 d / 2 and b^2 c / 2 peak at " + to_fraction_string(mx.value)));
    const auto numeric = face_max({1, 2, 3});
    checks.push_back(check("face_numeric", numeric.value <= to_double(value) + tol, describe(numeric.value)));
    report.cases.push_back(make_verdict("a=0", two_25, to_double(value), Method::kExact, tol, std::move(checks),
                                        std::vector<double>{0.0, to_double(b), to_double(c), to_double(d)}));
  }

  // b = 0: a^2 c / 4 + a c d + c^2 d / 2, dominated by the a = 0 face with a renamed to b.
  {
    std::vector<CheckStep> checks;
    const auto numeric = face_max({0, 2, 3});
    checks.push_back(check("strict_margin", numeric.value + tol < two_25.to_double(),
                           "margin " + describe(two_25.to_double() - numeric.value)));
    bool dominated = true;
    const int den = 12;
    for_each_composition(3, den, [&](const std::vector<int>& n) {
      const Rational a = make_rational(n[0], den), c = make_rational(n[1], den), d = make_rational(n[2], den);
      const Rational face = theorem1_bound_poly(a, Rational(0), c, d);
      const Rational renamed = theorem1_bound_poly(Rational(0), a, c, d);
      dominated = dominated && face <= renamed;
    });
    checks.push_back(check("dominated_by_a0_face", dominated, "exact on the lattice of denominator 12"));
    report.cases.push_back(make_verdict("b=0", two_25, numeric.value, Method::kGridRefine, tol, std::move(checks),
                                        std::vector<double>{numeric.argmax[0], 0.0, numeric.argmax[1], numeric.argmax[2]}));
  }

  // d = 0: elimination to a cubic in b.
  {
    std::vector<CheckStep> checks = verify_theorem1_d0_case();
    const double peak = theorem1_d0_cubic(theorem1_d0_critical_point().to_double());
    const auto numeric = face_max({0, 1, 2});
    checks.push_back(check("face_numeric_below_0_076", numeric.value <= 0.076 + tol, describe(numeric.value)));
    report.cases.push_back(make_verdict("d=0", two_25, peak, Method::kExact, tol, std::move(checks),
                                        std::vector<double>{numeric.argmax[0], numeric.argmax[1], numeric.argmax[2], 0.0}));
  }

  // Interior: every stationary point has a non-positive coordinate.
  {
    const QuarticIdentityReport quartic = verify_theorem1_quartic_identity();
    std::vector<CheckStep> checks;
    checks.push_back(check("quartic_identity", quartic.identity,
                           quartic.lhs.to_string("b") + " = " + quartic.rhs.to_string("b")));
    for (const auto& root : quartic.roots) {
      checks.push_back(check("root_b=" + to_fraction_string(root.b), root.infeasible, root.contradiction));
    }
    checks.push_back(check("all_roots_infeasible", quartic.all_roots_infeasible, "no interior stationary point"));
    // No feasible interior stationary point, so the case contributes nothing.
    report.cases.push_back(make_verdict("interior", two_25, 0.0, Method::kExact, tol, std::move(checks)));
  }

  // Whole simplex, numerically.
  {
    const auto numeric = grid_refine_maximize(full, 4, params.grid_resolution, params.top_candidates, params.refine_iters);
    const std::vector<double> expected{0.0, 0.4, 0.4, 0.2};
    const double dist = sup_distance(numeric.argmax, expected);
    std::vector<CheckStep> checks{check("argmax_near_0_.4_.4_.2", dist <= 1e-4, "sup distance " + describe(dist)),
                                  check("grid_points", numeric.grid_points > 0, std::to_string(numeric.grid_points))};
    report.cases.push_back(
        make_verdict("global", two_25, numeric.value, Method::kGridRefine, tol, std::move(checks), to_std(numeric.argmax)));
  }

  report.cases.push_back(profiles_verdict(report.theorem, params, report.profiles_checked));
  report.overall = std::all_of(report.cases.begin(), report.cases.end(), [](const CaseVerdict& v) { return v.pass; });
  return report;
}

CertificateReport certify_theorem3(std::int64_t k, CertificateParameters params) {
  if (k < 2) throw std::invalid_argument("certify_theorem3 needs k >= 2");
  const TheoremId theorem = TheoremId::t3(k);
  const Surd bound = theorem.constant();
  const double tol = params.tol;

  CertificateReport report;
  report.theorem = theorem;
  report.parameters = params;

  // Early cases: b <= w1 (which covers w1 >= 1/2) and a = 0 collapse to f_b2k(w1).
  {
    std::vector<CheckStep> checks;
    bool tail = true, a_zero = true;
    for (int i = 0; i <= 4; ++i) {
      const Rational w = make_rational(i, 4);
      tail = tail && theorem3_head(w, k) + w * (1 - w) * (1 - w) / 2 == f_b2k(w, k);
      a_zero = a_zero && theorem3_bound(w, Rational(0), k) == f_b2k(w, k);
    }
    checks.push_back(check("head_plus_tail_is_f_b2k", tail, "cubic identity checked at 5 points"));
    checks.push_back(check("a0_reduces_to_f_b2k", a_zero, "cubic identity checked at 5 points"));
    bool dominated = true, half_implies = true;
    const int den = 24;
    for_each_composition(3, den, [&](const std::vector<int>& n) {
      const Rational w = make_rational(n[0], den), a = make_rational(n[1], den), b = make_rational(n[2], den);
      if (w >= make_rational(1, 2)) half_implies = half_implies && b <= w;
      if (b <= w) dominated = dominated && theorem3_bound(w, a, k) <= f_b2k(w, k);
    });
    checks.push_back(check("w1_ge_half_implies_b_le_w1", half_implies, "lattice of denominator 24"));
    checks.push_back(check("b_le_w1_dominated_by_f_b2k", dominated, "exact on the lattice of denominator 24"));
    append(checks, verify_b2k_maximum(k), "f_b2k.");
    report.cases.push_back(make_verdict("early_cases", bound, bound.to_double(), Method::kExact, tol, std::move(checks)));
  }

  // Main case: monotone chain ending at g(1/2).
  {
    const BoundChainReport chain = theorem3_bound_chain(k);
    report.cases.push_back(
        make_verdict("main_chain", bound, to_double(chain.g_half), Method::kExact, tol, chain.steps));
  }

  const SimplexObjective full = theorem3_bound_objective(k);

  // a = 0 slice: the maximum of f_b2k is attained at a* and equals alpha_k / 6.
  {
    const auto numeric = grid_refine_maximize(face_objective(full, 3, {0, 2}), 2, params.grid_resolution,
                                              params.top_candidates, params.refine_iters);
    const double gap = std::abs(numeric.value - bound.to_double());
    const double where = std::abs(numeric.argmax[0] - astar_weight(k).to_double());
    std::vector<CheckStep> checks{check("slice_max_equals_alpha_over_6", gap <= 1e-10, "gap " + describe(gap)),
                                  check("slice_argmax_is_astar", where <= 1e-6, "distance " + describe(where))};
    report.cases.push_back(make_verdict("a=0_slice", bound, numeric.value, Method::kGridRefine, tol, std::move(checks),
                                        std::vector<double>{numeric.argmax[0], 0.0, numeric.argmax[1]}));
  }

  // Whole (w1, a, b) simplex, numerically.
  {
    const auto numeric =
        grid_refine_maximize(full, 3, params.grid_resolution, params.top_candidates, params.refine_iters);
    std::vector<CheckStep> checks{check("grid_points", numeric.grid_points > 0, std::to_string(numeric.grid_points))};
    report.cases.push_back(
        make_verdict("global", bound, numeric.value, Method::kGridRefine, tol, std::move(checks), to_std(numeric.argmax)));
  }

  report.cases.push_back(profiles_verdict(theorem, params, report.profiles_checked));
  report.overall = std::all_of(report.cases.begin(), report.cases.end(), [](const CaseVerdict& v) { return v.pass; });
  return report;
}

DensityGainReport density_gain_with_adder(const TheoremId& theorem, int t, const UniformHypergraph& adder) {
  DensityGainReport out;
  out.theorem = theorem;
  out.t = t;
  const Rational tq(t);
  const Rational t3 = tq * tq * tq;
  UniformHypergraph base(3, 0);
  std::pair<Vertex, Vertex> block;
  if (theorem.kind == TheoremKind::kT1) {
    base = build_theorem1_base(t);
    block = part_blocks({2 * t / 5, 2 * t / 5, t / 5})[0];
    out.break_even_edges = Surd(make_rational(3, 25) * tq * tq);
  } else {
    auto inst = instantiate_pattern(build_theorem3_pattern(theorem.k), t);
    base = std::move(inst.graph);
    block = inst.blocks.back();
    out.break_even_edges = theorem3_c0(theorem.k) * Surd(tq * tq);
  }
  const UniformHypergraph gstar = assemble_gstar(base, adder, block_members(block));
  out.base_edges = static_cast<long>(base.edge_count());
  out.adder_edges = static_cast<long>(adder.edge_count());
  out.lower_bound = Rational(static_cast<long>(gstar.edge_count())) / t3;
  out.target = theorem.constant();
  out.margin = Surd(out.lower_bound) - out.target;
  out.predicted_margin = (Surd(Rational(out.adder_edges)) - out.break_even_edges) / Surd(t3);
  out.pass = out.margin.sign() > 0;
  return out;
}

DensityGainReport check_blowup_density_gain(const TheoremId& theorem, int t, int s, double c, std::uint64_t seed,
                                            long max_attempts) {
  const GStar g = theorem.kind == TheoremKind::kT1 ? build_gstar_theorem1(t, s, c, seed, max_attempts)
                                                   : build_gstar_theorem3(theorem.k, t, s, c, seed, max_attempts);
  DensityGainReport out = density_gain_with_adder(theorem, t, g.adder);
  out.s = s;
  out.c = c;
  out.seed = seed;
  return out;
}

}  // namespace hyperlag
