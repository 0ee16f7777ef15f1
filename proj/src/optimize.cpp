#include "hyperlag/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include <Eigen/QR>

namespace hyperlag {

void OptimizerConfig::validate() const {
  if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  if (max_iters < 0) throw std::invalid_argument("max_iters must be >= 0");
  if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be > 0");
  if (grid_resolution < 1) throw std::invalid_argument("grid_resolution must be >= 1");
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");
  if (step_rule == StepRule::kFixed && !(fixed_step > 0)) throw std::invalid_argument("fixed_step must be > 0");
}

Eigen::VectorXd project_to_simplex(const Eigen::VectorXd& v) {
  const Eigen::Index n = v.size();
  std::vector<double> sorted(v.data(), v.data() + n);
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double theta = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    cumulative += sorted[static_cast<std::size_t>(k)];
    const double candidate = (cumulative - 1.0) / static_cast<double>(k + 1);
    if (sorted[static_cast<std::size_t>(k)] - candidate > 0) theta = candidate;
  }
  Eigen::VectorXd out = (v.array() - theta).max(0.0).matrix();
  const double total = out.sum();
  if (total > 0) out /= total;
  return out;
}

double kkt_residual(const Eigen::VectorXd& x, const Eigen::VectorXd& grad) {
  const double mu = x.dot(grad);
  double residual = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double gap = grad[i] - mu;
    residual = std::max(residual, x[i] > kSupportEpsilon ? std::abs(gap) : std::max(0.0, gap));
  }
  return residual;
}

namespace {

Eigen::MatrixXd differenced_hessian(const SimplexObjective& f, const Eigen::VectorXd& x) {
  const double h = 1e-6;
  Eigen::MatrixXd hess(x.size(), x.size());
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    Eigen::VectorXd up = x, down = x;
    up[j] += h;
    down[j] -= h;
    hess.col(j) = (f.gradient(up) - f.gradient(down)) / (2 * h);
  }
  return 0.5 * (hess + hess.transpose());
}

/// Newton on grad_S - mu = 0, sum x_S = 1. Steps that leave the simplex,
/// lower the objective, or fail to shrink the residual are rejected.
void polish_on_support(const SimplexObjective& f, AscentResult& state) {
  for (int iter = 0; iter < 30; ++iter) {
    std::vector<Eigen::Index> support;
    for (Eigen::Index i = 0; i < state.x.size(); ++i) {
      if (state.x[i] > kSupportEpsilon) support.push_back(i);
    }
    const auto s = static_cast<Eigen::Index>(support.size());
    if (s < 2 || state.residual < 1e-15) return;

    const Eigen::VectorXd grad = f.gradient(state.x);
    const Eigen::MatrixXd hess = f.hessian ? f.hessian(state.x) : differenced_hessian(f, state.x);
    const double mu = state.x.dot(grad);

    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(s + 1, s + 1);
    Eigen::VectorXd rhs(s + 1);
    double mass = 0.0;
    for (Eigen::Index a = 0; a < s; ++a) {
      for (Eigen::Index b = 0; b < s; ++b) jac(a, b) = hess(support[a], support[b]);
      jac(a, s) = -1.0;
      jac(s, a) = 1.0;
      rhs[a] = -(grad[support[a]] - mu);
      mass += state.x[support[a]];
    }
    rhs[s] = -(mass - 1.0);
    const Eigen::VectorXd delta = jac.completeOrthogonalDecomposition().solve(rhs);

    Eigen::VectorXd next = state.x;
    for (Eigen::Index a = 0; a < s; ++a) next[support[a]] += delta[a];
    if ((next.array() < 0).any()) return;
    next /= next.sum();
    const double value = f.value(next);
    const double residual = kkt_residual(next, f.gradient(next));
    if (value < state.value - 1e-15 * std::max(1.0, std::abs(state.value)) || residual >= state.residual) return;
    state.x = std::move(next);
    state.value = value;
    state.residual = residual;
  }
}

}  // namespace

AscentResult projected_gradient_ascent(const SimplexObjective& f, const Eigen::VectorXd& start,
                                       const AscentOptions& options) {
  AscentResult state;
  state.x = project_to_simplex(start);
  state.value = f.value(state.x);
  Eigen::VectorXd grad = f.gradient(state.x);
  state.residual = kkt_residual(state.x, grad);

  for (; state.iterations < options.max_iters; ++state.iterations) {
    if (state.residual <= options.tolerance) break;
    double step = options.step_rule == StepRule::kFixed ? options.fixed_step : 1.0;
    Eigen::VectorXd next;
    double next_value = 0.0;
    bool accepted = false;
    while (step > 1e-20) {
      next = project_to_simplex(state.x + step * grad);
      next_value = f.value(next);
      if (options.step_rule == StepRule::kFixed || next_value >= state.value + kArmijo * grad.dot(next - state.x)) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted || (next - state.x).lpNorm<Eigen::Infinity>() < 1e-17) break;
    state.x = std::move(next);
    state.value = next_value;
    grad = f.gradient(state.x);
    state.residual = kkt_residual(state.x, grad);
  }
  if (options.polish) polish_on_support(f, state);
  state.converged = state.residual <= options.tolerance;
  return state;
}

SimplexObjective lagrangian_objective(const UniformHypergraph& g) {
  SimplexObjective f;
  f.value = [&g](const Eigen::VectorXd& x) { return lagrangian_value(g, x); };
  f.gradient = [&g](const Eigen::VectorXd& x) -> Eigen::VectorXd { return lagrangian_gradient(g, x); };
  f.hessian = [&g](const Eigen::VectorXd& x) { return lagrangian_hessian(g, x); };
  return f;
}

std::vector<std::vector<Vertex>> symmetry_reduce(const UniformHypergraph& g) {
  const int n = g.order();
  const int r = g.arity();
  // link[v]: sorted (r-1)-sets completing an edge with v.
  std::vector<std::vector<Edge>> link(static_cast<std::size_t>(n) + 1);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto edge = g.edge(e);
    for (int k = 0; k < r; ++k) {
      Edge rest;
      for (int l = 0; l < r; ++l) {
        if (l != k) rest.push_back(edge[l]);
      }
      link[static_cast<std::size_t>(edge[k])].push_back(std::move(rest));
    }
  }
  for (auto& l : link) std::sort(l.begin(), l.end());

  auto contains = [](const Edge& e, Vertex v) { return std::binary_search(e.begin(), e.end(), v); };
  auto twins = [&](Vertex i, Vertex j) {
    const auto& li = link[static_cast<std::size_t>(i)];
    const auto& lj = link[static_cast<std::size_t>(j)];
    if (li.size() != lj.size()) return false;
    auto it_i = li.begin(), it_j = lj.begin();
    while (true) {
      while (it_i != li.end() && contains(*it_i, j)) ++it_i;
      while (it_j != lj.end() && contains(*it_j, i)) ++it_j;
      if (it_i == li.end() || it_j == lj.end()) return it_i == li.end() && it_j == lj.end();
      if (*it_i != *it_j) return false;
      ++it_i;
      ++it_j;
    }
  };

  std::vector<Vertex> parent(static_cast<std::size_t>(n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    return v;
  };
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j) {
      if (find(i) == find(j)) continue;
      if (twins(i, j)) parent[static_cast<std::size_t>(find(j))] = find(i);
    }
  }
  std::vector<std::vector<Vertex>> classes;
  std::vector<int> slot(static_cast<std::size_t>(n) + 1, -1);
  for (Vertex v = 1; v <= n; ++v) {
    const Vertex root = find(v);
    if (slot[static_cast<std::size_t>(root)] < 0) {
      slot[static_cast<std::size_t>(root)] = static_cast<int>(classes.size());
      classes.emplace_back();
    }
    classes[static_cast<std::size_t>(slot[static_cast<std::size_t>(root)])].push_back(v);
  }
  return classes;
}

std::vector<Eigen::VectorXd> restart_points(const UniformHypergraph& g, const OptimizerConfig& cfg,
                                            const std::vector<std::vector<Vertex>>& classes) {
  const int n = g.order();
  std::vector<Eigen::VectorXd> starts;
  starts.push_back(Eigen::VectorXd::Constant(n, 1.0 / n));

  if (classes.size() > 1) {
    for (std::size_t c = 0; c < classes.size() && static_cast<int>(starts.size()) < cfg.restarts; ++c) {
      Eigen::VectorXd x = Eigen::VectorXd::Ones(n);
      for (Vertex v : classes[c]) x[v - 1] = 2.0;
      starts.push_back(x / x.sum());
    }
  }

  for (int index = static_cast<int>(starts.size()); index < cfg.restarts; ++index) {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32U),
                      static_cast<std::uint32_t>(index)};
    std::mt19937_64 rng(seq);
    std::exponential_distribution<double> expo(1.0);
    Eigen::VectorXd x(n);
    if (index % 2 == 0) {
      // Dirichlet(1) over classes, spread evenly inside each class.
      for (const auto& cls : classes) {
        const double mass = expo(rng);
        for (Vertex v : cls) x[v - 1] = mass / static_cast<double>(cls.size());
      }
    } else {
      for (int i = 0; i < n; ++i) x[i] = expo(rng);
    }
    starts.push_back(x / x.sum());
  }
  return starts;
}

namespace {

std::vector<Vertex> support_of(const Eigen::VectorXd& x) {
  std::vector<Vertex> s;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x[i] > kSupportEpsilon) s.push_back(static_cast<Vertex>(i) + 1);
  }
  return s;
}

}  // namespace

OptimizationResult maximize_lagrangian(const UniformHypergraph& g, const OptimizerConfig& cfg) {
  cfg.validate();
  if (g.order() < 1) throw std::invalid_argument("maximize_lagrangian needs at least one vertex");
  auto uniform = WeightVector<double>::uniform(g.order());
  if (g.empty()) {
    return {0.0, uniform, support_of(uniform.values()), 0.0, cfg.restarts};
  }

  const auto classes = symmetry_reduce(g);
  const auto starts = restart_points(g, cfg, classes);
  const SimplexObjective objective = lagrangian_objective(g);
  AscentOptions options;
  options.max_iters = cfg.max_iters;
  options.step_rule = cfg.step_rule;
  options.fixed_step = cfg.fixed_step;
  options.tolerance = cfg.tolerance;
  options.polish = cfg.polish;

  std::vector<AscentResult> runs(starts.size());
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < starts.size(); i += stride) runs[i] = projected_gradient_ascent(objective, starts[i], options);
  };
  const auto workers = static_cast<std::size_t>(std::min<int>(cfg.threads, static_cast<int>(starts.size())));
  if (workers <= 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  }

  std::size_t best = 0;
  int converged = 0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (runs[i].converged) ++converged;
    const double scale = std::max(1.0, std::abs(runs[best].value));
    if (runs[i].value > runs[best].value + 1e-12 * scale) {
      best = i;
    } else if (std::abs(runs[i].value - runs[best].value) <= 1e-12 * scale &&
               support_of(runs[i].x) < support_of(runs[best].x)) {
      best = i;
    }
  }

  WeightVector<double> argmax(runs[best].x);
  OptimizationResult result{lagrangian_value(g, argmax), argmax, support_of(argmax.values()), 0.0, converged};
  result.stationarity_residual = kkt_residual(argmax.values(), lagrangian_gradient(g, argmax));
  return result;
}

GridOracleResult grid_oracle(const UniformHypergraph& g, int resolution, bool allow_large) {
  if (resolution < 1) throw std::invalid_argument("grid resolution must be >= 1");
  if (g.order() > 8 && !allow_large) {
    throw std::invalid_argument("grid_oracle is limited to n <= 8 (got " + std::to_string(g.order()) + ")");
  }
  if (g.order() < 1) throw std::invalid_argument("grid_oracle needs at least one vertex");
  const int n = g.order();
  std::vector<int> counts(static_cast<std::size_t>(n), 0);
  std::vector<int> best_counts;
  __int128 best = -1;

  auto score = [&]() {
    __int128 total = 0;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      __int128 prod = 1;
      for (Vertex v : g.edge(e)) prod *= counts[static_cast<std::size_t>(v - 1)];
      total += prod;
    }
    return total;
  };
  // Enumerate compositions of `resolution` into n parts.
  auto recurse = [&](auto&& self, int index, int remaining) -> void {
    if (index == n - 1) {
      counts[static_cast<std::size_t>(index)] = remaining;
      const __int128 s = score();
      if (s > best) {
        best = s;
        best_counts = counts;
      }
      return;
    }
    for (int c = remaining; c >= 0; --c) {
      counts[static_cast<std::size_t>(index)] = c;
      self(self, index + 1, remaining - c);
    }
  };
  recurse(recurse, 0, resolution);

  auto to_big = [](__int128 v) {
    BigInt out = 0;
    BigInt place = 1;
    while (v > 0) {
      out += place * static_cast<long long>(v % 1000000000);
      place *= 1000000000;
      v /= 1000000000;
    }
    return out;
  };
  BigInt denom = 1;
  for (int k = 0; k < g.arity(); ++k) denom *= resolution;
  return {Rational(to_big(best), denom), best_counts};
}

StationarityReport verify_stationarity(const UniformHypergraph& g, const WeightVector<double>& x, double tol) {
  StationarityReport report;
  const Eigen::VectorXd grad = lagrangian_gradient(g, x);
  report.multiplier = g.arity() * lagrangian_value(g, x);
  report.residuals.resize(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double gap = grad[i] - report.multiplier;
    report.residuals[i] = x.values()[i] > kSupportEpsilon ? std::abs(gap) : std::max(0.0, gap);
  }
  report.residual = x.size() ? report.residuals.maxCoeff() : 0.0;
  report.pass = report.residual <= tol;
  return report;
}

}  // namespace hyperlag
