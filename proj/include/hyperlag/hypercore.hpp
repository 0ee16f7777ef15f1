#pragma once

#include <cmath>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "hyperlag/rational.hpp"

namespace hyperlag {

/// Vertices are 1-based; vertex v lives at index v-1 of every weight vector.
using Vertex = int;
using Edge = std::vector<Vertex>;

/// r-uniform hypergraph on {1..n}. Edges are stored flat, each edge sorted,
/// the edge list sorted lexicographically and deduplicated. Immutable.
class UniformHypergraph {
 public:
  UniformHypergraph(int r, int n, std::vector<Edge> edges = {});

  int arity() const { return r_; }
  int order() const { return n_; }
  std::size_t edge_count() const { return flat_.size() / static_cast<std::size_t>(r_); }
  bool empty() const { return flat_.empty(); }

  std::span<const Vertex> edge(std::size_t index) const {
    return {flat_.data() + index * static_cast<std::size_t>(r_), static_cast<std::size_t>(r_)};
  }

  /// `sorted_edge` must be sorted ascending.
  bool contains(std::span<const Vertex> sorted_edge) const;
  bool contains(std::initializer_list<Vertex> sorted_edge) const {
    return contains(std::span<const Vertex>(sorted_edge.begin(), sorted_edge.size()));
  }

  std::vector<Edge> edges() const;

  /// Indices of the edges containing each vertex; entry 0 is unused.
  std::vector<std::vector<std::size_t>> incidence() const;

  friend bool operator==(const UniformHypergraph& a, const UniformHypergraph& b) {
    return a.r_ == b.r_ && a.n_ == b.n_ && a.flat_ == b.flat_;
  }

 private:
  int r_;
  int n_;
  std::vector<Vertex> flat_;
};

/// Point of the standard simplex. Entries in (-1e-12, 0) are clamped to zero,
/// anything more negative is rejected, and the vector is re-normalized to sum 1.
template <typename Scalar>
class WeightVector {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  explicit WeightVector(Vector raw) : values_(std::move(raw)) {
    const Scalar clamp_floor = Scalar(-1e-12);
    Scalar total(0);
    for (Eigen::Index i = 0; i < values_.size(); ++i) {
      if (values_[i] < Scalar(0)) {
        if (values_[i] <= clamp_floor || is_exact()) {
          throw std::invalid_argument("weight vector entry " + std::to_string(i + 1) + " is negative");
        }
        values_[i] = Scalar(0);
      }
      total += values_[i];
    }
    if (!(total > Scalar(0))) throw std::invalid_argument("weight vector has zero total mass");
    values_ /= total;
  }

  static WeightVector uniform(int n) {
    if (n <= 0) throw std::invalid_argument("uniform weight vector needs n >= 1");
    return WeightVector(Vector::Constant(n, Scalar(1)));
  }

  const Vector& values() const { return values_; }
  Eigen::Index size() const { return values_.size(); }
  const Scalar& weight(Vertex v) const { return values_[v - 1]; }

 private:
  static constexpr bool is_exact() { return !std::is_floating_point_v<Scalar>; }
  Vector values_;
};

/// Class multiplicities (n_1, ..., n_t) of a blow-up; all entries >= 1.
struct BlowupSpec {
  std::vector<int> multiplicities;

  explicit BlowupSpec(std::vector<int> m) : multiplicities(std::move(m)) {
    for (int v : multiplicities) {
      if (v < 1) throw std::invalid_argument("blow-up multiplicities must be >= 1");
    }
  }
  static BlowupSpec constant(int n, int m) { return BlowupSpec(std::vector<int>(static_cast<std::size_t>(n), m)); }
};

namespace detail {
inline void check_dimension(const UniformHypergraph& g, Eigen::Index len) {
  if (len != g.order()) {
    throw std::invalid_argument("weight vector has length " + std::to_string(len) + " but hypergraph has " +
                                std::to_string(g.order()) + " vertices");
  }
}
}  // namespace detail

/// λ(G, x): sum over edges of the product of member weights. Accepts any
/// vector, not only simplex points, so it can be differenced numerically.
template <typename Derived>
typename Derived::Scalar lagrangian_value(const UniformHypergraph& g, const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  detail::check_dimension(g, x.size());
  Scalar total(0);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    Scalar prod(1);
    for (Vertex v : g.edge(e)) prod *= x[v - 1];
    total += prod;
  }
  return total;
}

template <typename Scalar>
Scalar lagrangian_value(const UniformHypergraph& g, const WeightVector<Scalar>& x) {
  return lagrangian_value(g, x.values());
}

/// Entry i is the sum over edges containing i of the product of the other
/// r-1 weights.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> lagrangian_gradient(
    const UniformHypergraph& g, const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  detail::check_dimension(g, x.size());
  const int r = g.arity();
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> grad = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(x.size());
  std::vector<Scalar> prefix(static_cast<std::size_t>(r) + 1), suffix(static_cast<std::size_t>(r) + 1);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto edge = g.edge(e);
    prefix[0] = Scalar(1);
    suffix[static_cast<std::size_t>(r)] = Scalar(1);
    for (int k = 0; k < r; ++k) prefix[k + 1] = prefix[k] * x[edge[k] - 1];
    for (int k = r - 1; k >= 0; --k) suffix[k] = suffix[k + 1] * x[edge[k] - 1];
    for (int k = 0; k < r; ++k) grad[edge[k] - 1] += prefix[k] * suffix[k + 1];
  }
  return grad;
}

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> lagrangian_gradient(const UniformHypergraph& g,
                                                             const WeightVector<Scalar>& x) {
  return lagrangian_gradient(g, x.values());
}

/// Hessian of the multilinear edge polynomial: entry (i, j), i != j, sums the
/// product of the other r-2 weights over edges containing both i and j.
Eigen::MatrixXd lagrangian_hessian(const UniformHypergraph& g, const Eigen::VectorXd& x);

/// |E| / C(n, r). Throws when n < r.
double density(const UniformHypergraph& g);

/// Class i of the blow-up occupies the consecutive block after classes 1..i-1.
UniformHypergraph blowup(const UniformHypergraph& g, const BlowupSpec& spec);

/// Half-open 1-based label ranges [lo, hi) of each blow-up class.
std::vector<std::pair<Vertex, Vertex>> blowup_blocks(const BlowupSpec& spec);

struct InducedSubgraph {
  UniformHypergraph graph;
  /// labels[k-1] is the original vertex relabeled to k.
  std::vector<Vertex> labels;
};

/// Keeps exactly the edges inside `vertices`, relabeled to 1..k in
/// ascending original order.
InducedSubgraph induced_subgraph(const UniformHypergraph& g, std::vector<Vertex> vertices);

/// L_G(j\i): (r-1)-sets e with i not in e, e+{j} an edge and e+{i} not an edge.
std::vector<Edge> link_difference(const UniformHypergraph& g, Vertex j, Vertex i);

std::string format_edge_set(const std::vector<Edge>& edges);

/// Averages the weights of i and j. Requires both link differences empty,
/// which guarantees λ(G, y) >= λ(G, x).
template <typename Scalar>
WeightVector<Scalar> symmetrize_pair(const UniformHypergraph& g, const WeightVector<Scalar>& x, Vertex i, Vertex j) {
  detail::check_dimension(g, x.size());
  for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
    auto diff = link_difference(g, a, b);
    if (!diff.empty()) {
      throw std::invalid_argument("cannot symmetrize: L(" + std::to_string(a) + "\\" + std::to_string(b) +
                                  ") = " + format_edge_set(diff) + " is not empty");
    }
  }
  auto y = x.values();
  const Scalar mean = (y[i - 1] + y[j - 1]) / Scalar(2);
  y[i - 1] = mean;
  y[j - 1] = mean;
  return WeightVector<Scalar>(std::move(y));
}

// Text format: "r n m" then m lines of r vertex indices; '#' starts a comment.

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

UniformHypergraph read_hypergraph(std::istream& in);
UniformHypergraph read_hypergraph_file(const std::string& path);
void write_hypergraph(std::ostream& out, const UniformHypergraph& g);
void write_hypergraph_file(const std::string& path, const UniformHypergraph& g);

}  // namespace hyperlag
