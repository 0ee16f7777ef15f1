#include "hyperlag/hypercore.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hyperlag {

namespace {

bool edge_less(std::span<const Vertex> a, std::span<const Vertex> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double result = 1.0;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

}  // namespace

UniformHypergraph::UniformHypergraph(int r, int n, std::vector<Edge> edges) : r_(r), n_(n) {
  if (r < 2) throw std::invalid_argument("edge arity must be >= 2");
  if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
  for (auto& e : edges) {
    if (static_cast<int>(e.size()) != r) {
      throw std::invalid_argument("edge has " + std::to_string(e.size()) + " vertices, expected " + std::to_string(r));
    }
    std::sort(e.begin(), e.end());
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] < 1 || e[k] > n) throw std::invalid_argument("vertex " + std::to_string(e[k]) + " out of range");
      if (k > 0 && e[k] == e[k - 1]) throw std::invalid_argument("edge repeats vertex " + std::to_string(e[k]));
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  flat_.reserve(edges.size() * static_cast<std::size_t>(r));
  for (const auto& e : edges) flat_.insert(flat_.end(), e.begin(), e.end());
}

bool UniformHypergraph::contains(std::span<const Vertex> sorted_edge) const {
  if (static_cast<int>(sorted_edge.size()) != r_) return false;
  std::size_t lo = 0, hi = edge_count();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (edge_less(edge(mid), sorted_edge)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo < edge_count() && std::equal(sorted_edge.begin(), sorted_edge.end(), edge(lo).begin());
}

std::vector<Edge> UniformHypergraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (std::size_t e = 0; e < edge_count(); ++e) out.emplace_back(edge(e).begin(), edge(e).end());
  return out;
}

std::vector<std::vector<std::size_t>> UniformHypergraph::incidence() const {
  std::vector<std::vector<std::size_t>> inc(static_cast<std::size_t>(n_) + 1);
  for (std::size_t e = 0; e < edge_count(); ++e) {
    for (Vertex v : edge(e)) inc[static_cast<std::size_t>(v)].push_back(e);
  }
  return inc;
}

Eigen::MatrixXd lagrangian_hessian(const UniformHypergraph& g, const Eigen::VectorXd& x) {
  detail::check_dimension(g, x.size());
  const int r = g.arity();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(x.size(), x.size());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto edge = g.edge(e);
    for (int a = 0; a < r; ++a) {
      for (int b = a + 1; b < r; ++b) {
        double prod = 1.0;
        for (int c = 0; c < r; ++c) {
          if (c != a && c != b) prod *= x[edge[c] - 1];
        }
        h(edge[a] - 1, edge[b] - 1) += prod;
        h(edge[b] - 1, edge[a] - 1) += prod;
      }
    }
  }
  return h;
}

double density(const UniformHypergraph& g) {
  if (g.order() < g.arity()) {
    throw std::invalid_argument("density needs n >= r (n = " + std::to_string(g.order()) + ")");
  }
  return static_cast<double>(g.edge_count()) / binomial(g.order(), g.arity());
}

std::vector<std::pair<Vertex, Vertex>> blowup_blocks(const BlowupSpec& spec) {
  std::vector<std::pair<Vertex, Vertex>> blocks;
  Vertex next = 1;
  for (int m : spec.multiplicities) {
    blocks.emplace_back(next, next + m);
    next += m;
  }
  return blocks;
}

UniformHypergraph blowup(const UniformHypergraph& g, const BlowupSpec& spec) {
  if (static_cast<int>(spec.multiplicities.size()) != g.order()) {
    throw std::invalid_argument("blow-up spec length does not match vertex count");
  }
  const auto blocks = blowup_blocks(spec);
  const int r = g.arity();
  std::vector<Edge> out;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto edge = g.edge(e);
    // Odometer over the transversal choices.
    Edge current(static_cast<std::size_t>(r));
    for (int k = 0; k < r; ++k) current[k] = blocks[edge[k] - 1].first;
    while (true) {
      out.push_back(current);
      int k = r - 1;
      while (k >= 0 && ++current[k] == blocks[edge[k] - 1].second) {
        current[k] = blocks[edge[k] - 1].first;
        --k;
      }
      if (k < 0) break;
    }
  }
  const Vertex total = blocks.empty() ? 0 : blocks.back().second - 1;
  return UniformHypergraph(r, total, std::move(out));
}

InducedSubgraph induced_subgraph(const UniformHypergraph& g, std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    throw std::invalid_argument("induced_subgraph: repeated vertex");
  }
  std::vector<Vertex> relabel(static_cast<std::size_t>(g.order()) + 1, 0);
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    const Vertex v = vertices[k];
    if (v < 1 || v > g.order()) throw std::invalid_argument("induced_subgraph: vertex " + std::to_string(v) + " out of range");
    relabel[static_cast<std::size_t>(v)] = static_cast<Vertex>(k) + 1;
  }
  std::vector<Edge> kept;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    Edge mapped;
    for (Vertex v : g.edge(e)) {
      if (relabel[static_cast<std::size_t>(v)] == 0) break;
      mapped.push_back(relabel[static_cast<std::size_t>(v)]);
    }
    if (static_cast<int>(mapped.size()) == g.arity()) kept.push_back(std::move(mapped));
  }
  return {UniformHypergraph(g.arity(), static_cast<int>(vertices.size()), std::move(kept)), std::move(vertices)};
}

std::vector<Edge> link_difference(const UniformHypergraph& g, Vertex j, Vertex i) {
  if (i == j) throw std::invalid_argument("link_difference needs distinct vertices");
  for (Vertex v : {i, j}) {
    if (v < 1 || v > g.order()) throw std::invalid_argument("link_difference: vertex " + std::to_string(v) + " out of range");
  }
  std::vector<Edge> out;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto edge = g.edge(e);
    if (std::find(edge.begin(), edge.end(), j) == edge.end()) continue;
    if (std::find(edge.begin(), edge.end(), i) != edge.end()) continue;
    Edge rest;
    for (Vertex v : edge) {
      if (v != j) rest.push_back(v);
    }
    Edge swapped = rest;
    swapped.insert(std::upper_bound(swapped.begin(), swapped.end(), i), i);
    if (!g.contains(swapped)) out.push_back(std::move(rest));
  }
  return out;
}

std::string format_edge_set(const std::vector<Edge>& edges) {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (k) os << ", ";
    os << '{';
    for (std::size_t v = 0; v < edges[k].size(); ++v) os << (v ? "," : "") << edges[k][v];
    os << '}';
  }
  os << '}';
  return os.str();
}

}  // namespace hyperlag
