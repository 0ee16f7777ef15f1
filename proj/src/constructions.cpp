#include "hyperlag/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "hyperlag/closedform.hpp"

namespace hyperlag {

void PartitionPattern::validate() const {
  if (parts.size() != part_weights.size()) throw std::invalid_argument("pattern: one weight per part required");
  Surd total(0);
  for (const auto& w : part_weights) {
    if (w < Surd(0)) throw std::invalid_argument("pattern: negative part weight");
    total += w;
  }
  if (total != Surd(1)) throw std::invalid_argument("pattern: part weights sum to " + total.to_string() + ", not 1");
  std::set<std::vector<int>> seen;
  for (const auto& tpl : templates) {
    if (static_cast<int>(tpl.size()) != r) throw std::invalid_argument("pattern: template multiplicities must sum to r");
    if (!std::is_sorted(tpl.begin(), tpl.end())) throw std::invalid_argument("pattern: templates must be sorted");
    for (int p : tpl) {
      if (p < 0 || p >= static_cast<int>(parts.size())) throw std::invalid_argument("pattern: template names an unknown part");
    }
    if (!seen.insert(tpl).second) throw std::invalid_argument("pattern: duplicate template");
  }
}

PartitionPattern theorem1_pattern() {
  PartitionPattern p;
  p.r = 3;
  p.parts = {"V1", "V2", "V3"};
  p.part_weights = {Surd(make_rational(2, 5)), Surd(make_rational(2, 5)), Surd(make_rational(1, 5))};
  p.templates = {{0, 0, 1}, {0, 1, 2}, {1, 1, 2}};
  p.validate();
  return p;
}

PartitionPattern build_theorem3_pattern(std::int64_t k) {
  if (k < 2) throw std::invalid_argument("theorem-3 pattern needs k >= 2");
  PartitionPattern p;
  p.r = 3;
  const int head = static_cast<int>(2 * k);
  for (int i = 0; i <= head; ++i) p.parts.push_back("V" + std::to_string(i + 1));
  const Surd w = theorem3_head_part_weight(k);
  p.part_weights.assign(static_cast<std::size_t>(head), w);
  p.part_weights.push_back(theorem3_last_part_weight(k));
  for (int a = 0; a < head; ++a) {
    for (int b = a + 1; b < head; ++b) {
      for (int c = b + 1; c < head; ++c) p.templates.push_back({a, b, c});
    }
  }
  for (int a = 0; a < head; ++a) {
    for (int b = a + 1; b < head; ++b) p.templates.push_back({a, b, head});
  }
  for (int a = 0; a < head; ++a) p.templates.push_back({a, head, head});
  p.validate();
  return p;
}

std::vector<std::pair<Vertex, Vertex>> part_blocks(const std::vector<int>& sizes) {
  std::vector<std::pair<Vertex, Vertex>> blocks;
  Vertex next = 1;
  for (int s : sizes) {
    blocks.emplace_back(next, next + s - 1);
    next += s;
  }
  return blocks;
}

UniformHypergraph expand_templates(int r, const std::vector<int>& sizes, const std::vector<std::vector<int>>& templates) {
  const auto blocks = part_blocks(sizes);
  const int n = std::accumulate(sizes.begin(), sizes.end(), 0);
  std::vector<Edge> edges;
  for (const auto& tpl : templates) {
    // (part, multiplicity) groups of the sorted template.
    std::vector<std::pair<int, int>> groups;
    for (int p : tpl) {
      if (!groups.empty() && groups.back().first == p) {
        ++groups.back().second;
      } else {
        groups.emplace_back(p, 1);
      }
    }
    Edge current;
    auto choose = [&](auto&& self, std::size_t group, int picked, Vertex from) -> void {
      if (group == groups.size()) {
        edges.push_back(current);
        return;
      }
      const auto [part, mult] = groups[group];
      if (picked == mult) {
        const std::size_t next = group + 1;
        self(self, next, 0, next < groups.size() ? blocks[static_cast<std::size_t>(groups[next].first)].first : 0);
        return;
      }
      const Vertex hi = blocks[static_cast<std::size_t>(part)].second;
      for (Vertex v = from; v <= hi - (mult - picked - 1); ++v) {
        current.push_back(v);
        self(self, group, picked + 1, v + 1);
        current.pop_back();
      }
    };
    if (!groups.empty()) choose(choose, 0, 0, blocks[static_cast<std::size_t>(groups[0].first)].first);
  }
  return UniformHypergraph(r, n, std::move(edges));
}

namespace {

/// Exact floor of a non-negative surd.
std::int64_t floor_of(const Surd& x) {
  auto f = static_cast<std::int64_t>(std::floor(x.to_double()));
  while (Surd(f) > x) --f;
  while (Surd(f + 1) <= x) ++f;
  return f;
}

}  // namespace

InstantiatedPattern instantiate_pattern(const PartitionPattern& p, int t) {
  p.validate();
  if (t < static_cast<int>(p.parts.size())) throw std::invalid_argument("instantiate_pattern needs t >= number of parts");
  const std::size_t count = p.parts.size();
  std::vector<int> sizes(count);
  std::vector<Surd> remainders(count);
  int assigned = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const Surd exact = p.part_weights[i] * Surd(static_cast<std::int64_t>(t));
    const std::int64_t f = floor_of(exact);
    sizes[i] = static_cast<int>(f);
    remainders[i] = exact - Surd(f);
    assigned += sizes[i];
  }
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return remainders[a] > remainders[b]; });
  for (int deficit = t - assigned, k = 0; deficit > 0; --deficit, ++k) ++sizes[order[static_cast<std::size_t>(k) % count]];

  for (const auto& tpl : p.templates) {
    std::map<int, int> need;
    for (int part : tpl) ++need[part];
    for (const auto& [part, mult] : need) {
      if (sizes[static_cast<std::size_t>(part)] < mult) {
        throw std::invalid_argument("part " + p.parts[static_cast<std::size_t>(part)] + " rounds to size " +
                                    std::to_string(sizes[static_cast<std::size_t>(part)]) + " but a template needs " +
                                    std::to_string(mult));
      }
    }
  }
  return {expand_templates(p.r, sizes, p.templates), sizes, part_blocks(sizes)};
}

UniformHypergraph build_b2k(int k, int n) {
  if (k < 1) throw std::invalid_argument("build_b2k needs k >= 1");
  if (n < 3) throw std::invalid_argument("build_b2k needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex a = 1; a <= n; ++a) {
    for (Vertex b = a + 1; b <= n; ++b) {
      for (Vertex c = b + 1; c <= n; ++c) {
        if (a <= 2 * k) edges.push_back({a, b, c});
      }
    }
  }
  return UniformHypergraph(3, n, std::move(edges));
}

UniformHypergraph build_theorem1_base(int t) {
  if (t % 5 != 0 || t < 10) throw std::invalid_argument("theorem-1 base needs t divisible by 5 and t >= 10");
  const auto p = theorem1_pattern();
  return expand_templates(3, {2 * t / 5, 2 * t / 5, t / 5}, p.templates);
}

// ---------------------------------------------------------------------------
// Local sparsity

namespace {

/// Mutable edge store with vertex incidence, used both by the checker and by
/// the generator's incremental test.
class SparsityIndex {
 public:
  SparsityIndex(int r, int n, int s) : r_(r), s_(s), incidence_(static_cast<std::size_t>(n) + 1), cover_(static_cast<std::size_t>(n) + 1, 0) {}

  std::size_t add(const Edge& e) {
    edges_.push_back(e);
    for (Vertex v : e) incidence_[static_cast<std::size_t>(v)].push_back(edges_.size() - 1);
    return edges_.size() - 1;
  }

  void remove_last() {
    for (Vertex v : edges_.back()) incidence_[static_cast<std::size_t>(v)].pop_back();
    edges_.pop_back();
  }

  std::size_t size() const { return edges_.size(); }

  /// Connected edge sets containing `root`; only edges accepted by `allowed`
  /// may join. ESU-style enumeration, each set visited once.
  template <typename Allowed>
  std::optional<std::vector<Vertex>> violation_rooted(std::size_t root, Allowed allowed) {
    const int max_edges = s_ - r_ + 2;
    if (max_edges < 2) return std::nullopt;
    std::vector<std::size_t> sub{root};
    int span = 0;
    for (Vertex v : edges_[root]) span += cover(v, +1);
    std::vector<std::size_t> ext = neighbours(root, allowed, sub);
    std::optional<std::vector<Vertex>> found;
    extend(sub, ext, span, max_edges, allowed, found);
    for (Vertex v : edges_[root]) cover(v, -1);
    return found;
  }

 private:
  /// Adjusts the coverage count; returns 1 when v enters or leaves the span.
  int cover(Vertex v, int delta) {
    int& c = cover_[static_cast<std::size_t>(v)];
    const bool was = c > 0;
    c += delta;
    return was != (c > 0) ? 1 : 0;
  }

  bool touches_span(std::size_t e) const {
    for (Vertex v : edges_[e]) {
      if (cover_[static_cast<std::size_t>(v)] > 0) return true;
    }
    return false;
  }

  template <typename Allowed>
  std::vector<std::size_t> neighbours(std::size_t e, Allowed allowed, const std::vector<std::size_t>& sub) const {
    std::vector<std::size_t> out;
    for (Vertex v : edges_[e]) {
      for (std::size_t u : incidence_[static_cast<std::size_t>(v)]) {
        if (u == e || !allowed(u) || std::find(sub.begin(), sub.end(), u) != sub.end()) continue;
        out.push_back(u);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<Vertex> span_vertices() const {
    std::vector<Vertex> out;
    for (std::size_t v = 1; v < cover_.size(); ++v) {
      if (cover_[v] > 0) out.push_back(static_cast<Vertex>(v));
    }
    return out;
  }

  template <typename Allowed>
  void extend(std::vector<std::size_t>& sub, std::vector<std::size_t> ext, int span, int max_edges, Allowed allowed,
              std::optional<std::vector<Vertex>>& found) {
    const int m = static_cast<int>(sub.size());
    if (m >= 2 && span <= m + r_ - 2) {
      found = span_vertices();
      return;
    }
    if (m == max_edges) return;
    while (!ext.empty() && !found) {
      const std::size_t w = ext.back();
      ext.pop_back();
      int added = 0;
      for (Vertex v : edges_[w]) added += cover_[static_cast<std::size_t>(v)] > 0 ? 0 : 1;
      if (span + added > s_) continue;
      // Exclusive neighbours of w relative to the current set, computed
      // before w joins the span; only needed if the set can still grow.
      std::vector<std::size_t> next = ext;
      if (m + 1 < max_edges) {
        for (std::size_t u : neighbours(w, allowed, sub)) {
          if (!touches_span(u) && std::find(ext.begin(), ext.end(), u) == ext.end()) next.push_back(u);
        }
      }
      for (Vertex v : edges_[w]) cover(v, +1);
      sub.push_back(w);
      extend(sub, std::move(next), span + added, max_edges, allowed, found);
      sub.pop_back();
      for (Vertex v : edges_[w]) cover(v, -1);
    }
  }

  int r_;
  int s_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incidence_;
  std::vector<int> cover_;
};

}  // namespace

LocalSparsityResult check_local_sparsity(const UniformHypergraph& a, int s) {
  if (s < a.arity()) throw std::invalid_argument("local sparsity needs s >= r");
  SparsityIndex index(a.arity(), a.order(), s);
  for (const auto& e : a.edges()) index.add(e);
  for (std::size_t root = 0; root < index.size(); ++root) {
    if (auto witness = index.violation_rooted(root, [root](std::size_t u) { return u > root; })) {
      return {false, *witness};
    }
  }
  return {};
}

LocalSparsityResult check_local_sparsity_naive(const UniformHypergraph& a, int s) {
  if (s < a.arity()) throw std::invalid_argument("local sparsity needs s >= r");
  const int n = a.order();
  const int r = a.arity();
  const auto edges = a.edges();
  for (int size = r; size <= std::min(s, n); ++size) {
    std::vector<bool> mask(static_cast<std::size_t>(n), false);
    std::fill(mask.begin(), mask.begin() + size, true);
    do {
      std::vector<bool> in(static_cast<std::size_t>(n) + 1, false);
      std::vector<Vertex> subset;
      for (int i = 0; i < n; ++i) {
        if (mask[static_cast<std::size_t>(i)]) {
          in[static_cast<std::size_t>(i) + 1] = true;
          subset.push_back(i + 1);
        }
      }
      int inside = 0;
      for (const auto& e : edges) {
        if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return in[static_cast<std::size_t>(v)]; })) ++inside;
      }
      if (inside > size - r + 1) return {false, subset};
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  return {};
}

void SparseAdderParams::validate() const {
  if (r < 2) throw std::invalid_argument("adder arity must be >= 2");
  if (s < r) throw std::invalid_argument("adder needs s >= r");
  if (t < r) throw std::invalid_argument("adder needs t >= r");
  if (!(c > 0)) throw std::invalid_argument("adder needs c > 0");
  if (max_attempts < 1) throw std::invalid_argument("adder needs max_attempts >= 1");
}

long SparseAdderParams::target_edges() const {
  return static_cast<long>(std::ceil(c * std::pow(static_cast<double>(t), r - 1) - 1e-9));
}

UniformHypergraph generate_sparse_adder(const SparseAdderParams& p) {
  p.validate();
  const long target = p.target_edges();
  std::mt19937_64 rng(p.seed);
  std::uniform_int_distribution<Vertex> pick(1, p.t);
  SparsityIndex index(p.r, p.t, p.s);
  std::set<Edge> present;

  long attempts = 0;
  while (static_cast<long>(present.size()) < target) {
    if (attempts++ >= p.max_attempts) {
      throw GeneratorFailure("sparse adder: reached " + std::to_string(present.size()) + " of " + std::to_string(target) +
                             " edges after " + std::to_string(p.max_attempts) +
                             " attempts; existence is only guaranteed for large t, try a larger t or smaller c");
    }
    Edge e;
    while (static_cast<int>(e.size()) < p.r) {
      const Vertex v = pick(rng);
      if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
    }
    std::sort(e.begin(), e.end());
    if (present.count(e)) continue;
    const std::size_t root = index.add(e);
    if (index.violation_rooted(root, [root](std::size_t u) { return u != root; })) {
      index.remove_last();
    } else {
      present.insert(e);
    }
  }
  return UniformHypergraph(p.r, p.t, std::vector<Edge>(present.begin(), present.end()));
}

UniformHypergraph assemble_gstar(const UniformHypergraph& base, const UniformHypergraph& adder,
                                 std::vector<Vertex> target_part) {
  if (base.arity() != adder.arity()) throw std::invalid_argument("assemble_gstar: arity mismatch");
  std::sort(target_part.begin(), target_part.end());
  if (static_cast<int>(target_part.size()) != adder.order()) {
    throw std::invalid_argument("assemble_gstar: adder has " + std::to_string(adder.order()) + " vertices but target part has " +
                                std::to_string(target_part.size()));
  }
  for (Vertex v : target_part) {
    if (v < 1 || v > base.order()) throw std::invalid_argument("assemble_gstar: target vertex out of range");
  }
  auto edges = base.edges();
  for (std::size_t e = 0; e < adder.edge_count(); ++e) {
    Edge mapped;
    for (Vertex v : adder.edge(e)) mapped.push_back(target_part[static_cast<std::size_t>(v - 1)]);
    if (base.contains(mapped)) {
      throw std::invalid_argument("assemble_gstar: adder edge " + format_edge_set({mapped}) + " collides with base");
    }
    edges.push_back(std::move(mapped));
  }
  return UniformHypergraph(base.arity(), base.order(), std::move(edges));
}

namespace {

std::vector<Vertex> block_vertices(std::pair<Vertex, Vertex> block) {
  std::vector<Vertex> out;
  for (Vertex v = block.first; v <= block.second; ++v) out.push_back(v);
  return out;
}

}  // namespace

GStar build_gstar_theorem1(int t, int s, double c, std::uint64_t seed, long max_attempts) {
  auto base = build_theorem1_base(t);
  const std::vector<int> sizes{2 * t / 5, 2 * t / 5, t / 5};
  const auto blocks = part_blocks(sizes);
  SparseAdderParams params{s, c, sizes[0], 3, seed, max_attempts};
  auto adder = generate_sparse_adder(params);
  auto target = block_vertices(blocks[0]);
  auto graph = assemble_gstar(base, adder, target);
  ConstructionMetadata meta{"gstar-t1", std::nullopt, t, s, c, seed, blocks};
  return {std::move(graph), std::move(base), std::move(adder), std::move(target), std::move(meta)};
}

GStar build_gstar_theorem3(std::int64_t k, int t, int s, double c, std::uint64_t seed, long max_attempts) {
  auto inst = instantiate_pattern(build_theorem3_pattern(k), t);
  SparseAdderParams params{s, c, inst.sizes.back(), 3, seed, max_attempts};
  auto adder = generate_sparse_adder(params);
  auto target = block_vertices(inst.blocks.back());
  auto graph = assemble_gstar(inst.graph, adder, target);
  ConstructionMetadata meta{"gstar-t3", k, t, s, c, seed, inst.blocks};
  return {std::move(graph), std::move(inst.graph), std::move(adder), std::move(target), std::move(meta)};
}

}  // namespace hyperlag
