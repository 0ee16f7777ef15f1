#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperlag/hypercore.hpp"
#include "hyperlag/surd.hpp"

namespace hyperlag {

/// Weighted multipartite edge pattern. A template is a sorted multiset of
/// 0-based part indices of total size r: {0, 0, 1} means two vertices from
/// part 0 and one from part 1.
struct PartitionPattern {
  int r = 3;
  std::vector<std::string> parts;
  std::vector<Surd> part_weights;
  std::vector<std::vector<int>> templates;

  /// Weights non-negative and summing to exactly 1; templates of size r over
  /// valid parts, sorted and unique. Throws std::invalid_argument.
  void validate() const;
};

/// V1, V2, V3 with weights 2/5, 2/5, 1/5 and templates V1V2V3, V1V1V2, V2V2V3.
PartitionPattern theorem1_pattern();

/// 2k head parts of weight (2k+1-sqrt(4k-1))/(4k^2+2), one tail part of weight
/// (k sqrt(4k-1)+1-k)/(2k^2+1); triples of head parts, pairs of head parts with
/// the tail, and one head part with two tail vertices.
PartitionPattern build_theorem3_pattern(std::int64_t k);

/// Expands templates over consecutive blocks of the given sizes. Parts smaller
/// than a template's multiplicity simply contribute no edges.
UniformHypergraph expand_templates(int r, const std::vector<int>& sizes, const std::vector<std::vector<int>>& templates);

/// 1-based inclusive label range [lo, hi] of each part; empty parts get hi = lo - 1.
std::vector<std::pair<Vertex, Vertex>> part_blocks(const std::vector<int>& sizes);

struct InstantiatedPattern {
  UniformHypergraph graph;
  std::vector<int> sizes;
  std::vector<std::pair<Vertex, Vertex>> blocks;
};

/// Largest-remainder rounding of weight * t (ties to the lower part index),
/// then template expansion. Throws if a part ends up smaller than some
/// template needs.
InstantiatedPattern instantiate_pattern(const PartitionPattern& p, int t);

/// Triples meeting [2k] on vertex set [n].
UniformHypergraph build_b2k(int k, int n);

/// Three-part base G(t); requires t divisible by 5 and t >= 10.
UniformHypergraph build_theorem1_base(int t);

struct LocalSparsityResult {
  bool sparse = true;
  /// A vertex set V0 with r <= |V0| <= s spanning more than |V0| - r + 1 edges.
  std::vector<Vertex> witness;
};

/// Every V0 with r <= |V0| <= s spans at most |V0| - r + 1 edges. Decided by
/// enumerating connected edge sets of size 2..s-r+2 whose span stays <= s.
LocalSparsityResult check_local_sparsity(const UniformHypergraph& a, int s);

/// Reference check over all vertex subsets; exponential in n.
LocalSparsityResult check_local_sparsity_naive(const UniformHypergraph& a, int s);

struct SparseAdderParams {
  int s = 4;
  double c = 0.1;
  int t = 30;
  int r = 3;
  std::uint64_t seed = 0;
  long max_attempts = 1000000;

  void validate() const;
  /// ceil(c * t^(r-1)).
  long target_edges() const;
};

class GeneratorFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Seeded add-and-repair: draw a random r-set, keep it unless it creates a
/// local-sparsity violation, stop at target_edges(). Throws GeneratorFailure
/// when max_attempts is exhausted.
UniformHypergraph generate_sparse_adder(const SparseAdderParams& p);

/// Union of `base` with `adder` mapped order-preservingly onto `target_part`.
/// Throws on size mismatch or when a mapped adder edge is already in base.
UniformHypergraph assemble_gstar(const UniformHypergraph& base, const UniformHypergraph& adder,
                                 std::vector<Vertex> target_part);

/// Sidecar describing a construction: {"kind","k","t","s","c","seed","parts"}.
struct ConstructionMetadata {
  std::string kind;
  std::optional<std::int64_t> k;
  std::optional<std::int64_t> t;
  std::optional<int> s;
  std::optional<double> c;
  std::optional<std::uint64_t> seed;
  std::vector<std::pair<Vertex, Vertex>> parts;
};

struct Construction {
  UniformHypergraph graph;
  ConstructionMetadata metadata;
};

struct GStar {
  UniformHypergraph graph;
  UniformHypergraph base;
  UniformHypergraph adder;
  std::vector<Vertex> target_part;
  ConstructionMetadata metadata;
};

/// G(t) plus a sparse adder on the first part.
GStar build_gstar_theorem1(int t, int s, double c, std::uint64_t seed, long max_attempts = 1000000);
/// Instantiated (2k+1)-part pattern plus a sparse adder on the tail part.
GStar build_gstar_theorem3(std::int64_t k, int t, int s, double c, std::uint64_t seed, long max_attempts = 1000000);

}  // namespace hyperlag
