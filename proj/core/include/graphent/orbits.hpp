#pragma once

#include <cstddef>
#include <vector>

#include "graphent/graph.hpp"

namespace graphent {

// Partition of the vertex set into automorphism orbits. Blocks are sorted
// internally and ordered by (size, smallest member).
class OrbitPartition {
 public:
  OrbitPartition() = default;
  // Normalizes block order; throws ValidationError unless the blocks are
  // non-empty, disjoint and cover 0..n-1 for n = total vertex count.
  explicit OrbitPartition(std::vector<std::vector<Vertex>> blocks);

  const std::vector<std::vector<Vertex>>& blocks() const noexcept {
    return blocks_;
  }
  std::size_t num_blocks() const noexcept { return blocks_.size(); }
  std::size_t total() const noexcept { return block_of_.size(); }
  std::size_t block_of(Vertex v) const { return block_of_.at(v); }
  std::vector<std::size_t> block_sizes() const;

  friend bool operator==(const OrbitPartition& a, const OrbitPartition& b) {
    return a.blocks_ == b.blocks_;
  }

 private:
  std::vector<std::vector<Vertex>> blocks_;
  std::vector<std::size_t> block_of_;
};

struct OrbitOptions {
  // Supported envelope; larger graphs raise CapacityError.
  std::size_t max_vertices = 64;
};

// Exact vertex orbits of Aut(g): color refinement seeded with degree and
// distance invariants, confirmed by backtracking search for automorphisms.
OrbitPartition vertex_orbits(const Graph& g, const OrbitOptions& options = {});

inline constexpr std::size_t kBruteForceOrbitLimit = 8;

// Test oracle: enumerates all n! permutations. n <= 8.
OrbitPartition brute_force_orbits(const Graph& g);
// |Aut(g)| by the same enumeration. n <= 8.
std::size_t brute_force_automorphism_count(const Graph& g);

// True when perm (v -> perm[v]) preserves adjacency.
bool is_automorphism(const Graph& g, const std::vector<Vertex>& perm);

}  // namespace graphent
