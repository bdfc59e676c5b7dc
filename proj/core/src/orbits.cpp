#include "graphent/orbits.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>

#include "graphent/error.hpp"

namespace graphent {

OrbitPartition::OrbitPartition(std::vector<std::vector<Vertex>> blocks)
    : blocks_(std::move(blocks)) {
  std::size_t total = 0;
  Vertex max_member = 0;
  for (auto& block : blocks_) {
    if (block.empty()) throw ValidationError("orbit partition has an empty block");
    std::sort(block.begin(), block.end());
    total += block.size();
    max_member = std::max(max_member, block.back());
  }
  if (!blocks_.empty() && max_member + std::size_t{1} != total) {
    throw ValidationError("orbit blocks do not cover 0..n-1");
  }
  std::sort(blocks_.begin(), blocks_.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  block_of_.assign(total, std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (Vertex v : blocks_[i]) {
      if (block_of_[v] != std::numeric_limits<std::size_t>::max()) {
        throw ValidationError("orbit blocks overlap at vertex " +
                              std::to_string(v));
      }
      block_of_[v] = i;
    }
  }
}

std::vector<std::size_t> OrbitPartition::block_sizes() const {
  std::vector<std::size_t> sizes;
  sizes.reserve(blocks_.size());
  for (const auto& b : blocks_) sizes.push_back(b.size());
  return sizes;
}

bool is_automorphism(const Graph& g, const std::vector<Vertex>& perm) {
  if (perm.size() != g.num_vertices()) return false;
  for (const Edge& e : g.edges()) {
    if (!g.has_edge(perm[e.first], perm[e.second])) return false;
  }
  // Edge counts match, so an injective edge map is a bijection on edges.
  std::vector<bool> hit(perm.size(), false);
  for (Vertex v : perm) {
    if (v >= perm.size() || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), Vertex{0});
  }
  Vertex find(Vertex x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<Vertex> parent_;
};

OrbitPartition partition_from(UnionFind& uf, std::size_t n) {
  std::vector<std::vector<Vertex>> by_root(n);
  for (Vertex v = 0; v < n; ++v) by_root[uf.find(v)].push_back(v);
  std::vector<std::vector<Vertex>> blocks;
  for (auto& b : by_root) {
    if (!b.empty()) blocks.push_back(std::move(b));
  }
  return OrbitPartition(std::move(blocks));
}

using Color = std::uint32_t;

// A stable coloring plus the exact record of how refinement reached it.
// Two colorings related by an isomorphism produce identical traces, and
// color c on one side corresponds to color c on the other.
struct Refined {
  std::vector<Color> colors;
  std::vector<std::uint32_t> trace;
  std::size_t num_colors = 0;
};

// Ranks arbitrary per-vertex keys into dense colors, recording the sorted
// distinct keys with multiplicities in `trace`.
template <class Key>
std::size_t rank_keys(const std::vector<Key>& keys, std::vector<Color>& colors,
                      std::vector<std::uint32_t>& trace) {
  const std::size_t n = keys.size();
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(),
            [&](auto a, auto b) { return keys[a] < keys[b]; });
  colors.assign(n, 0);
  std::size_t distinct = 0;
  std::vector<std::uint32_t> counts;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && keys[order[i - 1]] < keys[order[i]]) ++distinct;
    colors[order[i]] = static_cast<Color>(distinct);
    if (counts.size() <= distinct) counts.push_back(0);
    ++counts[distinct];
  }
  const std::size_t num = n == 0 ? 0 : distinct + 1;
  trace.push_back(static_cast<std::uint32_t>(num));
  for (std::size_t i = 0, c = 0; i < n; ++i) {
    if (i == 0 || keys[order[i - 1]] < keys[order[i]]) {
      const auto& key = keys[order[i]];
      trace.push_back(counts[c++]);
      trace.push_back(static_cast<std::uint32_t>(key.size()));
      trace.insert(trace.end(), key.begin(), key.end());
    }
  }
  return num;
}

// Iterated 1-dimensional refinement: new color = rank of
// (own color, sorted neighbor colors) until the color count stabilizes.
Refined refine(const Graph& g, std::vector<Color> colors, std::size_t num_colors) {
  const std::size_t n = g.num_vertices();
  Refined out;
  std::vector<std::vector<std::uint32_t>> keys(n);
  while (true) {
    for (Vertex v = 0; v < n; ++v) {
      auto& key = keys[v];
      key.clear();
      key.push_back(colors[v]);
      for (Vertex w : g.neighbors(v)) key.push_back(colors[w]);
      std::sort(key.begin() + 1, key.end());
    }
    std::vector<Color> next;
    const std::size_t count = rank_keys(keys, next, out.trace);
    colors = std::move(next);
    if (count == num_colors) break;
    num_colors = count;
  }
  out.colors = std::move(colors);
  out.num_colors = num_colors;
  return out;
}

Refined individualize(const Graph& g, const Refined& base, Vertex v) {
  std::vector<Color> colors = base.colors;
  colors[v] = static_cast<Color>(base.num_colors);
  // Callers only compare results of individualizing compatible bases, so
  // the trace covers just this refinement.
  return refine(g, std::move(colors), base.num_colors + 1);
}

// Depth-first search for an automorphism mapping coloring `a` onto
// coloring `b` (vertex of color c in a goes to the vertex of color c in b).
// Candidate images are tried in ascending vertex order.
std::optional<std::vector<Vertex>> extend(const Graph& g, const Refined& a,
                                          const Refined& b) {
  const std::size_t n = g.num_vertices();
  if (a.num_colors == n) {
    std::vector<Vertex> where(n);
    for (Vertex y = 0; y < n; ++y) where[b.colors[y]] = y;
    std::vector<Vertex> perm(n);
    for (Vertex x = 0; x < n; ++x) perm[x] = where[a.colors[x]];
    if (is_automorphism(g, perm)) return perm;
    return std::nullopt;
  }

  std::vector<std::uint32_t> cell_size(a.num_colors, 0);
  for (Color c : a.colors) ++cell_size[c];
  Color target = 0;
  while (cell_size[target] < 2) ++target;
  Vertex pivot = 0;
  while (a.colors[pivot] != target) ++pivot;

  const Refined left = individualize(g, a, pivot);
  for (Vertex image = 0; image < n; ++image) {
    if (b.colors[image] != target) continue;
    const Refined right = individualize(g, b, image);
    if (right.trace != left.trace) continue;
    if (auto perm = extend(g, left, right)) return perm;
  }
  return std::nullopt;
}

Refined initial_coloring(const Graph& g) {
  const std::size_t n = g.num_vertices();
  const DistanceData dist = distance_matrix(g);
  constexpr std::uint32_t kUnreachableKey = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::vector<std::uint32_t>> keys(n);
  for (Vertex v = 0; v < n; ++v) {
    auto& key = keys[v];
    key.push_back(static_cast<std::uint32_t>(g.degree(v)));
    for (Vertex w = 0; w < n; ++w) {
      key.push_back(dist.at(v, w).value_or(kUnreachableKey));
    }
    std::sort(key.begin() + 1, key.end());
  }
  Refined start;
  std::vector<Color> colors;
  const std::size_t count = rank_keys(keys, colors, start.trace);
  Refined stable = refine(g, std::move(colors), count);
  stable.trace.insert(stable.trace.begin(), start.trace.begin(), start.trace.end());
  return stable;
}

}  // namespace

OrbitPartition vertex_orbits(const Graph& g, const OrbitOptions& options) {
  const std::size_t n = g.num_vertices();
  if (n == 0) throw DomainError("vertex_orbits requires at least one vertex");
  if (n > options.max_vertices) {
    throw CapacityError("vertex_orbits supports at most " +
                        std::to_string(options.max_vertices) + " vertices, got " +
                        std::to_string(n));
  }

  const Refined base = initial_coloring(g);
  UnionFind uf(n);

  std::vector<std::vector<Vertex>> cells(base.num_colors);
  for (Vertex v = 0; v < n; ++v) cells[base.colors[v]].push_back(v);

  for (const auto& cell : cells) {
    std::vector<Vertex> reps;
    for (Vertex v : cell) {
      bool placed = false;
      for (Vertex r : reps) {
        if (uf.find(r) == uf.find(v)) {
          placed = true;
          break;
        }
      }
      for (std::size_t i = 0; !placed && i < reps.size(); ++i) {
        const Refined from = individualize(g, base, reps[i]);
        const Refined to = individualize(g, base, v);
        if (from.trace != to.trace) continue;
        if (auto perm = extend(g, from, to)) {
          for (Vertex x = 0; x < n; ++x) uf.unite(x, (*perm)[x]);
          placed = true;
        }
      }
      if (!placed) reps.push_back(v);
    }
  }
  return partition_from(uf, n);
}

namespace {

// Calls visit(perm) for every automorphism of g (n <= 8).
template <class Visit>
void for_each_automorphism_brute_force(const Graph& g, Visit&& visit) {
  const std::size_t n = g.num_vertices();
  if (n == 0) throw DomainError("brute-force orbits require at least one vertex");
  if (n > kBruteForceOrbitLimit) {
    throw CapacityError("brute-force orbit enumeration is limited to n <= 8");
  }
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const Edge& e : g.edges()) {
    adj[e.first][e.second] = true;
    adj[e.second][e.first] = true;
  }
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  do {
    bool preserves = true;
    for (Vertex u = 0; u < n && preserves; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (adj[u][v] != adj[perm[u]][perm[v]]) {
          preserves = false;
          break;
        }
      }
    }
    if (preserves) visit(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

OrbitPartition brute_force_orbits(const Graph& g) {
  UnionFind uf(g.num_vertices());
  for_each_automorphism_brute_force(g, [&](const std::vector<Vertex>& perm) {
    for (Vertex x = 0; x < perm.size(); ++x) uf.unite(x, perm[x]);
  });
  return partition_from(uf, g.num_vertices());
}

std::size_t brute_force_automorphism_count(const Graph& g) {
  std::size_t count = 0;
  for_each_automorphism_brute_force(g, [&](const std::vector<Vertex>&) { ++count; });
  return count;
}

}  // namespace graphent
