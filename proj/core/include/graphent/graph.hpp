#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace graphent {

using Vertex = std::uint32_t;

// Unordered edge, always stored with first < second.
struct Edge {
  Vertex first;
  Vertex second;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;

  // Builds from an edge list. Duplicates (in either orientation) collapse;
  // self-loops and out-of-range endpoints throw ValidationError.
  Graph(std::size_t num_vertices, std::span<const Edge> edges);
  Graph(std::size_t num_vertices,
        std::initializer_list<std::pair<Vertex, Vertex>> edges);

  std::size_t num_vertices() const noexcept { return adjacency_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  // Sorted, ascending (first, second).
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  // Sorted neighbor list.
  std::span<const Vertex> neighbors(Vertex v) const {
    return adjacency_.at(v);
  }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool has_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.num_vertices() == b.num_vertices() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

enum class GraphClass { kStar, kPath, kCycle, kWheel, kComplete, kGnp };

std::string_view to_string(GraphClass c);
// Throws DomainError for unknown names.
GraphClass parse_graph_class(std::string_view name);

struct GnpParams {
  double p = 0.5;
  std::uint64_t seed = 0;
};

// Edge-list text: one "u v" pair per non-empty line, '#' starts a comment
// line. n is 1 + max id unless `num_vertices` is given; without an override
// every id below the max must appear in some edge.
Graph parse_edge_list(std::istream& in,
                      std::optional<std::size_t> num_vertices = std::nullopt);
Graph parse_edge_list(std::string_view text,
                      std::optional<std::size_t> num_vertices = std::nullopt);

// One "u v\n" line per edge, u < v, ascending.
void write_edge_list(const Graph& g, std::ostream& out);
std::string to_edge_list(const Graph& g);

// Star: hub 0. Wheel W_n: hub 0 joined to the cycle 1..n-1. Path: 0-1-...-n-1.
// gnp requires `params`.
Graph generate_graph(GraphClass cls, std::size_t n,
                     std::optional<GnpParams> params = std::nullopt);

struct ConnectedSample {
  Graph graph;
  std::size_t redraws = 0;
};

// G(n, p) rejection-sampled until connected. Draw i uses stream
// mix_seed(seed, {i}). Throws DomainError after `max_redraws` failures.
ConnectedSample generate_connected_gnp(std::size_t n, double p,
                                       std::uint64_t seed,
                                       std::size_t max_redraws = 10000);

bool is_connected(const Graph& g);

// Applies vertex relabeling v -> perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

using Distance = std::uint32_t;

// All-pairs hop distances. Unreachable pairs hold std::nullopt.
class DistanceData {
 public:
  DistanceData() = default;
  explicit DistanceData(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  std::optional<Distance> at(Vertex u, Vertex v) const {
    return dist_[static_cast<std::size_t>(u) * n_ + v];
  }
  void set(Vertex u, Vertex v, std::optional<Distance> d) {
    dist_[static_cast<std::size_t>(u) * n_ + v] = d;
  }
  // nullopt when some vertex is unreachable from v.
  std::optional<Distance> eccentricity(Vertex v) const { return ecc_.at(v); }
  // Largest finite distance (0 for empty or edgeless graphs).
  Distance diameter() const noexcept { return eta_; }
  bool connected() const noexcept { return connected_; }

 private:
  friend DistanceData distance_matrix(const Graph& g);

  std::size_t n_ = 0;
  std::vector<std::optional<Distance>> dist_;
  std::vector<std::optional<Distance>> ecc_;
  Distance eta_ = 0;
  bool connected_ = true;
};

DistanceData distance_matrix(const Graph& g);

// counts[j-1] = |S_j(v)| for j = 1..diameter.
struct SphereProfile {
  Vertex vertex = 0;
  std::vector<std::size_t> counts;
};

// Throws DomainError for disconnected graphs.
SphereProfile j_sphere_profile(const Graph& g, const DistanceData& d, Vertex v);

}  // namespace graphent
