#include "graphent/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "graphent/error.hpp"
#include "graphent/random.hpp"

namespace graphent {

Graph::Graph(std::size_t num_vertices, std::span<const Edge> edges)
    : adjacency_(num_vertices) {
  edges_.reserve(edges.size());
  for (Edge e : edges) {
    if (e.first == e.second) {
      throw ValidationError("self-loop on vertex " + std::to_string(e.first));
    }
    if (e.first >= num_vertices || e.second >= num_vertices) {
      throw ValidationError("edge endpoint out of range 0.." +
                            std::to_string(num_vertices) + ": " +
                            std::to_string(e.first) + " " +
                            std::to_string(e.second));
    }
    if (e.first > e.second) std::swap(e.first, e.second);
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const Edge& e : edges_) {
    adjacency_[e.first].push_back(e.second);
    adjacency_[e.second].push_back(e.first);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

Graph::Graph(std::size_t num_vertices,
             std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : Graph(num_vertices, [&] {
        std::vector<Edge> out;
        out.reserve(edges.size());
        for (auto [u, v] : edges) out.push_back({u, v});
        return out;
      }()) {}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= num_vertices() || v >= num_vertices()) return false;
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::string_view to_string(GraphClass c) {
  switch (c) {
    case GraphClass::kStar: return "star";
    case GraphClass::kPath: return "path";
    case GraphClass::kCycle: return "cycle";
    case GraphClass::kWheel: return "wheel";
    case GraphClass::kComplete: return "complete";
    case GraphClass::kGnp: return "gnp";
  }
  return "unknown";
}

GraphClass parse_graph_class(std::string_view name) {
  for (GraphClass c : {GraphClass::kStar, GraphClass::kPath, GraphClass::kCycle,
                       GraphClass::kWheel, GraphClass::kComplete,
                       GraphClass::kGnp}) {
    if (to_string(c) == name) return c;
  }
  throw DomainError("unknown graph class '" + std::string(name) + "'");
}

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

Vertex parse_vertex(std::string_view token, std::size_t line) {
  Vertex value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, "expected a non-negative integer, got '" +
                               std::string(token) + "'");
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::istream& in,
                      std::optional<std::size_t> num_vertices) {
  std::vector<Edge> edges;
  std::string raw;
  std::size_t line_no = 0;
  std::optional<Vertex> max_id;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
      std::size_t start = pos;
      while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
      if (pos > start) tokens.push_back(line.substr(start, pos - start));
    }
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected two vertex ids, got " +
                                    std::to_string(tokens.size()) + " tokens");
    }
    const Vertex u = parse_vertex(tokens[0], line_no);
    const Vertex v = parse_vertex(tokens[1], line_no);
    if (u == v) {
      throw ValidationError("line " + std::to_string(line_no) +
                            ": self-loop on vertex " + std::to_string(u));
    }
    max_id = std::max({max_id.value_or(0), u, v});
    edges.push_back({u, v});
  }

  const std::size_t implied = max_id ? std::size_t{*max_id} + 1 : 0;
  if (num_vertices) {
    if (*num_vertices < implied) {
      throw ValidationError("vertex id " + std::to_string(*max_id) +
                            " exceeds declared vertex count " +
                            std::to_string(*num_vertices));
    }
    return Graph(*num_vertices, edges);
  }

  Graph g(implied, edges);
  for (Vertex v = 0; v < implied; ++v) {
    if (g.degree(v) == 0) {
      throw ValidationError("vertex ids must be dense: vertex " +
                            std::to_string(v) + " does not appear");
    }
  }
  return g;
}

Graph parse_edge_list(std::string_view text,
                      std::optional<std::size_t> num_vertices) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in, num_vertices);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  for (const Edge& e : g.edges()) out << e.first << ' ' << e.second << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(g, out);
  return out.str();
}

namespace {

Graph gnp_sample(std::size_t n, double p, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.uniform() < p) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

}  // namespace

Graph generate_graph(GraphClass cls, std::size_t n,
                     std::optional<GnpParams> params) {
  if (n < 1) throw DomainError("graph needs at least one vertex");
  if (n > std::numeric_limits<Vertex>::max()) {
    throw CapacityError("vertex count too large");
  }
  std::vector<Edge> edges;
  const auto last = static_cast<Vertex>(n - 1);
  switch (cls) {
    case GraphClass::kStar:
      if (n < 3) throw DomainError("star requires n >= 3");
      for (Vertex v = 1; v <= last; ++v) edges.push_back({0, v});
      break;
    case GraphClass::kPath:
      for (Vertex v = 0; v < last; ++v) edges.push_back({v, v + 1});
      break;
    case GraphClass::kCycle:
      if (n < 3) throw DomainError("cycle requires n >= 3");
      for (Vertex v = 0; v < last; ++v) edges.push_back({v, v + 1});
      edges.push_back({0, last});
      break;
    case GraphClass::kWheel:
      if (n < 4) throw DomainError("wheel requires n >= 4");
      for (Vertex v = 1; v <= last; ++v) {
        edges.push_back({0, v});
        edges.push_back({v, v == last ? Vertex{1} : v + 1});
      }
      break;
    case GraphClass::kComplete:
      for (Vertex u = 0; u <= last; ++u) {
        for (Vertex v = u + 1; v <= last; ++v) edges.push_back({u, v});
      }
      break;
    case GraphClass::kGnp:
      if (!params) throw DomainError("gnp requires p and seed");
      if (!(params->p >= 0.0 && params->p <= 1.0)) {
        throw DomainError("gnp edge probability must lie in [0, 1]");
      }
      return gnp_sample(n, params->p, params->seed);
  }
  return Graph(n, edges);
}

ConnectedSample generate_connected_gnp(std::size_t n, double p,
                                       std::uint64_t seed,
                                       std::size_t max_redraws) {
  for (std::size_t attempt = 0; attempt <= max_redraws; ++attempt) {
    Graph g = generate_graph(GraphClass::kGnp, n,
                             GnpParams{p, mix_seed(seed, {attempt})});
    if (is_connected(g)) return {std::move(g), attempt};
  }
  throw DomainError("no connected G(" + std::to_string(n) + ", " +
                    std::to_string(p) + ") sample within " +
                    std::to_string(max_redraws) + " redraws");
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.num_vertices()) {
    throw ValidationError("permutation size does not match vertex count");
  }
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) edges.push_back({perm[e.first], perm[e.second]});
  return Graph(g.num_vertices(), edges);
}

DistanceData::DistanceData(std::size_t n)
    : n_(n), dist_(n * n), ecc_(n) {}

DistanceData distance_matrix(const Graph& g) {
  const std::size_t n = g.num_vertices();
  DistanceData d(n);
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    d.set(s, s, 0);
    queue.assign(1, s);
    std::size_t reached = 1;
    Distance far = 0;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      const Distance du = *d.at(s, u);
      for (Vertex w : g.neighbors(u)) {
        if (!d.at(s, w)) {
          d.set(s, w, du + 1);
          far = std::max(far, du + 1);
          ++reached;
          queue.push_back(w);
        }
      }
    }
    d.eta_ = std::max(d.eta_, far);
    if (reached == n) {
      d.ecc_[s] = far;
    } else {
      d.connected_ = false;
    }
  }
  return d;
}

SphereProfile j_sphere_profile(const Graph& g, const DistanceData& d,
                               Vertex v) {
  if (d.size() != g.num_vertices()) {
    throw ValidationError("distance data does not belong to this graph");
  }
  if (v >= g.num_vertices()) throw DomainError("vertex out of range");
  if (!d.connected()) {
    throw DomainError("j-sphere profile requires a connected graph");
  }
  SphereProfile profile{v, std::vector<std::size_t>(d.diameter(), 0)};
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    const Distance j = *d.at(v, x);
    if (j > 0) ++profile.counts[j - 1];
  }
  return profile;
}

}  // namespace graphent
