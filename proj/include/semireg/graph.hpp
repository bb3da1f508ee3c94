#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semireg/perm.hpp"

namespace semireg {

using Vertex = Point;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}
  auto operator<=>(const Edge&) const = default;
};

/// Structured coordinates of a vertex, e.g. (n0, ..., n_{s-1}, x, +).
struct VertexLabel {
  std::vector<int> coords;
  char sign = 0;  // '+', '-' or 0 when absent
  std::string to_string() const;
  auto operator<=>(const VertexLabel&) const = default;
};

/// Simple undirected graph with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  /// Throws std::invalid_argument on loops, repeated edges or out-of-range vertices.
  Graph(std::size_t vertex_count, const std::vector<Edge>& edges);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;
  /// All edges, sorted.
  std::vector<Edge> edges() const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<VertexLabel>& labels() const noexcept { return labels_; }
  /// Throws std::invalid_argument unless there is one distinct label per vertex.
  Graph with_labels(std::vector<VertexLabel> labels) const;

  /// The image graph under v -> map[v].
  Graph relabeled(const Permutation& map) const;

  bool operator==(const Graph& rhs) const { return adjacency_ == rhs.adjacency_; }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<VertexLabel> labels_;
  std::size_t edge_count_ = 0;
};

bool is_connected(const Graph& g);
/// Number of vertices at distance 0, 1, 2, ... from v.
std::vector<std::size_t> distance_profile(const Graph& g, Vertex v);
/// The common degree when the graph is regular.
std::optional<std::size_t> valency(const Graph& g);

Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);

/// Cay(G, S): vertices are the listed elements, {a, b} is an edge iff b * a^-1 is in S.
/// Right multiplication by any element is then an automorphism. Throws
/// std::invalid_argument unless S is inverse-closed, identity-free and inside G.
Graph cayley_graph(const std::vector<Permutation>& elements,
                   const std::vector<Permutation>& connection);
/// Cay(Z_n, S) with S given as residues.
Graph cayley_graph_cyclic(std::size_t n, const std::vector<long long>& connection);

/// Vertex (a, b) is numbered a * |V2| + b.
Graph cartesian_product(const Graph& a, const Graph& b);

/// Every 4-cycle once, as (v0, v1, v2, v3) with v0 minimal and v1 < v3.
std::vector<std::array<Vertex, 4>> four_cycles(const Graph& g);

/// Blocks become vertices in the given order; loops and multiplicities are dropped.
/// Throws std::invalid_argument unless the blocks partition V.
Graph quotient_by_partition(const Graph& g, const std::vector<std::vector<Vertex>>& blocks);

bool is_automorphism(const Graph& g, const Permutation& p);
/// True iff v -> map[v] is an isomorphism from a onto b (re-checked edge by edge).
bool is_isomorphism(const Graph& a, const Graph& b, const Permutation& map);
/// Throws std::invalid_argument unless every generator is an automorphism.
void require_automorphisms(const Graph& g, const PermGroup& group);

/// Edge orbits ordered by their least edge; edges inside an orbit sorted.
std::vector<std::vector<Edge>> edge_orbits(const PermGroup& group, const Graph& g);
bool is_vertex_transitive(const PermGroup& group, const Graph& g);
bool is_arc_transitive(const PermGroup& group, const Graph& g);

/// Induced permutation of a vertex-set family: sets[i] maps to sets[result[i]].
/// Returns nullopt if some image is not in the family.
std::optional<Permutation> induced_on_sets(const Permutation& p,
                                           const std::vector<std::vector<Vertex>>& sets);

}  // namespace semireg
