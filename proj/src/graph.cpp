#include "semireg/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace semireg {

std::string VertexLabel::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
  if (sign) os << (coords.empty() ? "" : ",") << sign;
  os << ')';
  return os.str();
}

Graph::Graph(std::size_t vertex_count, const std::vector<Edge>& edges)
    : adjacency_(vertex_count) {
  for (const auto& e : edges) {
    if (e.u == e.v) throw std::invalid_argument("loop in edge list");
    if (e.v >= vertex_count) throw std::invalid_argument("edge endpoint out of range");
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nb : adjacency_) {
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw std::invalid_argument("repeated edge in edge list");
  }
  edge_count_ = edges.size();
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = adjacency_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::with_labels(std::vector<VertexLabel> labels) const {
  if (labels.size() != vertex_count()) throw std::invalid_argument("label count mismatch");
  std::set<VertexLabel> distinct(labels.begin(), labels.end());
  if (distinct.size() != labels.size()) throw std::invalid_argument("labels are not distinct");
  Graph out = *this;
  out.labels_ = std::move(labels);
  return out;
}

Graph Graph::relabeled(const Permutation& map) const {
  if (map.degree() != vertex_count()) throw std::invalid_argument("relabeling degree mismatch");
  std::vector<Edge> es;
  for (const auto& e : edges()) es.emplace_back(map[e.u], map[e.v]);
  return Graph(vertex_count(), es);
}

std::vector<std::size_t> distance_profile(const Graph& g, Vertex v) {
  std::vector<std::int64_t> dist(g.vertex_count(), -1);
  std::vector<Vertex> queue{v};
  dist[v] = 0;
  std::vector<std::size_t> layers{1};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (Vertex w : g.neighbors(queue[k]))
      if (dist[w] < 0) {
        dist[w] = dist[queue[k]] + 1;
        if (static_cast<std::size_t>(dist[w]) == layers.size()) layers.push_back(0);
        ++layers[static_cast<std::size_t>(dist[w])];
        queue.push_back(w);
      }
  return layers;
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> queue{0};
  seen[0] = 1;
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (Vertex w : g.neighbors(queue[k]))
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
  return queue.size() == n;
}

std::optional<std::size_t> valency(const Graph& g) {
  if (g.vertex_count() == 0) return std::nullopt;
  std::size_t d = g.degree(0);
  for (Vertex v = 1; v < g.vertex_count(); ++v)
    if (g.degree(v) != d) return std::nullopt;
  return d;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> es;
  for (std::size_t i = 0; i < n; ++i)
    es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return Graph(n, es);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return Graph(n, es);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> es;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) es.emplace_back(u, static_cast<Vertex>(a + v));
  return Graph(a + b, es);
}

Graph cayley_graph(const std::vector<Permutation>& elements,
                   const std::vector<Permutation>& connection) {
  std::map<Permutation, Vertex> index;
  for (std::size_t i = 0; i < elements.size(); ++i)
    index.emplace(elements[i], static_cast<Vertex>(i));
  if (index.size() != elements.size()) throw std::invalid_argument("repeated group element");
  std::set<Permutation> conn(connection.begin(), connection.end());
  for (const auto& s : conn) {
    if (!index.count(s)) throw std::invalid_argument("connection element outside the group");
    if (s.is_identity()) throw std::invalid_argument("connection set contains the identity");
    if (!conn.count(s.inverse())) throw std::invalid_argument("connection set not inverse-closed");
  }
  std::set<Edge> es;
  for (std::size_t a = 0; a < elements.size(); ++a)
    for (const auto& s : conn) {
      auto it = index.find(s * elements[a]);
      if (it == index.end()) throw std::invalid_argument("element list is not closed under products");
      es.emplace(static_cast<Vertex>(a), it->second);
    }
  return Graph(elements.size(), std::vector<Edge>(es.begin(), es.end()));
}

Graph cayley_graph_cyclic(std::size_t n, const std::vector<long long>& connection) {
  std::set<long long> conn;
  for (long long s : connection) conn.insert(((s % static_cast<long long>(n)) + n) % n);
  for (long long s : conn) {
    if (s == 0) throw std::invalid_argument("connection set contains the identity");
    if (!conn.count((static_cast<long long>(n) - s) % n))
      throw std::invalid_argument("connection set not inverse-closed");
  }
  std::set<Edge> es;
  for (std::size_t a = 0; a < n; ++a)
    for (long long s : conn)
      es.emplace(static_cast<Vertex>(a), static_cast<Vertex>((a + static_cast<std::size_t>(s)) % n));
  return Graph(n, std::vector<Edge>(es.begin(), es.end()));
}

Graph cartesian_product(const Graph& a, const Graph& b) {
  const std::size_t nb = b.vertex_count();
  std::vector<Edge> es;
  for (Vertex x = 0; x < a.vertex_count(); ++x)
    for (const auto& e : b.edges())
      es.emplace_back(static_cast<Vertex>(x * nb + e.u), static_cast<Vertex>(x * nb + e.v));
  for (const auto& e : a.edges())
    for (Vertex y = 0; y < nb; ++y)
      es.emplace_back(static_cast<Vertex>(e.u * nb + y), static_cast<Vertex>(e.v * nb + y));
  return Graph(a.vertex_count() * nb, es);
}

std::vector<std::array<Vertex, 4>> four_cycles(const Graph& g) {
  std::vector<std::array<Vertex, 4>> out;
  for (Vertex v0 = 0; v0 < g.vertex_count(); ++v0) {
    auto nb = g.neighbors(v0);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      Vertex v1 = nb[i];
      if (v1 < v0) continue;
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        Vertex v3 = nb[j];
        for (Vertex v2 : g.neighbors(v1))
          if (v2 > v0 && v2 != v3 && g.adjacent(v2, v3)) out.push_back({v0, v1, v2, v3});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph quotient_by_partition(const Graph& g, const std::vector<std::vector<Vertex>>& blocks) {
  const std::size_t n = g.vertex_count();
  std::vector<std::ptrdiff_t> block_of(n, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw std::invalid_argument("empty block");
    for (Vertex v : blocks[b]) {
      if (v >= n || block_of[v] >= 0) throw std::invalid_argument("blocks do not partition V");
      block_of[v] = static_cast<std::ptrdiff_t>(b);
    }
  }
  for (auto b : block_of)
    if (b < 0) throw std::invalid_argument("blocks do not cover V");
  std::set<Edge> es;
  for (const auto& e : g.edges()) {
    auto a = static_cast<Vertex>(block_of[e.u]), b = static_cast<Vertex>(block_of[e.v]);
    if (a != b) es.emplace(a, b);
  }
  return Graph(blocks.size(), std::vector<Edge>(es.begin(), es.end()));
}

bool is_automorphism(const Graph& g, const Permutation& p) { return is_isomorphism(g, g, p); }

bool is_isomorphism(const Graph& a, const Graph& b, const Permutation& map) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  if (map.degree() != a.vertex_count()) return false;
  for (const auto& e : a.edges())
    if (!b.adjacent(map[e.u], map[e.v])) return false;
  return true;
}

void require_automorphisms(const Graph& g, const PermGroup& group) {
  if (group.degree() != g.vertex_count())
    throw std::invalid_argument("group degree does not match the vertex count");
  for (const auto& s : group.generators())
    if (!is_automorphism(g, s)) throw std::invalid_argument("generator is not a graph automorphism");
}

std::vector<std::vector<Edge>> edge_orbits(const PermGroup& group, const Graph& g) {
  require_automorphisms(g, group);
  auto es = g.edges();
  std::map<Edge, std::size_t> index;
  for (std::size_t i = 0; i < es.size(); ++i) index.emplace(es[i], i);
  std::vector<Permutation> induced;
  for (const auto& s : group.generators()) {
    std::vector<Point> img(es.size());
    for (std::size_t i = 0; i < es.size(); ++i)
      img[i] = static_cast<Point>(index.at(Edge(s[es[i].u], s[es[i].v])));
    induced.emplace_back(std::move(img));
  }
  std::vector<std::vector<Edge>> out;
  for (const auto& orb : orbits_of(es.size(), induced)) {
    std::vector<Edge> part;
    for (Point i : orb) part.push_back(es[i]);
    out.push_back(std::move(part));
  }
  return out;
}

bool is_vertex_transitive(const PermGroup& group, const Graph& g) {
  require_automorphisms(g, group);
  return group.is_transitive();
}

bool is_arc_transitive(const PermGroup& group, const Graph& g) {
  require_automorphisms(g, group);
  if (g.edge_count() == 0) return false;
  // Arc (u, v) numbered by its position in the adjacency list of u.
  std::vector<std::size_t> offset(g.vertex_count() + 1, 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) offset[v + 1] = offset[v] + g.degree(v);
  auto arc_id = [&](Vertex u, Vertex v) {
    auto nb = g.neighbors(u);
    return offset[u] + static_cast<std::size_t>(std::lower_bound(nb.begin(), nb.end(), v) - nb.begin());
  };
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) return false;
  std::vector<Permutation> induced;
  for (const auto& s : group.generators()) {
    std::vector<Point> img(offset.back());
    for (Vertex u = 0; u < g.vertex_count(); ++u)
      for (Vertex v : g.neighbors(u)) img[arc_id(u, v)] = static_cast<Point>(arc_id(s[u], s[v]));
    induced.emplace_back(std::move(img));
  }
  return orbits_of(offset.back(), induced).size() == 1;
}

std::optional<Permutation> induced_on_sets(const Permutation& p,
                                           const std::vector<std::vector<Vertex>>& sets) {
  std::map<std::vector<Vertex>, std::size_t> index;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    auto key = sets[i];
    std::sort(key.begin(), key.end());
    index.emplace(std::move(key), i);
  }
  std::vector<Point> img(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::vector<Vertex> key;
    for (Vertex v : sets[i]) key.push_back(p[v]);
    std::sort(key.begin(), key.end());
    auto it = index.find(key);
    if (it == index.end()) return std::nullopt;
    img[i] = static_cast<Point>(it->second);
  }
  try {
    return Permutation(std::move(img));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

}  // namespace semireg
