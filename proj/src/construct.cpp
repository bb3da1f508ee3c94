#include "semireg/construct.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace semireg {
namespace {

std::size_t mod(long long a, std::size_t r) {
  long long m = static_cast<long long>(r);
  return static_cast<std::size_t>(((a % m) + m) % m);
}

// Window transform shared by both targets: returns the new start and bits.
std::pair<std::size_t, std::uint32_t> act_window(const WreathElement& g, std::size_t s,
                                                 std::size_t x, std::uint32_t bits) {
  const std::size_t r = g.r();
  std::uint32_t out = 0;
  if (!g.top.reflect) {
    for (std::size_t i = 0; i < s; ++i) {
      std::uint32_t b = ((bits >> i) & 1u) ^ g.base[(x + i) % r];
      out |= b << i;
    }
    return {(x + g.top.t) % r, out};
  }
  for (std::size_t j = 0; j < s; ++j) {
    std::size_t i = s - 1 - j;
    std::uint32_t b = ((bits >> i) & 1u) ^ g.base[(x + i) % r];
    out |= b << j;
  }
  std::size_t y = mod(-static_cast<long long>(x + s - 1 + g.top.t), r);
  return {y, out};
}

}  // namespace

void check_px_parameters(std::size_t r, std::size_t s) {
  if (r < 3) throw std::invalid_argument("r must be at least 3");
  if (s < 1 || s > r - 1) throw std::invalid_argument("s must satisfy 1 <= s <= r - 1");
  if (s > 24) throw std::invalid_argument("s too large for the dense encoding");
}

std::size_t px_index(std::size_t s, std::uint32_t bits, std::size_t x) {
  return (x << s) + bits;
}

std::size_t spx_index(std::size_t s, std::uint32_t bits, std::size_t x, bool minus) {
  return (((x << s) + bits) << 1) + (minus ? 1 : 0);
}

Graph px_graph(std::size_t r, std::size_t s) {
  check_px_parameters(r, s);
  const std::uint32_t mask = (1u << s) - 1;
  std::vector<Edge> es;
  for (std::size_t x = 0; x < r; ++x)
    for (std::uint32_t w = 0; w < (2u << s); ++w)
      es.emplace_back(static_cast<Vertex>(px_index(s, w & mask, x)),
                      static_cast<Vertex>(px_index(s, w >> 1, (x + 1) % r)));
  std::vector<VertexLabel> labels;
  for (std::size_t x = 0; x < r; ++x)
    for (std::uint32_t b = 0; b <= mask; ++b) {
      VertexLabel l;
      for (std::size_t i = 0; i < s; ++i) l.coords.push_back(static_cast<int>((b >> i) & 1u));
      l.coords.push_back(static_cast<int>(x));
      labels.push_back(std::move(l));
    }
  return Graph(r << s, es).with_labels(std::move(labels));
}

Graph px_via_traversing_paths(std::size_t r, std::size_t s) {
  check_px_parameters(r, s);
  Graph base = px_graph(r, 1);
  auto fiber = [&](Vertex v) { return base.labels()[v].coords[1]; };

  // Simple paths on s vertices meeting each fibre at most once.
  std::vector<std::vector<Vertex>> paths;
  std::vector<Vertex> cur;
  std::vector<char> used_fiber(r, 0);
  std::function<void()> extend = [&] {
    if (cur.size() == s) {
      if (cur.front() <= cur.back()) paths.push_back(cur);
      return;
    }
    for (Vertex w : base.neighbors(cur.back())) {
      if (used_fiber[fiber(w)]) continue;
      used_fiber[fiber(w)] = 1;
      cur.push_back(w);
      extend();
      cur.pop_back();
      used_fiber[fiber(w)] = 0;
    }
  };
  for (Vertex v = 0; v < base.vertex_count(); ++v) {
    cur = {v};
    used_fiber[fiber(v)] = 1;
    extend();
    used_fiber[fiber(v)] = 0;
  }
  // A single-vertex path has both orientations equal; multi-vertex paths are
  // kept once because their endpoints differ.
  std::sort(paths.begin(), paths.end());

  auto path_edges = [](const std::vector<Vertex>& p) {
    std::set<Edge> es;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) es.emplace(p[i], p[i + 1]);
    return es;
  };
  auto is_traversing_path = [&](const std::set<Vertex>& vs, const std::set<Edge>& es) {
    if (vs.size() != s + 1 || es.size() != s) return false;
    std::set<int> fibres;
    for (Vertex v : vs) fibres.insert(fiber(v));
    if (fibres.size() != vs.size()) return false;
    std::map<Vertex, int> deg;
    for (const auto& e : es) {
      if (++deg[e.u] > 2 || ++deg[e.v] > 2) return false;
    }
    // s edges on s + 1 vertices with degrees at most 2: a path iff connected.
    std::map<Vertex, Vertex> parent;
    for (Vertex v : vs) parent[v] = v;
    std::function<Vertex(Vertex)> find = [&](Vertex v) {
      return parent[v] == v ? v : parent[v] = find(parent[v]);
    };
    for (const auto& e : es) parent[find(e.u)] = find(e.v);
    Vertex root = find(*vs.begin());
    for (Vertex v : vs)
      if (find(v) != root) return false;
    return true;
  };

  std::vector<std::set<Edge>> edge_sets;
  for (const auto& p : paths) edge_sets.push_back(path_edges(p));
  std::vector<Edge> es;
  for (std::size_t a = 0; a < paths.size(); ++a)
    for (std::size_t b = a + 1; b < paths.size(); ++b) {
      std::set<Vertex> vs(paths[a].begin(), paths[a].end());
      vs.insert(paths[b].begin(), paths[b].end());
      if (vs.size() != s + 1) continue;
      std::set<Edge> un = edge_sets[a];
      un.insert(edge_sets[b].begin(), edge_sets[b].end());
      if (s == 1) {
        // Single vertices: the union path is the edge between them.
        if (!base.adjacent(paths[a][0], paths[b][0])) continue;
        un.emplace(paths[a][0], paths[b][0]);
      }
      if (is_traversing_path(vs, un)) es.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
  return Graph(paths.size(), es);
}

Graph spx_graph(std::size_t r, std::size_t s) {
  check_px_parameters(r, s);
  const std::uint32_t mask = (1u << s) - 1;
  std::vector<Edge> es;
  for (std::size_t x = 0; x < r; ++x) {
    for (std::uint32_t w = 0; w < (2u << s); ++w)
      es.emplace_back(static_cast<Vertex>(spx_index(s, w & mask, x, false)),
                      static_cast<Vertex>(spx_index(s, w >> 1, (x + 1) % r, true)));
    for (std::uint32_t b = 0; b <= mask; ++b)
      es.emplace_back(static_cast<Vertex>(spx_index(s, b, x, false)),
                      static_cast<Vertex>(spx_index(s, b, x, true)));
  }
  std::vector<VertexLabel> labels;
  for (std::size_t x = 0; x < r; ++x)
    for (std::uint32_t b = 0; b <= mask; ++b)
      for (int sign = 0; sign < 2; ++sign) {
        VertexLabel l;
        for (std::size_t i = 0; i < s; ++i) l.coords.push_back(static_cast<int>((b >> i) & 1u));
        l.coords.push_back(static_cast<int>(x));
        l.sign = sign ? '-' : '+';
        labels.push_back(std::move(l));
      }
  return Graph((r << s) * 2, es).with_labels(std::move(labels));
}

std::vector<Vertex> canonical_cycle(std::vector<Vertex> cycle) {
  if (cycle.empty()) return cycle;
  auto it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), it, cycle.end());
  if (cycle.size() > 2 && cycle[1] > cycle.back()) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

CycleDecomposition make_decomposition(std::vector<std::vector<Vertex>> cycles) {
  for (auto& c : cycles) c = canonical_cycle(std::move(c));
  std::sort(cycles.begin(), cycles.end());
  return CycleDecomposition{std::move(cycles)};
}

bool is_cycle_decomposition(const Graph& g, const CycleDecomposition& d) {
  std::set<Edge> covered;
  for (const auto& c : d.cycles) {
    if (c.size() < 3) return false;
    std::set<Vertex> distinct(c.begin(), c.end());
    if (distinct.size() != c.size()) return false;
    for (std::size_t i = 0; i < c.size(); ++i) {
      Vertex a = c[i], b = c[(i + 1) % c.size()];
      if (a >= g.vertex_count() || b >= g.vertex_count() || !g.adjacent(a, b)) return false;
      if (!covered.emplace(a, b).second) return false;
    }
  }
  return covered.size() == g.edge_count();
}

CycleDecomposition apply(const Permutation& p, const CycleDecomposition& d) {
  std::vector<std::vector<Vertex>> cycles;
  for (const auto& c : d.cycles) {
    std::vector<Vertex> img;
    for (Vertex v : c) img.push_back(p[v]);
    cycles.push_back(std::move(img));
  }
  return make_decomposition(std::move(cycles));
}

CycleDecomposition natural_decomposition(std::size_t r, std::size_t s) {
  check_px_parameters(r, s);
  std::vector<std::vector<Vertex>> cycles;
  for (std::size_t x = 0; x < r; ++x)
    for (std::uint32_t m = 0; m < (1u << (s - 1)); ++m) {
      std::size_t y = (x + 1) % r;
      cycles.push_back({static_cast<Vertex>(px_index(s, m << 1, x)),
                        static_cast<Vertex>(px_index(s, m, y)),
                        static_cast<Vertex>(px_index(s, (m << 1) | 1u, x)),
                        static_cast<Vertex>(px_index(s, m | (1u << (s - 1)), y))});
    }
  return make_decomposition(std::move(cycles));
}

Graph split(const Graph& g, const CycleDecomposition& d) {
  if (valency(g) != std::optional<std::size_t>(4)) throw std::invalid_argument("split needs a 4-valent graph");
  if (!is_cycle_decomposition(g, d)) throw std::invalid_argument("not a cycle decomposition");
  std::vector<std::pair<Vertex, std::size_t>> pairs;
  for (std::size_t c = 0; c < d.cycles.size(); ++c)
    for (Vertex v : d.cycles[c]) pairs.emplace_back(v, c);
  std::sort(pairs.begin(), pairs.end());
  std::map<std::pair<Vertex, std::size_t>, Vertex> index;
  for (std::size_t i = 0; i < pairs.size(); ++i) index[pairs[i]] = static_cast<Vertex>(i);
  std::vector<Edge> es;
  for (std::size_t i = 0; i + 1 < pairs.size(); ++i)
    if (pairs[i].first == pairs[i + 1].first)
      es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  for (std::size_t c = 0; c < d.cycles.size(); ++c) {
    const auto& cyc = d.cycles[c];
    for (std::size_t i = 0; i < cyc.size(); ++i)
      es.emplace_back(index.at({cyc[i], c}), index.at({cyc[(i + 1) % cyc.size()], c}));
  }
  std::vector<VertexLabel> labels;
  for (const auto& [v, c] : pairs) labels.push_back(VertexLabel{{static_cast<int>(v), static_cast<int>(c)}, 0});
  return Graph(pairs.size(), es).with_labels(std::move(labels));
}

std::size_t DihedralElement::apply(std::size_t p) const {
  return reflect ? mod(-static_cast<long long>(p + t), r) : (p + t) % r;
}

DihedralElement DihedralElement::operator*(const DihedralElement& rhs) const {
  if (!reflect) return {r, (t + rhs.t) % r, rhs.reflect};
  return {r, mod(static_cast<long long>(t) - static_cast<long long>(rhs.t), r), !rhs.reflect};
}

DihedralElement DihedralElement::inverse() const {
  if (reflect) return *this;
  return {r, mod(-static_cast<long long>(t), r), false};
}

WreathElement WreathElement::identity(std::size_t r) {
  return {std::vector<std::uint8_t>(r, 0), DihedralElement{r, 0, false}};
}

WreathElement WreathElement::base_generator(std::size_t r, std::size_t i) {
  WreathElement g = identity(r);
  g.base.at(i) = 1;
  return g;
}

WreathElement WreathElement::rotation(std::size_t r, std::size_t t) {
  WreathElement g = identity(r);
  g.top.t = t % r;
  return g;
}

WreathElement WreathElement::reflection(std::size_t r, std::size_t t) {
  WreathElement g = identity(r);
  g.top = DihedralElement{r, t % r, true};
  return g;
}

WreathElement WreathElement::random(std::size_t r, std::mt19937_64& rng) {
  WreathElement g = identity(r);
  for (auto& b : g.base) b = static_cast<std::uint8_t>(rng() & 1u);
  g.top.t = static_cast<std::size_t>(rng() % r);
  g.top.reflect = (rng() & 1u) != 0;
  return g;
}

WreathElement WreathElement::operator*(const WreathElement& rhs) const {
  WreathElement out = identity(r());
  for (std::size_t p = 0; p < r(); ++p) out.base[p] = base[p] ^ rhs.base[top.apply(p)];
  out.top = top * rhs.top;
  return out;
}

WreathElement WreathElement::inverse() const {
  WreathElement out = identity(r());
  out.top = top.inverse();
  for (std::size_t q = 0; q < r(); ++q) out.base[q] = base[out.top.apply(q)];
  return out;
}

WreathElement WreathElement::pow(long long k) const {
  WreathElement a = k < 0 ? inverse() : *this;
  unsigned long long e = static_cast<unsigned long long>(k < 0 ? -k : k);
  WreathElement out = identity(r());
  while (e) {
    if (e & 1u) out = out * a;
    a = a * a;
    e >>= 1;
  }
  return out;
}

bool WreathElement::is_identity() const {
  return top.t == 0 && !top.reflect && std::all_of(base.begin(), base.end(), [](auto b) { return b == 0; });
}

std::uint8_t WreathElement::base_sum() const {
  std::uint8_t x = 0;
  for (auto b : base) x ^= b;
  return x;
}

std::size_t wreath_act(const WreathElement& g, std::size_t s, WreathTarget target, std::size_t v) {
  const std::uint32_t mask = (1u << s) - 1;
  if (target == WreathTarget::PX) {
    auto [y, bits] = act_window(g, s, v >> s, static_cast<std::uint32_t>(v) & mask);
    return px_index(s, bits, y);
  }
  bool minus = v & 1u;
  std::size_t w = v >> 1;
  auto [y, bits] = act_window(g, s, w >> s, static_cast<std::uint32_t>(w) & mask);
  return spx_index(s, bits, y, minus != g.top.reflect);
}

Permutation to_permutation(const WreathElement& g, std::size_t s, WreathTarget target) {
  check_px_parameters(g.r(), s);
  std::size_t n = (g.r() << s) * (target == WreathTarget::SPX ? 2 : 1);
  std::vector<Point> img(n);
  for (std::size_t v = 0; v < n; ++v) img[v] = static_cast<Point>(wreath_act(g, s, target, v));
  return Permutation(std::move(img));
}

std::optional<WreathElement> decode_wreath(const Permutation& p, std::size_t r, std::size_t s,
                                           WreathTarget target) {
  check_px_parameters(r, s);
  const bool spx = target == WreathTarget::SPX;
  const std::size_t n = (r << s) * (spx ? 2 : 1);
  if (p.degree() != n) return std::nullopt;
  auto window_of = [&](std::size_t v) { return spx ? v >> 1 : v; };
  // Both orientations are tried for PX, where the sign does not reveal them.
  for (int reflect = 0; reflect < 2; ++reflect) {
    if (spx) {
      bool minus = p[static_cast<Point>(spx_index(s, 0, 0, false))] & 1u;
      if (minus != static_cast<bool>(reflect)) continue;
    }
    std::size_t y = window_of(p[static_cast<Point>(spx ? spx_index(s, 0, 0, false) : px_index(s, 0, 0))]) >> s;
    WreathElement g = WreathElement::identity(r);
    g.top.reflect = reflect != 0;
    g.top.t = reflect ? mod(-static_cast<long long>(y + s - 1), r) : y;
    for (std::size_t q = 0; q < r; ++q) {
      std::size_t x = reflect ? mod(static_cast<long long>(q) - static_cast<long long>(s - 1), r) : q;
      std::size_t v = spx ? spx_index(s, 0, x, false) : px_index(s, 0, x);
      g.base[q] = static_cast<std::uint8_t>(window_of(p[static_cast<Point>(v)]) & 1u);
    }
    if (to_permutation(g, s, target) == p) return g;
  }
  return std::nullopt;
}

std::vector<WreathElement> wreath_generators(std::size_t r) {
  std::vector<WreathElement> out;
  for (std::size_t i = 0; i < r; ++i) out.push_back(WreathElement::base_generator(r, i));
  out.push_back(WreathElement::rotation(r, 1));
  out.push_back(WreathElement::reflection(r, 0));
  return out;
}

PermGroup wreath_group(std::size_t r, std::size_t s, WreathTarget target) {
  check_px_parameters(r, s);
  std::vector<Permutation> gens;
  for (const auto& g : wreath_generators(r)) gens.push_back(to_permutation(g, s, target));
  std::size_t n = gens.front().degree();
  std::uint64_t order = (std::uint64_t{1} << r) * 2 * r;
  return PermGroup(n, std::move(gens), {}, order);
}

Graph circular_ladder(std::size_t n) {
  if (n < 3) throw std::invalid_argument("circular ladder needs n >= 3");
  return cartesian_product(cycle_graph(n), complete_graph(2));
}

Graph moebius_ladder(std::size_t n) {
  if (n < 2) throw std::invalid_argument("Moebius ladder needs n >= 2");
  return cayley_graph_cyclic(2 * n, {1, -1, static_cast<long long>(n)});
}

Graph k4() { return complete_graph(4); }

Graph k33() { return complete_bipartite(3, 3); }

Graph q3() {
  std::vector<Edge> es;
  for (Vertex v = 0; v < 8; ++v)
    for (Vertex b = 1; b < 8; b <<= 1)
      if (v < (v ^ b)) es.emplace_back(v, v ^ b);
  return Graph(8, es);
}

}  // namespace semireg
