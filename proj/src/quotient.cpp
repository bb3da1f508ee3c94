#include "semireg/quotient.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "semireg/decomp.hpp"
#include "semireg/error.hpp"
#include "semireg/search.hpp"
#include "semireg/subgroups.hpp"

namespace semireg {
namespace {

std::uint64_t smallest_prime_factor(std::uint64_t n) {
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return p;
  return n;
}

void require_cubic_vertex_transitive(const Graph& g, const PermGroup& group) {
  if (valency(g) != std::optional<std::size_t>(3))
    throw HypothesisViolation("not-cubic", "the graph is not cubic");
  if (!is_connected(g)) throw HypothesisViolation("disconnected", "the graph is not connected");
  if (group.degree() != g.vertex_count())
    throw HypothesisViolation("not-automorphisms", "group degree differs from the vertex count");
  for (const auto& s : group.generators())
    if (!is_automorphism(g, s))
      throw HypothesisViolation("not-automorphisms", "generator " + to_image_string(s) +
                                                         " is not an automorphism");
  if (!group.is_transitive())
    throw HypothesisViolation("not-vertex-transitive", "the group is not vertex-transitive");
}

}  // namespace

NormalQuotient normal_quotient(const Graph& g, const PermGroup& group, const PermGroup& n) {
  require_automorphisms(g, group);
  if (!is_normal(group, n)) throw std::invalid_argument("N is not normal in G");
  NormalQuotient out;
  out.blocks = n.orbits();
  out.graph = quotient_by_partition(g, out.blocks);
  std::vector<Permutation> gens;
  for (const auto& s : group.generators()) {
    auto induced = induced_on_sets(s, out.blocks);
    if (!induced) throw std::logic_error("N-orbits are not blocks of G");
    gens.push_back(std::move(*induced));
  }
  out.action = PermGroup(out.blocks.size(), std::move(gens));
  return out;
}

std::uint64_t local_group_order(const Graph& g, const PermGroup& group, Vertex v) {
  auto nb = g.neighbors(v);
  std::vector<Point> local(nb.begin(), nb.end());
  std::vector<Permutation> gens;
  PermGroup stab = group.stabilizer(v);
  for (const auto& s : stab.generators()) {
    std::vector<Point> img(local.size());
    for (std::size_t i = 0; i < local.size(); ++i)
      img[i] = static_cast<Point>(std::find(local.begin(), local.end(), s[local[i]]) - local.begin());
    gens.emplace_back(std::move(img));
  }
  return PermGroup(local.size(), std::move(gens)).order();
}

Matching matching_orbit(const Graph& g, const PermGroup& group) {
  require_cubic_vertex_transitive(g, group);
  Matching m;
  m.v = 0;
  std::uint64_t local = local_group_order(g, group, m.v);
  if (local != 2)
    throw HypothesisViolation("local-group-order",
                              "G_v induces a group of order " + std::to_string(local) + " on Γ(v)");
  PermGroup gv = group.stabilizer(m.v);
  std::optional<Vertex> fixed;
  for (Vertex u : g.neighbors(m.v)) {
    bool all = std::all_of(gv.generators().begin(), gv.generators().end(),
                           [&](const Permutation& s) { return s[u] == u; });
    if (all) fixed = u;
  }
  if (!fixed || group.stabilizer(*fixed).order() != gv.order())
    throw HypothesisViolation("local-group-order", "no neighbour v' with G_v = G_v'");
  m.v_prime = *fixed;

  std::set<Edge> orbit{Edge(m.v, m.v_prime)};
  std::vector<Edge> queue{Edge(m.v, m.v_prime)};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (const auto& s : group.generators()) {
      Edge e(s[queue[k].u], s[queue[k].v]);
      if (orbit.insert(e).second) queue.push_back(e);
    }
  m.edges.assign(orbit.begin(), orbit.end());

  const std::size_t n = g.vertex_count();
  std::vector<std::ptrdiff_t> partner(n, -1);
  for (const auto& e : m.edges) {
    if (partner[e.u] >= 0 || partner[e.v] >= 0)
      throw HypothesisViolation("not-perfect-matching", "two matching edges share a vertex");
    partner[e.u] = e.v;
    partner[e.v] = e.u;
  }
  if (std::any_of(partner.begin(), partner.end(), [](auto p) { return p < 0; }))
    throw HypothesisViolation("not-perfect-matching", "the edge orbit misses a vertex");

  // Γ - T is 2-regular; walk its components.
  std::vector<char> seen(n, 0);
  for (Vertex start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> cyc{start};
    seen[start] = 1;
    Vertex prev = start, cur = start;
    for (;;) {
      std::optional<Vertex> next;
      for (Vertex w : g.neighbors(cur))
        if (static_cast<std::ptrdiff_t>(w) != partner[cur] && w != prev) {
          next = w;
          break;
        }
      if (!next || *next == start) break;
      prev = cur;
      cur = *next;
      seen[cur] = 1;
      cyc.push_back(cur);
    }
    m.cycles.push_back(canonical_cycle(std::move(cyc)));
  }
  std::sort(m.cycles.begin(), m.cycles.end());
  m.k = m.cycles.front().size();
  for (const auto& c : m.cycles)
    if (c.size() != m.k)
      throw HypothesisViolation("cycle-lengths", "cycles of Γ - T have different lengths");
  return m;
}

bool is_degenerate(const Graph& g, const std::vector<Edge>& matching) {
  std::vector<std::size_t> block(g.vertex_count(), 0);
  for (std::size_t i = 0; i < matching.size(); ++i) block[matching[i].u] = block[matching[i].v] = i;
  std::map<std::pair<std::size_t, std::size_t>, int> between;
  for (const auto& e : g.edges()) {
    std::size_t a = block[e.u], b = block[e.v];
    if (a == b) continue;
    if (++between[{std::min(a, b), std::max(a, b)}] >= 2) return true;
  }
  return false;
}

MergedQuotient merged_quotient(const Graph& g, const PermGroup& group, const Matching& matching) {
  if (is_degenerate(g, matching.edges))
    throw HypothesisViolation("degenerate", "two matching edges are joined by two edges");
  MergedQuotient out;
  std::vector<std::vector<Vertex>> blocks;
  std::vector<std::size_t> block(g.vertex_count(), 0);
  for (const auto& e : matching.edges) {
    block[e.u] = block[e.v] = blocks.size();
    blocks.push_back({e.u, e.v});
  }
  out.graph = quotient_by_partition(g, blocks);
  std::vector<std::vector<Vertex>> cycles;
  for (const auto& c : matching.cycles) {
    std::vector<Vertex> img;
    for (Vertex v : c) img.push_back(static_cast<Vertex>(block[v]));
    cycles.push_back(std::move(img));
  }
  out.decomposition = make_decomposition(std::move(cycles));
  std::vector<Permutation> gens;
  for (const auto& s : group.generators()) {
    auto induced = induced_on_sets(s, blocks);
    if (!induced) throw HypothesisViolation("merged-quotient", "the matching is not G-invariant");
    gens.push_back(std::move(*induced));
  }
  out.action = PermGroup(blocks.size(), std::move(gens));
  out.faithful = out.action.order() == group.order();

  if (valency(out.graph) != std::optional<std::size_t>(4) || !is_connected(out.graph))
    throw HypothesisViolation("merged-quotient", "M(Γ,G) is not connected and 4-valent");
  if (!validate_decomposition(out.graph, out.decomposition))
    throw HypothesisViolation("merged-quotient", "projected cycles do not decompose M(Γ,G)");
  if (!is_arc_transitive_decomposition(out.graph, out.action, out.decomposition))
    throw HypothesisViolation("merged-quotient", "projected decomposition is not arc-transitive");
  return out;
}

std::optional<PxRecognition> recognize_px(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (valency(g) != std::optional<std::size_t>(4) || !is_connected(g)) return std::nullopt;
  // Vertex-transitive, so one profile suffices as a filter.
  const auto profile = distance_profile(g, 0);
  for (std::size_t r = n; r >= 3; --r) {
    if (n % r) continue;
    std::size_t q = n / r, s = 0;
    while ((std::size_t{1} << s) < q) ++s;
    if ((std::size_t{1} << s) != q || s < 1 || s > r - 1) continue;
    Graph cand = px_graph(r, s);
    if (distance_profile(cand, 0) != profile) continue;
    if (auto w = are_isomorphic(g, cand)) return PxRecognition{r, s, std::move(*w)};
  }
  return std::nullopt;
}

std::string family_name(Family f, std::size_t r, std::size_t s) {
  switch (f) {
    case Family::K4: return "K4";
    case Family::K33: return "K33";
    case Family::Q3: return "Q3";
    case Family::SPX: return "SPX(" + std::to_string(r) + "," + std::to_string(s) + ")";
  }
  return "?";
}

Graph ClassificationResult::family_graph() const {
  switch (family) {
    case Family::K4: return k4();
    case Family::K33: return k33();
    case Family::Q3: return q3();
    case Family::SPX: return spx_graph(r, s);
  }
  return Graph();
}

ClassificationResult classify_theorem12(const Graph& g, const PermGroup& group,
                                        std::optional<PermGroup> n, std::uint64_t cap) {
  require_cubic_vertex_transitive(g, group);
  ClassificationResult res;
  res.group_order = group.order();

  if (n) {
    for (const auto& s : n->generators())
      if (!group.contains(s))
        throw HypothesisViolation("invalid-normal-subgroup", "N is not a subgroup of G");
    if (!is_normal(group, *n) || !n->is_abelian() || n->is_semiregular())
      throw HypothesisViolation("invalid-normal-subgroup",
                                "N must be an abelian normal subgroup that is not semiregular");
  } else {
    n = find_abelian_normal_nonsemiregular(group, cap);
    if (!n)
      throw HypothesisViolation("no-abelian-normal-nonsemiregular",
                                "G has no abelian normal subgroup that is not semiregular");
  }
  const std::uint64_t nv = n->stabilizer(0).order();
  res.p = smallest_prime_factor(nv);
  if (res.p != 2 && res.p != 3)
    throw HypothesisViolation("prime-not-2-or-3", "|N_v| has prime divisor " + std::to_string(res.p));
  PermGroup ne = reduce_to_elementary_abelian(*n, res.p);
  res.n_order = ne.order();
  res.n_stabilizer = ne.stabilizer(0).order();
  if (res.n_stabilizer == 1)
    throw HypothesisViolation("invalid-normal-subgroup", "exponent-p part of N is semiregular");

  auto conclude = [&](Family f, std::size_t r, std::size_t s, const char* route) -> bool {
    ClassificationResult trial = res;
    trial.family = f;
    trial.r = r;
    trial.s = s;
    auto w = are_isomorphic(g, trial.family_graph());
    if (!w) return false;
    res.family = f;
    res.r = r;
    res.s = s;
    res.witness = std::move(*w);
    res.route = route;
    return true;
  };

  if (res.p == 3) {
    if (!conclude(Family::K33, 0, 0, "p=3"))
      throw HypothesisViolation("not-k33", "p = 3 but the graph is not K3,3");
    return res;
  }

  res.local_order = local_group_order(g, group, 0);
  if (g.vertex_count() <= 8) {
    if (conclude(Family::K4, 0, 0, "small") || conclude(Family::K33, 0, 0, "small") ||
        conclude(Family::Q3, 0, 0, "small"))
      return res;
  }
  Matching m = matching_orbit(g, group);
  res.k = m.k;
  res.matching = m.edges;
  if (m.k != 4) throw HypothesisViolation("k-not-4", "Γ - T has cycles of length " + std::to_string(m.k));

  const std::size_t half = g.vertex_count() / 2;
  if (half >= 3 && are_isomorphic(g, circular_ladder(half)))
    throw HypothesisViolation("ladder-case", "circular ladder with k = 4 other than Q3");
  if (half >= 2 && are_isomorphic(g, moebius_ladder(half)))
    throw HypothesisViolation("ladder-case", "Moebius ladder with k = 4 other than K4 and K3,3");

  MergedQuotient mq = merged_quotient(g, group, m);
  res.merged_vertices = mq.graph.vertex_count();
  res.faithful = mq.faithful;
  if (!mq.faithful) throw HypothesisViolation("merged-quotient", "G is not faithful on M(Γ,G)");
  res.round_trip = are_isomorphic(split(mq.graph, mq.decomposition), g).has_value();

  auto px = recognize_px(mq.graph);
  if (!px) throw HypothesisViolation("not-praeger-xu", "M(Γ,G) is not isomorphic to any PX(2,r,s)");
  try {
    Graph pxg = px_graph(px->r, px->s);
    CycleDecomposition moved = apply(px->witness, mq.decomposition);
    res.natural_conjugate = decompositions_conjugate(pxg, moved, natural_decomposition(px->r, px->s),
                                                     automorphism_group(pxg), cap)
                                .has_value();
  } catch (const CapExceeded&) {
    res.natural_conjugate.reset();
  }
  if (!conclude(Family::SPX, px->r, px->s, "merged-quotient"))
    throw HypothesisViolation("not-split-px", "Γ is not isomorphic to S(PX(2,r,s))");
  return res;
}

}  // namespace semireg
