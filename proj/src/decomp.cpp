#include "semireg/decomp.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <stdexcept>

#include "semireg/error.hpp"
#include "semireg/search.hpp"

namespace semireg {

bool validate_decomposition(const Graph& g, const CycleDecomposition& d) {
  return is_cycle_decomposition(g, d);
}

bool is_arc_transitive_decomposition(const Graph& g, const PermGroup& group,
                                     const CycleDecomposition& d) {
  require_automorphisms(g, group);
  if (!validate_decomposition(g, d)) return false;
  if (!is_arc_transitive(group, g)) return false;
  for (const auto& s : group.generators())
    if (apply(s, d) != d) return false;
  return true;
}

std::vector<CycleDecomposition> enumerate_4cycle_decompositions(const Graph& g, std::uint64_t cap) {
  if (valency(g) != std::optional<std::size_t>(4))
    throw std::invalid_argument("4-cycle decompositions need a 4-valent graph");
  if (g.vertex_count() > 64) throw CapExceeded("decomposition enumeration is limited to 64 vertices");
  auto edges = g.edges();
  std::map<Edge, std::size_t> edge_id;
  for (std::size_t i = 0; i < edges.size(); ++i) edge_id[edges[i]] = i;
  auto cycles = four_cycles(g);
  std::vector<std::array<std::size_t, 4>> cycle_edges;
  std::vector<std::vector<std::size_t>> through(edges.size());
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    std::array<std::size_t, 4> ce{};
    for (std::size_t i = 0; i < 4; ++i) {
      ce[i] = edge_id.at(Edge(cycles[c][i], cycles[c][(i + 1) % 4]));
      through[ce[i]].push_back(c);
    }
    cycle_edges.push_back(ce);
  }

  std::vector<CycleDecomposition> out;
  std::vector<char> covered(edges.size(), 0);
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> search = [&](std::size_t from) {
    while (from < edges.size() && covered[from]) ++from;
    if (from == edges.size()) {
      std::vector<std::vector<Vertex>> cs;
      for (std::size_t c : chosen) cs.emplace_back(cycles[c].begin(), cycles[c].end());
      out.push_back(make_decomposition(std::move(cs)));
      if (out.size() > cap) throw CapExceeded("more decompositions than the cap allows");
      return;
    }
    for (std::size_t c : through[from]) {
      const auto& ce = cycle_edges[c];
      if (std::any_of(ce.begin(), ce.end(), [&](std::size_t e) { return covered[e]; })) continue;
      for (std::size_t e : ce) covered[e] = 1;
      chosen.push_back(c);
      search(from + 1);
      chosen.pop_back();
      for (std::size_t e : ce) covered[e] = 0;
    }
  };
  search(0);
  std::sort(out.begin(), out.end(),
            [](const CycleDecomposition& a, const CycleDecomposition& b) { return a.cycles < b.cycles; });
  return out;
}

std::vector<std::pair<CycleDecomposition, Permutation>> decomposition_orbit(
    const PermGroup& group, const CycleDecomposition& d, std::uint64_t cap) {
  std::vector<std::pair<CycleDecomposition, Permutation>> orbit;
  std::map<std::vector<std::vector<Vertex>>, std::size_t> seen;
  orbit.emplace_back(d, Permutation(group.degree()));
  seen.emplace(d.cycles, 0);
  for (std::size_t k = 0; k < orbit.size(); ++k)
    for (const auto& s : group.generators()) {
      CycleDecomposition img = apply(s, orbit[k].first);
      if (seen.count(img.cycles)) continue;
      if (orbit.size() >= cap) throw CapExceeded("decomposition orbit exceeds the cap");
      seen.emplace(img.cycles, orbit.size());
      orbit.emplace_back(std::move(img), orbit[k].second * s);
    }
  return orbit;
}

PermGroup decomposition_stabilizer(const PermGroup& group, const CycleDecomposition& d,
                                   std::uint64_t cap) {
  auto orbit = decomposition_orbit(group, d, cap);
  std::map<std::vector<std::vector<Vertex>>, std::size_t> where;
  for (std::size_t k = 0; k < orbit.size(); ++k) where.emplace(orbit[k].first.cycles, k);
  const std::uint64_t target = group.order() / orbit.size();
  std::vector<Permutation> gens;
  PermGroup stab = PermGroup::trivial(group.degree());
  for (std::size_t k = 0; k < orbit.size() && stab.order() < target; ++k)
    for (const auto& s : group.generators()) {
      if (stab.order() == target) break;
      std::size_t j = where.at(apply(s, orbit[k].first).cycles);
      Permutation schreier = orbit[k].second * s * orbit[j].second.inverse();
      if (schreier.is_identity() || stab.contains(schreier)) continue;
      gens.push_back(std::move(schreier));
      stab = PermGroup(group.degree(), gens);
    }
  if (stab.order() != target) throw std::logic_error("stabiliser order disagrees with orbit length");
  return stab;
}

std::optional<Permutation> decompositions_conjugate(const Graph& g, const CycleDecomposition& d1,
                                                    const CycleDecomposition& d2,
                                                    const PermGroup& group, std::uint64_t cap) {
  require_automorphisms(g, group);
  if (!validate_decomposition(g, d1) || !validate_decomposition(g, d2))
    throw std::invalid_argument("not a cycle decomposition");
  for (auto& [img, a] : decomposition_orbit(group, d1, cap))
    if (img == d2) {
      if (apply(a, d1) != d2) throw std::logic_error("conjugacy witness failed re-verification");
      return a;
    }
  return std::nullopt;
}

BoringReport check_unique_decomposition(std::size_t r, std::size_t s) {
  BoringReport rep;
  rep.r = r;
  rep.s = s;
  Graph g = px_graph(r, s);
  PermGroup aut = automorphism_group(g);
  rep.aut_order = aut.order();
  rep.four_cycles = four_cycles(g).size();
  auto all = enumerate_4cycle_decompositions(g);
  rep.decompositions = all.size();
  CycleDecomposition natural = natural_decomposition(r, s);

  std::vector<CycleDecomposition> arc;
  for (const auto& d : all) {
    PermGroup stab = decomposition_stabilizer(aut, d);
    if (is_arc_transitive(stab, g)) arc.push_back(d);
  }
  rep.arc_transitive = arc.size();
  rep.natural_is_arc_transitive =
      is_arc_transitive(decomposition_stabilizer(aut, natural), g);

  std::map<std::vector<std::vector<Vertex>>, Permutation> from_natural;
  for (auto& [img, a] : decomposition_orbit(aut, natural)) from_natural.emplace(img.cycles, a);
  std::vector<char> assigned(arc.size(), 0);
  for (std::size_t i = 0; i < arc.size(); ++i) {
    if (assigned[i]) continue;
    ++rep.classes;
    std::map<std::vector<std::vector<Vertex>>, char> orbit;
    for (auto& [img, a] : decomposition_orbit(aut, arc[i])) orbit.emplace(img.cycles, 1);
    for (std::size_t j = i; j < arc.size(); ++j)
      if (orbit.count(arc[j].cycles)) assigned[j] = 1;
  }
  for (const auto& d : arc) {
    auto it = from_natural.find(d.cycles);
    if (it != from_natural.end() && apply(it->second, natural) == d)
      rep.witnesses.emplace_back(it->second);
    else
      rep.witnesses.emplace_back(std::nullopt);
  }
  return rep;
}

std::vector<BoringReport> verify_lemma_boring_r4() {
  std::vector<BoringReport> out;
  for (std::size_t s = 1; s <= 3; ++s) out.push_back(check_unique_decomposition(4, s));
  return out;
}

}  // namespace semireg
