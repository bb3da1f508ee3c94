#include <doctest.h>

#include <set>

#include "semireg/construct.hpp"
#include "semireg/decomp.hpp"
#include "semireg/error.hpp"
#include "semireg/search.hpp"
#include "support.hpp"

using namespace semireg;

namespace {

// Edge-disjoint sets of 4-cycles covering every edge, built as increasing
// index combinations.
std::set<CycleDecomposition> brute_decompositions(const Graph& g) {
  auto cycles = four_cycles(g);
  const std::size_t need = g.edge_count() / 4;
  std::set<CycleDecomposition> out;
  std::set<Edge> used;
  std::vector<std::vector<Vertex>> chosen;
  auto edges_of = [](const std::array<Vertex, 4>& c) {
    return std::array<Edge, 4>{Edge(c[0], c[1]), Edge(c[1], c[2]), Edge(c[2], c[3]), Edge(c[3], c[0])};
  };
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (chosen.size() == need) {
      out.insert(make_decomposition(chosen));
      return;
    }
    for (std::size_t i = from; i < cycles.size(); ++i) {
      auto es = edges_of(cycles[i]);
      bool clash = false;
      for (const auto& e : es) clash |= used.count(e) > 0;
      if (clash) continue;
      for (const auto& e : es) used.insert(e);
      chosen.push_back({cycles[i].begin(), cycles[i].end()});
      rec(i + 1);
      chosen.pop_back();
      for (const auto& e : es) used.erase(e);
    }
  };
  rec(0);
  return out;
}

struct Census {
  std::size_t decompositions = 0, arc_transitive = 0, classes = 0;
};

// Everything by enumerating Aut element by element.
Census brute_census(const Graph& g) {
  auto all = brute_decompositions(g);
  PermGroup aut = automorphism_group(g);
  auto elems = aut.elements(100000);
  Census c;
  c.decompositions = all.size();
  std::vector<CycleDecomposition> at;
  for (const auto& d : all) {
    std::vector<Permutation> stab;
    for (const auto& x : elems)
      if (apply(x, d) == d) stab.push_back(x);
    if (is_arc_transitive(PermGroup(g.vertex_count(), stab), g)) at.push_back(d);
  }
  c.arc_transitive = at.size();
  std::set<CycleDecomposition> seen;
  for (const auto& d : at) {
    if (seen.count(d)) continue;
    ++c.classes;
    for (const auto& x : elems) seen.insert(apply(x, d));
  }
  return c;
}

}  // namespace

TEST_CASE("validation") {
  Graph g = px_graph(4, 2);
  CHECK(validate_decomposition(g, natural_decomposition(4, 2)));
  auto broken = natural_decomposition(4, 2);
  broken.cycles.pop_back();
  CHECK_FALSE(validate_decomposition(g, broken));
  CHECK_FALSE(validate_decomposition(g, make_decomposition({{0, 1, 2, 3}})));
}

TEST_CASE("enumeration agrees with brute force") {
  Graph octahedron = Graph(6, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5},
                               {2, 4}, {2, 5}, {3, 4}, {3, 5}});
  std::vector<Graph> graphs{complete_bipartite(4, 4), octahedron, px_graph(4, 2), px_graph(5, 2),
                            complete_graph(5)};
  for (const auto& g : graphs) {
    auto fast = enumerate_4cycle_decompositions(g);
    std::set<CycleDecomposition> mine(fast.begin(), fast.end());
    CHECK(mine.size() == fast.size());
    CHECK(mine == brute_decompositions(g));
  }
  CHECK(enumerate_4cycle_decompositions(complete_graph(5)).empty());
  CHECK_THROWS_AS(enumerate_4cycle_decompositions(q3()), std::invalid_argument);
}

TEST_CASE("r = 4 decomposition census matches element-wise enumeration") {
  for (const auto& rep : verify_lemma_boring_r4()) {
    Census c = brute_census(px_graph(rep.r, rep.s));
    CHECK(rep.decompositions == c.decompositions);
    CHECK(rep.arc_transitive == c.arc_transitive);
    CHECK(rep.classes == c.classes);
    CHECK(rep.classes == 1);
    CHECK(rep.natural_is_arc_transitive);
    for (const auto& w : rep.witnesses) CHECK(w.has_value());
  }
}

TEST_CASE("uniqueness for other r") {
  for (auto [r, s] : {std::pair<std::size_t, std::size_t>{3, 1}, {3, 2}, {5, 1}, {5, 3}, {6, 2}}) {
    BoringReport rep = check_unique_decomposition(r, s);
    CHECK(rep.passed());
    CHECK(rep.aut_order == automorphism_group(px_graph(r, s)).order());
  }
}

TEST_CASE("orbit and stabilizer sizes multiply to the group order") {
  Graph g = px_graph(4, 2);
  PermGroup aut = automorphism_group(g);
  auto d = natural_decomposition(4, 2);
  auto orbit = decomposition_orbit(aut, d, 100000);
  PermGroup stab = decomposition_stabilizer(aut, d, 100000);
  CHECK(orbit.size() * stab.order() == aut.order());
  for (const auto& [image, x] : orbit) CHECK(apply(x, d) == image);
  CHECK(is_arc_transitive_decomposition(g, stab, d));
}

TEST_CASE("conjugating witness re-verifies") {
  Graph g = px_graph(5, 2);
  PermGroup aut = automorphism_group(g);
  auto d = natural_decomposition(5, 2);
  std::mt19937_64 rng(1);
  auto elems = aut.elements(100000);
  Permutation x = elems[rng() % elems.size()];
  auto moved = apply(x, d);
  auto w = decompositions_conjugate(g, d, moved, aut, 100000);
  REQUIRE(w.has_value());
  CHECK(apply(*w, d) == moved);
}
