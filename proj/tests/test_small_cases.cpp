#include <doctest.h>

#include <set>

#include "semireg/construct.hpp"
#include "semireg/decomp.hpp"
#include "semireg/error.hpp"
#include "semireg/group_elements.hpp"
#include "semireg/search.hpp"
#include "semireg/subgroups.hpp"
#include "support.hpp"

using namespace semireg;

namespace {

PermGroup base_of(std::size_t r, std::size_t s, WreathTarget target) {
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < r; ++i) gens.push_back(to_permutation(WreathElement::base_generator(r, i), s, target));
  std::size_t n = target == WreathTarget::PX ? r << s : r << (s + 1);
  return PermGroup(n, gens);
}

}  // namespace

TEST_CASE("wreath group on PX(2,3,1)") {
  PermGroup w = wreath_group(3, 1, WreathTarget::PX);
  CHECK(w.order() == 48);
  CHECK(w.stabilizer(0).order() == 8);
  CHECK(enumerate_elements(w, 100).size() == 48);
  CHECK_THROWS_AS(enumerate_elements(w, 10), CapExceeded);
  CHECK(testing::closure(6, w.generators()).size() == 48);
}

TEST_CASE("base group inside the wreath product") {
  PermGroup w = wreath_group(5, 1, WreathTarget::SPX);
  PermGroup base = base_of(5, 1, WreathTarget::SPX);
  CHECK(base.order() == 32);
  CHECK(is_normal(w, base));
  CHECK_FALSE(base.is_semiregular());
  WreathElement ones = WreathElement::identity(5);
  std::fill(ones.base.begin(), ones.base.end(), 1);
  CHECK(PermGroup(base.degree(), {to_permutation(ones, 1, WreathTarget::SPX)}).is_semiregular());
  auto n = find_abelian_normal_nonsemiregular(w);
  REQUIRE(n.has_value());
  for (const auto& g : n->generators()) CHECK(base.contains(g));

  // Base orbits on S(PX(2,3,1)) checked against direct closure.
  PermGroup b3 = base_of(3, 1, WreathTarget::SPX);
  for (const auto& orb : b3.orbits()) {
    auto direct = orbits_of(b3.degree(), b3.generators());
    CHECK(std::find(direct.begin(), direct.end(), orb) != direct.end());
  }
}

TEST_CASE("edge orbits of the wreath product on S(PX(2,5,1))") {
  Graph g = spx_graph(5, 1);
  PermGroup w = wreath_group(5, 1, WreathTarget::SPX);
  CHECK(edge_orbits(w, g).size() == 2);
  CHECK(is_vertex_transitive(w, g));
  CHECK_FALSE(is_arc_transitive(w, g));
  CHECK(automorphism_group(g).order() == 320);
  CHECK(edge_orbits(PermGroup::trivial(4), k4()).size() == 6);
  CHECK(is_arc_transitive(automorphism_group(k4()), k4()));
}

TEST_CASE("elementary abelian reduction") {
  PermGroup z4(4, {Permutation::from_cycles(4, {{0, 1, 2, 3}})});
  PermGroup r = reduce_to_elementary_abelian(z4, 2);
  CHECK(r.order() == 2);
  CHECK(r.contains(Permutation::from_cycles(4, {{0, 2}, {1, 3}})));
  PermGroup v4(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}), Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
  CHECK(reduce_to_elementary_abelian(v4, 2).order() == 4);
  PermGroup z2z4(6, {Permutation::from_cycles(6, {{0, 1}}), Permutation::from_cycles(6, {{2, 3, 4, 5}})});
  PermGroup rr = reduce_to_elementary_abelian(z2z4, 2);
  CHECK(rr.order() == 4);
  for (const auto& g : rr.generators()) CHECK(g.order() <= 2);
}

TEST_CASE("minimal abelian normal subgroups") {
  PermGroup z6(6, {Permutation::from_cycles(6, {{0, 1, 2, 3, 4, 5}})});
  auto m = minimal_abelian_normal(z6);
  REQUIRE(m.has_value());
  CHECK((m->order() == 2 || m->order() == 3));
  PermGroup a5(5, {Permutation::from_cycles(5, {{0, 1, 2}}), Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})});
  CHECK_FALSE(minimal_abelian_normal(a5).has_value());
  PermGroup d5(5, {Permutation::from_cycles(5, {{0, 1, 2, 3, 4}}), Permutation::from_cycles(5, {{1, 4}, {2, 3}})});
  CHECK_FALSE(find_abelian_normal_nonsemiregular(d5).has_value());
  CHECK_FALSE(find_abelian_normal_nonsemiregular(z6).has_value());
}

TEST_CASE("centralisers and block kernels") {
  PermGroup s3(3, {Permutation::from_cycles(3, {{0, 1, 2}}), Permutation::from_cycles(3, {{0, 1}})});
  PermGroup t(3, {Permutation::from_cycles(3, {{0, 1}})});
  CHECK(centralizer_in(s3, t).order() == 2);
  PermGroup z6(6, {Permutation::from_cycles(6, {{0, 1, 2, 3, 4, 5}})});
  CHECK(centralizer_in(z6, z6).order() == 6);

  PermGroup w = wreath_group(3, 1, WreathTarget::SPX);
  PermGroup base = base_of(3, 1, WreathTarget::SPX);
  auto blocks = base.orbits();
  REQUIRE(is_block_system(w, blocks));
  PermGroup kernel = kernel_on_block_system(w, blocks);
  for (const auto& g : base.generators()) CHECK(kernel.contains(g));
  std::vector<std::vector<Point>> singletons;
  for (Point p = 0; p < w.degree(); ++p) singletons.push_back({p});
  CHECK(kernel_on_block_system(w, singletons).order() == 1);
  std::vector<Point> all(w.degree());
  std::iota(all.begin(), all.end(), Point{0});
  CHECK(kernel_on_block_system(w, {all}).order() == w.order());
  // C_W(base) by filtering the enumerated group.
  std::size_t count = 0;
  for (const auto& x : enumerate_elements(w)) {
    bool commutes = true;
    for (const auto& b : base.generators()) commutes = commutes && x * b == b * x;
    count += commutes;
  }
  CHECK(centralizer_in(w, base).order() == count);
}

TEST_CASE("small Cayley graphs and products") {
  CHECK(are_isomorphic(cayley_graph_cyclic(4, {1, -1, 2}), k4()).has_value());
  CHECK(are_isomorphic(cayley_graph_cyclic(6, {1, -1, 3}), k33()).has_value());
  CHECK(cayley_graph_cyclic(3, {1, -1}) == cycle_graph(3));
  CHECK(are_isomorphic(cartesian_product(cycle_graph(3), complete_graph(2)), circular_ladder(3)).has_value());
  Graph p = testing::petersen();
  CHECK(cartesian_product(Graph(1, {}), p) == p);
  std::vector<std::vector<Vertex>> singles;
  for (Vertex v = 0; v < 10; ++v) singles.push_back({v});
  CHECK(quotient_by_partition(p, singles) == p);
  std::vector<Vertex> everything(10);
  std::iota(everything.begin(), everything.end(), Vertex{0});
  CHECK(quotient_by_partition(p, {everything}).vertex_count() == 1);
  CHECK(four_cycles(cycle_graph(4)).size() == 1);
}

TEST_CASE("four-cycles of the octahedron against 4-subsets") {
  Graph g = px_graph(3, 1);
  std::size_t brute = 0;
  for (Vertex a = 0; a < 6; ++a)
    for (Vertex b = 0; b < 6; ++b)
      for (Vertex c = 0; c < 6; ++c)
        for (Vertex d = 0; d < 6; ++d) {
          std::set<Vertex> s{a, b, c, d};
          if (s.size() == 4 && g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, d) && g.adjacent(d, a)) ++brute;
        }
  // Each 4-cycle is counted 8 times (4 starts, 2 directions).
  CHECK(four_cycles(g).size() * 8 == brute);
  CHECK(brute / 8 == 15);
}

TEST_CASE("decomposition edge cases") {
  Graph g = px_graph(3, 1);
  auto nat = natural_decomposition(3, 1);
  CHECK(nat.cycles.size() == 3);
  for (const auto& c : natural_decomposition(5, 2).cycles) CHECK(c.size() == 4);
  // 2 * r * 2^s edges, four per cycle.
  CHECK(natural_decomposition(5, 2).cycles.size() == 10);
  CHECK(is_arc_transitive_decomposition(g, wreath_group(3, 1, WreathTarget::PX), nat));
  CHECK_FALSE(is_arc_transitive_decomposition(g, PermGroup::trivial(6), nat));
  // Swap one cycle for another 4-cycle of the graph.
  auto cycles = four_cycles(g);
  auto changed = nat;
  for (const auto& c : cycles) {
    auto cc = canonical_cycle({c.begin(), c.end()});
    if (std::find(nat.cycles.begin(), nat.cycles.end(), cc) == nat.cycles.end()) {
      changed.cycles[0] = cc;
      break;
    }
  }
  changed = make_decomposition(changed.cycles);
  CHECK_FALSE(validate_decomposition(g, changed));
  CHECK_FALSE(is_arc_transitive_decomposition(g, wreath_group(3, 1, WreathTarget::PX), changed));
  // A repeated edge.
  auto doubled = nat;
  doubled.cycles[1] = doubled.cycles[0];
  CHECK_FALSE(validate_decomposition(g, doubled));
  CHECK_THROWS_AS(split(complete_graph(4), make_decomposition({{0, 1, 2, 3}})), std::invalid_argument);

  auto all = enumerate_4cycle_decompositions(px_graph(4, 1));
  CHECK(std::find(all.begin(), all.end(), natural_decomposition(4, 1)) != all.end());

  PermGroup aut = automorphism_group(px_graph(4, 2));
  auto self = decompositions_conjugate(px_graph(4, 2), natural_decomposition(4, 2), natural_decomposition(4, 2), aut);
  CHECK(self.has_value());
}
