#include <doctest.h>

#include "semireg/construct.hpp"
#include "semireg/corpus.hpp"
#include "semireg/error.hpp"
#include "semireg/search.hpp"
#include "support.hpp"

using namespace semireg;

TEST_CASE("automorphism group orders against exhaustive search") {
  std::vector<Graph> graphs{k4(), k33(), q3(), cycle_graph(7), complete_graph(5),
                            circular_ladder(4), moebius_ladder(4), Graph(6, {{0, 1}, {1, 2}, {3, 4}})};
  for (const auto& g : graphs) {
    PermGroup a = automorphism_group(g);
    CHECK(a.order() == testing::brute_automorphism_count(g));
    for (const auto& s : a.generators()) CHECK(is_automorphism(g, s));
  }
}

TEST_CASE("Petersen graph has 120 automorphisms") {
  PermGroup a = automorphism_group(testing::petersen());
  CHECK(a.order() == 120);
  CHECK(a.is_transitive());
  CHECK(a.stabilizer(0).order() == 12);
}

TEST_CASE("larger automorphism groups") {
  CHECK(automorphism_group(complete_bipartite(4, 4)).order() == 1152);
  CHECK(automorphism_group(circular_ladder(200)).order() == 800);
  // Dodecahedron and Desargues graph.
  CHECK(automorphism_group(generalized_petersen(10, 2)).order() == 120);
  CHECK(automorphism_group(generalized_petersen(10, 3)).order() == 240);
}

TEST_CASE("colours restrict the group") {
  Graph c6 = cycle_graph(6);
  std::vector<std::uint32_t> colors{1, 0, 0, 0, 0, 0};
  CHECK(automorphism_group(c6, colors).order() == 2);
}

TEST_CASE("isomorphism witnesses on random relabellings") {
  std::mt19937_64 rng(17);
  std::vector<Graph> graphs{testing::petersen(), spx_graph(4, 2), px_graph(5, 2), generalized_petersen(8, 3)};
  for (const auto& g : graphs)
    for (int i = 0; i < 5; ++i) {
      Graph h = g.relabeled(testing::random_permutation(g.vertex_count(), rng));
      auto w = are_isomorphic(g, h);
      REQUIRE(w.has_value());
      CHECK(is_isomorphism(g, h, *w));
    }
}

TEST_CASE("non-isomorphic graphs are told apart") {
  CHECK_FALSE(are_isomorphic(circular_ladder(4), moebius_ladder(4)).has_value());
  CHECK_FALSE(are_isomorphic(generalized_petersen(8, 3), circular_ladder(8)).has_value());
  CHECK_FALSE(are_isomorphic(cycle_graph(6), Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})).has_value());
}

TEST_CASE("search size limit") {
  SearchLimits tight;
  tight.max_vertices = 10;
  CHECK_THROWS_AS(automorphism_group(cycle_graph(11), tight), CapExceeded);
}
