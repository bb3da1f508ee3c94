#include <doctest.h>

#include <map>
#include <set>

#include "semireg/corpus.hpp"
#include "semireg/search.hpp"
#include "support.hpp"

using namespace semireg;

TEST_CASE("parsing the generator table") {
  auto groups = parse_small_groups(
      "# comment\n"
      "group Z3 3\ndegree 3\n[1 2 0]\nend\n"
      "group S3 6\ndegree 3\n(0 1 2)\n(0 1)\nend\n");
  REQUIRE(groups.size() == 2);
  CHECK(groups[1].name == "S3");
  CHECK(groups[1].group.order() == 6);
  CHECK_THROWS_AS(parse_small_groups("group Z3 4\ndegree 3\n[1 2 0]\nend\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_small_groups("grp Z3 3\n"), std::runtime_error);
}

TEST_CASE("embedded table") {
  auto groups = load_small_groups();
  CHECK(groups.size() > 500);
  std::set<std::uint64_t> orders;
  for (const auto& g : groups) {
    CHECK(g.group.order() == g.order);
    orders.insert(g.order);
  }
  for (std::uint64_t n = 1; n <= 64; ++n) CHECK(orders.count(n) == 1);
  // Counts for orders where the table is complete.
  std::map<std::uint64_t, std::size_t> count;
  for (const auto& g : groups) ++count[g.order];
  CHECK(count[8] == 5);
  CHECK(count[12] == 5);
  CHECK(count[16] >= 10);
}

TEST_CASE("generalised Petersen graphs") {
  CHECK(are_isomorphic(generalized_petersen(5, 2), testing::petersen()).has_value());
  CHECK(automorphism_group(generalized_petersen(8, 3)).order() == 96);
  CHECK_THROWS_AS(generalized_petersen(6, 3), std::invalid_argument);
}

TEST_CASE("small corpus") {
  CorpusOptions opt;
  opt.max_vertices = 20;
  auto graphs = corpus_graphs(opt);
  // Pairwise non-isomorphic, cubic, connected.
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    CHECK(valency(graphs[i].graph) == std::optional<std::size_t>(3));
    CHECK(is_connected(graphs[i].graph));
    for (std::size_t j = i + 1; j < graphs.size(); ++j)
      CHECK_FALSE(are_isomorphic(graphs[i].graph, graphs[j].graph).has_value());
  }
  // Cubic vertex-transitive graphs on at most 20 vertices: 4, 6, 8, 10 and 12
  // vertices give 1, 2, 2, 3, 4 graphs in the standard census.
  std::map<std::size_t, std::size_t> by_order;
  for (const auto& g : graphs) ++by_order[g.graph.vertex_count()];
  CHECK(by_order[4] == 1);
  CHECK(by_order[6] == 2);
  CHECK(by_order[8] == 2);
  CHECK(by_order[10] == 3);
  CHECK(by_order[12] == 4);

  auto pairs = corpus_pairs(graphs, opt);
  for (const auto& p : pairs) {
    CHECK(p.group.is_transitive());
    CHECK(p.group.order() <= opt.max_group_order);
    for (const auto& s : p.group.generators()) CHECK(is_automorphism(p.graph, s));
  }
  // Deterministic.
  auto again = build_corpus(opt);
  REQUIRE(again.size() == pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    CHECK(again[i].name == pairs[i].name);
    CHECK(again[i].group.generators() == pairs[i].group.generators());
  }
}
