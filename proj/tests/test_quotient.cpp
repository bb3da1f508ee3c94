#include <doctest.h>

#include "semireg/construct.hpp"
#include "semireg/corpus.hpp"
#include "semireg/decomp.hpp"
#include "semireg/error.hpp"
#include "semireg/quotient.hpp"
#include "semireg/search.hpp"
#include "semireg/subgroups.hpp"
#include "support.hpp"

using namespace semireg;

namespace {

PermGroup base_group(std::size_t r, std::size_t s) {
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < r; ++i)
    gens.push_back(to_permutation(WreathElement::base_generator(r, i), s, WreathTarget::SPX));
  return PermGroup(spx_graph(r, s).vertex_count(), gens);
}

std::string violation_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const HypothesisViolation& e) {
    return e.kind();
  }
  return "";
}

}  // namespace

TEST_CASE("normal quotients") {
  Graph g = spx_graph(3, 1);
  PermGroup w = wreath_group(3, 1, WreathTarget::SPX);
  WreathElement ones = WreathElement::identity(3);
  std::fill(ones.base.begin(), ones.base.end(), 1);
  PermGroup n(g.vertex_count(), {to_permutation(ones, 1, WreathTarget::SPX)});
  NormalQuotient q = normal_quotient(g, w, n);
  CHECK(q.graph.vertex_count() == 6);
  for (Vertex v = 0; v < 6; ++v) CHECK(q.graph.degree(v) <= 3);

  NormalQuotient same = normal_quotient(g, w, PermGroup::trivial(g.vertex_count()));
  CHECK(same.graph.vertex_count() == g.vertex_count());
  NormalQuotient point = normal_quotient(g, w, w);
  CHECK(point.graph.vertex_count() == 1);
}

TEST_CASE("matching of the split Praeger-Xu graph") {
  const std::size_t r = 5, s = 1;
  Graph g = spx_graph(r, s);
  Matching m = matching_orbit(g, wreath_group(r, s, WreathTarget::SPX));
  CHECK(m.k == 4);
  CHECK(m.edges.size() == g.vertex_count() / 2);
  for (const auto& e : m.edges) CHECK(e.v == e.u + 1);  // (n, x, +) ~ (n, x, -)
  CHECK_FALSE(is_degenerate(g, m.edges));
}

TEST_CASE("matching of a prism is its rungs") {
  Graph g = circular_ladder(5);
  Matching m = matching_orbit(g, automorphism_group(g));
  CHECK(m.k == 5);
  CHECK(m.edges.size() == 5);
  // Removing the rungs leaves two 5-cycles.
  CHECK(m.cycles.size() == 2);
}

TEST_CASE("K4 has an arc-transitive local action") {
  PermGroup s4(4, {Permutation::from_cycles(4, {{0, 1, 2, 3}}), Permutation::from_cycles(4, {{0, 1}})});
  CHECK(local_group_order(k4(), s4, 0) == 6);
  CHECK(violation_kind([&] { matching_orbit(k4(), s4); }) == "local-group-order");
}

TEST_CASE("merged quotient of the split graph is the Praeger-Xu graph") {
  for (auto [r, s] : {std::pair<std::size_t, std::size_t>{5, 1}, {5, 2}, {4, 2}}) {
    Graph g = spx_graph(r, s);
    PermGroup w = wreath_group(r, s, WreathTarget::SPX);
    Matching m = matching_orbit(g, w);
    CHECK_FALSE(is_degenerate(g, m.edges));
    MergedQuotient mq = merged_quotient(g, w, m);
    CHECK(mq.faithful);
    CHECK(validate_decomposition(mq.graph, mq.decomposition));
    auto rec = recognize_px(mq.graph);
    REQUIRE(rec.has_value());
    CHECK(rec->r == r);
    CHECK(rec->s == s);
    CHECK(are_isomorphic(split(mq.graph, mq.decomposition), g).has_value());
  }
}

TEST_CASE("recognising Praeger-Xu graphs") {
  auto a = recognize_px(px_graph(5, 2));
  REQUIRE(a.has_value());
  CHECK(a->r == 5);
  CHECK(a->s == 2);
  CHECK(is_isomorphism(px_graph(5, 2), px_graph(5, 2), a->witness));
  auto b = recognize_px(px_graph(6, 1));
  REQUIRE(b.has_value());
  CHECK(b->r == 6);
  CHECK(b->s == 1);
  auto c = recognize_px(px_graph(3, 2));
  REQUIRE(c.has_value());
  CHECK(c->r == 3);
  CHECK_FALSE(recognize_px(complete_graph(5)).has_value());
}

TEST_CASE("classification of split Praeger-Xu graphs") {
  for (auto [r, s] : {std::pair<std::size_t, std::size_t>{5, 2}, {4, 1}, {4, 3}, {6, 1}}) {
    Graph g = spx_graph(r, s);
    PermGroup w = wreath_group(r, s, WreathTarget::SPX);
    ClassificationResult res = classify_theorem12(g, w, base_group(r, s));
    CHECK(res.family == Family::SPX);
    CHECK(res.r == r);
    CHECK(res.s == s);
    CHECK(is_isomorphism(g, res.family_graph(), res.witness));
    CHECK(res.round_trip == std::optional<bool>(true));
    CHECK(res.p == 2);
    // Without a given N one is found.
    ClassificationResult auto_n = classify_theorem12(g, w);
    CHECK(auto_n.family == Family::SPX);
  }
}

TEST_CASE("K3,3 with an order-18 group") {
  Permutation a = Permutation::from_cycles(6, {{0, 1, 2}});
  Permutation b = Permutation::from_cycles(6, {{3, 4, 5}});
  Permutation t = Permutation::from_cycles(6, {{0, 3}, {1, 4}, {2, 5}});
  PermGroup g(6, {a, b, t});
  REQUIRE(g.order() == 18);
  PermGroup n(6, {a, b});
  CHECK(n.stabilizer(0).order() == 3);
  ClassificationResult res = classify_theorem12(k33(), g, n);
  CHECK(res.family == Family::K33);
  CHECK(res.p == 3);
  CHECK(is_isomorphism(k33(), res.family_graph(), res.witness));
}

TEST_CASE("hypothesis violations") {
  PermGroup c6(6, {Permutation::from_cycles(6, {{0, 1, 2, 3, 4, 5}})});
  CHECK(violation_kind([&] { classify_theorem12(cycle_graph(6), c6); }) == "not-cubic");
  // Regular groups have only semiregular subgroups.
  Graph m = moebius_ladder(5);
  PermGroup z10(10, {Permutation::from_cycles(10, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}})});
  CHECK(violation_kind([&] { classify_theorem12(m, z10); }) == "no-abelian-normal-nonsemiregular");
  PermGroup half(10, {Permutation::from_cycles(10, {{0, 2, 4, 6, 8}, {1, 3, 5, 7, 9}})});
  CHECK(violation_kind([&] { classify_theorem12(m, half); }) == "not-vertex-transitive");
}

TEST_CASE("every abelian normal non-semiregular pair on small Cayley graphs classifies") {
  // Prisms and Moebius ladders with full automorphism groups, plus the cube.
  std::vector<Graph> graphs{q3(), k33(), circular_ladder(6), moebius_ladder(6), spx_graph(3, 1),
                            spx_graph(3, 2), generalized_petersen(8, 3)};
  for (const auto& g : graphs) {
    PermGroup aut = automorphism_group(g);
    if (!find_abelian_normal_nonsemiregular(aut)) continue;
    std::string kind;
    try {
      ClassificationResult res = classify_theorem12(g, aut);
      CHECK(is_isomorphism(g, res.family_graph(), res.witness));
    } catch (const HypothesisViolation& e) {
      FAIL("unexpected violation " << e.what());
    }
  }
}
