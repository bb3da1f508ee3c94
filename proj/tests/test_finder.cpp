#include <doctest.h>

#include "semireg/construct.hpp"
#include "semireg/corpus.hpp"
#include "semireg/error.hpp"
#include "semireg/finder.hpp"
#include "semireg/group_elements.hpp"
#include "semireg/search.hpp"
#include "semireg/subgroups.hpp"
#include "support.hpp"

using namespace semireg;

namespace {

PermGroup derived_subgroup(const PermGroup& g) {
  ElementTable t(g);
  std::vector<std::size_t> comms;
  for (std::size_t a : t.generator_indices())
    for (std::size_t b : t.generator_indices())
      comms.push_back(t.multiply(t.multiply(t.inverse(a), t.inverse(b)), t.multiply(a, b)));
  return t.to_group(normal_closure(t, comms));
}

void check_witness(const Graph& g, const PermGroup& group, const SemiregularWitness& w) {
  CHECK(verify_witness(group, w));
  auto elems = testing::closure(g.vertex_count(), w.generators);
  CHECK(elems.size() == w.order);
  CHECK(testing::semiregular_oracle(g.vertex_count(), w.generators));
  for (const auto& x : w.generators) CHECK(group.contains(x));
}

}  // namespace

TEST_CASE("K4 with S4 falls back to brute force") {
  PermGroup s4(4, {Permutation::from_cycles(4, {{0, 1, 2, 3}}), Permutation::from_cycles(4, {{0, 1}})});
  SemiregularWitness w = find_semiregular(k4(), s4);
  CHECK(w.strategy == Strategy::BruteForce);
  CHECK(w.order == 4);
  CHECK_FALSE(w.fallback_reason.empty());
  check_witness(k4(), s4, w);
}

TEST_CASE("split Praeger-Xu graphs use the rotation element") {
  for (std::size_t r : {5, 6}) {
    Graph g = spx_graph(r, 1);
    PermGroup w = wreath_group(r, 1, WreathTarget::SPX);
    SemiregularWitness c2 = find_semiregular_case2(g, w);
    CHECK(c2.order >= r);
    CHECK(c2.r == std::optional<std::size_t>(r));
    // Order r when the base sum vanishes, 2r otherwise.
    REQUIRE(c2.base_sum.has_value());
    CHECK(c2.order == (*c2.base_sum ? 2 * r : r));
    check_witness(g, w, c2);
  }
  Graph g = spx_graph(6, 1);
  PermGroup w = wreath_group(6, 1, WreathTarget::SPX);
  SemiregularWitness full = find_semiregular(g, w);
  CHECK(full.order >= 6);
  check_witness(g, w, full);
}

TEST_CASE("rotation powers fix the order") {
  const std::size_t r = 5, s = 2;
  WreathElement even = WreathElement::rotation(r, 1);
  even.base = {1, 1, 0, 0, 0};
  WreathElement odd = WreathElement::rotation(r, 1);
  odd.base = {1, 0, 0, 0, 0};
  CHECK(to_permutation(even, s, WreathTarget::SPX).order() == r);
  CHECK(to_permutation(odd, s, WreathTarget::SPX).order() == 2 * r);
  PermGroup one(spx_graph(r, s).vertex_count(), {to_permutation(odd, s, WreathTarget::SPX)});
  CHECK(one.is_semiregular());
}

TEST_CASE("Petersen graph with A5 uses a 5-element") {
  Graph g = testing::petersen();
  PermGroup a5 = derived_subgroup(automorphism_group(g));
  REQUIRE(a5.order() == 60);
  auto c1 = find_semiregular_case1(a5);
  REQUIRE(c1.has_value());
  CHECK(c1->order == 5);
  check_witness(g, a5, *c1);
  SemiregularWitness w = find_semiregular(g, a5);
  CHECK(w.strategy == Strategy::Case1LargeOrderElement);
  CHECK(w.order == 5);
}

TEST_CASE("case 1 on a {2,3}-group finds nothing") {
  PermGroup s4(4, {Permutation::from_cycles(4, {{0, 1, 2, 3}}), Permutation::from_cycles(4, {{0, 1}})});
  CHECK_FALSE(find_semiregular_case1(s4).has_value());
}

TEST_CASE("brute-force oracle") {
  // Regular groups are their own maximum.
  PermGroup z8(8, {Permutation::from_cycles(8, {{0, 1, 2, 3, 4, 5, 6, 7}})});
  Graph m = moebius_ladder(4);
  SemiregularWitness w = max_semiregular_bruteforce(m, z8, kDefaultCap);
  CHECK(w.order == 8);
  CHECK(w.mode == "full");
  // Aut(K3,3) has order 72 and no semiregular subgroup beyond order 6.
  PermGroup aut = automorphism_group(k33());
  SemiregularWitness k = max_semiregular_bruteforce(k33(), aut, kDefaultCap);
  CHECK(k.order == 6);
  check_witness(k33(), aut, k);
}

TEST_CASE("brute-force oracle agrees with a scan over 3-generated subgroups") {
  // Every group of order at most 12 is generated by three elements, so
  // closures of triples reach every semiregular subgroup here.
  std::vector<Graph> graphs{q3(), circular_ladder(5), moebius_ladder(5), spx_graph(3, 1)};
  for (const auto& g : graphs) {
    PermGroup aut = automorphism_group(g);
    auto elems = aut.elements(10000);
    std::size_t best = 1;
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = i; j < elems.size(); ++j)
        for (std::size_t k = j; k < elems.size(); ++k) {
          auto sub = testing::closure(g.vertex_count(), {elems[i], elems[j], elems[k]}, g.vertex_count() + 1);
          if (sub.size() <= best || sub.size() > g.vertex_count()) continue;
          bool ok = true;
          for (const auto& x : sub) ok = ok && (x.is_identity() || x.fixed_point_count() == 0);
          if (ok) best = sub.size();
        }
    SemiregularWitness w = max_semiregular_bruteforce(g, aut, kDefaultCap);
    CHECK(w.order == best);
  }
}

TEST_CASE("case 3 on ladders") {
  Graph m = moebius_ladder(6);
  PermGroup aut = automorphism_group(m);
  SemiregularWitness w = find_semiregular(m, aut);
  CHECK(w.order >= 6);
  check_witness(m, aut, w);
  SemiregularWitness best = max_semiregular_bruteforce(m, aut, kDefaultCap);
  CHECK(w.order <= best.order);
}

TEST_CASE("reduction to a cubic quotient") {
  Graph g = circular_ladder(6);
  PermGroup aut = automorphism_group(g);
  Reduction red = reduce_maximal_cubic_quotient(g, aut);
  CHECK(red.m.is_semiregular());
  CHECK(is_normal(aut, red.m));
  CHECK(valency(red.graph) == std::optional<std::size_t>(3));
  CHECK(is_connected(red.graph));
  CHECK(red.group.is_transitive());
  CHECK(red.graph.vertex_count() * red.m.order() == g.vertex_count());
}

TEST_CASE("finder never beats the oracle on small Cayley graphs") {
  CorpusOptions opt;
  opt.max_vertices = 16;
  opt.include_spx = false;
  for (const auto& pr : build_corpus(opt)) {
    SemiregularWitness w = find_semiregular(pr.graph, pr.group);
    check_witness(pr.graph, pr.group, w);
    SemiregularWitness best = max_semiregular_bruteforce(pr.graph, pr.group, kDefaultCap);
    CHECK(best.mode == "full");
    CHECK(w.order <= best.order);
  }
}
