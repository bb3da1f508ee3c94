#include <doctest.h>

#include <random>

#include "semireg/construct.hpp"
#include "semireg/search.hpp"
#include "support.hpp"

using namespace semireg;

TEST_CASE("parameter checks") {
  CHECK_THROWS_AS(px_graph(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(px_graph(4, 4), std::invalid_argument);
  CHECK_THROWS_AS(spx_graph(4, 0), std::invalid_argument);
}

TEST_CASE("PX(2,r,1) is the wreath graph C_r[2K1]") {
  // Vertices (n, x), x in Z_r, adjacent to both vertices over x +- 1.
  for (std::size_t r = 3; r <= 7; ++r) {
    Graph g = px_graph(r, 1);
    for (std::size_t x = 0; x < r; ++x)
      for (std::uint32_t a = 0; a < 2; ++a)
        for (std::uint32_t b = 0; b < 2; ++b)
          CHECK(g.adjacent(static_cast<Vertex>(px_index(1, a, x)),
                           static_cast<Vertex>(px_index(1, b, (x + 1) % r))));
  }
}

TEST_CASE("PX edge rule on labelled vertices") {
  // (n_0..n_{s-1}, x) ~ (n_1..n_s, x+1).
  const std::size_t r = 5, s = 3;
  Graph g = px_graph(r, s);
  REQUIRE(g.has_labels());
  for (const auto& e : g.edges()) {
    const auto& a = g.labels()[e.u].coords;
    const auto& b = g.labels()[e.v].coords;
    auto shifted = [&](const std::vector<int>& p, const std::vector<int>& q) {
      if ((p[s] + 1) % static_cast<int>(r) != q[s]) return false;
      for (std::size_t i = 0; i + 1 < s; ++i)
        if (p[i + 1] != q[i]) return false;
      return true;
    };
    CHECK((shifted(a, b) || shifted(b, a)));
  }
}

TEST_CASE("traversing-path model for small r") {
  for (std::size_t r = 3; r <= 5; ++r)
    for (std::size_t s = 1; s < r; ++s) {
      Graph a = px_graph(r, s), b = px_via_traversing_paths(r, s);
      CHECK(b.vertex_count() == a.vertex_count());
      auto w = are_isomorphic(a, b);
      REQUIRE(w.has_value());
      CHECK(is_isomorphism(a, b, *w));
    }
}

TEST_CASE("natural decomposition and split") {
  for (std::size_t r = 3; r <= 6; ++r)
    for (std::size_t s = 1; s < r; ++s) {
      Graph g = px_graph(r, s);
      CycleDecomposition d = natural_decomposition(r, s);
      CHECK(d.cycles.size() == r << (s - 1));
      CHECK(is_cycle_decomposition(g, d));
      Graph sp = split(g, d);
      CHECK(sp.vertex_count() == 2 * g.vertex_count());
      CHECK(valency(sp) == std::optional<std::size_t>(3));
      CHECK(are_isomorphic(sp, spx_graph(r, s)).has_value());
    }
}

TEST_CASE("split of K5 along two 5-cycles") {
  // Each vertex lies on both cycles; splitting gives the Petersen-like
  // 10-vertex cubic graph with a perfect matching of "vertex" edges.
  CycleDecomposition d = make_decomposition({{0, 1, 2, 3, 4}, {0, 2, 4, 1, 3}});
  Graph k5 = complete_graph(5);
  REQUIRE(is_cycle_decomposition(k5, d));
  Graph sp = split(k5, d);
  CHECK(sp.vertex_count() == 10);
  CHECK(valency(sp) == std::optional<std::size_t>(3));
  CHECK(are_isomorphic(sp, testing::petersen()).has_value());
}

TEST_CASE("canonical cycles") {
  CHECK(canonical_cycle({3, 1, 2, 0}) == std::vector<Vertex>{0, 2, 1, 3});
  CHECK(canonical_cycle({2, 0, 1, 3}) == std::vector<Vertex>{0, 1, 3, 2});
  CHECK(make_decomposition({{1, 2, 3, 0}}) == make_decomposition({{0, 3, 2, 1}}));
}

TEST_CASE("dihedral group law") {
  const std::size_t r = 7;
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    DihedralElement a{r, rng() % r, static_cast<bool>(rng() & 1)};
    DihedralElement b{r, rng() % r, static_cast<bool>(rng() & 1)};
    std::size_t p = rng() % r;
    CHECK((a * b).apply(p) == b.apply(a.apply(p)));
    CHECK((a * a.inverse()).apply(p) == p);
  }
}

TEST_CASE("wreath action is a homomorphism into Aut") {
  std::mt19937_64 rng(4);
  for (auto target : {WreathTarget::PX, WreathTarget::SPX})
    for (std::size_t r : {3, 4, 6}) {
      for (std::size_t s = 1; s < r; ++s) {
        Graph g = target == WreathTarget::PX ? px_graph(r, s) : spx_graph(r, s);
        for (int i = 0; i < 20; ++i) {
          WreathElement a = WreathElement::random(r, rng), b = WreathElement::random(r, rng);
          Permutation pa = to_permutation(a, s, target), pb = to_permutation(b, s, target);
          CHECK(is_automorphism(g, pa));
          CHECK(to_permutation(a * b, s, target) == pa * pb);
          CHECK(to_permutation(a.inverse(), s, target) == pa.inverse());
          auto back = decode_wreath(pa, r, s, target);
          REQUIRE(back.has_value());
          CHECK(*back == a);
        }
      }
    }
}

TEST_CASE("wreath group order") {
  CHECK(wreath_group(5, 2, WreathTarget::SPX).order() == 320);
  CHECK(wreath_group(6, 1, WreathTarget::PX).order() == 768);
  // PX(2,4,1) has extra automorphisms, so not every automorphism decodes.
  Graph g = px_graph(4, 1);
  PermGroup aut = automorphism_group(g);
  CHECK(aut.order() == 1152);
  bool some_outside = false;
  for (const auto& x : aut.generators()) some_outside |= !decode_wreath(x, 4, 1, WreathTarget::PX).has_value();
  CHECK(some_outside);
}

TEST_CASE("rotation powers collapse onto the diagonal") {
  std::mt19937_64 rng(6);
  for (std::size_t r : {5, 6, 7})
    for (int i = 0; i < 100; ++i) {
      WreathElement g = WreathElement::rotation(r, 1);
      for (auto& b : g.base) b = static_cast<std::uint8_t>(rng() & 1);
      WreathElement p = g.pow(static_cast<long long>(r));
      CHECK_FALSE(p.top.reflect);
      CHECK(p.top.t == 0);
      for (auto b : p.base) CHECK(b == g.base_sum());
    }
}

TEST_CASE("ladders and the cube") {
  CHECK(automorphism_group(k4()).order() == 24);
  CHECK(automorphism_group(k33()).order() == 72);
  CHECK(automorphism_group(q3()).order() == 48);
  CHECK(are_isomorphic(circular_ladder(4), q3()).has_value());
  CHECK(are_isomorphic(moebius_ladder(2), k4()).has_value());
  CHECK(are_isomorphic(moebius_ladder(3), k33()).has_value());
}
