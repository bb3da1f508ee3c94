#include <doctest.h>

#include <random>

#include "semireg/error.hpp"
#include "semireg/group_elements.hpp"
#include "semireg/perm.hpp"
#include "semireg/simd/kernels.hpp"
#include "semireg/subgroups.hpp"
#include "support.hpp"

using namespace semireg;

TEST_CASE("products apply the left factor first") {
  Permutation a = Permutation::from_cycles(3, {{0, 1}});
  Permutation b = Permutation::from_cycles(3, {{1, 2}});
  Permutation ab = a * b;
  // 0 -> 1 under a, then 1 -> 2 under b.
  CHECK(ab[0] == 2);
  CHECK(ab[1] == 0);
  CHECK(ab[2] == 1);
  CHECK(a.conjugate_by(b) == b.inverse() * a * b);
}

TEST_CASE("orders, powers and cycle types") {
  Permutation p = Permutation::from_cycles(7, {{0, 1, 2}, {3, 4}});
  CHECK(p.order() == 6);
  CHECK(p.pow(6).is_identity());
  CHECK(p.pow(-1) == p.inverse());
  CHECK(p.fixed_point_count() == 2);
  CHECK(p.first_moved_point() == 0);
  CHECK_FALSE(p.has_uniform_cycles());
  CHECK(Permutation::from_cycles(6, {{0, 1, 2}, {3, 4, 5}}).has_uniform_cycles());
}

TEST_CASE("text round trips") {
  Permutation p = Permutation::from_cycles(6, {{0, 3, 5}, {1, 2}});
  CHECK(parse_permutation(to_image_string(p), 6) == p);
  CHECK(parse_permutation(to_cycle_string(p), 6) == p);
  CHECK_THROWS_AS(parse_permutation("(0 1", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("[0 0 1]", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("(0 1)", std::nullopt), std::invalid_argument);
}

TEST_CASE("symmetric and alternating group orders") {
  Permutation c = Permutation::from_cycles(6, {{0, 1, 2, 3, 4, 5}});
  Permutation t = Permutation::from_cycles(6, {{0, 1}});
  CHECK(PermGroup(6, {c, t}).order() == 720);
  Permutation a = Permutation::from_cycles(5, {{0, 1, 2}});
  Permutation b = Permutation::from_cycles(5, {{0, 1, 2, 3, 4}});
  PermGroup a5(5, {a, b});
  CHECK(a5.order() == 60);
  CHECK_FALSE(a5.contains(Permutation::from_cycles(5, {{0, 1}})));
  CHECK(a5.contains(Permutation::from_cycles(5, {{0, 1}, {2, 3}})));
  CHECK(a5.stabilizer(0).order() == 12);
}

TEST_CASE("stabilizer chain order matches enumeration on random groups") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 3 + rng() % 7;
    std::vector<Permutation> gens;
    std::size_t k = 1 + rng() % 2;
    for (std::size_t i = 0; i < k; ++i) {
      // Sparse permutations keep many groups small and intransitive.
      Permutation p = testing::random_permutation(n, rng);
      if (rng() % 2) p = Permutation::from_cycles(n, {{0, static_cast<Point>(1 + rng() % (n - 1))}});
      gens.push_back(p);
    }
    PermGroup g(n, gens);
    auto elems = testing::closure(n, gens);
    CHECK(g.order() == elems.size());
    for (const auto& x : elems) CHECK(g.contains(x));
  }
}

TEST_CASE("known order with a base prefix stops early but stays exact") {
  Permutation c = Permutation::from_cycles(5, {{0, 1, 2, 3, 4}});
  Permutation t = Permutation::from_cycles(5, {{0, 1}});
  PermGroup g(5, {c, t}, {4, 3}, 120);
  CHECK(g.order() == 120);
  CHECK(g.base()[0] == 4);
  CHECK(g.base()[1] == 3);
}

TEST_CASE("semiregularity tests agree") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 4 + rng() % 6;
    std::vector<Permutation> gens{testing::random_permutation(n, rng)};
    // Two random generators usually give S_n; keep those cases small.
    if (n <= 6 && rng() % 2 == 0) gens.push_back(testing::random_permutation(n, rng));
    PermGroup g(n, gens);
    bool oracle = testing::semiregular_oracle(n, gens);
    CHECK(g.is_semiregular() == oracle);
    CHECK(semiregular_by_fixed_points(g, 100000) == oracle);
    CHECK(semiregular_by_stabilizers(g) == oracle);
  }
}

TEST_CASE("normal subgroups of S4") {
  PermGroup s4(4, {Permutation::from_cycles(4, {{0, 1, 2, 3}}), Permutation::from_cycles(4, {{0, 1}})});
  ElementTable table(s4);
  auto normals = normal_subgroups(table);
  std::vector<std::size_t> orders;
  for (const auto& b : normals) orders.push_back(b.count());
  CHECK(orders == std::vector<std::size_t>{1, 4, 12, 24});
  PermGroup v4 = table.to_group(normals[1]);
  CHECK(is_normal(s4, v4));
  CHECK(v4.is_abelian());
  CHECK(v4.is_semiregular());
  CHECK_FALSE(find_abelian_normal_nonsemiregular(s4).has_value());
  CHECK(centralizer_in(table, normals[1]).count() == 4);
}

TEST_CASE("abelian normal non-semiregular subgroup of Z2 wr Z2") {
  // The base group fixes points, so it is found.
  PermGroup g(4, {Permutation::from_cycles(4, {{0, 1}}), Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
  auto n = find_abelian_normal_nonsemiregular(g);
  REQUIRE(n.has_value());
  CHECK(n->is_abelian());
  CHECK_FALSE(n->is_semiregular());
  CHECK(is_normal(g, *n));
}

TEST_CASE("element cap raises CapExceeded") {
  PermGroup s8(8, {Permutation::from_cycles(8, {{0, 1, 2, 3, 4, 5, 6, 7}}), Permutation::from_cycles(8, {{0, 1}})});
  CHECK_THROWS_AS(ElementTable(s8, 1000), CapExceeded);
}

TEST_CASE("vector kernels match the scalar reference") {
  const auto& ref = simd::scalar_kernels();
  const auto* vec = simd::avx2_kernels();
  if (!vec) {
    MESSAGE("no AVX2 kernels on this machine; checking the reference only");
    vec = &ref;
  }
  std::mt19937_64 rng(3);
  for (std::size_t n : {0, 1, 7, 8, 9, 15, 16, 17, 31, 64, 100, 257, 1000}) {
    auto a = testing::random_permutation(n, rng), b = testing::random_permutation(n, rng);
    std::vector<simd::Point> x(a.images().begin(), a.images().end()), y(b.images().begin(), b.images().end());
    // Fix a few points so count_fixed and first_moved see both outcomes.
    for (std::size_t i = 0; i < n; i += 3) {
      auto j = std::find(x.begin(), x.end(), static_cast<simd::Point>(i)) - x.begin();
      std::swap(x[i], x[static_cast<std::size_t>(j)]);
    }
    std::vector<simd::Point> o1(n), o2(n);
    ref.compose(x.data(), y.data(), o1.data(), n);
    vec->compose(x.data(), y.data(), o2.data(), n);
    CHECK(o1 == o2);
    CHECK(ref.count_fixed(x.data(), n) == vec->count_fixed(x.data(), n));
    CHECK(ref.first_moved(x.data(), n) == vec->first_moved(x.data(), n));
    CHECK(ref.equal(x.data(), y.data(), n) == vec->equal(x.data(), y.data(), n));
    CHECK(vec->equal(x.data(), x.data(), n));
    std::vector<simd::Point> id(n);
    std::iota(id.begin(), id.end(), simd::Point{0});
    CHECK(vec->first_moved(id.data(), n) == n);
    CHECK(vec->count_fixed(id.data(), n) == n);
    if (n > 1) {
      auto z = id;
      std::swap(z[n - 1], z[n - 2]);
      CHECK(vec->first_moved(z.data(), n) == n - 2);
      CHECK_FALSE(vec->equal(z.data(), id.data(), n));
    }
  }
}
