#pragma once
// Independent oracles and generators shared by the unit tests.

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>
#include <vector>

#include "semireg/graph.hpp"
#include "semireg/perm.hpp"

namespace testing {

using semireg::Graph;
using semireg::Permutation;
using semireg::Point;

inline Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(std::move(img));
}

// All products of the generators, breadth first.
inline std::vector<Permutation> closure(std::size_t n, const std::vector<Permutation>& gens,
                                        std::size_t cap = 1u << 20) {
  std::unordered_set<Permutation, semireg::PermutationHash> seen;
  std::vector<Permutation> out{Permutation(n)};
  seen.insert(out[0]);
  for (std::size_t i = 0; i < out.size() && out.size() < cap; ++i)
    for (const auto& g : gens) {
      Permutation x = out[i] * g;
      if (seen.insert(x).second) out.push_back(std::move(x));
    }
  return out;
}

// Counts automorphisms by trying every permutation; n <= 9 only.
inline std::size_t brute_automorphism_count(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  std::size_t count = 0;
  do {
    bool ok = true;
    for (const auto& e : g.edges())
      if (!g.adjacent(img[e.u], img[e.v])) {
        ok = false;
        break;
      }
    count += ok;
  } while (std::next_permutation(img.begin(), img.end()));
  return count;
}

inline Graph petersen() {
  std::vector<semireg::Edge> es;
  for (Point i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);
    es.emplace_back(i, i + 5);
    es.emplace_back(i + 5, 5 + (i + 2) % 5);
  }
  return Graph(10, es);
}

// Checks semiregularity by fixed points over the enumerated group.
inline bool semiregular_oracle(std::size_t n, const std::vector<Permutation>& gens) {
  for (const auto& x : closure(n, gens))
    if (!x.is_identity() && x.fixed_point_count() != 0) return false;
  return true;
}

}  // namespace testing
