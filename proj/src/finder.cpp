#include "semireg/finder.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "semireg/construct.hpp"
#include "semireg/error.hpp"
#include "semireg/quotient.hpp"
#include "semireg/search.hpp"
#include "semireg/subgroups.hpp"

namespace semireg {
namespace {

void require_cubic_vt(const Graph& g, const PermGroup& group) {
  if (valency(g) != std::optional<std::size_t>(3))
    throw HypothesisViolation("not-cubic", "the graph is not cubic");
  if (!is_connected(g)) throw HypothesisViolation("disconnected", "the graph is not connected");
  if (group.degree() != g.vertex_count())
    throw HypothesisViolation("not-automorphisms", "group degree differs from the vertex count");
  for (const auto& s : group.generators())
    if (!is_automorphism(g, s))
      throw HypothesisViolation("not-automorphisms", "a generator is not an automorphism");
  if (!group.is_transitive())
    throw HypothesisViolation("not-vertex-transitive", "the group is not vertex-transitive");
}

SemiregularWitness cyclic_witness(const Permutation& x, Strategy strategy) {
  SemiregularWitness w;
  w.strategy = strategy;
  if (!x.is_identity()) w.generators.push_back(x);
  w.order = x.order();
  return w;
}

std::vector<Permutation> induced_generators(const PermGroup& group,
                                            const std::vector<std::vector<Vertex>>& blocks) {
  std::vector<Permutation> gens;
  for (const auto& s : group.generators()) {
    auto induced = induced_on_sets(s, blocks);
    if (!induced) throw std::logic_error("orbits of a normal subgroup are not blocks");
    gens.push_back(std::move(*induced));
  }
  return gens;
}

// Cyclic order of the vertices of a cycle graph.
std::vector<Vertex> cycle_order(const Graph& c) {
  std::vector<Vertex> order{0};
  Vertex prev = 0, cur = c.neighbors(0)[0];
  while (cur != 0) {
    order.push_back(cur);
    Vertex next = c.neighbors(cur)[0] == prev ? c.neighbors(cur)[1] : c.neighbors(cur)[0];
    prev = cur;
    cur = next;
  }
  return order;
}

}  // namespace

std::string strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Case1LargeOrderElement: return "case1-large-order-element";
    case Strategy::Case2PxCorollary: return "case2-px-corollary";
    case Strategy::Case3Rotation: return "case3-rotation";
    case Strategy::BruteForce: return "brute-force";
  }
  return "?";
}

bool verify_witness(const PermGroup& group, const SemiregularWitness& w) {
  for (const auto& s : w.generators)
    if (!group.contains(s)) return false;
  PermGroup h(group.degree(), w.generators);
  return h.order() == w.order && h.is_semiregular();
}

Reduction reduce_maximal_cubic_quotient(const Graph& g, const PermGroup& group, std::uint64_t cap) {
  require_cubic_vt(g, group);
  ElementTable table(group, cap);
  auto normals = normal_subgroups(table);
  for (auto it = normals.rbegin(); it != normals.rend(); ++it) {
    PermGroup m = table.to_group(*it);
    auto blocks = m.orbits();
    Graph q = quotient_by_partition(g, blocks);
    if (valency(q) != std::optional<std::size_t>(3)) continue;
    if (!table.is_semiregular(*it))
      throw HypothesisViolation("reduction", "M with cubic quotient is not semiregular");
    if (kernel_on_block_system(table, blocks) != *it)
      throw HypothesisViolation("reduction", "M is not the kernel on its orbits");
    PermGroup action(blocks.size(), induced_generators(group, blocks), {}, group.order() / m.order());
    return Reduction{std::move(q), std::move(action), std::move(m), std::move(blocks)};
  }
  throw std::logic_error("the trivial subgroup always gives a cubic quotient");
}

std::optional<SemiregularWitness> find_semiregular_case1(const PermGroup& group, std::uint64_t cap) {
  std::optional<Permutation> best;
  group.for_each_element(cap, [&](const Permutation& x) {
    std::uint64_t o = x.order();
    if (o == 1 || o % 2 == 0 || o % 3 == 0) return;
    if (!best || o > best->order() || (o == best->order() && x < *best)) best = x;
  });
  if (!best) return std::nullopt;
  return cyclic_witness(*best, Strategy::Case1LargeOrderElement);
}

SemiregularWitness find_semiregular_case2(const Graph& g, const PermGroup& group, std::uint64_t cap) {
  const std::size_t n = g.vertex_count();
  std::optional<std::pair<std::size_t, std::size_t>> params;
  std::optional<Permutation> phi;
  const auto profile = distance_profile(g, 0);
  for (std::size_t r = n / 4; r >= 5 && !phi; --r) {
    if (n % (2 * r)) continue;
    std::size_t q = n / (2 * r), s = 0;
    while ((std::size_t{1} << s) < q) ++s;
    if ((std::size_t{1} << s) != q || s < 1 || s > r - 1) continue;
    Graph cand = spx_graph(r, s);
    if (distance_profile(cand, 0) != profile) continue;
    if (auto w = are_isomorphic(g, cand)) {
      phi = std::move(*w);
      params = {r, s};
    }
  }
  if (!phi) throw HypothesisViolation("not-spx", "the graph is not S(PX(2,r,s)) with r >= 5");
  auto [r, s] = *params;
  Permutation phi_inv = phi->inverse();

  std::optional<Permutation> found;
  std::optional<WreathElement> decoded;
  group.for_each_element(cap, [&](const Permutation& x) {
    if (found) return;
    auto wx = decode_wreath(phi_inv * x * *phi, r, s, WreathTarget::SPX);
    if (!wx) throw HypothesisViolation("not-spx", "an element is outside the wreath product");
    if (wx->top.reflect || std::gcd(wx->top.t, r) != 1) return;
    found = x;
    decoded = wx;
  });
  if (!found) throw HypothesisViolation("not-spx", "G has no element projecting to an r-rotation");
  SemiregularWitness w = cyclic_witness(*found, Strategy::Case2PxCorollary);
  w.r = r;
  w.base_sum = decoded->base_sum();
  return w;
}

SemiregularWitness find_semiregular_case3(const Graph& g, const PermGroup& group, std::uint64_t cap) {
  ElementTable table(group, cap);
  auto normals = normal_subgroups(table);
  auto nb = minimal_abelian_normal(table, normals);
  if (!nb) throw HypothesisViolation("case3-no-abelian-normal", "G has no abelian normal subgroup");
  if (!table.is_semiregular(*nb))
    throw HypothesisViolation("case3-not-semiregular", "the minimal abelian normal subgroup is not semiregular");
  PermGroup n = table.to_group(*nb);
  auto blocks = n.orbits();
  if (blocks.size() < 3)
    throw HypothesisViolation("case3-few-orbits", "N has " + std::to_string(blocks.size()) + " orbits");
  Graph q = quotient_by_partition(g, blocks);
  if (valency(q) != std::optional<std::size_t>(2) || !is_connected(q))
    throw HypothesisViolation("case3-not-cycle", "Γ/N is not a cycle");

  const std::size_t m = blocks.size();
  auto order = cycle_order(q);
  std::vector<std::size_t> position(m);
  for (std::size_t i = 0; i < m; ++i) position[order[i]] = i;
  std::vector<std::size_t> block_of(g.vertex_count());
  for (std::size_t b = 0; b < m; ++b)
    for (Vertex v : blocks[b]) block_of[v] = b;

  Bitset kernel = kernel_on_block_system(table, blocks);
  Bitset cent = centralizer_in(table, *nb);
  Bitset ck(table.size());
  for (std::size_t i : kernel.indices())
    if (cent.test(i)) ck.set(i);

  // Rotation step of an element on the cycle Γ/N, or nullopt for reflections.
  Vertex rep0 = blocks[order[0]].front(), rep1 = blocks[order[1]].front();
  std::optional<std::size_t> best;
  std::size_t best_step = 0;
  for (std::size_t i : cent.indices()) {
    const Permutation& x = table[i];
    std::size_t i0 = position[block_of[x[rep0]]], i1 = position[block_of[x[rep1]]];
    if (i1 != (i0 + 1) % m || i0 == 0) continue;
    if (!best || i0 < best_step) {
      best = i;
      best_step = i0;
    }
  }
  if (!best) throw HypothesisViolation("case3-no-rotation", "C_G(N) induces no rotation of Γ/N");
  const Permutation& x = table[*best];
  std::size_t rot_order = m / std::gcd(m, best_step);
  if (!nb->test(table.index_of(x.pow(static_cast<long long>(rot_order)))))
    throw HypothesisViolation("case3-power", "g^q is not in N");
  SemiregularWitness w = cyclic_witness(x, Strategy::Case3Rotation);
  w.cycle_length = m;
  w.step = best_step;
  w.centralizer_equals_n = ck == *nb;
  return w;
}

SemiregularWitness max_semiregular_bruteforce(const Graph& g, const PermGroup& group,
                                              std::uint64_t cap, std::uint64_t full_limit) {
  require_automorphisms(g, group);
  SemiregularWitness best;
  best.strategy = Strategy::BruteForce;
  if (group.order() > full_limit) {
    best.mode = "element";
    std::optional<Permutation> top;
    group.for_each_element(cap, [&](const Permutation& x) {
      if (x.is_identity() || !x.has_uniform_cycles()) return;
      if (!top || x.order() > top->order() || (x.order() == top->order() && x < *top)) top = x;
    });
    if (top) {
      best.generators = {*top};
      best.order = top->order();
    }
    return best;
  }
  best.mode = "full";
  ElementTable table(group, cap);
  // One generator per semiregular cyclic subgroup.
  std::vector<std::size_t> candidates;
  std::unordered_set<Bitset, BitsetHash> cyclic;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (i == table.identity() || !table[i].has_uniform_cycles()) continue;
    std::size_t gi[1] = {i};
    if (cyclic.insert(table.closure(gi)).second) candidates.push_back(i);
  }
  std::unordered_set<Bitset, BitsetHash> seen;
  Bitset trivial = table.closure({});
  std::vector<std::pair<Bitset, std::vector<std::size_t>>> frontier{{trivial, {}}};
  seen.insert(trivial);
  Bitset best_set = trivial;
  std::vector<std::size_t> best_gens;
  while (!frontier.empty()) {
    std::vector<std::pair<Bitset, std::vector<std::size_t>>> next;
    for (const auto& [h, gens] : frontier) {
      for (std::size_t c : candidates) {
        if (h.test(c)) continue;
        std::size_t extra[1] = {c};
        Bitset j = table.join(h, gens, extra);
        if (!seen.insert(j).second) continue;
        if (!table.is_semiregular(j)) continue;
        auto jg = gens;
        jg.push_back(c);
        if (j.count() > best_set.count()) {
          best_set = j;
          best_gens = jg;
        }
        next.emplace_back(std::move(j), std::move(jg));
      }
    }
    frontier = std::move(next);
  }
  for (std::size_t i : best_gens) best.generators.push_back(table[i]);
  best.order = best_set.count();
  return best;
}

SemiregularWitness find_semiregular(const Graph& g, const PermGroup& group, std::uint64_t cap) {
  require_cubic_vt(g, group);
  Reduction red = reduce_maximal_cubic_quotient(g, group, cap);
  const Graph& gq = red.graph;
  const PermGroup& hq = red.group;

  ElementTable table(hq, cap);
  auto normals = normal_subgroups(table);
  bool has_abelian = false;
  for (const auto& nn : normals)
    if (nn.count() > 1 && table.is_abelian(nn)) has_abelian = true;

  SemiregularWitness w;
  std::string fallback;
  if (!has_abelian) {
    if (auto c1 = find_semiregular_case1(hq, cap))
      w = std::move(*c1);
    else
      fallback = "no element of order coprime to 6";
  } else if (auto nn = find_abelian_normal_nonsemiregular(table, normals)) {
    ClassificationResult cls = classify_theorem12(gq, hq, table.to_group(*nn), cap);
    if (cls.family == Family::SPX && cls.r >= 5)
      w = find_semiregular_case2(gq, hq, cap);
    else
      fallback = "classified as " + family_name(cls.family, cls.r, cls.s);
  } else {
    try {
      w = find_semiregular_case3(gq, hq, cap);
    } catch (const HypothesisViolation& e) {
      fallback = e.what();
    }
  }
  if (!fallback.empty()) {
    w = max_semiregular_bruteforce(gq, hq, cap);
    w.fallback_reason = fallback;
  }

  if (red.m.order() > 1) {
    // Lift each generator to some preimage and adjoin M.
    std::map<Permutation, Permutation> lift;
    std::set<Permutation> wanted(w.generators.begin(), w.generators.end());
    group.for_each_element(cap, [&](const Permutation& x) {
      if (lift.size() == wanted.size()) return;
      auto induced = induced_on_sets(x, red.blocks);
      if (induced && wanted.count(*induced) && !lift.count(*induced)) lift.emplace(*induced, x);
    });
    std::vector<Permutation> gens;
    for (const auto& s : w.generators) gens.push_back(lift.at(s));
    for (const auto& s : red.m.generators()) gens.push_back(s);
    w.generators = std::move(gens);
    w.order = PermGroup(group.degree(), w.generators).order();
    w.reduction_order = red.m.order();
  }
  if (!verify_witness(group, w)) throw std::logic_error("semiregular witness failed verification");
  return w;
}

}  // namespace semireg
