#pragma once
// Semiregular subgroups of vertex-transitive groups of cubic graphs: a
// reduction to a quotient with no cubic normal quotient, three strategies on
// the reduced pair, and an exhaustive oracle.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semireg/graph.hpp"
#include "semireg/group_elements.hpp"
#include "semireg/perm.hpp"

namespace semireg {

enum class Strategy { Case1LargeOrderElement, Case2PxCorollary, Case3Rotation, BruteForce };
std::string strategy_name(Strategy s);

struct SemiregularWitness {
  std::vector<Permutation> generators;
  std::uint64_t order = 1;
  Strategy strategy = Strategy::BruteForce;
  /// "full" or "element" for the oracle; empty otherwise.
  std::string mode;
  /// |M| of the reduction the witness was pulled back through.
  std::uint64_t reduction_order = 1;
  // Strategy-specific details.
  std::optional<std::size_t> r;
  std::optional<std::uint8_t> base_sum;     // x = g_0 + ... + g_{r-1}
  std::optional<std::size_t> cycle_length;  // length of Γ/N
  std::optional<std::size_t> step;          // rotation step of g on Γ/N
  std::optional<bool> centralizer_equals_n;
  std::string fallback_reason;
};

/// The subgroup generated by the witness is semiregular, lies in G and has the
/// recorded order.
bool verify_witness(const PermGroup& group, const SemiregularWitness& w);

struct Reduction {
  Graph graph;     // Γ/M
  PermGroup group; // G acting on the M-orbits
  PermGroup m;
  std::vector<std::vector<Vertex>> blocks;
};

/// M normal of largest order with Γ/M cubic; checks that M is semiregular and
/// equals the kernel on its orbits.
Reduction reduce_maximal_cubic_quotient(const Graph& g, const PermGroup& group,
                                        std::uint64_t cap = kDefaultCap);

/// Element of largest order coprime to 6.
std::optional<SemiregularWitness> find_semiregular_case1(const PermGroup& group,
                                                         std::uint64_t cap = kDefaultCap);
/// Γ must be S(PX(2, r, s)) with r >= 5; an element projecting to a rotation
/// of order r. Raises HypothesisViolation("not-spx") otherwise.
SemiregularWitness find_semiregular_case2(const Graph& g, const PermGroup& group,
                                          std::uint64_t cap = kDefaultCap);
/// Minimal abelian normal N with at least three orbits and Γ/N a cycle; an
/// element of C_G(N) rotating Γ/N by the least step. Raises
/// HypothesisViolation with a "case3-..." kind when this does not apply.
SemiregularWitness find_semiregular_case3(const Graph& g, const PermGroup& group,
                                          std::uint64_t cap = kDefaultCap);

/// Reduce, dispatch, pull back, verify.
SemiregularWitness find_semiregular(const Graph& g, const PermGroup& group,
                                    std::uint64_t cap = kDefaultCap);

/// Largest semiregular subgroup (|G| <= full_limit) or largest semiregular
/// cyclic subgroup (element mode).
SemiregularWitness max_semiregular_bruteforce(const Graph& g, const PermGroup& group,
                                              std::uint64_t cap = kDefaultCap,
                                              std::uint64_t full_limit = 2000);

}  // namespace semireg
