#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "semireg/construct.hpp"
#include "semireg/graph.hpp"
#include "semireg/perm.hpp"

namespace semireg {

bool validate_decomposition(const Graph& g, const CycleDecomposition& d);

/// G is arc-transitive on g and every generator maps d onto itself.
/// Throws std::invalid_argument if G does not act by automorphisms.
bool is_arc_transitive_decomposition(const Graph& g, const PermGroup& group,
                                     const CycleDecomposition& d);

/// All partitions of E(g) into 4-cycles, sorted. Branches on the least
/// uncovered edge. Throws std::invalid_argument unless g is 4-valent, and
/// CapExceeded past 64 vertices or `cap` results.
std::vector<CycleDecomposition> enumerate_4cycle_decompositions(const Graph& g,
                                                                std::uint64_t cap = 100000);

/// Setwise stabiliser of d in A, from Schreier generators of the orbit of d.
PermGroup decomposition_stabilizer(const PermGroup& group, const CycleDecomposition& d,
                                   std::uint64_t cap = 100000);

/// Orbit of d under A with a transporting element for each member.
std::vector<std::pair<CycleDecomposition, Permutation>> decomposition_orbit(
    const PermGroup& group, const CycleDecomposition& d, std::uint64_t cap = 100000);

/// Some a in A with d1^a = d2, re-verified, or nullopt.
std::optional<Permutation> decompositions_conjugate(const Graph& g, const CycleDecomposition& d1,
                                                    const CycleDecomposition& d2,
                                                    const PermGroup& group,
                                                    std::uint64_t cap = 100000);

struct BoringReport {
  std::size_t r = 0;
  std::size_t s = 0;
  std::uint64_t aut_order = 0;
  std::size_t four_cycles = 0;
  std::size_t decompositions = 0;
  std::size_t arc_transitive = 0;
  /// Aut-classes of arc-transitive 4-cycle decompositions.
  std::size_t classes = 0;
  bool natural_is_arc_transitive = false;
  /// One conjugating element per arc-transitive decomposition, mapping the
  /// natural decomposition onto it (absent when not conjugate).
  std::vector<std::optional<Permutation>> witnesses;
  bool passed() const { return classes == 1 && natural_is_arc_transitive; }
};

/// Arc-transitive 4-cycle decompositions of PX(2, r, s) up to Aut-conjugacy.
BoringReport check_unique_decomposition(std::size_t r, std::size_t s);
/// The three graphs PX(2, 4, 1), PX(2, 4, 2), PX(2, 4, 3).
std::vector<BoringReport> verify_lemma_boring_r4();

}  // namespace semireg
