#pragma once
// Automorphism groups and isomorphism tests by individualisation and
// equitable refinement of ordered vertex partitions.

#include <cstdint>
#include <optional>
#include <vector>

#include "semireg/graph.hpp"
#include "semireg/perm.hpp"

namespace semireg {

struct SearchLimits {
  /// Largest accepted vertex count; larger inputs raise CapExceeded.
  std::size_t max_vertices = 512;
  /// Search-tree nodes visited before giving up with CapExceeded.
  std::uint64_t node_budget = 5'000'000;
};

inline constexpr SearchLimits kIsomorphismLimits{1024, 5'000'000};

/// Aut(g). Every generator is checked edge by edge before it is returned.
PermGroup automorphism_group(const Graph& g, const SearchLimits& limits = {});
/// Colour-preserving automorphisms; `colors` has one entry per vertex.
PermGroup automorphism_group(const Graph& g, const std::vector<std::uint32_t>& colors,
                             const SearchLimits& limits = {});

/// An isomorphism a -> b (vertex v of a maps to witness[v]), re-verified, or nullopt.
std::optional<Permutation> are_isomorphic(const Graph& a, const Graph& b,
                                          const SearchLimits& limits = kIsomorphismLimits);

}  // namespace semireg
