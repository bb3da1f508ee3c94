#pragma once
// Enumeration-backed subgroup searches: conjugacy classes, the lattice of
// normal subgroups, centralisers and block kernels. All of them are exact and
// cap-guarded; they are meant for groups of a few thousand elements.

#include <cstdint>
#include <optional>
#include <vector>

#include "semireg/group_elements.hpp"
#include "semireg/perm.hpp"

namespace semireg {

/// All elements of G in lexicographic order of their image lists.
std::vector<Permutation> enumerate_elements(const PermGroup& group, std::uint64_t cap = kDefaultCap);

std::vector<std::vector<std::size_t>> conjugacy_classes(const ElementTable& table);

/// Smallest normal subgroup containing the given elements.
Bitset normal_closure(const ElementTable& table, std::span<const std::size_t> elements);

/// Every normal subgroup of the group, ordered by (order, bitset).
///
/// A normal subgroup is the join of the normal closures of its elements, so
/// closing the set of class closures under pairwise joins reaches all of them.
std::vector<Bitset> normal_subgroups(const ElementTable& table);

/// Subgroup of the abelian group N generated by its elements of order p.
/// Throws std::invalid_argument if N is not abelian or p does not divide |N|.
PermGroup reduce_to_elementary_abelian(const PermGroup& n, std::uint64_t p);

/// An abelian normal subgroup with a non-trivial point stabiliser; the
/// smallest such subgroup when several exist.
std::optional<PermGroup> find_abelian_normal_nonsemiregular(const PermGroup& group,
                                                            std::uint64_t cap = kDefaultCap);
std::optional<Bitset> find_abelian_normal_nonsemiregular(const ElementTable& table,
                                                         const std::vector<Bitset>& normals);

/// A minimal normal subgroup that is abelian (hence elementary abelian).
std::optional<PermGroup> minimal_abelian_normal(const PermGroup& group,
                                                std::uint64_t cap = kDefaultCap);
std::optional<Bitset> minimal_abelian_normal(const ElementTable& table,
                                             const std::vector<Bitset>& normals);

/// C_G(N) by filtering the elements of G against the generators of N.
PermGroup centralizer_in(const PermGroup& group, const PermGroup& sub,
                         std::uint64_t cap = kDefaultCap);
Bitset centralizer_in(const ElementTable& table, const Bitset& sub);

/// True iff `blocks` partitions the points and every generator permutes the blocks.
bool is_block_system(const PermGroup& group, const std::vector<std::vector<Point>>& blocks);

/// Elements fixing every block setwise. Throws std::invalid_argument when the
/// blocks are not a G-invariant partition.
PermGroup kernel_on_block_system(const PermGroup& group,
                                 const std::vector<std::vector<Point>>& blocks,
                                 std::uint64_t cap = kDefaultCap);
Bitset kernel_on_block_system(const ElementTable& table,
                              const std::vector<std::vector<Point>>& blocks);

}  // namespace semireg
