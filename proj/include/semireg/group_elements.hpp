#pragma once
// Explicitly enumerated groups. Every cap-guarded algorithm of the library
// runs on an ElementTable: elements are indexed in lexicographic order and
// subgroups are bitsets over those indices.

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "semireg/perm.hpp"

namespace semireg {

/// Default budget for enumeration-backed operations.
inline constexpr std::uint64_t kDefaultCap = 100000;

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const noexcept { return n_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  std::size_t count() const;
  bool is_subset_of(const Bitset& other) const;
  std::vector<std::size_t> indices() const;

  bool operator==(const Bitset& rhs) const = default;
  auto operator<=>(const Bitset& rhs) const = default;
  std::size_t hash() const noexcept;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const noexcept { return b.hash(); }
};

class ElementTable {
 public:
  /// Throws CapExceeded when |group| > cap.
  ElementTable(const PermGroup& group, std::uint64_t cap = kDefaultCap);

  const PermGroup& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t degree() const noexcept { return group_.degree(); }
  const Permutation& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }

  std::optional<std::size_t> find(const Permutation& g) const;
  /// Throws std::invalid_argument if g is not an element.
  std::size_t index_of(const Permutation& g) const;
  std::size_t identity() const noexcept { return identity_; }
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  /// a^g = g^-1 a g.
  std::size_t conjugate(std::size_t a, std::size_t g) const;
  std::uint64_t element_order(std::size_t a) const { return order_[a]; }
  /// Indices of the group's generators.
  const std::vector<std::size_t>& generator_indices() const noexcept { return gen_idx_; }

  /// Subgroup generated by the given elements.
  Bitset closure(std::span<const std::size_t> gens) const;
  /// Subgroup generated by a subgroup (with its generators) and extra elements.
  Bitset join(const Bitset& sub, std::span<const std::size_t> sub_gens,
              std::span<const std::size_t> extra) const;
  /// Greedy small generating set of a subgroup.
  std::vector<std::size_t> generating_set(const Bitset& sub) const;
  PermGroup to_group(const Bitset& sub) const;
  Bitset to_bitset(const PermGroup& sub) const;
  Bitset from_indices(std::span<const std::size_t> idx) const;

  bool is_abelian(const Bitset& sub) const;
  /// No non-identity element of the subgroup fixes a point.
  bool is_semiregular(const Bitset& sub) const;
  bool is_normal(const Bitset& sub) const;

 private:
  PermGroup group_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
  std::vector<std::size_t> inverse_;
  std::vector<std::uint64_t> order_;
  std::vector<std::size_t> gen_idx_;
  std::size_t identity_ = 0;
};

}  // namespace semireg
