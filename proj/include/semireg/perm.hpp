#pragma once

#include <compare>
#include <functional>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace semireg {

using Point = std::uint32_t;

/// A bijection of {0, ..., n-1} stored as its image list.
///
/// Permutations act on the right: p^(a*b) = (p^a)^b, so `a * b` applies `a`
/// first. This is the exponent convention used for group actions throughout
/// the library.
class Permutation {
 public:
  Permutation() = default;
  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);
  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  /// Builds from disjoint cycles; points not mentioned are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point p) const { return images_[p]; }
  std::span<const Point> images() const noexcept { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation& operator*=(const Permutation& rhs);
  Permutation inverse() const;
  Permutation pow(long long k) const;
  /// g^-1 * this * g.
  Permutation conjugate_by(const Permutation& g) const;

  bool is_identity() const;
  std::size_t fixed_point_count() const;
  /// Smallest moved point, or degree() for the identity.
  std::size_t first_moved_point() const;
  /// Element order, the lcm of the cycle lengths.
  std::uint64_t order() const;
  /// Non-trivial cycles in order of their least point.
  std::vector<std::vector<Point>> cycles() const;
  /// Sorted lengths of all cycles, fixed points included.
  std::vector<std::size_t> cycle_type() const;
  /// True iff every cycle has the same length, i.e. <this> is semiregular.
  bool has_uniform_cycles() const;

  bool operator==(const Permutation& rhs) const;
  std::strong_ordering operator<=>(const Permutation& rhs) const;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// Permutation group given by generators.
///
/// The base and strong generating set are built lazily by a deterministic
/// Schreier-Sims procedure whose base is extended by the least moved point;
/// callers can request an initial base prefix. The cache is filled at most
/// once and is shared between copies.
class PermGroup {
 public:
  PermGroup() : PermGroup(0, {}) {}
  /// Throws std::invalid_argument on generators of the wrong degree.
  PermGroup(std::size_t degree, std::vector<Permutation> generators);
  /// `base_prefix` fixes the first base points; `known_order` lets the
  /// construction stop as soon as the chain accounts for that many elements.
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::vector<Point> base_prefix,
            std::optional<std::uint64_t> known_order = std::nullopt);

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  /// |G|. Throws std::overflow_error beyond 2^64.
  std::uint64_t order() const;
  bool contains(const Permutation& g) const;
  bool is_trivial() const { return order() == 1; }

  std::vector<Point> base() const;
  /// Strong generators of the pointwise stabiliser of the first `level` base points.
  std::vector<Permutation> strong_generators(std::size_t level) const;
  /// Orbit of base point `level` under that stabiliser.
  std::vector<Point> basic_orbit(std::size_t level) const;
  /// Coset representative u of level `level` with base^u == point.
  std::optional<Permutation> transversal(std::size_t level, Point point) const;

  /// Orbit partition, each orbit sorted, orbits ordered by least point.
  std::vector<std::vector<Point>> orbits() const;
  std::vector<Point> orbit(Point p) const;
  bool is_transitive() const;

  /// G_v, with order |G| / |v^G|.
  PermGroup stabilizer(Point v) const;
  /// Pointwise stabiliser of a sequence of points.
  PermGroup pointwise_stabilizer(const std::vector<Point>& points) const;

  bool is_abelian() const;
  /// Every orbit has size |G|.
  bool is_semiregular() const;

  /// Calls f on every element in stabiliser-chain order. Throws CapExceeded if |G| > cap.
  void for_each_element(std::uint64_t cap,
                        const std::function<void(const Permutation&)>& f) const;

  /// All elements, sorted lexicographically by image list.
  std::vector<Permutation> elements(std::uint64_t cap) const;

 private:
  struct Level;
  struct Chain;
  const Chain& chain() const;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Point> base_prefix_;
  std::optional<std::uint64_t> known_order_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

/// Subgroup of `parent` generated by `generators`, after checking membership.
/// Throws std::invalid_argument when some generator is not in `parent`.
PermGroup make_subgroup(const PermGroup& parent, std::vector<Permutation> generators);

/// Checks h^g in H for all generator pairs. Throws std::invalid_argument unless H <= G.
bool is_normal(const PermGroup& group, const PermGroup& sub);

/// Orbit partition of {0..degree-1} under the generators (union-find closure).
std::vector<std::vector<Point>> orbits_of(std::size_t degree,
                                          const std::vector<Permutation>& generators);

std::string to_image_string(const Permutation& p);
std::string to_cycle_string(const Permutation& p);
/// Accepts "[i0 i1 ...]" image lists and "(0 1 2)(3 4)" cycle notation.
/// Cycle notation needs the degree; image lists must agree with it when given.
Permutation parse_permutation(const std::string& text, std::optional<std::size_t> degree);

/// Alternative semiregularity tests, kept independent of the orbit-size
/// definition used by PermGroup::is_semiregular.
bool semiregular_by_fixed_points(const PermGroup& group, std::uint64_t cap);
bool semiregular_by_stabilizers(const PermGroup& group);

}  // namespace semireg
