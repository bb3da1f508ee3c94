#pragma once
// Praeger-Xu graphs, their split cubic covers, the natural 4-cycle
// decomposition and the wreath product Z2 wr D_r acting on both.
//
// Encodings: PX vertex (n_0..n_{s-1}, x) is x * 2^s + sum n_i 2^i; SPX vertex
// (n, x, sign) is (x * 2^s + n) * 2 + (sign == '-').

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "semireg/graph.hpp"
#include "semireg/perm.hpp"

namespace semireg {

/// Throws std::invalid_argument unless r >= 3 and 1 <= s <= r - 1.
void check_px_parameters(std::size_t r, std::size_t s);

std::size_t px_index(std::size_t s, std::uint32_t bits, std::size_t x);
std::size_t spx_index(std::size_t s, std::uint32_t bits, std::size_t x, bool minus);

Graph px_graph(std::size_t r, std::size_t s);
/// Vertices are traversing paths on s vertices of PX(2, r, 1), oriented with
/// the smaller endpoint first; two are adjacent when their union is a
/// traversing path on s + 1 vertices.
Graph px_via_traversing_paths(std::size_t r, std::size_t s);
Graph spx_graph(std::size_t r, std::size_t s);

/// Cycles as vertex sequences, each rotated to start at its least vertex and
/// oriented so that the second vertex is smaller than the last; cycles sorted.
struct CycleDecomposition {
  std::vector<std::vector<Vertex>> cycles;
  auto operator<=>(const CycleDecomposition&) const = default;
};

std::vector<Vertex> canonical_cycle(std::vector<Vertex> cycle);
CycleDecomposition make_decomposition(std::vector<std::vector<Vertex>> cycles);
/// Every listed cycle is a cycle of g and every edge lies on exactly one of them.
bool is_cycle_decomposition(const Graph& g, const CycleDecomposition& d);
/// Image of a decomposition under a vertex permutation.
CycleDecomposition apply(const Permutation& p, const CycleDecomposition& d);

/// The r * 2^(s-1) four-cycles C_(m, x) of PX(2, r, s).
CycleDecomposition natural_decomposition(std::size_t r, std::size_t s);

/// Vertices (v, C) with v on C, ordered by v then by the index of C.
/// Throws std::invalid_argument unless g is 4-valent and d is a decomposition.
Graph split(const Graph& g, const CycleDecomposition& d);

/// Element of D_r: (t, false) is p -> p + t, (t, true) is p -> -(p + t).
struct DihedralElement {
  std::size_t r = 3;
  std::size_t t = 0;
  bool reflect = false;

  std::size_t apply(std::size_t p) const;
  DihedralElement operator*(const DihedralElement& rhs) const;
  DihedralElement inverse() const;
  bool operator==(const DihedralElement&) const = default;
};

enum class WreathTarget { PX, SPX };

/// (g_0, ..., g_{r-1}; h) in Z2^r : D_r. On a PX(2, r, 1) point,
/// (n, p)^(g; h) = (n + g_p, p^h); PX(2, r, s) and S(PX(2, r, s)) vertices are
/// windows of s such points and transform pointwise.
struct WreathElement {
  std::vector<std::uint8_t> base;
  DihedralElement top;

  static WreathElement identity(std::size_t r);
  static WreathElement base_generator(std::size_t r, std::size_t i);
  static WreathElement rotation(std::size_t r, std::size_t t);
  static WreathElement reflection(std::size_t r, std::size_t t);
  static WreathElement random(std::size_t r, std::mt19937_64& rng);

  std::size_t r() const { return base.size(); }
  WreathElement operator*(const WreathElement& rhs) const;
  WreathElement inverse() const;
  WreathElement pow(long long k) const;
  bool is_identity() const;
  /// Sum of the base coordinates in Z2.
  std::uint8_t base_sum() const;
  bool operator==(const WreathElement&) const = default;
};

/// Image of a dense vertex index.
std::size_t wreath_act(const WreathElement& g, std::size_t s, WreathTarget target, std::size_t v);
Permutation to_permutation(const WreathElement& g, std::size_t s, WreathTarget target);
/// Inverse of to_permutation; nullopt when p is not the image of a wreath element.
std::optional<WreathElement> decode_wreath(const Permutation& p, std::size_t r, std::size_t s,
                                           WreathTarget target);
/// e_0, ..., e_{r-1}, rotation by 1, reflection (0, true).
std::vector<WreathElement> wreath_generators(std::size_t r);
PermGroup wreath_group(std::size_t r, std::size_t s, WreathTarget target);

Graph circular_ladder(std::size_t n);
/// Cay(Z_2n, {1, -1, n}).
Graph moebius_ladder(std::size_t n);
Graph k4();
Graph k33();
Graph q3();

}  // namespace semireg
