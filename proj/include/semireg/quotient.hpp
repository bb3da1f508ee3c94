#pragma once
// Normal quotients, the matching orbit and merged quotient of a cubic
// vertex-transitive pair, and the classification of cubic pairs whose group
// has a non-semiregular abelian normal subgroup.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semireg/construct.hpp"
#include "semireg/graph.hpp"
#include "semireg/group_elements.hpp"
#include "semireg/perm.hpp"

namespace semireg {

struct NormalQuotient {
  Graph graph;
  /// Induced action on the blocks; not necessarily faithful.
  PermGroup action;
  std::vector<std::vector<Vertex>> blocks;
};

/// Γ/N with the action of G on the N-orbits. Throws std::invalid_argument when
/// G does not act by automorphisms or N is not a normal subgroup of G.
NormalQuotient normal_quotient(const Graph& g, const PermGroup& group, const PermGroup& n);

/// Order of the group induced by G_v on the neighbourhood of v.
std::uint64_t local_group_order(const Graph& g, const PermGroup& group, Vertex v);

struct Matching {
  std::vector<Edge> edges;  // the G-orbit of {v, v'}, sorted
  std::size_t k = 0;        // common cycle length of Γ - edges
  Vertex v = 0;
  Vertex v_prime = 0;
  std::vector<std::vector<Vertex>> cycles;  // the cycles of Γ - edges
};

/// Requires a cubic graph, a vertex-transitive G and a local group of order 2;
/// raises HypothesisViolation ("local-group-order", "not-perfect-matching",
/// "cycle-lengths") otherwise.
Matching matching_orbit(const Graph& g, const PermGroup& group);

/// Some two matching edges are joined by at least two edges.
bool is_degenerate(const Graph& g, const std::vector<Edge>& matching);

struct MergedQuotient {
  Graph graph;                       // vertices are the matching edges
  CycleDecomposition decomposition;  // images of the cycles of Γ - T
  PermGroup action;                  // G acting on the matching edges
  bool faithful = false;
};

/// Throws HypothesisViolation("degenerate") when the pair is degenerate.
MergedQuotient merged_quotient(const Graph& g, const PermGroup& group, const Matching& matching);

struct PxRecognition {
  std::size_t r = 0;
  std::size_t s = 0;
  Permutation witness;  // isomorphism onto px_graph(r, s)
};

/// Tries r = |V|, ..., 3 with |V| = r 2^s and 1 <= s <= r - 1.
std::optional<PxRecognition> recognize_px(const Graph& g);

enum class Family { K4, K33, Q3, SPX };
std::string family_name(Family f, std::size_t r = 0, std::size_t s = 0);

struct ClassificationResult {
  Family family = Family::K4;
  std::size_t r = 0;
  std::size_t s = 0;
  /// Isomorphism from the input graph onto the named family member.
  Permutation witness;
  std::uint64_t group_order = 0;
  std::uint64_t n_order = 0;        // |N| after reduction to exponent p
  std::uint64_t n_stabilizer = 0;   // |N_v|
  std::uint64_t p = 0;
  std::optional<std::uint64_t> local_order;
  std::optional<std::size_t> k;
  std::vector<Edge> matching;
  std::optional<std::size_t> merged_vertices;
  std::optional<bool> faithful;
  /// split(M, C_M) is isomorphic to the input.
  std::optional<bool> round_trip;
  /// C_M is Aut(M)-conjugate to the natural decomposition.
  std::optional<bool> natural_conjugate;
  std::string route;

  Graph family_graph() const;
};

/// Follows the proof step by step and checks each deduction on the instance.
/// When `n` is absent a suitable subgroup is searched for. Violated
/// hypotheses raise HypothesisViolation with kinds "not-cubic",
/// "disconnected", "not-automorphisms", "not-vertex-transitive",
/// "invalid-normal-subgroup", "no-abelian-normal-nonsemiregular",
/// "prime-not-2-or-3", "local-group-order", "not-perfect-matching",
/// "cycle-lengths", "k-not-4", "ladder-case", "degenerate",
/// "merged-quotient", "not-praeger-xu", "not-split-px", "not-k33".
ClassificationResult classify_theorem12(const Graph& g, const PermGroup& group,
                                        std::optional<PermGroup> n = std::nullopt,
                                        std::uint64_t cap = kDefaultCap);

}  // namespace semireg
