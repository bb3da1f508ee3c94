#pragma once
// Desk-scale corpus of cubic vertex-transitive pairs (graph, group).

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "semireg/graph.hpp"
#include "semireg/perm.hpp"

namespace semireg {

struct NamedGroup {
  std::string name;
  std::uint64_t order = 0;
  PermGroup group;
};

/// The generator table compiled into the library.
std::string_view embedded_small_groups();
/// Parses "group NAME ORDER / degree n / generators... / end" blocks and
/// checks every stated order.
std::vector<NamedGroup> parse_small_groups(std::string_view text);
std::vector<NamedGroup> load_small_groups();

struct CorpusOptions {
  std::size_t max_vertices = 64;
  std::uint64_t max_group_order = 5000;
  /// Connection sets tried per group, in a fixed order.
  std::size_t max_connection_sets = 4000;
  /// Random 2-generated vertex-transitive subgroups added per graph.
  std::size_t subgroup_samples = 2;
  std::uint64_t seed = 20240531;
  bool include_cayley = true;
  bool include_spx = true;
  bool include_petersen = true;
};

struct CorpusGraph {
  std::string name;
  std::string source;  // "cayley", "spx" or "petersen"
  Graph graph;
  /// Right regular representation when the graph came from a group.
  std::vector<Permutation> regular;
};

struct CorpusPair {
  std::string name;
  std::string graph_name;
  std::string group_kind;  // "aut", "regular", "normalizer", "derived", "wreath", ...
  Graph graph;
  PermGroup group;
};

/// Pairwise non-isomorphic connected cubic graphs, first found name kept.
std::vector<CorpusGraph> corpus_graphs(const CorpusOptions& options = {});
/// Vertex-transitive groups for each graph, with |G| within the bound.
std::vector<CorpusPair> corpus_pairs(const std::vector<CorpusGraph>& graphs,
                                     const CorpusOptions& options = {});
std::vector<CorpusPair> build_corpus(const CorpusOptions& options = {});

/// Generalised Petersen graph GP(n, k).
Graph generalized_petersen(std::size_t n, std::size_t k);

}  // namespace semireg
