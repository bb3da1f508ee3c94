#include "semireg/corpus.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "semireg/construct.hpp"
#include "semireg/error.hpp"
#include "semireg/group_elements.hpp"
#include "semireg/search.hpp"
#include "semireg/subgroups.hpp"

namespace semireg {
namespace {

// Cheap isomorphism invariant of a vertex-transitive graph.
std::vector<std::size_t> graph_invariant(const Graph& g) {
  std::vector<std::size_t> inv{g.vertex_count(), g.edge_count(), four_cycles(g).size()};
  auto layers = distance_profile(g, 0);
  inv.insert(inv.end(), layers.begin(), layers.end());
  return inv;
}

class GraphPool {
 public:
  // Returns false if an isomorphic graph is already present.
  bool add(CorpusGraph cg) {
    auto& bucket = buckets_[graph_invariant(cg.graph)];
    for (std::size_t i : bucket)
      if (are_isomorphic(graphs_[i].graph, cg.graph)) return false;
    bucket.push_back(graphs_.size());
    graphs_.push_back(std::move(cg));
    return true;
  }
  std::vector<CorpusGraph> take() { return std::move(graphs_); }

 private:
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> buckets_;
  std::vector<CorpusGraph> graphs_;
};

void add_cayley_graphs(const NamedGroup& ng, const CorpusOptions& opt, GraphPool& pool) {
  ElementTable table(ng.group);
  const std::size_t n = table.size();
  std::vector<std::size_t> involutions, others;
  for (std::size_t i = 0; i < n; ++i) {
    if (table.element_order(i) == 2) involutions.push_back(i);
    else if (table.element_order(i) > 2 && i < table.inverse(i)) others.push_back(i);
  }
  std::vector<std::vector<std::size_t>> sets;
  for (std::size_t t : involutions)
    for (std::size_t x : others) sets.push_back({t, x, table.inverse(x)});
  for (std::size_t a = 0; a < involutions.size(); ++a)
    for (std::size_t b = a + 1; b < involutions.size(); ++b)
      for (std::size_t c = b + 1; c < involutions.size(); ++c)
        sets.push_back({involutions[a], involutions[b], involutions[c]});
  if (sets.size() > opt.max_connection_sets) sets.resize(opt.max_connection_sets);

  // Right regular representation: a -> a * g.
  std::vector<Permutation> regular;
  for (std::size_t gi : table.generator_indices()) {
    std::vector<Point> img(n);
    for (std::size_t a = 0; a < n; ++a) img[a] = static_cast<Point>(table.multiply(a, gi));
    regular.emplace_back(std::move(img));
  }
  std::size_t count = 0;
  for (const auto& s : sets) {
    if (table.closure(s).count() != n) continue;
    std::vector<Edge> es;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t x : s) {
        std::size_t b = table.multiply(x, a);
        if (a < b) es.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
      }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    Graph g(n, es);
    std::ostringstream name;
    name << "Cay(" << ng.name << ")#" << count;
    if (pool.add(CorpusGraph{name.str(), "cayley", std::move(g), regular})) ++count;
  }
}

bool transitive(std::size_t degree, const std::vector<Permutation>& gens) {
  return orbits_of(degree, gens).size() == 1;
}

}  // namespace

std::vector<NamedGroup> parse_small_groups(std::string_view text) {
  std::vector<NamedGroup> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& what) {
    throw std::runtime_error("small groups table line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream hs(line);
    std::string word, name;
    std::uint64_t order = 0;
    if (!(hs >> word >> name >> order) || word != "group") fail("expected 'group NAME ORDER'");
    std::size_t degree = 0;
    if (!std::getline(in, line)) fail("missing degree line");
    ++lineno;
    std::istringstream ds(line);
    if (!(ds >> word >> degree) || word != "degree") fail("expected 'degree n'");
    std::vector<Permutation> gens;
    while (std::getline(in, line)) {
      ++lineno;
      if (line == "end") break;
      gens.push_back(parse_permutation(line, degree));
    }
    PermGroup g(degree, std::move(gens));
    if (g.order() != order) fail("group " + name + " has order " + std::to_string(g.order()));
    out.push_back(NamedGroup{name, order, std::move(g)});
  }
  return out;
}

std::vector<NamedGroup> load_small_groups() { return parse_small_groups(embedded_small_groups()); }

Graph generalized_petersen(std::size_t n, std::size_t k) {
  if (n < 3 || k < 1 || 2 * k >= n) throw std::invalid_argument("GP(n, k) needs n >= 3 and 1 <= k < n/2");
  std::vector<Edge> es;
  for (std::size_t i = 0; i < n; ++i) {
    es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
    es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(n + i));
    es.emplace_back(static_cast<Vertex>(n + i), static_cast<Vertex>(n + (i + k) % n));
  }
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  return Graph(2 * n, es);
}

std::vector<CorpusGraph> corpus_graphs(const CorpusOptions& opt) {
  GraphPool pool;
  if (opt.include_spx)
    for (std::size_t r = 3; r <= 7; ++r)
      for (std::size_t s = 1; s < r && (r << (s + 1)) <= opt.max_vertices; ++s)
        pool.add(CorpusGraph{"SPX(" + std::to_string(r) + "," + std::to_string(s) + ")", "spx",
                             spx_graph(r, s), {}});
  if (opt.include_cayley)
    for (const auto& ng : load_small_groups())
      if (ng.order >= 4 && ng.order <= opt.max_vertices) add_cayley_graphs(ng, opt, pool);
  if (opt.include_petersen)
    for (std::size_t n = 5; 2 * n <= opt.max_vertices; ++n)
      for (std::size_t k = 1; 2 * k < n; ++k) {
        Graph g = generalized_petersen(n, k);
        if (!is_connected(g) || !automorphism_group(g).is_transitive()) continue;
        pool.add(CorpusGraph{"GP(" + std::to_string(n) + "," + std::to_string(k) + ")", "petersen",
                             std::move(g), {}});
      }
  return pool.take();
}

std::vector<CorpusPair> corpus_pairs(const std::vector<CorpusGraph>& graphs, const CorpusOptions& opt) {
  std::vector<CorpusPair> out;
  std::mt19937_64 rng(opt.seed);
  for (const auto& cg : graphs) {
    const std::size_t n = cg.graph.vertex_count();
    PermGroup aut = automorphism_group(cg.graph);
    std::vector<std::pair<std::string, PermGroup>> groups;
    if (!cg.regular.empty()) groups.emplace_back("regular", PermGroup(n, cg.regular, {}, n));

    if (cg.source == "spx") {
      // Parameters are recovered from the name SPX(r,s).
      std::size_t r = 0, s = 0;
      std::sscanf(cg.name.c_str(), "SPX(%zu,%zu)", &r, &s);
      PermGroup w = wreath_group(r, s, WreathTarget::SPX);
      groups.emplace_back("wreath", w);
      std::vector<Permutation> even;
      for (std::size_t i = 0; i + 1 < r; ++i)
        even.push_back(to_permutation(WreathElement::base_generator(r, i) * WreathElement::base_generator(r, i + 1),
                                      s, WreathTarget::SPX));
      even.push_back(to_permutation(WreathElement::rotation(r, 1), s, WreathTarget::SPX));
      even.push_back(to_permutation(WreathElement::reflection(r, 0), s, WreathTarget::SPX));
      groups.emplace_back("wreath-even", PermGroup(n, even));
    }

    if (aut.order() <= opt.max_group_order) {
      ElementTable table(aut, opt.max_group_order);
      std::unordered_set<Bitset, BitsetHash> seen;
      auto push = [&](const std::string& kind, const Bitset& b) {
        if (!seen.insert(b).second) return;
        PermGroup g = table.to_group(b);
        if (!g.is_transitive()) return;
        groups.emplace_back(kind, std::move(g));
      };
      for (auto& [kind, g] : groups) seen.insert(table.to_bitset(g));
      push("aut", table.closure(table.generator_indices()));
      // Derived subgroup.
      std::vector<std::size_t> comms;
      const auto& gi = table.generator_indices();
      for (std::size_t a : gi)
        for (std::size_t b : gi)
          comms.push_back(table.multiply(table.multiply(table.inverse(a), table.inverse(b)), table.multiply(a, b)));
      push("derived", normal_closure(table, comms));
      if (!cg.regular.empty()) {
        Bitset rb = table.to_bitset(PermGroup(n, cg.regular));
        std::vector<std::size_t> norm;
        auto rgens = table.generating_set(rb);
        for (std::size_t x = 0; x < table.size(); ++x) {
          bool ok = true;
          for (std::size_t h : rgens)
            if (!rb.test(table.conjugate(h, x))) {
              ok = false;
              break;
            }
          if (ok) norm.push_back(x);
        }
        push("normalizer", table.closure(norm));
      }
      std::size_t added = 0;
      for (std::size_t tries = 0; tries < 40 && added < opt.subgroup_samples; ++tries) {
        std::size_t idx[2] = {static_cast<std::size_t>(rng() % table.size()),
                              static_cast<std::size_t>(rng() % table.size())};
        Bitset b = table.closure(idx);
        std::size_t before = groups.size();
        push("sampled", b);
        if (groups.size() > before) ++added;
      }
    }
    for (auto& [kind, g] : groups) {
      if (g.order() > opt.max_group_order || !transitive(n, g.generators())) continue;
      out.push_back(CorpusPair{cg.name + "/" + kind, cg.name, kind, cg.graph, std::move(g)});
    }
  }
  return out;
}

std::vector<CorpusPair> build_corpus(const CorpusOptions& options) {
  return corpus_pairs(corpus_graphs(options), options);
}

}  // namespace semireg
