#include "semireg/search.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "semireg/error.hpp"

namespace semireg {
namespace {

// Ordered partition: cells are contiguous ranges of `elems`.
struct Partition {
  std::vector<Vertex> elems;
  std::vector<std::uint32_t> pos;
  std::vector<std::uint32_t> start;  // start of the cell holding each position
  std::vector<std::uint32_t> len;    // cell length, indexed by cell start
  std::size_t cells = 0;

  bool discrete() const { return cells == elems.size(); }
  std::uint32_t cell_of(Vertex v) const { return start[pos[v]]; }
};

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h * 0xff51afd7ed558ccdULL;
}

class Refiner {
 public:
  explicit Refiner(const Graph& g) : g_(g), count_(g.vertex_count(), 0) {}

  Partition initial(const std::vector<std::uint32_t>& colors, std::uint64_t& trace) {
    const std::size_t n = g_.vertex_count();
    Partition p;
    p.elems.resize(n);
    std::iota(p.elems.begin(), p.elems.end(), 0);
    std::stable_sort(p.elems.begin(), p.elems.end(),
                     [&](Vertex a, Vertex b) { return colors[a] < colors[b]; });
    p.pos.assign(n, 0);
    p.start.assign(n, 0);
    p.len.assign(n, 0);
    std::deque<std::uint32_t> queue;
    std::vector<char> queued(n, 0);
    for (std::uint32_t i = 0; i < n;) {
      std::uint32_t j = i;
      while (j < n && colors[p.elems[j]] == colors[p.elems[i]]) ++j;
      for (std::uint32_t k = i; k < j; ++k) p.start[k] = i;
      p.len[i] = j - i;
      ++p.cells;
      queue.push_back(i);
      queued[i] = 1;
      i = j;
    }
    for (std::uint32_t i = 0; i < n; ++i) p.pos[p.elems[i]] = i;
    trace = refine(p, queue, queued, 0);
    return p;
  }

  /// Individualises v (moved to the front of its cell) and refines.
  Partition individualize(const Partition& parent, Vertex v, std::uint64_t& trace) {
    Partition p = parent;
    std::uint32_t s = p.cell_of(v);
    std::uint32_t l = p.len[s];
    std::uint32_t at = p.pos[v];
    std::swap(p.elems[s], p.elems[at]);
    p.pos[p.elems[at]] = at;
    p.pos[v] = s;
    p.len[s] = 1;
    p.len[s + 1] = l - 1;
    for (std::uint32_t k = s + 1; k < s + l; ++k) p.start[k] = s + 1;
    ++p.cells;
    std::deque<std::uint32_t> queue{s};
    std::vector<char> queued(p.elems.size(), 0);
    queued[s] = 1;
    trace = refine(p, queue, queued, mix(s, l));
    return p;
  }

 private:
  std::uint64_t refine(Partition& p, std::deque<std::uint32_t>& queue,
                       std::vector<char>& queued, std::uint64_t trace) {
    const std::size_t n = p.elems.size();
    std::vector<Vertex> splitter;
    std::vector<std::uint32_t> cells;
    while (!queue.empty() && p.cells < n) {
      std::uint32_t ws = queue.front();
      queue.pop_front();
      queued[ws] = 0;
      splitter.assign(p.elems.begin() + ws, p.elems.begin() + ws + p.len[ws]);
      touched_.clear();
      for (Vertex x : splitter)
        for (Vertex y : g_.neighbors(x))
          if (count_[y]++ == 0) touched_.push_back(y);
      cells.clear();
      for (Vertex y : touched_) cells.push_back(p.cell_of(y));
      std::sort(cells.begin(), cells.end());
      cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
      trace = mix(trace, ws);
      for (std::uint32_t cs : cells) {
        std::uint32_t cl = p.len[cs];
        if (cl == 1) {
          trace = mix(trace, mix(cs, count_[p.elems[cs]]));
          continue;
        }
        auto first = p.elems.begin() + cs, last = first + cl;
        std::stable_sort(first, last, [&](Vertex a, Vertex b) { return count_[a] < count_[b]; });
        bool was_queued = queued[cs];
        std::uint32_t fs = cs;
        while (fs < cs + cl) {
          std::uint32_t fe = fs;
          std::uint32_t c = count_[p.elems[fs]];
          while (fe < cs + cl && count_[p.elems[fe]] == c) {
            p.pos[p.elems[fe]] = fe;
            p.start[fe] = fs;
            ++fe;
          }
          p.len[fs] = fe - fs;
          trace = mix(trace, mix(mix(cs, fs), mix(fe - fs, c)));
          if (fs != cs) {
            ++p.cells;
            queue.push_back(fs);
            queued[fs] = 1;
          } else if (!was_queued && fe != cs + cl) {
            queue.push_back(fs);
            queued[fs] = 1;
          }
          fs = fe;
        }
      }
      for (Vertex y : touched_) count_[y] = 0;
    }
    return mix(trace, p.cells);
  }

  const Graph& g_;
  std::vector<std::uint32_t> count_;
  std::vector<Vertex> touched_;
};

std::uint32_t first_target(const Partition& p) {
  for (std::uint32_t i = 0; i < p.elems.size(); i += p.len[i])
    if (p.len[i] > 1) return i;
  return static_cast<std::uint32_t>(p.elems.size());
}

// First path of the search tree: refined partitions, traces and chosen vertices.
struct Path {
  std::vector<Partition> nodes;
  std::vector<std::uint64_t> traces;
  std::vector<std::uint32_t> targets;
  std::vector<Vertex> choices;
  const Partition& leaf() const { return nodes.back(); }
};

Path first_path(Refiner& refiner, const std::vector<std::uint32_t>& colors) {
  Path path;
  std::uint64_t trace = 0;
  path.nodes.push_back(refiner.initial(colors, trace));
  path.traces.push_back(trace);
  while (!path.nodes.back().discrete()) {
    const Partition& p = path.nodes.back();
    std::uint32_t t = first_target(p);
    Vertex v = *std::min_element(p.elems.begin() + t, p.elems.begin() + t + p.len[t]);
    path.targets.push_back(t);
    path.choices.push_back(v);
    Partition child = refiner.individualize(p, v, trace);
    path.nodes.push_back(std::move(child));
    path.traces.push_back(trace);
  }
  return path;
}

using LeafTest = std::function<std::optional<Permutation>(const Partition&)>;

// Depth-first search below a node whose trace matches the reference path,
// looking for a leaf accepted by `test`. Children in one orbit of the pointwise
// stabiliser of the prefix in `known` are equivalent, so only one is expanded.
class Explorer {
 public:
  Explorer(const Graph& g, Refiner& refiner, const Path& ref, std::uint64_t budget,
           std::uint64_t& nodes)
      : g_(g), refiner_(refiner), ref_(ref), budget_(budget), nodes_(nodes) {}

  std::optional<Permutation> run(const Partition& p, std::size_t depth, std::vector<Vertex>& prefix,
                                 const std::vector<Permutation>& known, const LeafTest& test) {
    if (++nodes_ > budget_) throw CapExceeded("isomorphism search node budget exhausted");
    if (p.discrete()) return depth + 1 == ref_.nodes.size() ? test(p) : std::nullopt;
    if (depth >= ref_.targets.size()) return std::nullopt;
    std::uint32_t t = first_target(p);
    if (t != ref_.targets[depth] || p.len[t] != ref_.nodes[depth].len[t]) return std::nullopt;
    std::vector<Vertex> cands(p.elems.begin() + t, p.elems.begin() + t + p.len[t]);
    std::sort(cands.begin(), cands.end());

    std::vector<std::vector<Point>> orbit_parts;
    std::vector<std::int64_t> orbit_id(g_.vertex_count(), -1);
    if (!known.empty() && cands.size() > 2) {
      PermGroup h(g_.vertex_count(), known, prefix);
      auto stab = h.strong_generators(prefix.size());
      if (!stab.empty()) {
        orbit_parts = orbits_of(g_.vertex_count(), stab);
        for (std::size_t k = 0; k < orbit_parts.size(); ++k)
          for (Point q : orbit_parts[k]) orbit_id[q] = static_cast<std::int64_t>(k);
      }
    }
    std::vector<char> done(orbit_parts.size(), 0);
    for (Vertex u : cands) {
      if (orbit_id[u] >= 0) {
        if (done[orbit_id[u]]) continue;
        done[orbit_id[u]] = 1;
      }
      std::uint64_t trace = 0;
      Partition child = refiner_.individualize(p, u, trace);
      if (trace != ref_.traces[depth + 1]) continue;
      prefix.push_back(u);
      auto found = run(child, depth + 1, prefix, known, test);
      prefix.pop_back();
      if (found) return found;
    }
    return std::nullopt;
  }

 private:
  const Graph& g_;
  Refiner& refiner_;
  const Path& ref_;
  std::uint64_t budget_;
  std::uint64_t& nodes_;
};

Permutation leaf_map(const Partition& from, const Partition& to) {
  std::vector<Point> img(from.elems.size());
  for (std::size_t k = 0; k < from.elems.size(); ++k) img[from.elems[k]] = to.elems[k];
  return Permutation(std::move(img));
}

void check_size(const Graph& g, const SearchLimits& limits) {
  if (g.vertex_count() > limits.max_vertices)
    throw CapExceeded("graph has " + std::to_string(g.vertex_count()) +
                      " vertices, above the search bound " + std::to_string(limits.max_vertices));
}

std::vector<Point> orbit_under(Point v, std::size_t n, const std::vector<Permutation>& gens) {
  std::vector<char> seen(n, 0);
  std::vector<Point> orb{v};
  seen[v] = 1;
  for (std::size_t k = 0; k < orb.size(); ++k)
    for (const auto& s : gens)
      if (!seen[s[orb[k]]]) {
        seen[s[orb[k]]] = 1;
        orb.push_back(s[orb[k]]);
      }
  return orb;
}

}  // namespace

PermGroup automorphism_group(const Graph& g, const SearchLimits& limits) {
  return automorphism_group(g, std::vector<std::uint32_t>(g.vertex_count(), 0), limits);
}

namespace {

struct AutSearch {
  std::vector<Permutation> gens;
  std::vector<Vertex> base;
  std::optional<std::uint64_t> order;  // empty on overflow
};

AutSearch search_automorphisms(const Graph& g, const std::vector<std::uint32_t>& colors,
                               const SearchLimits& limits) {
  const std::size_t n = g.vertex_count();
  if (colors.size() != n) throw std::invalid_argument("one colour per vertex expected");
  check_size(g, limits);
  if (n == 0) return AutSearch{{}, {}, 1};

  Refiner refiner(g);
  Path path = first_path(refiner, colors);
  std::uint64_t nodes = path.nodes.size();
  Explorer explorer(g, refiner, path, limits.node_budget, nodes);

  auto test = [&](const Partition& leaf) -> std::optional<Permutation> {
    Permutation sigma = leaf_map(path.leaf(), leaf);
    for (Vertex v = 0; v < n; ++v)
      if (colors[sigma[v]] != colors[v]) return std::nullopt;
    if (!is_automorphism(g, sigma)) return std::nullopt;
    return sigma;
  };

  std::vector<Permutation> gens;
  std::uint64_t order = 1;
  bool overflow = false;
  const std::size_t depth = path.choices.size();
  for (std::size_t i = depth; i-- > 0;) {
    const Partition& node = path.nodes[i];
    std::uint32_t t = path.targets[i];
    std::vector<Vertex> cell(node.elems.begin() + t, node.elems.begin() + t + node.len[t]);
    std::sort(cell.begin(), cell.end());
    auto orbit = orbit_under(path.choices[i], n, gens);
    std::vector<Vertex> failed;
    std::vector<Vertex> prefix(path.choices.begin(), path.choices.begin() + static_cast<std::ptrdiff_t>(i));
    for (Vertex w : cell) {
      if (std::find(orbit.begin(), orbit.end(), w) != orbit.end()) continue;
      bool known_bad = false;
      for (Vertex f : failed) {
        auto fo = orbit_under(f, n, gens);
        if (std::find(fo.begin(), fo.end(), w) != fo.end()) {
          known_bad = true;
          break;
        }
      }
      if (known_bad) continue;
      std::uint64_t trace = 0;
      Partition child = refiner.individualize(node, w, trace);
      std::optional<Permutation> found;
      if (trace == path.traces[i + 1]) {
        prefix.push_back(w);
        found = explorer.run(child, i + 1, prefix, gens, test);
        prefix.pop_back();
      }
      if (found) {
        gens.push_back(std::move(*found));
        orbit = orbit_under(path.choices[i], n, gens);
      } else {
        failed.push_back(w);
      }
    }
    if (overflow || __builtin_mul_overflow(order, static_cast<std::uint64_t>(orbit.size()), &order))
      overflow = true;
  }
  return AutSearch{std::move(gens), path.choices, overflow ? std::nullopt : std::optional(order)};
}

}  // namespace

PermGroup automorphism_group(const Graph& g, const std::vector<std::uint32_t>& colors,
                             const SearchLimits& limits) {
  AutSearch a = search_automorphisms(g, colors, limits);
  if (!a.order) throw std::overflow_error("automorphism group order exceeds 2^64");
  return PermGroup(g.vertex_count(), std::move(a.gens), std::move(a.base), *a.order);
}

std::optional<Permutation> are_isomorphic(const Graph& a, const Graph& b,
                                          const SearchLimits& limits) {
  const std::size_t n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return std::nullopt;
  check_size(a, limits);
  auto degrees = [](const Graph& g) {
    std::vector<std::size_t> d;
    for (Vertex v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(a) != degrees(b)) return std::nullopt;
  if (n == 0) return Permutation(0);

  // Only the generators are needed for pruning; the order may not fit.
  AutSearch aut_b = search_automorphisms(b, std::vector<std::uint32_t>(n, 0), limits);
  std::vector<std::uint32_t> colors(n, 0);
  Refiner ra(a), rb(b);
  Path path = first_path(ra, colors);
  std::uint64_t nodes = 0;
  Explorer explorer(b, rb, path, limits.node_budget, nodes);
  std::uint64_t trace = 0;
  Partition root = rb.initial(colors, trace);
  if (trace != path.traces[0]) return std::nullopt;
  std::vector<Vertex> prefix;
  auto found = explorer.run(root, 0, prefix, aut_b.gens,
                            [&](const Partition& leaf) -> std::optional<Permutation> {
                              Permutation sigma = leaf_map(path.leaf(), leaf);
                              if (!is_isomorphism(a, b, sigma)) return std::nullopt;
                              return sigma;
                            });
  if (found && !is_isomorphism(a, b, *found))
    throw std::logic_error("isomorphism witness failed re-verification");
  return found;
}

}  // namespace semireg
