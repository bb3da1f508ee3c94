#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "semireg/error.hpp"
#include "semireg/subgroups.hpp"

namespace semireg {

std::vector<Permutation> enumerate_elements(const PermGroup& group, std::uint64_t cap) {
  return group.elements(cap);
}

std::vector<std::vector<std::size_t>> conjugacy_classes(const ElementTable& table) {
  const std::size_t n = table.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t g : table.generator_indices()) {
      std::size_t x = find(a), y = find(table.conjugate(a, g));
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::ptrdiff_t> slot(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t r = find(a);
    if (slot[r] < 0) {
      slot[r] = static_cast<std::ptrdiff_t>(classes.size());
      classes.emplace_back();
    }
    classes[static_cast<std::size_t>(slot[r])].push_back(a);
  }
  return classes;
}

Bitset normal_closure(const ElementTable& table, std::span<const std::size_t> elements) {
  std::vector<std::size_t> gens(elements.begin(), elements.end());
  Bitset sub = table.closure(gens);
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (std::size_t g : table.generator_indices()) {
      std::size_t c = table.conjugate(gens[k], g);
      if (sub.test(c)) continue;
      std::size_t one[] = {c};
      sub = table.join(sub, gens, one);
      gens.push_back(c);
    }
  return sub;
}

namespace {

// <N, X> for N normal, built coset by coset.
Bitset join_normal(const ElementTable& table, const Bitset& n,
                   const std::vector<std::size_t>& n_elems, std::span<const std::size_t> extra) {
  Bitset joined = n;
  std::vector<std::size_t> reps{table.identity()};
  for (std::size_t k = 0; k < reps.size(); ++k)
    for (std::size_t y : extra) {
      std::size_t z = table.multiply(reps[k], y);
      if (joined.test(z)) continue;
      reps.push_back(z);
      for (std::size_t e : n_elems) joined.set(table.multiply(e, z));
    }
  return joined;
}

}  // namespace

std::vector<Bitset> normal_subgroups(const ElementTable& table) {
  std::vector<Bitset> closures;
  std::vector<std::vector<std::size_t>> closure_gens;
  {
    std::unordered_set<Bitset, BitsetHash> seen;
    for (const auto& cls : conjugacy_classes(table)) {
      if (cls.front() == table.identity()) continue;
      std::size_t rep[] = {cls.front()};
      Bitset c = normal_closure(table, rep);
      if (seen.insert(c).second) {
        closure_gens.push_back(table.generating_set(c));
        closures.push_back(std::move(c));
      }
    }
  }
  Bitset trivial(table.size());
  trivial.set(table.identity());
  std::vector<Bitset> found{trivial};
  std::unordered_set<Bitset, BitsetHash> seen{trivial};
  for (std::size_t k = 0; k < found.size(); ++k) {
    auto elems = found[k].indices();
    for (std::size_t c = 0; c < closures.size(); ++c) {
      if (closures[c].is_subset_of(found[k])) continue;
      Bitset j = join_normal(table, found[k], elems, closure_gens[c]);
      if (seen.insert(j).second) found.push_back(std::move(j));
    }
  }
  std::sort(found.begin(), found.end(), [](const Bitset& a, const Bitset& b) {
    auto ca = a.count(), cb = b.count();
    return ca != cb ? ca < cb : a < b;
  });
  return found;
}

PermGroup reduce_to_elementary_abelian(const PermGroup& n, std::uint64_t p) {
  if (!n.is_abelian()) throw std::invalid_argument("reduce_to_elementary_abelian needs an abelian group");
  if (n.order() % p != 0) throw std::invalid_argument("p does not divide |N|");
  ElementTable table(n);
  std::vector<std::size_t> order_p;
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table.element_order(i) == p) order_p.push_back(i);
  return table.to_group(table.closure(order_p));
}

std::optional<Bitset> find_abelian_normal_nonsemiregular(const ElementTable& table,
                                                         const std::vector<Bitset>& normals) {
  for (const auto& n : normals)
    if (n.count() > 1 && table.is_abelian(n) && !table.is_semiregular(n)) return n;
  return std::nullopt;
}

std::optional<PermGroup> find_abelian_normal_nonsemiregular(const PermGroup& group,
                                                            std::uint64_t cap) {
  ElementTable table(group, cap);
  auto found = find_abelian_normal_nonsemiregular(table, normal_subgroups(table));
  if (!found) return std::nullopt;
  return table.to_group(*found);
}

std::optional<Bitset> minimal_abelian_normal(const ElementTable& table,
                                             const std::vector<Bitset>& normals) {
  for (std::size_t i = 0; i < normals.size(); ++i) {
    const auto& n = normals[i];
    if (n.count() <= 1) continue;
    bool minimal = true;
    for (std::size_t j = 0; j < normals.size() && minimal; ++j) {
      const auto& m = normals[j];
      if (j != i && m.count() > 1 && m.count() < n.count() && m.is_subset_of(n)) minimal = false;
    }
    if (minimal && table.is_abelian(n)) return n;
  }
  return std::nullopt;
}

std::optional<PermGroup> minimal_abelian_normal(const PermGroup& group, std::uint64_t cap) {
  ElementTable table(group, cap);
  auto found = minimal_abelian_normal(table, normal_subgroups(table));
  if (!found) return std::nullopt;
  return table.to_group(*found);
}

Bitset centralizer_in(const ElementTable& table, const Bitset& sub) {
  auto gens = table.generating_set(sub);
  Bitset out(table.size());
  for (std::size_t g = 0; g < table.size(); ++g) {
    bool commutes = true;
    for (std::size_t h : gens)
      if (table.multiply(g, h) != table.multiply(h, g)) {
        commutes = false;
        break;
      }
    if (commutes) out.set(g);
  }
  return out;
}

PermGroup centralizer_in(const PermGroup& group, const PermGroup& sub, std::uint64_t cap) {
  ElementTable table(group, cap);
  Bitset n = table.to_bitset(sub);
  return table.to_group(centralizer_in(table, n));
}

bool is_block_system(const PermGroup& group, const std::vector<std::vector<Point>>& blocks) {
  const std::size_t n = group.degree();
  std::vector<std::ptrdiff_t> block_of(n, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (Point p : blocks[b]) {
      if (p >= n || block_of[p] >= 0) return false;
      block_of[p] = static_cast<std::ptrdiff_t>(b);
    }
  for (auto v : block_of)
    if (v < 0) return false;
  for (const auto& g : group.generators())
    for (const auto& blk : blocks) {
      auto target = block_of[g[blk.front()]];
      for (Point p : blk)
        if (block_of[g[p]] != target) return false;
    }
  return true;
}

Bitset kernel_on_block_system(const ElementTable& table,
                              const std::vector<std::vector<Point>>& blocks) {
  if (!is_block_system(table.group(), blocks))
    throw std::invalid_argument("partition is not a block system of the group");
  std::vector<std::size_t> block_of(table.degree());
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (Point p : blocks[b]) block_of[p] = b;
  Bitset out(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& g = table[i];
    bool fixes = true;
    for (std::size_t b = 0; b < blocks.size() && fixes; ++b)
      fixes = block_of[g[blocks[b].front()]] == b;
    if (fixes) out.set(i);
  }
  return out;
}

PermGroup kernel_on_block_system(const PermGroup& group,
                                 const std::vector<std::vector<Point>>& blocks,
                                 std::uint64_t cap) {
  if (!is_block_system(group, blocks))
    throw std::invalid_argument("partition is not a block system of the group");
  ElementTable table(group, cap);
  return table.to_group(kernel_on_block_system(table, blocks));
}

}  // namespace semireg
