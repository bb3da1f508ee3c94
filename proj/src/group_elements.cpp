#include "semireg/group_elements.hpp"

#include <bit>
#include <stdexcept>

#include "semireg/error.hpp"

namespace semireg {

std::size_t Bitset::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Bitset::is_subset_of(const Bitset& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

std::vector<std::size_t> Bitset::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t word = words_[w];
    while (word) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

std::size_t Bitset::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto w : words_) h = (h ^ w) * 1099511628211ull;
  return h;
}

ElementTable::ElementTable(const PermGroup& group, std::uint64_t cap) : group_(group) {
  elements_ = group.elements(cap);
  index_.reserve(elements_.size() * 2);
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
  identity_ = index_.at(Permutation(group.degree()));
  inverse_.resize(elements_.size());
  order_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    inverse_[i] = index_.at(elements_[i].inverse());
    order_[i] = elements_[i].order();
  }
  for (const auto& g : group.generators()) gen_idx_.push_back(index_.at(g));
}

std::optional<std::size_t> ElementTable::find(const Permutation& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t ElementTable::index_of(const Permutation& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) throw std::invalid_argument("permutation is not a group element");
  return it->second;
}

std::size_t ElementTable::multiply(std::size_t a, std::size_t b) const {
  return index_.at(elements_[a] * elements_[b]);
}

std::size_t ElementTable::conjugate(std::size_t a, std::size_t g) const {
  return index_.at(elements_[a].conjugate_by(elements_[g]));
}

Bitset ElementTable::closure(std::span<const std::size_t> gens) const {
  Bitset members(size());
  members.set(identity_);
  std::vector<std::size_t> queue{identity_};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (std::size_t g : gens) {
      std::size_t c = multiply(queue[k], g);
      if (!members.test(c)) {
        members.set(c);
        queue.push_back(c);
      }
    }
  return members;
}

Bitset ElementTable::join(const Bitset& sub, std::span<const std::size_t> sub_gens,
                          std::span<const std::size_t> extra) const {
  std::vector<std::size_t> gens(sub_gens.begin(), sub_gens.end());
  gens.insert(gens.end(), extra.begin(), extra.end());
  Bitset members = sub;
  std::vector<std::size_t> queue = sub.indices();
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (std::size_t g : gens) {
      std::size_t c = multiply(queue[k], g);
      if (!members.test(c)) {
        members.set(c);
        queue.push_back(c);
      }
    }
  return members;
}

std::vector<std::size_t> ElementTable::generating_set(const Bitset& sub) const {
  std::vector<std::size_t> gens;
  Bitset current(size());
  current.set(identity_);
  // Prefer high-order elements so the set stays short.
  auto idx = sub.indices();
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return order_[a] > order_[b]; });
  for (std::size_t i : idx) {
    if (current.test(i)) continue;
    std::size_t one[] = {i};
    current = join(current, gens, one);
    gens.push_back(i);
    if (current == sub) break;
  }
  return gens;
}

PermGroup ElementTable::to_group(const Bitset& sub) const {
  std::vector<Permutation> gens;
  for (std::size_t i : generating_set(sub)) gens.push_back(elements_[i]);
  return PermGroup(degree(), std::move(gens), {}, sub.count());
}

Bitset ElementTable::to_bitset(const PermGroup& sub) const {
  std::vector<std::size_t> gens;
  for (const auto& g : sub.generators()) gens.push_back(index_of(g));
  return closure(gens);
}

Bitset ElementTable::from_indices(std::span<const std::size_t> idx) const {
  Bitset b(size());
  for (std::size_t i : idx) b.set(i);
  return b;
}

bool ElementTable::is_abelian(const Bitset& sub) const {
  auto gens = generating_set(sub);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (multiply(gens[i], gens[j]) != multiply(gens[j], gens[i])) return false;
  return true;
}

bool ElementTable::is_semiregular(const Bitset& sub) const {
  for (std::size_t i : sub.indices())
    if (i != identity_ && elements_[i].fixed_point_count() > 0) return false;
  return true;
}

bool ElementTable::is_normal(const Bitset& sub) const {
  for (std::size_t h : generating_set(sub))
    for (std::size_t g : gen_idx_)
      if (!sub.test(conjugate(h, g))) return false;
  return true;
}

}  // namespace semireg
