#include "semireg/perm.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include "semireg/error.hpp"
#include "semireg/simd/kernels.hpp"

namespace semireg {

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p])
      throw std::invalid_argument("permutation image list is not a bijection");
    seen[p] = 1;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<char> used(degree, 0);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      Point a = cyc[i];
      if (a >= degree || used[a])
        throw std::invalid_argument("cycles are not disjoint or exceed the degree");
      used[a] = 1;
      images[a] = cyc[(i + 1) % cyc.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) throw std::invalid_argument("degree mismatch in product");
  Permutation out;
  out.images_.resize(degree());
  simd::active().compose(images_.data(), rhs.images_.data(), out.images_.data(), degree());
  return out;
}

Permutation& Permutation::operator*=(const Permutation& rhs) {
  *this = *this * rhs;
  return *this;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(degree());
  simd::invert(images_.data(), out.images_.data(), degree());
  return out;
}

Permutation Permutation::pow(long long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k)
                               : static_cast<unsigned long long>(k);
  Permutation result(degree());
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Permutation Permutation::conjugate_by(const Permutation& g) const {
  if (g.degree() != degree()) throw std::invalid_argument("degree mismatch in conjugation");
  // p^(g^-1 x g): the point g[p] goes to g[x[p]].
  Permutation out;
  out.images_.resize(degree());
  for (std::size_t p = 0; p < degree(); ++p) out.images_[g.images_[p]] = g.images_[images_[p]];
  return out;
}

bool Permutation::is_identity() const {
  return simd::active().first_moved(images_.data(), degree()) == degree();
}

std::size_t Permutation::fixed_point_count() const {
  return simd::active().count_fixed(images_.data(), degree());
}

std::size_t Permutation::first_moved_point() const {
  return simd::active().first_moved(images_.data(), degree());
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<char> seen(degree(), 0);
  for (Point p = 0; p < degree(); ++p) {
    if (seen[p] || images_[p] == p) continue;
    std::vector<Point> cyc;
    for (Point q = p; !seen[q]; q = images_[q]) {
      seen[q] = 1;
      cyc.push_back(q);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<char> seen(degree(), 0);
  for (Point p = 0; p < degree(); ++p) {
    if (seen[p]) continue;
    std::size_t len = 0;
    for (Point q = p; !seen[q]; q = images_[q]) {
      seen[q] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::uint64_t Permutation::order() const {
  std::uint64_t ord = 1;
  for (std::size_t len : cycle_type()) ord = std::lcm(ord, static_cast<std::uint64_t>(len));
  return ord;
}

bool Permutation::has_uniform_cycles() const {
  auto type = cycle_type();
  return type.empty() || type.front() == type.back();
}

bool Permutation::operator==(const Permutation& rhs) const {
  return degree() == rhs.degree() &&
         simd::active().equal(images_.data(), rhs.images_.data(), degree());
}

std::strong_ordering Permutation::operator<=>(const Permutation& rhs) const {
  if (auto c = degree() <=> rhs.degree(); c != 0) return c;
  return std::lexicographical_compare_three_way(images_.begin(), images_.end(),
                                                rhs.images_.begin(), rhs.images_.end());
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  auto img = p.images();
  std::string_view bytes(reinterpret_cast<const char*>(img.data()), img.size_bytes());
  return std::hash<std::string_view>{}(bytes);
}

// ------------------------------------------------------------ stabiliser chain

struct PermGroup::Level {
  Point base = 0;
  std::vector<Permutation> gens;
  std::vector<Point> orbit;
  std::vector<std::int32_t> where;  // point -> index into orbit, -1 if absent
  std::vector<Permutation> reps;    // base^reps[k] == orbit[k]
  std::vector<Permutation> inv_reps;

  void rebuild(std::size_t n) {
    orbit.assign(1, base);
    where.assign(n, -1);
    where[base] = 0;
    reps.assign(1, Permutation(n));
    inv_reps.assign(1, Permutation(n));
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (const auto& s : gens) {
        Point img = s[orbit[k]];
        if (where[img] >= 0) continue;
        where[img] = static_cast<std::int32_t>(orbit.size());
        orbit.push_back(img);
        reps.push_back(reps[k] * s);
        inv_reps.push_back(reps.back().inverse());
      }
    }
  }
};

struct PermGroup::Chain {
  std::vector<Level> levels;
  std::uint64_t order = 1;  // 0 when the order does not fit
};

struct PermGroup::Cache {
  std::once_flag once;
  std::unique_ptr<Chain> chain;
};

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : PermGroup(degree, std::move(generators), {}, std::nullopt) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     std::vector<Point> base_prefix, std::optional<std::uint64_t> known_order)
    : degree_(degree),
      base_prefix_(std::move(base_prefix)),
      known_order_(known_order),
      cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree does not match group degree");
    if (!g.is_identity()) generators_.push_back(std::move(g));
  }
  for (Point b : base_prefix_)
    if (b >= degree) throw std::invalid_argument("base point out of range");
}

const PermGroup::Chain& PermGroup::chain() const {
  std::call_once(cache_->once, [this] {
    const std::size_t n = degree_;
    auto chain = std::make_unique<Chain>();
    auto& levels = chain->levels;

    std::vector<Point> base = base_prefix_;
    auto fixes_base = [&](const Permutation& g, std::size_t upto) {
      for (std::size_t i = 0; i < upto; ++i)
        if (g[base[i]] != base[i]) return false;
      return true;
    };
    for (const auto& g : generators_)
      if (fixes_base(g, base.size())) base.push_back(static_cast<Point>(g.first_moved_point()));

    levels.resize(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
      levels[i].base = base[i];
      for (const auto& g : generators_)
        if (fixes_base(g, i)) levels[i].gens.push_back(g);
      levels[i].rebuild(n);
    }

    auto current_order = [&]() {
      std::uint64_t ord = 1;
      for (const auto& l : levels)
        if (__builtin_mul_overflow(ord, static_cast<std::uint64_t>(l.orbit.size()), &ord)) return std::uint64_t{0};
      return ord;
    };
    auto sift = [&](Permutation g, std::size_t from) -> std::pair<Permutation, std::size_t> {
      for (std::size_t l = from; l < levels.size(); ++l) {
        std::int32_t w = levels[l].where[g[levels[l].base]];
        if (w < 0) return {std::move(g), l};
        g = g * levels[l].inv_reps[static_cast<std::size_t>(w)];
      }
      return {std::move(g), levels.size()};
    };

    bool done = known_order_ && current_order() == *known_order_;
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels.size()) - 1;
    while (!done && i >= 0) {
      bool restarted = false;
      Level& L = levels[static_cast<std::size_t>(i)];
      for (std::size_t k = 0; !restarted && k < L.orbit.size(); ++k) {
        for (std::size_t si = 0; si < L.gens.size(); ++si) {
          const Permutation& s = L.gens[si];
          Point image = s[L.orbit[k]];
          auto w = static_cast<std::size_t>(L.where[image]);
          Permutation g = L.reps[k] * s;
          if (g == L.reps[w]) continue;
          g = g * L.inv_reps[w];
          auto [h, j] = sift(std::move(g), static_cast<std::size_t>(i) + 1);
          if (j == levels.size() && h.is_identity()) continue;
          if (j == levels.size()) {
            Level fresh;
            fresh.base = static_cast<Point>(h.first_moved_point());
            levels.push_back(std::move(fresh));
          }
          for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
            levels[l].gens.push_back(h);
            levels[l].rebuild(n);
          }
          i = static_cast<std::ptrdiff_t>(j);
          restarted = true;
          break;
        }
      }
      if (restarted) {
        if (known_order_ && current_order() == *known_order_) done = true;
      } else {
        --i;
      }
    }
    chain->order = current_order();
    cache_->chain = std::move(chain);
  });
  return *cache_->chain;
}

std::uint64_t PermGroup::order() const {
  if (chain().order == 0) throw std::overflow_error("group order exceeds 2^64");
  return chain().order;
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  const auto& levels = chain().levels;
  Permutation h = g;
  for (const auto& L : levels) {
    std::int32_t w = L.where[h[L.base]];
    if (w < 0) return false;
    h = h * L.inv_reps[static_cast<std::size_t>(w)];
  }
  return h.is_identity();
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> out;
  for (const auto& L : chain().levels) out.push_back(L.base);
  return out;
}

std::vector<Permutation> PermGroup::strong_generators(std::size_t level) const {
  const auto& levels = chain().levels;
  if (level >= levels.size()) return {};
  return levels[level].gens;
}

std::vector<Point> PermGroup::basic_orbit(std::size_t level) const {
  const auto& levels = chain().levels;
  if (level >= levels.size()) return {};
  return levels[level].orbit;
}

std::optional<Permutation> PermGroup::transversal(std::size_t level, Point point) const {
  const auto& levels = chain().levels;
  if (level >= levels.size() || point >= degree_) return std::nullopt;
  std::int32_t w = levels[level].where[point];
  if (w < 0) return std::nullopt;
  return levels[level].reps[static_cast<std::size_t>(w)];
}

std::vector<std::vector<Point>> orbits_of(std::size_t degree,
                                          const std::vector<Permutation>& generators) {
  std::vector<Point> parent(degree);
  std::iota(parent.begin(), parent.end(), Point{0});
  auto find = [&](Point x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : generators)
    for (Point p = 0; p < degree; ++p) {
      Point a = find(p), b = find(g[p]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::vector<Point>> out;
  std::vector<std::int64_t> slot(degree, -1);
  for (Point p = 0; p < degree; ++p) {
    Point r = find(p);
    if (slot[r] < 0) {
      slot[r] = static_cast<std::int64_t>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[r])].push_back(p);
  }
  return out;
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  return orbits_of(degree_, generators_);
}

std::vector<Point> PermGroup::orbit(Point p) const {
  std::vector<Point> out{p};
  std::vector<char> seen(degree_, 0);
  seen[p] = 1;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& g : generators_) {
      Point q = g[out[k]];
      if (!seen[q]) {
        seen[q] = 1;
        out.push_back(q);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool PermGroup::is_transitive() const {
  return degree_ <= 1 || orbit(0).size() == degree_;
}

PermGroup PermGroup::stabilizer(Point v) const { return pointwise_stabilizer({v}); }

PermGroup PermGroup::pointwise_stabilizer(const std::vector<Point>& points) const {
  PermGroup rebased(degree_, generators_, points, order());
  std::uint64_t ord = rebased.order();
  const auto& levels = rebased.chain().levels;
  for (std::size_t l = 0; l < points.size() && l < levels.size(); ++l)
    ord /= levels[l].orbit.size();
  return PermGroup(degree_, rebased.strong_generators(points.size()), {}, ord);
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (generators_[i] * generators_[j] != generators_[j] * generators_[i]) return false;
  return true;
}

bool PermGroup::is_semiregular() const {
  const std::uint64_t ord = order();
  for (const auto& orb : orbits())
    if (orb.size() != ord) return false;
  return true;
}

void PermGroup::for_each_element(std::uint64_t cap,
                                 const std::function<void(const Permutation&)>& f) const {
  const auto& c = chain();
  if (c.order == 0 || c.order > cap)
    throw CapExceeded("group of order " + std::to_string(c.order) + " exceeds cap " +
                      std::to_string(cap));
  // Every element is uniquely u_{k-1} * ... * u_1 * u_0 with u_l from level l.
  std::function<void(std::size_t, const Permutation&)> rec =
      [&](std::size_t remaining, const Permutation& acc) {
        if (remaining == 0) {
          f(acc);
          return;
        }
        const auto& L = c.levels[remaining - 1];
        for (const auto& u : L.reps) rec(remaining - 1, acc * u);
      };
  rec(c.levels.size(), Permutation(degree_));
}

std::vector<Permutation> PermGroup::elements(std::uint64_t cap) const {
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(order(), cap)));
  for_each_element(cap, [&](const Permutation& g) { out.push_back(g); });
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------------------ utilities

PermGroup make_subgroup(const PermGroup& parent, std::vector<Permutation> generators) {
  for (const auto& g : generators)
    if (!parent.contains(g)) throw std::invalid_argument("subgroup generator not in parent group");
  return PermGroup(parent.degree(), std::move(generators));
}

bool is_normal(const PermGroup& group, const PermGroup& sub) {
  if (sub.degree() != group.degree()) throw std::invalid_argument("degree mismatch");
  for (const auto& h : sub.generators())
    if (!group.contains(h)) throw std::invalid_argument("subgroup is not contained in the group");
  for (const auto& h : sub.generators())
    for (const auto& g : group.generators())
      if (!sub.contains(h.conjugate_by(g))) return false;
  return true;
}

bool semiregular_by_fixed_points(const PermGroup& group, std::uint64_t cap) {
  bool ok = true;
  group.for_each_element(cap, [&](const Permutation& g) {
    if (ok && !g.is_identity() && g.fixed_point_count() > 0) ok = false;
  });
  return ok;
}

bool semiregular_by_stabilizers(const PermGroup& group) {
  for (const auto& orb : group.orbits())
    if (!group.stabilizer(orb.front()).is_trivial()) return false;
  return true;
}

std::string to_image_string(const Permutation& p) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < p.degree(); ++i) os << (i ? " " : "") << p[static_cast<Point>(i)];
  os << ']';
  return os.str();
}

std::string to_cycle_string(const Permutation& p) {
  auto cyc = p.cycles();
  if (cyc.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cyc) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ')';
  }
  return os.str();
}

Permutation parse_permutation(const std::string& text, std::optional<std::size_t> degree) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw std::invalid_argument("empty permutation text");
  auto read_numbers = [](std::string_view body) {
    std::vector<Point> nums;
    std::string tmp(body);
    for (char& ch : tmp)
      if (ch == ',') ch = ' ';
    std::istringstream is(tmp);
    long long x;
    while (is >> x) {
      if (x < 0) throw std::invalid_argument("negative point in permutation text");
      nums.push_back(static_cast<Point>(x));
    }
    if (!is.eof()) throw std::invalid_argument("malformed permutation text");
    return nums;
  };
  if (text[first] == '[') {
    auto close = text.find(']', first);
    if (close == std::string::npos) throw std::invalid_argument("unterminated image list");
    auto images = read_numbers(std::string_view(text).substr(first + 1, close - first - 1));
    if (degree && images.size() != *degree)
      throw std::invalid_argument("image list length does not match degree");
    return Permutation(std::move(images));
  }
  if (text[first] != '(') throw std::invalid_argument("expected '[' or '(' in permutation text");
  if (!degree) throw std::invalid_argument("cycle notation needs an explicit degree");
  std::vector<std::vector<Point>> cycles;
  std::size_t pos = first;
  while (true) {
    pos = text.find_first_not_of(" \t\r\n", pos);
    if (pos == std::string::npos) break;
    if (text[pos] != '(') throw std::invalid_argument("malformed cycle notation");
    auto close = text.find(')', pos);
    if (close == std::string::npos) throw std::invalid_argument("unterminated cycle");
    auto cyc = read_numbers(std::string_view(text).substr(pos + 1, close - pos - 1));
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    pos = close + 1;
  }
  return Permutation::from_cycles(*degree, cycles);
}

}  // namespace semireg
