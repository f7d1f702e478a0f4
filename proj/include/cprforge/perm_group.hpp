#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "cprforge/errors.hpp"
#include "cprforge/permutation.hpp"

namespace cprforge {

inline constexpr std::uint64_t kDefaultIntersectionCap = 5'000'000;

namespace detail {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("group order exceeds 64 bits");
  return out;
}

}  // namespace detail

/**
 * Permutation group given by generators, with a stabilizer chain computed
 * by the deterministic Schreier-Sims algorithm.
 *
 * Base points are chosen as the least point moved by the generator that
 * forces a new layer, so the chain (and the enumeration order of elements)
 * depends only on the generator list. Immutable once constructed.
 */
class PermGroup {
 public:
  struct Level {
    Point base = 0;
    std::vector<Permutation> generators;  // strong generators fixing all earlier base points
    std::vector<Point> orbit;             // orbit of `base`, in discovery order
    std::vector<int> rep_index;           // point-1 -> index in reps, -1 outside the orbit
    std::vector<Permutation> reps;        // reps[k] maps base to orbit[k]
    std::vector<Permutation> rep_inverses;
  };

  PermGroup() : PermGroup(0) {}

  explicit PermGroup(std::size_t degree, std::vector<Permutation> generators = {})
      : degree_(degree), generators_(std::move(generators)) {
    for (const auto& g : generators_)
      if (g.degree() != degree_) throw DegreeMismatch(degree_, g.degree());
    build_chain();
  }

  /// Degree is taken from the first generator; the list must be nonempty.
  static PermGroup generated_by(std::vector<Permutation> generators) {
    if (generators.empty()) throw InvalidPermutation("cannot infer degree from an empty generator list");
    std::size_t n = generators.front().degree();
    return PermGroup(n, std::move(generators));
  }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<Level>& levels() const noexcept { return levels_; }

  std::vector<Point> base() const {
    std::vector<Point> out;
    for (const auto& level : levels_) out.push_back(level.base);
    return out;
  }

  std::uint64_t order() const noexcept { return order_; }

  bool is_trivial() const noexcept { return levels_.empty(); }

  bool contains(const Permutation& p) const {
    if (p.degree() != degree_) throw DegreeMismatch(degree_, p.degree());
    std::vector<Point> cur(p.raw().begin(), p.raw().end());
    for (const auto& level : levels_) {
      Point beta = cur[level.base - 1];
      int idx = level.rep_index[beta];
      if (idx < 0) return false;
      auto inv = level.rep_inverses[idx].raw();
      for (auto& x : cur) x = inv[x];
    }
    for (std::size_t i = 0; i < cur.size(); ++i)
      if (cur[i] != i) return false;
    return true;
  }

  /**
   * Visits every element exactly once, in a fixed order: the element is the
   * product of one transversal representative per level, and the loops run
   * over each level's orbit in ascending point order, outermost level first.
   * The visitor returns false to stop early. Returns false iff stopped.
   */
  bool for_each_element(const std::function<bool(const Permutation&)>& visit) const {
    if (levels_.empty()) return visit(Permutation(degree_));
    std::vector<std::vector<int>> order(levels_.size());
    for (std::size_t l = 0; l < levels_.size(); ++l) {
      std::vector<Point> pts = levels_[l].orbit;
      std::sort(pts.begin(), pts.end());
      for (Point p : pts) order[l].push_back(levels_[l].rep_index[p - 1]);
    }
    std::vector<Permutation> partial(levels_.size(), Permutation(degree_));
    std::function<bool(std::size_t)> descend = [&](std::size_t depth) -> bool {
      for (int idx : order[depth]) {
        const Permutation& rep = levels_[depth].reps[idx];
        if (depth == 0)
          partial[0] = rep;
        else
          partial[depth].assign_product(rep, partial[depth - 1]);
        if (depth + 1 == levels_.size()) {
          if (!visit(partial[depth])) return false;
        } else if (!descend(depth + 1)) {
          return false;
        }
      }
      return true;
    };
    return descend(0);
  }

  std::vector<Permutation> elements() const {
    std::vector<Permutation> out;
    out.reserve(order_);
    for_each_element([&](const Permutation& g) {
      out.push_back(g);
      return true;
    });
    return out;
  }

  /// Orbit partition of {1..n}; each orbit sorted, orbits ordered by least element.
  std::vector<std::vector<Point>> orbits() const {
    std::vector<int> id(degree_, -1);
    std::vector<std::vector<Point>> out;
    for (Point start = 1; start <= degree_; ++start) {
      if (id[start - 1] >= 0) continue;
      std::vector<Point> orbit{start};
      id[start - 1] = static_cast<int>(out.size());
      for (std::size_t k = 0; k < orbit.size(); ++k)
        for (const auto& g : generators_) {
          Point q = g(orbit[k]);
          if (id[q - 1] < 0) {
            id[q - 1] = static_cast<int>(out.size());
            orbit.push_back(q);
          }
        }
      std::sort(orbit.begin(), orbit.end());
      out.push_back(std::move(orbit));
    }
    return out;
  }

  bool is_transitive() const { return degree_ <= 1 || orbits().size() == 1; }

  /// True iff every generator of `other` lies in this group.
  bool contains_group(const PermGroup& other) const {
    return std::all_of(other.generators().begin(), other.generators().end(),
                       [&](const Permutation& g) { return contains(g); });
  }

 private:
  std::pair<Permutation, std::size_t> strip(Permutation h, std::size_t from) const {
    for (std::size_t l = from; l < levels_.size(); ++l) {
      const Level& level = levels_[l];
      int idx = level.rep_index[h(level.base) - 1];
      if (idx < 0) return {std::move(h), l};
      h = h * level.rep_inverses[idx];
    }
    return {std::move(h), levels_.size()};
  }

  void rebuild_orbit(Level& level) const {
    level.orbit.assign(1, level.base);
    level.rep_index.assign(degree_, -1);
    level.reps.assign(1, Permutation(degree_));
    level.rep_inverses.assign(1, Permutation(degree_));
    level.rep_index[level.base - 1] = 0;
    for (std::size_t k = 0; k < level.orbit.size(); ++k) {
      Point pt = level.orbit[k];
      for (const auto& g : level.generators) {
        Point q = g(pt);
        if (level.rep_index[q - 1] >= 0) continue;
        level.rep_index[q - 1] = static_cast<int>(level.reps.size());
        Permutation rep = level.reps[level.rep_index[pt - 1]] * g;
        level.rep_inverses.push_back(rep.inverse());
        level.reps.push_back(std::move(rep));
        level.orbit.push_back(q);
      }
    }
  }

  static bool fixes_all(const Permutation& g, const std::vector<Level>& levels, std::size_t count) {
    for (std::size_t l = 0; l < count; ++l)
      if (g.moves(levels[l].base)) return false;
    return true;
  }

  void append_level(Point base) {
    Level level;
    level.base = base;
    levels_.push_back(std::move(level));
  }

  void build_chain() {
    std::vector<Permutation> strong;
    for (const auto& g : generators_) {
      if (g.is_identity()) continue;
      if (fixes_all(g, levels_, levels_.size())) append_level(g.first_moved());
      strong.push_back(g);
    }
    for (std::size_t l = 0; l < levels_.size(); ++l) {
      for (const auto& g : strong)
        if (fixes_all(g, levels_, l)) levels_[l].generators.push_back(g);
      rebuild_orbit(levels_[l]);
    }

    // Holt's formulation: verify Schreier generators level by level from the
    // bottom, jumping down to the level where a non-sifting element lands.
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
    while (i >= 0) {
      std::optional<std::pair<Permutation, std::size_t>> residue;
      {
        const Level& level = levels_[i];
        for (std::size_t k = 0; k < level.orbit.size() && !residue; ++k) {
          Point pt = level.orbit[k];
          const Permutation& u = level.reps[k];
          for (const auto& s : level.generators) {
            Point img = s(pt);
            Permutation schreier = u * s * level.rep_inverses[level.rep_index[img - 1]];
            auto stripped = strip(std::move(schreier), static_cast<std::size_t>(i) + 1);
            if (stripped.second == levels_.size() && stripped.first.is_identity()) continue;
            residue = std::move(stripped);
            break;
          }
        }
      }
      if (!residue) {
        --i;
        continue;
      }
      auto& [h, j] = *residue;
      if (j == levels_.size()) append_level(h.first_moved());
      for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
        levels_[l].generators.push_back(h);
        rebuild_orbit(levels_[l]);
      }
      i = static_cast<std::ptrdiff_t>(j);
    }

    order_ = 1;
    for (const auto& level : levels_) order_ = detail::checked_mul(order_, level.orbit.size());
  }

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
  std::uint64_t order_ = 1;
};

/**
 * G ∩ H by enumerating the smaller group and filtering by membership in the
 * other. Throws IntersectionTooLarge when min(|G|, |H|) exceeds `cap`.
 */
inline PermGroup intersection(const PermGroup& g, const PermGroup& h, std::uint64_t cap = kDefaultIntersectionCap) {
  if (g.degree() != h.degree()) throw DegreeMismatch(g.degree(), h.degree());
  const PermGroup& small = g.order() <= h.order() ? g : h;
  const PermGroup& large = g.order() <= h.order() ? h : g;
  if (small.order() > cap) throw IntersectionTooLarge(small.order(), cap);
  if (large.contains_group(small)) return small;

  PermGroup result(g.degree());
  small.for_each_element([&](const Permutation& e) {
    if (!result.contains(e) && large.contains(e)) {
      auto gens = result.generators();
      gens.push_back(e);
      result = PermGroup(g.degree(), std::move(gens));
    }
    return true;
  });
  return result;
}

/// Partition of an orbit (or of all points) into cells of equal size.
struct BlockSystem {
  std::vector<std::vector<Point>> blocks;  // each sorted; ordered by least element
  std::vector<int> block_of;               // point-1 -> block index, -1 outside the domain

  std::size_t count() const noexcept { return blocks.size(); }
  std::size_t block_size() const noexcept { return blocks.empty() ? 0 : blocks.front().size(); }

  friend bool operator==(const BlockSystem& a, const BlockSystem& b) { return a.blocks == b.blocks; }
};

namespace detail {

inline BlockSystem make_block_system(std::size_t degree, std::vector<std::vector<Point>> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
  BlockSystem out;
  out.block_of.assign(degree, -1);
  for (std::size_t k = 0; k < blocks.size(); ++k)
    for (Point p : blocks[k]) out.block_of[p - 1] = static_cast<int>(k);
  out.blocks = std::move(blocks);
  return out;
}

// Atkinson's merge procedure: the finest system of blocks on `domain` in which a and b share a block.
inline BlockSystem finest_blocks_joining(const PermGroup& g, const std::vector<Point>& domain, Point a, Point b) {
  std::vector<Point> parent(g.degree() + 1);
  std::iota(parent.begin(), parent.end(), Point{0});
  std::function<Point(Point)> find = [&](Point x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::pair<Point, Point>> queue;
  parent[find(b)] = find(a);
  queue.emplace_back(a, b);
  for (std::size_t k = 0; k < queue.size(); ++k) {
    auto [x, y] = queue[k];
    for (const auto& gen : g.generators()) {
      Point u = find(gen(x)), v = find(gen(y));
      if (u == v) continue;
      parent[v] = u;
      queue.emplace_back(u, v);
    }
  }
  std::map<Point, std::vector<Point>> cells;
  for (Point p : domain) cells[find(p)].push_back(p);
  std::vector<std::vector<Point>> blocks;
  for (auto& [root, cell] : cells) blocks.push_back(std::move(cell));
  return make_block_system(g.degree(), std::move(blocks));
}

inline bool refines(const BlockSystem& fine, const BlockSystem& coarse) {
  for (const auto& block : fine.blocks) {
    int target = coarse.block_of[block.front() - 1];
    for (Point p : block)
      if (coarse.block_of[p - 1] != target) return false;
  }
  return true;
}

inline std::vector<BlockSystem> minimal_systems_on(const PermGroup& g, const std::vector<Point>& orbit) {
  std::vector<BlockSystem> found;
  if (orbit.size() < 3) return found;
  Point a = orbit.front();
  for (std::size_t k = 1; k < orbit.size(); ++k) {
    BlockSystem bs = finest_blocks_joining(g, orbit, a, orbit[k]);
    if (bs.count() == 1) continue;
    if (std::find(found.begin(), found.end(), bs) == found.end()) found.push_back(std::move(bs));
  }
  std::vector<BlockSystem> minimal;
  for (const auto& candidate : found) {
    bool has_finer = std::any_of(found.begin(), found.end(), [&](const BlockSystem& other) {
      return other.block_size() < candidate.block_size() && refines(other, candidate);
    });
    if (!has_finer) minimal.push_back(candidate);
  }
  std::sort(minimal.begin(), minimal.end(),
            [](const BlockSystem& x, const BlockSystem& y) { return x.blocks < y.blocks; });
  return minimal;
}

}  // namespace detail

/// True iff every generator maps every block onto a block.
inline bool is_block_system(const PermGroup& g, const BlockSystem& bs) {
  for (const auto& gen : g.generators())
    for (const auto& block : bs.blocks) {
      int target = bs.block_of[gen(block.front()) - 1];
      if (target < 0) return false;
      for (Point p : block)
        if (bs.block_of[gen(p) - 1] != target) return false;
    }
  return true;
}

/**
 * Minimal nontrivial block systems. For an intransitive group, the systems
 * of each orbit are listed (orbit by orbit), each covering only its orbit.
 */
inline std::vector<BlockSystem> minimal_block_systems(const PermGroup& g) {
  std::vector<BlockSystem> out;
  for (const auto& orbit : g.orbits()) {
    auto systems = detail::minimal_systems_on(g, orbit);
    out.insert(out.end(), systems.begin(), systems.end());
  }
  return out;
}

inline bool is_primitive(const PermGroup& g) {
  if (!g.is_transitive()) throw NotTransitive();
  return detail::minimal_systems_on(g, g.orbits().front()).empty();
}

/// Action on a union of orbits, relabelled onto 1..|domain| in ascending point order.
inline PermGroup induced_action(const PermGroup& g, std::vector<Point> domain) {
  std::sort(domain.begin(), domain.end());
  domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
  std::vector<int> index(g.degree(), -1);
  for (std::size_t k = 0; k < domain.size(); ++k) {
    if (domain[k] < 1 || domain[k] > g.degree()) throw DomainNotInvariant("domain point out of range");
    index[domain[k] - 1] = static_cast<int>(k);
  }
  std::vector<Permutation> gens;
  for (const auto& gen : g.generators()) {
    std::vector<Point> images(domain.size());
    for (std::size_t k = 0; k < domain.size(); ++k) {
      int target = index[gen(domain[k]) - 1];
      if (target < 0) throw DomainNotInvariant("domain is not invariant under the generators");
      images[k] = static_cast<Point>(target + 1);
    }
    gens.push_back(Permutation::from_images(images));
  }
  return PermGroup(domain.size(), std::move(gens));
}

/// Action on the blocks of a block system, block k acting as point k+1.
inline PermGroup induced_action(const PermGroup& g, const BlockSystem& bs) {
  if (!is_block_system(g, bs)) throw DomainNotInvariant("not a block system of the group");
  std::vector<Permutation> gens;
  for (const auto& gen : g.generators()) {
    std::vector<Point> images(bs.count());
    for (std::size_t k = 0; k < bs.count(); ++k)
      images[k] = static_cast<Point>(bs.block_of[gen(bs.blocks[k].front()) - 1] + 1);
    gens.push_back(Permutation::from_images(images));
  }
  return PermGroup(bs.count(), std::move(gens));
}

}  // namespace cprforge
