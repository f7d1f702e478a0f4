#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "cprforge/permutation.hpp"

// Reference implementations by breadth-first closure. They share nothing with
// the stabilizer-chain code beyond Permutation itself and exist to check it.

namespace cprforge::brute {

using ElementSet = std::unordered_set<Permutation>;

/// All elements of <gens>; throws std::length_error past `limit` elements.
inline ElementSet closure(std::size_t degree, const std::vector<Permutation>& gens, std::size_t limit = 2'000'000) {
  ElementSet seen;
  std::vector<Permutation> frontier{Permutation(degree)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Permutation y = x * g;
        if (seen.insert(y).second) {
          if (seen.size() > limit) throw std::length_error("closure exceeds limit");
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  return seen;
}

inline ElementSet intersect(const ElementSet& a, const ElementSet& b) {
  const ElementSet& small = a.size() <= b.size() ? a : b;
  const ElementSet& large = a.size() <= b.size() ? b : a;
  ElementSet out;
  for (const auto& x : small)
    if (large.count(x)) out.insert(x);
  return out;
}

/// Orbits as connected components of the generator graphs, ordered by least point.
inline std::vector<std::vector<Point>> orbits(std::size_t degree, const std::vector<Permutation>& gens) {
  std::vector<int> comp(degree + 1, -1);
  std::vector<std::vector<Point>> out;
  for (Point start = 1; start <= degree; ++start) {
    if (comp[start] >= 0) continue;
    std::vector<Point> orbit{start};
    comp[start] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (const auto& g : gens) {
        Point y = g(orbit[k]);
        if (comp[y] < 0) {
          comp[y] = static_cast<int>(out.size());
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

/// Intersection property by listing every section, for small rank and order.
inline bool intersection_property(std::size_t degree, const std::vector<Permutation>& rho) {
  const std::size_t r = rho.size();
  std::vector<ElementSet> sections(std::size_t{1} << r);
  for (std::uint64_t mask = 0; mask < sections.size(); ++mask) {
    std::vector<Permutation> gens;
    for (std::size_t k = 0; k < r; ++k)
      if (mask >> k & 1) gens.push_back(rho[k]);
    sections[mask] = closure(degree, gens);
  }
  for (std::uint64_t i = 0; i < sections.size(); ++i)
    for (std::uint64_t j = i + 1; j < sections.size(); ++j)
      if (intersect(sections[i], sections[j]).size() != sections[i & j].size()) return false;
  return true;
}

}  // namespace cprforge::brute
