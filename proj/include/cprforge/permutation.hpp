#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cprforge/errors.hpp"

namespace cprforge {

/// Points are 1-based throughout the public API: a permutation of degree n acts on {1..n}.
using Point = std::uint32_t;

enum class Parity { even, odd };

/**
 * A bijection of {1..n}, stored as its image sequence.
 *
 * Composition is written left to right: `compose(p, q)` (or `p * q`) applies
 * p first and then q, so `(p * q)(x) == q(p(x))`.
 */
class Permutation {
 public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree) : img_(degree) {
    std::iota(img_.begin(), img_.end(), Point{0});
  }

  /// `images[p-1]` is the image of point p (1-based values).
  static Permutation from_images(std::span<const Point> images) {
    Permutation result;
    result.img_.resize(images.size());
    std::vector<bool> seen(images.size(), false);
    for (std::size_t i = 0; i < images.size(); ++i) {
      Point q = images[i];
      if (q < 1 || q > images.size() || seen[q - 1])
        throw InvalidPermutation("image sequence is not a bijection");
      seen[q - 1] = true;
      result.img_[i] = q - 1;
    }
    return result;
  }

  static Permutation from_images(std::initializer_list<Point> images) {
    return from_images(std::span<const Point>(images.begin(), images.size()));
  }

  static Permutation transposition(std::size_t degree, Point a, Point b) {
    Permutation result(degree);
    if (a < 1 || b < 1 || a > degree || b > degree || a == b)
      throw InvalidPermutation("bad transposition (" + std::to_string(a) + "," + std::to_string(b) + ")");
    std::swap(result.img_[a - 1], result.img_[b - 1]);
    return result;
  }

  /// Product of the given disjoint cycles.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
    Permutation result(degree);
    std::vector<bool> used(degree, false);
    for (const auto& cycle : cycles) {
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        Point p = cycle[k];
        if (p < 1 || p > degree) throw InvalidPermutation("point " + std::to_string(p) + " out of range");
        if (used[p - 1]) throw InvalidPermutation("point " + std::to_string(p) + " repeated in cycles");
        used[p - 1] = true;
        result.img_[p - 1] = cycle[(k + 1) % cycle.size()] - 1;
      }
    }
    return result;
  }

  std::size_t degree() const noexcept { return img_.size(); }

  /// Image of a 1-based point.
  Point operator()(Point p) const { return img_[p - 1] + 1; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  bool moves(Point p) const { return img_[p - 1] != p - 1; }

  /// Smallest moved point, 0 for the identity.
  Point first_moved() const noexcept {
    for (std::size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != i) return static_cast<Point>(i + 1);
    return 0;
  }

  std::vector<Point> support() const {
    std::vector<Point> out;
    for (std::size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != i) out.push_back(static_cast<Point>(i + 1));
    return out;
  }

  /// 1-based image sequence.
  std::vector<Point> images() const {
    std::vector<Point> out(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) out[i] = img_[i] + 1;
    return out;
  }

  /// 0-based image sequence, for tight loops.
  std::span<const Point> raw() const noexcept { return img_; }

  Permutation inverse() const {
    Permutation result;
    result.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) result.img_[img_[i]] = static_cast<Point>(i);
    return result;
  }

  /// Same permutation on a larger point set, fixing the added points.
  Permutation extended(std::size_t degree) const {
    if (degree < img_.size()) throw DegreeMismatch(img_.size(), degree);
    Permutation result(degree);
    std::copy(img_.begin(), img_.end(), result.img_.begin());
    return result;
  }

  /// Nontrivial cycles, each starting at its least point, ordered by that point.
  std::vector<std::vector<Point>> cycles() const {
    std::vector<std::vector<Point>> out;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t start = 0; start < img_.size(); ++start) {
      if (seen[start] || img_[start] == start) continue;
      std::vector<Point> cycle;
      for (std::size_t p = start; !seen[p]; p = img_[p]) {
        seen[p] = true;
        cycle.push_back(static_cast<Point>(p + 1));
      }
      out.push_back(std::move(cycle));
    }
    return out;
  }

  /// Overwrites *this with `p * q`, reusing storage.
  void assign_product(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) throw DegreeMismatch(p.degree(), q.degree());
    img_.resize(p.img_.size());
    for (std::size_t i = 0; i < p.img_.size(); ++i) img_[i] = q.img_[p.img_[i]];
  }

  friend Permutation compose(const Permutation& p, const Permutation& q);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.img_ <=> b.img_; }

 private:
  std::vector<Point> img_;  // 0-based
};

/// Apply p, then q.
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw DegreeMismatch(p.degree(), q.degree());
  Permutation result;
  result.img_.resize(p.img_.size());
  for (std::size_t i = 0; i < p.img_.size(); ++i) result.img_[i] = q.img_[p.img_[i]];
  return result;
}

inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

inline std::uint64_t element_order(const Permutation& p) {
  std::uint64_t order = 1;
  for (const auto& cycle : p.cycles()) order = std::lcm(order, static_cast<std::uint64_t>(cycle.size()));
  return order;
}

inline Parity parity(const Permutation& p) {
  std::size_t transpositions = 0;
  for (const auto& cycle : p.cycles()) transpositions += cycle.size() - 1;
  return transpositions % 2 == 0 ? Parity::even : Parity::odd;
}

inline bool is_involution(const Permutation& p) { return !p.is_identity() && (p * p).is_identity(); }

/// Cycle notation, e.g. "(1,2)(3,4,5)"; the identity prints as "()".
inline std::string to_cycle_string(const Permutation& p) {
  std::string out;
  for (const auto& cycle : p.cycles()) {
    out += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(cycle[k]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

namespace detail {

inline std::vector<std::vector<Point>> parse_cycle_list(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  std::vector<std::vector<Point>> cycles;
  if (compact.empty() || compact == "id" || compact == "()") return cycles;

  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw InvalidPermutation("cannot parse cycle notation '" + std::string(text) + "': " + why);
  };
  while (pos < compact.size()) {
    if (compact[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<Point> cycle;
    if (pos < compact.size() && compact[pos] == ')') {  // "()" factor
      ++pos;
      continue;
    }
    while (true) {
      std::size_t start = pos;
      while (pos < compact.size() && std::isdigit(static_cast<unsigned char>(compact[pos]))) ++pos;
      if (start == pos) fail("expected a point");
      unsigned long value = std::stoul(compact.substr(start, pos - start));
      if (value == 0) fail("points are 1-based");
      cycle.push_back(static_cast<Point>(value));
      if (pos >= compact.size()) fail("unterminated cycle");
      if (compact[pos] == ',') {
        ++pos;
        continue;
      }
      if (compact[pos] == ')') {
        ++pos;
        break;
      }
      fail("unexpected character");
    }
    if (cycle.size() > 1) cycles.push_back(std::move(cycle));
  }
  return cycles;
}

}  // namespace detail

/// Parses cycle notation. Cycles need not be disjoint; they are multiplied left to right.
inline Permutation parse_cycles(std::string_view text, std::size_t degree) {
  Permutation result(degree);
  for (const auto& cycle : detail::parse_cycle_list(text)) {
    for (Point p : cycle)
      if (p > degree) throw InvalidPermutation("point " + std::to_string(p) + " exceeds degree " + std::to_string(degree));
    result = result * Permutation::from_cycles(degree, {cycle});
  }
  return result;
}

/// Parses cycle notation with degree equal to the largest point mentioned (at least 1).
inline Permutation parse_cycles(std::string_view text) {
  Point max_point = 1;
  for (const auto& cycle : detail::parse_cycle_list(text))
    for (Point p : cycle) max_point = std::max(max_point, p);
  return parse_cycles(text, max_point);
}

}  // namespace cprforge

template <>
struct std::hash<cprforge::Permutation> {
  std::size_t operator()(const cprforge::Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : p.raw()) h = (h ^ v) * 1099511628211ull;
    return h;
  }
};
