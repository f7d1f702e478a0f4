#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cprforge/constructions.hpp"
#include "cprforge/errors.hpp"
#include "cprforge/labeled_graph.hpp"
#include "cprforge/perm_group.hpp"
#include "cprforge/sggi.hpp"

namespace cprforge {

namespace detail {

// Union-find over vertices 1..n joined by every edge whose label is not `skip`.
struct VertexPartition {
  std::vector<Point> parent;

  explicit VertexPartition(std::size_t n) : parent(n + 1) { std::iota(parent.begin(), parent.end(), Point{0}); }

  Point find(Point x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(Point a, Point b) { parent[find(a)] = find(b); }

  std::size_t count() {
    std::size_t c = 0;
    for (Point v = 1; v < parent.size(); ++v)
      if (find(v) == v) ++c;
    return c;
  }
};

inline VertexPartition orbits_without(const LabeledGraph& g, std::optional<int> skip) {
  VertexPartition part(g.vertex_count());
  for (const auto& e : g.edges())
    if (!skip || e.label != *skip) part.join(e.a, e.b);
  return part;
}

inline std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f = checked_mul(f, k);
  return f;
}

inline std::uint64_t power(std::uint64_t base, std::size_t e) {
  std::uint64_t out = 1;
  for (std::size_t k = 0; k < e; ++k) out = checked_mul(out, base);
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Fracture graphs

struct FractureResult {
  bool exists = false;
  std::vector<Edge> edges;          // one per label, ascending label, when `exists`
  std::vector<int> failing_labels;  // labels whose removal does not add an orbit
};

/**
 * For every label i, G_i must have more orbits than G. The chosen edge for i
 * is the least i-edge (by endpoints) whose ends lie in different G_i orbits.
 */
inline FractureResult fracture_graph(const LabeledGraph& g) {
  FractureResult out;
  const std::size_t base = detail::orbits_without(g, std::nullopt).count();
  for (int label : g.labels()) {
    auto part = detail::orbits_without(g, label);
    if (part.count() <= base) {
      out.failing_labels.push_back(label);
      continue;
    }
    for (const auto& e : g.edges_of(label))
      if (part.find(e.a) != part.find(e.b)) {
        out.edges.push_back(e);
        break;
      }
  }
  out.exists = !g.empty() && out.failing_labels.empty();
  if (!out.exists) out.edges.clear();
  return out;
}

// ---------------------------------------------------------------------------
// Splits

enum class SplitOrientation { none, forward, reversed };

inline std::string to_string(SplitOrientation o) {
  switch (o) {
    case SplitOrientation::forward: return "forward";
    case SplitOrientation::reversed: return "reversed";
    default: return "none";
  }
}

struct SplitReport {
  int label = 0;
  Edge edge;                  // a in side_a, b in side_b
  std::vector<Point> side_a;  // G_i orbit of a
  std::vector<Point> side_b;  // G_i orbit of b
  std::vector<int> j_a;       // labels other than i acting nontrivially on side_a
  std::vector<int> j_b;
  bool perfect = false;
  // forward: J_A has no label above i and J_B none below; reversed: the mirror condition.
  SplitOrientation orientation = SplitOrientation::none;
};

namespace detail {

inline SplitOrientation perfect_orientation(int i, const std::vector<int>& ja, const std::vector<int>& jb) {
  auto all_le = [&](const std::vector<int>& v) { return std::all_of(v.begin(), v.end(), [&](int j) { return j < i; }); };
  auto all_ge = [&](const std::vector<int>& v) { return std::all_of(v.begin(), v.end(), [&](int j) { return j > i; }); };
  if (all_le(ja) && all_ge(jb)) return SplitOrientation::forward;
  if (all_ge(ja) && all_le(jb)) return SplitOrientation::reversed;
  return SplitOrientation::none;
}

}  // namespace detail

/**
 * The i-split at `label`, if ρ_label is the only generator joining two pieces
 * of one G-orbit through exactly one edge. Does not require a fracture graph.
 */
inline std::optional<SplitReport> split_at(const LabeledGraph& g, int label) {
  auto whole = detail::orbits_without(g, std::nullopt);
  auto part = detail::orbits_without(g, label);
  // Exactly one G-orbit breaks, into exactly two pieces, joined by exactly one i-edge.
  if (part.count() != whole.count() + 1) return std::nullopt;
  std::optional<Edge> crossing;
  for (const auto& e : g.edges_of(label)) {
    if (part.find(e.a) == part.find(e.b)) continue;
    if (crossing) return std::nullopt;
    crossing = e;
  }
  if (!crossing) return std::nullopt;

  SplitReport rep;
  rep.label = label;
  rep.edge = *crossing;
  const Point ra = part.find(crossing->a), rb = part.find(crossing->b);
  for (Point v = 1; v <= g.vertex_count(); ++v) {
    Point r = part.find(v);
    if (r == ra) rep.side_a.push_back(v);
    if (r == rb) rep.side_b.push_back(v);
  }
  std::set<int> ja, jb;
  for (const auto& e : g.edges()) {
    if (e.label == label) continue;
    Point r = part.find(e.a);  // other edges never cross G_i orbits
    if (r == ra) ja.insert(e.label);
    if (r == rb) jb.insert(e.label);
  }
  rep.j_a.assign(ja.begin(), ja.end());
  rep.j_b.assign(jb.begin(), jb.end());
  rep.orientation = detail::perfect_orientation(label, rep.j_a, rep.j_b);
  rep.perfect = rep.orientation != SplitOrientation::none;
  return rep;
}

/**
 * All i-splits, in ascending label order. For an intransitive graph the two
 * sides are the pieces of the one G-orbit that ρ_i holds together; the
 * remaining orbits are left out of both sides.
 */
inline std::vector<SplitReport> find_splits(const LabeledGraph& g) {
  auto fracture = fracture_graph(g);
  if (!fracture.exists) throw NoFractureGraph(fracture.failing_labels);
  std::vector<SplitReport> out;
  for (int label : g.labels())
    if (auto rep = split_at(g, label)) out.push_back(std::move(*rep));
  return out;
}

inline bool is_perfect_split(const LabeledGraph& g, int label, const Edge& edge) {
  for (const auto& rep : find_splits(g))
    if (rep.label == label && rep.edge.a == std::min(edge.a, edge.b) && rep.edge.b == std::max(edge.a, edge.b)) return rep.perfect;
  return false;
}

/**
 * Labels i with a unique i-edge whose removal separates its component into a
 * side using only labels below i and a side using only labels above i. Every
 * other component must also use labels on one side of i only.
 */
inline std::vector<int> single_edge_split_labels(const LabeledGraph& g) {
  std::vector<int> out;
  for (int label : g.labels()) {
    if (g.edges_of(label).size() != 1) continue;
    auto rep = split_at(g, label);
    if (!rep || !rep->perfect) continue;
    auto part = detail::orbits_without(g, std::nullopt);
    const Point home = part.find(rep->edge.a);
    std::map<Point, std::pair<bool, bool>> sides;  // component -> (has label < i, has label > i)
    for (const auto& e : g.edges()) {
      Point c = part.find(e.a);
      if (c == home) continue;
      auto& [below, above] = sides[c];
      below = below || e.label < label;
      above = above || e.label > label;
    }
    if (std::all_of(sides.begin(), sides.end(), [](const auto& kv) { return !(kv.second.first && kv.second.second); }))
      out.push_back(label);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fingerprints

enum class NamedKind { symmetric, product_of_symmetric, c2_wr_s, s_wr_c2, s_times_h };

struct NamedMatch {
  NamedKind kind;
  std::vector<std::uint64_t> params;  // S_n: {n}; S_a x S_b: {a, b}; C2 wr S_r, S_r wr C2: {r}; S_t x H: {t, |H|}

  std::string text() const {
    auto p = [&](std::size_t k) { return std::to_string(params[k]); };
    switch (kind) {
      case NamedKind::symmetric: return "S_" + p(0);
      case NamedKind::product_of_symmetric: return "S_" + p(0) + " x S_" + p(1);
      case NamedKind::c2_wr_s: return "C2 wr S_" + p(0);
      case NamedKind::s_wr_c2: return "S_" + p(0) + " wr C2";
      case NamedKind::s_times_h: return "S_" + p(0) + " x H (|H| = " + p(1) + ")";
    }
    return {};
  }
};

struct Fingerprint {
  std::vector<std::size_t> orbit_sizes;
  bool transitive = false;
  std::optional<bool> primitive;           // only for transitive groups
  std::vector<bool> orbit_primitive;       // induced action on each orbit
  std::vector<std::uint64_t> orbit_orders;  // order of the induced action on each orbit
  std::uint64_t group_order = 1;
  bool factorization_check = false;  // |G| equals the product of the orbit orders
  std::vector<std::pair<std::size_t, std::size_t>> block_shapes;  // (count, size) of the seeded block systems, transitive case
  std::optional<NamedMatch> named_match;
};

namespace detail {

// Every nontrivial system obtained by joining the least point with another.
inline std::vector<BlockSystem> seeded_block_systems(const PermGroup& g, const std::vector<Point>& orbit) {
  std::vector<BlockSystem> out;
  for (std::size_t k = 1; k < orbit.size(); ++k) {
    auto bs = finest_blocks_joining(g, orbit, orbit.front(), orbit[k]);
    if (bs.count() > 1 && std::find(out.begin(), out.end(), bs) == out.end()) out.push_back(std::move(bs));
  }
  return out;
}

}  // namespace detail

inline Fingerprint fingerprint(const PermGroup& g) {
  Fingerprint fp;
  fp.group_order = g.order();
  const auto orbits = g.orbits();
  fp.transitive = orbits.size() == 1;
  std::uint64_t product = 1;
  bool overflow = false;
  for (const auto& orbit : orbits) {
    fp.orbit_sizes.push_back(orbit.size());
    PermGroup induced = induced_action(g, orbit);
    fp.orbit_orders.push_back(induced.order());
    fp.orbit_primitive.push_back(detail::minimal_systems_on(induced, induced.orbits().front()).empty());
    try {
      product = detail::checked_mul(product, induced.order());
    } catch (const std::overflow_error&) {
      overflow = true;
    }
  }
  fp.factorization_check = !overflow && product == fp.group_order;
  if (fp.transitive) fp.primitive = fp.orbit_primitive.front();

  const std::size_t n = g.degree();
  if (fp.transitive) {
    for (const auto& bs : detail::seeded_block_systems(g, orbits.front())) fp.block_shapes.emplace_back(bs.count(), bs.block_size());
    std::sort(fp.block_shapes.begin(), fp.block_shapes.end());
    auto has_shape = [&](std::size_t count, std::size_t size) {
      return std::find(fp.block_shapes.begin(), fp.block_shapes.end(), std::make_pair(count, size)) != fp.block_shapes.end();
    };
    if (n <= 20 && fp.group_order == detail::factorial(n)) {
      fp.named_match = NamedMatch{NamedKind::symmetric, {n}};
    } else if (n % 2 == 0 && n / 2 <= 20 && has_shape(n / 2, 2) &&
               fp.group_order == detail::power(2, n / 2) * detail::factorial(n / 2)) {
      fp.named_match = NamedMatch{NamedKind::c2_wr_s, {n / 2}};
    } else if (n % 2 == 0 && n / 2 <= 10 && has_shape(2, n / 2) &&
               fp.group_order == 2 * detail::factorial(n / 2) * detail::factorial(n / 2)) {
      fp.named_match = NamedMatch{NamedKind::s_wr_c2, {n / 2}};
    }
    return fp;
  }

  if (orbits.size() == 2 && fp.factorization_check && fp.orbit_sizes[0] <= 20 && fp.orbit_sizes[1] <= 20 &&
      fp.orbit_orders[0] == detail::factorial(fp.orbit_sizes[0]) && fp.orbit_orders[1] == detail::factorial(fp.orbit_sizes[1])) {
    auto a = fp.orbit_sizes[0], b = fp.orbit_sizes[1];
    fp.named_match = NamedMatch{NamedKind::product_of_symmetric, {std::max(a, b), std::min(a, b)}};
    return fp;
  }
  // S_t x H: a symmetric orbit that splits off as a direct factor. Largest such orbit wins.
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    const std::size_t t = fp.orbit_sizes[k];
    if (t < 2 || t > 20 || fp.orbit_orders[k] != detail::factorial(t)) continue;
    std::vector<Point> rest;
    for (std::size_t m = 0; m < orbits.size(); ++m)
      if (m != k) rest.insert(rest.end(), orbits[m].begin(), orbits[m].end());
    const std::uint64_t h = induced_action(g, rest).order();
    if (fp.group_order % fp.orbit_orders[k] != 0 || fp.group_order / fp.orbit_orders[k] != h) continue;
    if (!fp.named_match || fp.named_match->params[0] < t) fp.named_match = NamedMatch{NamedKind::s_times_h, {t, h}};
  }
  return fp;
}

inline Fingerprint fingerprint(const LabeledGraph& g) {
  std::vector<Permutation> gens;
  for (int l : g.labels()) gens.push_back(generator_of_label(g, l));
  return fingerprint(PermGroup(g.vertex_count(), std::move(gens)));
}

// ---------------------------------------------------------------------------
// Graph (X) witness

struct GraphXWitness {
  int r = 0, h = 0;
  Point a = 0, b = 0;   // the (h+1)-edge inside the top path
  Permutation sigma;    // product of the vertical (h+1)-edges
  bool sigma_matches_definition = false;  // sigma == (a,b) * rho_{h+1}
  bool in_low = false;   // sigma in <rho_0 .. rho_{h+1}>
  bool in_high = false;  // sigma in <rho_1 .. rho_{h+2}>
  bool in_middle = true; // sigma in <rho_1 .. rho_{h+1}>
  std::uint64_t low_order = 0, high_order = 0, middle_order = 0;
  bool middle_checked_by_enumeration = false;
  bool middle_enumeration_agrees = false;

  bool confirmed() const { return sigma_matches_definition && in_low && in_high && !in_middle; }
};

/**
 * Builds graph_x(r, h) and tests sigma against the three sections. When the
 * middle section has at most `enumeration_limit` elements, non-membership is
 * also rechecked by listing it.
 */
inline GraphXWitness verify_graph_x_witness(int r, int h, std::uint64_t enumeration_limit = 2'000'000) {
  const LabeledGraph g = family_graph_x(r, h);
  const Sggi s = Sggi::from_graph(g);
  GraphXWitness w;
  w.r = r;
  w.h = h;
  w.a = static_cast<Point>(2 * h + 2);
  w.b = static_cast<Point>(2 * h + 3);

  const std::size_t n = g.vertex_count();
  w.sigma = Permutation(n);
  for (const auto& e : g.edges_of(h + 1))
    if (!(e.a == w.a && e.b == w.b)) w.sigma = w.sigma * Permutation::transposition(n, e.a, e.b);
  const Permutation by_definition = Permutation::transposition(n, w.a, w.b) * s.rho(h + 1);
  w.sigma_matches_definition = by_definition == w.sigma && g.edges_of(h + 1).size() == static_cast<std::size_t>(r - h - 1);

  auto low = s.interval(0, h + 1), high = s.interval(1, h + 2), middle = s.interval(1, h + 1);
  w.low_order = low->order();
  w.high_order = high->order();
  w.middle_order = middle->order();
  w.in_low = low->contains(w.sigma);
  w.in_high = high->contains(w.sigma);
  w.in_middle = middle->contains(w.sigma);
  if (w.middle_order <= enumeration_limit) {
    w.middle_checked_by_enumeration = true;
    bool found = false;
    middle->for_each_element([&](const Permutation& x) {
      if (x == w.sigma) found = true;
      return !found;
    });
    w.middle_enumeration_agrees = found == w.in_middle;
  }
  return w;
}

}  // namespace cprforge
