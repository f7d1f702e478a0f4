#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cprforge/errors.hpp"
#include "cprforge/labeled_graph.hpp"

// Graph families and gluing procedures. Vertex numbering follows the drawn
// layout: left to right, top row before bottom row, added vertices last.

namespace cprforge {

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterRange(what);
}

// Appends a path on `count` fresh vertices starting at id `first`; edge k gets label_of(k), k = 0..count-2.
template <typename LabelOf>
void append_path(std::vector<Edge>& edges, Point first, std::size_t count, LabelOf label_of) {
  for (std::size_t k = 0; k + 1 < count; ++k)
    edges.push_back(Edge{label_of(k), static_cast<Point>(first + k), static_cast<Point>(first + k + 1)});
}

}  // namespace detail

/// Path on r+1 vertices with labels 0..r-1.
inline LabeledGraph simplex(int r) {
  detail::require(r >= 1, "simplex: r >= 1");
  std::vector<Edge> edges;
  detail::append_path(edges, 1, static_cast<std::size_t>(r) + 1, [](std::size_t k) { return static_cast<int>(k); });
  return LabeledGraph(static_cast<std::size_t>(r) + 1, std::move(edges));
}

/// k disjoint copies of simplex(r), numbered copy after copy.
inline LabeledGraph multisimplex(int r, int k) {
  detail::require(r >= 1 && k >= 1, "multisimplex: r >= 1, k >= 1");
  LabeledGraph out;
  for (int c = 0; c < k; ++c) out = union_disjoint(out, simplex(r));
  return out;
}

/// Rank-h simplex (top) beside a rank-r simplex (bottom).
inline LabeledGraph family_result1(int h, int r) {
  detail::require(r >= 2 && h >= 1 && h <= r - 1, "result1: r >= 2, 1 <= h <= r-1");
  return union_disjoint(simplex(h), simplex(r));
}

/// Path on 2r vertices with labels r-1, ..., 1, 0, 1, ..., r-1.
inline LabeledGraph family_wreathsimp(int r) {
  detail::require(r >= 2, "wreathsimp: r >= 2");
  std::vector<Edge> edges;
  detail::append_path(edges, 1, 2 * static_cast<std::size_t>(r), [r](std::size_t k) { return std::abs(r - 1 - static_cast<int>(k)); });
  return LabeledGraph(2 * static_cast<std::size_t>(r), std::move(edges));
}

/**
 * Top: path on r+2 vertices labelled 0, ..., r-2, r-1, r-2. Bottom: rank-(r-1)
 * simplex. For r = 2 the group is dihedral of order 8 rather than S_4 x S_2.
 */
inline LabeledGraph family_lemme1(int r) {
  detail::require(r >= 2, "lemme1: r >= 2");
  std::vector<Edge> edges;
  const auto top = static_cast<std::size_t>(r) + 2;
  detail::append_path(edges, 1, top, [r](std::size_t k) { return static_cast<int>(k) < r ? static_cast<int>(k) : r - 2; });
  detail::append_path(edges, static_cast<Point>(top + 1), static_cast<std::size_t>(r), [](std::size_t k) { return static_cast<int>(k); });
  return LabeledGraph(top + static_cast<std::size_t>(r), std::move(edges));
}

/// Path on r+h+1 vertices labelled h, ..., 1, 0, 1, ..., h, h+1, ..., r-1.
inline LabeledGraph family_counterexample1(int r, int h) {
  detail::require(r >= 3 && h >= 1 && h <= r - 2, "counterexample1: r >= 3, 1 <= h <= r-2");
  std::vector<Edge> edges;
  const auto n = static_cast<std::size_t>(r + h + 1);
  detail::append_path(edges, 1, n, [h](std::size_t k) {
    int pos = static_cast<int>(k);
    return pos <= h ? h - pos : pos - h;
  });
  return LabeledGraph(n, std::move(edges));
}

/**
 * Two-row graph on 2r-1 vertices. Top row: counterexample1(r, h) on 1..r+h+1.
 * Bottom row: path on r+h+2..2r-1 with labels h+3, ..., r-1. Label h+1 joins
 * top vertex 2h+4+j to bottom vertex r+h+2+j for j = 0..r-h-3.
 */
inline LabeledGraph family_graph_x(int r, int h) {
  detail::require(r >= 5 && h >= 1 && h <= r - 4, "graph-x: r >= 5, 1 <= h <= r-4");
  std::vector<Edge> edges = family_counterexample1(r, h).edges();
  const int bottom = r - h - 2;
  const auto bottom_first = static_cast<Point>(r + h + 2);
  detail::append_path(edges, bottom_first, static_cast<std::size_t>(bottom), [h](std::size_t k) { return h + 3 + static_cast<int>(k); });
  for (int j = 0; j < bottom; ++j)
    edges.push_back(Edge{h + 1, static_cast<Point>(2 * h + 4 + j), static_cast<Point>(bottom_first + j)});
  return LabeledGraph(static_cast<std::size_t>(2 * r - 1), std::move(edges));
}

/**
 * Top: rank-r simplex on 1..r+1. Bottom: path on r-1 vertices labelled
 * 0..r-3. Label r-1 joins top vertex j to bottom vertex j for j = 1..r-1.
 */
inline LabeledGraph family_speccase(int r) {
  detail::require(r >= 3, "speccase: r >= 3");
  std::vector<Edge> edges = simplex(r).edges();
  const auto bottom_first = static_cast<Point>(r + 2);
  detail::append_path(edges, bottom_first, static_cast<std::size_t>(r - 1), [](std::size_t k) { return static_cast<int>(k); });
  for (int j = 0; j < r - 1; ++j)
    edges.push_back(Edge{r - 1, static_cast<Point>(1 + j), static_cast<Point>(bottom_first + j)});
  return LabeledGraph(static_cast<std::size_t>(2 * r), std::move(edges));
}

/**
 * Top: rank-r simplex on 1..r+1. Bottom: path on i vertices labelled 0..i-2.
 * Label i joins top vertex j to bottom vertex j for j = 1..i.
 */
inline LabeledGraph family_workswithsimplices(int i, int r) {
  detail::require(i >= 2 && r >= i + 1, "workswithsimplices: i >= 2, r >= i+1");
  std::vector<Edge> edges = simplex(r).edges();
  const auto bottom_first = static_cast<Point>(r + 2);
  detail::append_path(edges, bottom_first, static_cast<std::size_t>(i), [](std::size_t k) { return static_cast<int>(k); });
  for (int j = 0; j < i; ++j)
    edges.push_back(Edge{i, static_cast<Point>(1 + j), static_cast<Point>(bottom_first + j)});
  return LabeledGraph(static_cast<std::size_t>(r + 1 + i), std::move(edges));
}

/// Path 1-2-3-4 with labels 0, 1 and a {0,2} double edge on 3-4; a CPR graph for S_4.
inline LabeledGraph nonexample_doubleedge_base() {
  return LabeledGraph(4, {{0, 1, 2}, {1, 2, 3}, {0, 3, 4}, {2, 3, 4}});
}

/// The base graph with a (-1)-edge hung on its left end (new vertex drawn first).
inline LabeledGraph nonexample_doubleedge() {
  return LabeledGraph(5, {{-1, 1, 2}, {0, 2, 3}, {1, 3, 4}, {0, 4, 5}, {2, 4, 5}});
}

/// Path on 7 vertices with labels 0, 1, 2, 1, 0, 1; a CPR graph.
inline LabeledGraph nonexample_sevenvertex_base() {
  return LabeledGraph(7, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {1, 4, 5}, {0, 5, 6}, {1, 6, 7}});
}

/// The 7-vertex base with a (-1)-edge on its left end: 8 vertices, labels -1, 0, 1, 2, 1, 0, 1.
inline LabeledGraph nonexample_sevenvertex() {
  return LabeledGraph(8, {{-1, 1, 2}, {0, 2, 3}, {1, 3, 4}, {2, 4, 5}, {1, 5, 6}, {0, 6, 7}, {1, 7, 8}});
}

/// Rank-3 simplex plus a disjoint 1-edge.
inline LabeledGraph nonexample_simplex_union() {
  return union_disjoint(simplex(3), LabeledGraph(2, {{1, 1, 2}}));
}

// ---------------------------------------------------------------------------
// Gluing

namespace detail {

// Shape "A -0- x ~ G'" with G' using labels >= 1 only: returns A.
inline Point theorem1_endpoint(const LabeledGraph& g, const std::string& which) {
  if (g.empty()) throw ShapeViolation(which + ": graph has no edges");
  if (g.edges().front().label != 0)
    throw ShapeViolation(which + ": smallest label must be 0 (got " + std::to_string(g.edges().front().label) + ")");
  auto zero = g.edges_of(0);
  if (zero.size() != 1)
    throw ShapeViolation(which + ": needs exactly one 0-edge, found " + std::to_string(zero.size()) +
                         " (the rest of the graph may only use labels >= 1)");
  if (g.degree(zero[0].a) == 1) return zero[0].a;
  if (g.degree(zero[0].b) == 1) return zero[0].b;
  throw ShapeViolation(which + ": neither endpoint of the 0-edge " + std::to_string(zero[0].a) + "-" +
                       std::to_string(zero[0].b) + " is a leaf");
}

}  // namespace detail

/**
 * Glues A (leaf end of the unique 0-edge of g) to B (same in h) into a vertex
 * C, after mapping every label l of g to -(l+1). Numbering: the remaining
 * vertices of g in decreasing order (g is drawn mirrored, on the left), then
 * C, then the remaining vertices of h in increasing order. The labels of the
 * result span [-rank(g), rank(h)-1].
 */
inline LabeledGraph glue_theorem1(const LabeledGraph& g, const LabeledGraph& h) {
  const Point a = detail::theorem1_endpoint(g, "first graph");
  const Point b = detail::theorem1_endpoint(h, "second graph");
  const std::size_t ng = g.vertex_count(), nh = h.vertex_count();
  const auto c = static_cast<Point>(ng);

  std::vector<Point> g_id(ng + 1), h_id(nh + 1);
  Point next = 1;
  for (Point v = static_cast<Point>(ng); v >= 1; --v)
    if (v != a) g_id[v] = next++;
  g_id[a] = c;
  next = c + 1;
  for (Point v = 1; v <= nh; ++v)
    if (v != b) h_id[v] = next++;
  h_id[b] = c;

  std::vector<Edge> edges;
  for (const auto& e : g.edges()) edges.push_back(Edge{-(e.label + 1), g_id[e.a], g_id[e.b]});
  for (const auto& e : h.edges()) edges.push_back(Edge{e.label, h_id[e.a], h_id[e.b]});
  return LabeledGraph(ng + nh - 1, std::move(edges));
}

/// Hangs a (-1)-edge on the leaf end A of the unique 0-edge; the new vertex is n+1.
inline LabeledGraph pendant_minus_one(const LabeledGraph& g) {
  const Point a = detail::theorem1_endpoint(g, "graph");
  std::vector<Edge> edges = g.edges();
  edges.push_back(Edge{-1, a, static_cast<Point>(g.vertex_count() + 1)});
  return LabeledGraph(g.vertex_count() + 1, std::move(edges));
}

/**
 * Start of g must be a path p_1..p_{i+2} with labels 0..i, p_1..p_i carrying
 * no other edges, and every other edge labelled at least i. Adds a path
 * u_1..u_i (labels 0..i-2) on new vertices n+1..n+i and i-edges p_j - u_j.
 */
inline LabeledGraph conjecture_glue(const LabeledGraph& g, int i) {
  if (i < 2) throw ShapeViolation("conjecture gluing needs i >= 2");
  auto zero = g.edges_of(0);
  if (zero.size() != 1) throw ShapeViolation("needs exactly one 0-edge, found " + std::to_string(zero.size()));

  auto neighbour = [&](Point v, int label) -> std::optional<Point> {
    for (const auto& e : g.incident(v))
      if (e.label == label) return e.a == v ? e.b : e.a;
    return std::nullopt;
  };
  auto has_label = [&](Point v, int label) { return neighbour(v, label).has_value(); };

  Point start = 0;
  for (Point v : {zero[0].a, zero[0].b})
    if (g.degree(v) == 1 && has_label(v == zero[0].a ? zero[0].b : zero[0].a, 1)) {
      start = v;
      break;
    }
  if (start == 0) throw ShapeViolation("no leaf end of the 0-edge continues with a 1-edge");

  std::vector<Point> path{start};
  for (int label = 0; label <= i; ++label) {
    auto next = neighbour(path.back(), label);
    if (!next) throw ShapeViolation("path breaks: vertex " + std::to_string(path.back()) + " has no " + std::to_string(label) + "-edge");
    if (std::find(path.begin(), path.end(), *next) != path.end()) throw ShapeViolation("path revisits vertex " + std::to_string(*next));
    path.push_back(*next);
  }
  for (int j = 0; j < i; ++j) {
    std::size_t expected = j == 0 ? 1 : 2;
    if (g.degree(path[j]) != expected)
      throw ShapeViolation("path vertex p_" + std::to_string(j + 1) + " (" + std::to_string(path[j]) + ") has extra edges");
  }
  std::vector<Edge> path_edges;
  for (int label = 0; label <= i; ++label) {
    Point x = path[label], y = path[label + 1];
    path_edges.push_back(Edge{label, std::min(x, y), std::max(x, y)});
  }
  for (const auto& e : g.edges()) {
    if (std::find(path_edges.begin(), path_edges.end(), e) != path_edges.end()) continue;
    if (e.label < i)
      throw ShapeViolation("edge " + std::to_string(e.label) + " " + std::to_string(e.a) + "-" + std::to_string(e.b) +
                           " off the path must have label >= " + std::to_string(i));
  }

  const auto n = static_cast<Point>(g.vertex_count());
  std::vector<Edge> edges = g.edges();
  for (int k = 0; k + 1 < i; ++k) edges.push_back(Edge{k, static_cast<Point>(n + 1 + k), static_cast<Point>(n + 2 + k)});
  for (int j = 0; j < i; ++j) edges.push_back(Edge{i, path[j], static_cast<Point>(n + 1 + j)});
  return LabeledGraph(g.vertex_count() + static_cast<std::size_t>(i), std::move(edges));
}

// ---------------------------------------------------------------------------
// Named families

struct FamilySpec {
  std::string name;
  std::map<std::string, int> params;

  int param(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) throw ParameterRange(name + ": missing parameter --" + key);
    return it->second;
  }

  std::string describe() const {
    std::string out = name;
    for (const auto& [k, v] : params) out += " " + k + "=" + std::to_string(v);
    return out;
  }
};

struct FamilyInfo {
  std::string name;
  std::vector<std::string> params;
  std::string summary;
};

inline const std::vector<FamilyInfo>& family_catalogue() {
  static const std::vector<FamilyInfo> catalogue = {
      {"simplex", {"r"}, "path on r+1 vertices, labels 0..r-1 (r >= 1)"},
      {"multisimplex", {"r", "k"}, "k disjoint rank-r simplexes (r, k >= 1)"},
      {"result1", {"h", "r"}, "rank-h simplex beside rank-r simplex (r >= 2, 1 <= h <= r-1)"},
      {"wreathsimp", {"r"}, "path labels r-1..1,0,1..r-1 (r >= 2)"},
      {"lemme1", {"r"}, "path 0..r-1,r-2 beside rank-(r-1) simplex (r >= 2)"},
      {"counterexample1", {"r", "h"}, "path labels h..1,0,1..r-1 (r >= 3, 1 <= h <= r-2)"},
      {"graph-x", {"r", "h"}, "two-row graph on 2r-1 vertices (r >= 5, 1 <= h <= r-4)"},
      {"speccase", {"r"}, "simplex with a mirrored bottom row (r >= 3)"},
      {"workswithsimplices", {"i", "r"}, "simplex glued with an i-row (i >= 2, r >= i+1)"},
      {"nonexample-doubleedge", {}, "5-vertex graph with a {0,2} double edge"},
      {"nonexample-doubleedge-base", {}, "4-vertex CPR base of the double-edge non-example"},
      {"nonexample-sevenvertex", {}, "path labels -1,0,1,2,1,0,1"},
      {"nonexample-sevenvertex-base", {}, "7-vertex CPR path labels 0,1,2,1,0,1"},
      {"nonexample-simplex-union", {}, "rank-3 simplex plus a disjoint 1-edge"},
  };
  return catalogue;
}

inline std::string canonical_family_name(std::string name) {
  std::replace(name.begin(), name.end(), '_', '-');
  return name;
}

inline LabeledGraph make_family(const FamilySpec& spec) {
  const std::string name = canonical_family_name(spec.name);
  if (name == "simplex") return simplex(spec.param("r"));
  if (name == "multisimplex") return multisimplex(spec.param("r"), spec.param("k"));
  if (name == "result1") return family_result1(spec.param("h"), spec.param("r"));
  if (name == "wreathsimp") return family_wreathsimp(spec.param("r"));
  if (name == "lemme1") return family_lemme1(spec.param("r"));
  if (name == "counterexample1") return family_counterexample1(spec.param("r"), spec.param("h"));
  if (name == "graph-x") return family_graph_x(spec.param("r"), spec.param("h"));
  if (name == "speccase") return family_speccase(spec.param("r"));
  if (name == "workswithsimplices") return family_workswithsimplices(spec.param("i"), spec.param("r"));
  if (name == "nonexample-doubleedge") return nonexample_doubleedge();
  if (name == "nonexample-doubleedge-base") return nonexample_doubleedge_base();
  if (name == "nonexample-sevenvertex") return nonexample_sevenvertex();
  if (name == "nonexample-sevenvertex-base") return nonexample_sevenvertex_base();
  if (name == "nonexample-simplex-union") return nonexample_simplex_union();
  throw ParameterRange("unknown family '" + spec.name + "'");
}

}  // namespace cprforge
