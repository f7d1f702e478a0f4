#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cprforge/errors.hpp"
#include "cprforge/permutation.hpp"

namespace cprforge {

struct Edge {
  int label = 0;
  Point a = 0;  // a < b once stored in a graph
  Point b = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Contiguous inclusive range of generator labels.
struct LabelWindow {
  int lo = 0;
  int hi = 0;

  int rank() const noexcept { return hi - lo + 1; }
  bool contains(int label) const noexcept { return lo <= label && label <= hi; }
  std::vector<int> labels() const {
    std::vector<int> out;
    for (int l = lo; l <= hi; ++l) out.push_back(l);
    return out;
  }

  friend bool operator==(const LabelWindow&, const LabelWindow&) = default;
};

class SelfLoop : public Error {
 public:
  using Error::Error;
};

/**
 * Permutation representation graph: an edge-labelled multigraph on vertices
 * 1..n in which the edges of each label form a partial matching, so each
 * label determines an involution (or the identity, if it has no edges).
 *
 * Edges are kept in canonical order (label, a, b) with a < b. A double edge
 * is two entries with different labels on the same vertex pair. Labels may be
 * negative.
 */
class LabeledGraph {
 public:
  LabeledGraph() = default;

  LabeledGraph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    for (auto& e : edges_) {
      if (e.a == e.b) throw SelfLoop("edge " + std::to_string(e.label) + " " + std::to_string(e.a) + " " + std::to_string(e.b) + " is a loop");
      if (e.a < 1 || e.b < 1 || e.a > n_ || e.b > n_)
        throw VertexOutOfRange("edge " + std::to_string(e.label) + " " + std::to_string(e.a) + " " + std::to_string(e.b) + " outside 1.." + std::to_string(n_));
      if (e.a > e.b) std::swap(e.a, e.b);
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t k = 1; k < edges_.size(); ++k)
      if (edges_[k] == edges_[k - 1])
        throw DuplicateEdge("duplicate edge " + std::to_string(edges_[k].label) + " " + std::to_string(edges_[k].a) + " " + std::to_string(edges_[k].b));
    std::map<std::pair<int, Point>, bool> used;
    for (const auto& e : edges_)
      for (Point v : {e.a, e.b})
        if (!used.emplace(std::pair{e.label, v}, true).second)
          throw MatchingViolation("vertex " + std::to_string(v) + " has two edges of label " + std::to_string(e.label));
  }

  std::size_t vertex_count() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool empty() const noexcept { return edges_.empty(); }

  /// Sorted distinct labels.
  std::vector<int> labels() const {
    std::vector<int> out;
    for (const auto& e : edges_)
      if (out.empty() || out.back() != e.label) out.push_back(e.label);
    return out;
  }

  /// [min label, max label], absent for an edgeless graph.
  std::optional<LabelWindow> window() const {
    if (edges_.empty()) return std::nullopt;
    return LabelWindow{edges_.front().label, edges_.back().label};
  }

  std::vector<Edge> edges_of(int label) const {
    std::vector<Edge> out;
    for (const auto& e : edges_)
      if (e.label == label) out.push_back(e);
    return out;
  }

  std::size_t degree(Point v) const {
    return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.a == v || e.b == v; }));
  }

  std::vector<Edge> incident(Point v) const {
    std::vector<Edge> out;
    for (const auto& e : edges_)
      if (e.a == v || e.b == v) out.push_back(e);
    return out;
  }

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

// ---------------------------------------------------------------------------
// PRG text format

inline LabeledGraph parse_prg(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::map<std::pair<int, Point>, std::size_t> used;  // (label, vertex) -> line
  std::set<Edge> seen;

  auto parse_int = [&](const std::string& token, long long lo, long long hi) -> long long {
    std::size_t consumed = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &consumed);
    } catch (const std::exception&) {
      throw SyntaxError(line_no, "expected an integer, got '" + token + "'");
    }
    if (consumed != token.size()) throw SyntaxError(line_no, "expected an integer, got '" + token + "'");
    if (value < lo || value > hi) throw SyntaxError(line_no, "integer " + token + " out of range");
    return value;
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream words(line);
    std::vector<std::string> tokens;
    for (std::string w; words >> w;) tokens.push_back(w);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (tokens.front() == "vertices") {
      if (n) throw SyntaxError(line_no, "'vertices' given twice");
      if (tokens.size() != 2) throw SyntaxError(line_no, "expected 'vertices <n>'");
      n = static_cast<std::size_t>(parse_int(tokens[1], 0, 1'000'000));
      continue;
    }
    if (tokens.front() == "edge") {
      if (!n) throw SyntaxError(line_no, "'vertices <n>' must come first");
      if (tokens.size() != 4) throw SyntaxError(line_no, "expected 'edge <label> <a> <b>'");
      Edge e;
      e.label = static_cast<int>(parse_int(tokens[1], -1'000'000, 1'000'000));
      long long a = parse_int(tokens[2], -1'000'000'000LL, 1'000'000'000LL);
      long long b = parse_int(tokens[3], -1'000'000'000LL, 1'000'000'000LL);
      if (a < 1 || b < 1 || a > static_cast<long long>(*n) || b > static_cast<long long>(*n))
        throw VertexOutOfRange("line " + std::to_string(line_no) + ": vertex outside 1.." + std::to_string(*n));
      if (a == b) throw SyntaxError(line_no, "loop edge");
      e.a = static_cast<Point>(std::min(a, b));
      e.b = static_cast<Point>(std::max(a, b));
      if (!seen.insert(e).second)
        throw DuplicateEdge("line " + std::to_string(line_no) + ": duplicate edge");
      for (Point v : {e.a, e.b}) {
        auto [it, fresh] = used.emplace(std::pair{e.label, v}, line_no);
        if (!fresh)
          throw MatchingViolation("line " + std::to_string(line_no) + ": vertex " + std::to_string(v) +
                                  " already has a label-" + std::to_string(e.label) + " edge (line " +
                                  std::to_string(it->second) + ")");
      }
      edges.push_back(e);
      continue;
    }
    throw SyntaxError(line_no, "unknown directive '" + tokens.front() + "'");
  }
  if (!n) throw SyntaxError(line_no, "missing 'vertices <n>'");
  return LabeledGraph(*n, std::move(edges));
}

inline std::string serialize_prg(const LabeledGraph& g) {
  std::string out = "vertices " + std::to_string(g.vertex_count()) + "\n";
  for (const auto& e : g.edges())
    out += "edge " + std::to_string(e.label) + " " + std::to_string(e.a) + " " + std::to_string(e.b) + "\n";
  return out;
}

inline LabeledGraph read_prg_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_prg(buffer.str());
}

inline void write_prg_file(const std::string& path, const LabeledGraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << serialize_prg(g);
}

// ---------------------------------------------------------------------------
// Generators and label algebra

/// Involution swapping the endpoints of every l-edge; identity if l is absent.
inline Permutation generator_of_label(const LabeledGraph& g, int label) {
  std::vector<std::vector<Point>> cycles;
  for (const auto& e : g.edges())
    if (e.label == label) cycles.push_back({e.a, e.b});
  return Permutation::from_cycles(g.vertex_count(), cycles);
}

template <typename LabelMap>
LabeledGraph map_labels(const LabeledGraph& g, LabelMap f) {
  std::vector<Edge> edges = g.edges();
  for (auto& e : edges) e.label = f(e.label);
  return LabeledGraph(g.vertex_count(), std::move(edges));
}

inline LabeledGraph restrict_labels(const LabeledGraph& g, const std::set<int>& keep) {
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if (keep.count(e.label)) edges.push_back(e);
  return LabeledGraph(g.vertex_count(), std::move(edges));
}

/// Mirrors labels inside the graph's own window: l -> lo + hi - l.
inline LabeledGraph dual(const LabeledGraph& g) {
  auto w = g.window();
  if (!w) return g;
  return map_labels(g, [s = w->lo + w->hi](int l) { return s - l; });
}

/// l -> -(l + 1).
inline LabeledGraph negate_relabel(const LabeledGraph& g) {
  return map_labels(g, [](int l) { return -(l + 1); });
}

inline LabeledGraph shift_labels(const LabeledGraph& g, int k) {
  return map_labels(g, [k](int l) { return l + k; });
}

/// Vertices of h are renumbered after those of g.
inline LabeledGraph union_disjoint(const LabeledGraph& g, const LabeledGraph& h) {
  std::vector<Edge> edges = g.edges();
  const auto offset = static_cast<Point>(g.vertex_count());
  for (auto e : h.edges()) {
    e.a += offset;
    e.b += offset;
    edges.push_back(e);
  }
  return LabeledGraph(g.vertex_count() + h.vertex_count(), std::move(edges));
}

/// `new_id[v-1]` is the new number of vertex v; must be a bijection of 1..n.
inline LabeledGraph relabel_vertices(const LabeledGraph& g, const std::vector<Point>& new_id) {
  if (new_id.size() != g.vertex_count()) throw DegreeMismatch(g.vertex_count(), new_id.size());
  Permutation::from_images(new_id);  // validates bijectivity
  std::vector<Edge> edges = g.edges();
  for (auto& e : edges) {
    e.a = new_id[e.a - 1];
    e.b = new_id[e.b - 1];
  }
  return LabeledGraph(g.vertex_count(), std::move(edges));
}

/// Connected components of the underlying multigraph; sorted, ordered by least vertex.
inline std::vector<std::vector<Point>> components(const LabeledGraph& g) {
  std::vector<std::vector<Point>> adjacency(g.vertex_count() + 1);
  for (const auto& e : g.edges()) {
    adjacency[e.a].push_back(e.b);
    adjacency[e.b].push_back(e.a);
  }
  std::vector<bool> seen(g.vertex_count() + 1, false);
  std::vector<std::vector<Point>> out;
  for (Point s = 1; s <= g.vertex_count(); ++s) {
    if (seen[s]) continue;
    std::vector<Point> comp{s};
    seen[s] = true;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (Point t : adjacency[comp[k]])
        if (!seen[t]) {
          seen[t] = true;
          comp.push_back(t);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Component shapes for commuting label pairs

struct ShapeVerdict {
  bool pass = true;
  int label_i = 0;  // first offending pair, when !pass
  int label_j = 0;
  std::vector<Point> component;
};

/**
 * For each pair of labels at distance at least 2, every component of their
 * two-label subgraph must be a vertex, an edge, a double edge or an
 * alternating square. This holds iff the two involutions commute.
 */
inline ShapeVerdict check_shape_lemma(const LabeledGraph& g) {
  auto labels = g.labels();
  for (std::size_t x = 0; x < labels.size(); ++x)
    for (std::size_t y = x + 1; y < labels.size(); ++y) {
      int i = labels[x], j = labels[y];
      if (j - i < 2) continue;
      LabeledGraph sub = restrict_labels(g, {i, j});
      for (const auto& comp : components(sub)) {
        if (comp.size() == 1) continue;
        std::size_t edge_count = 0;
        for (const auto& e : sub.edges())
          if (std::binary_search(comp.begin(), comp.end(), e.a)) ++edge_count;
        bool ok = (comp.size() == 2 && (edge_count == 1 || edge_count == 2)) ||
                  (comp.size() == 4 && edge_count == 4);  // matchings force a 4-cycle alternating i, j
        if (!ok) return ShapeVerdict{false, i, j, comp};
      }
    }
  return {};
}

}  // namespace cprforge
