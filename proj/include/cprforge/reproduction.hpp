#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "cprforge/analysis.hpp"
#include "cprforge/brute_force.hpp"
#include "cprforge/constructions.hpp"
#include "cprforge/labeled_graph.hpp"
#include "cprforge/sggi.hpp"

// The reproduction suite behind `cprforge paper`.

namespace cprforge::reproduction {

struct CorpusEntry {
  std::string name;
  LabeledGraph graph;
};

/// Every family instance, non-example and gluing output that the suite reasons about.
inline std::vector<CorpusEntry> corpus() {
  std::vector<CorpusEntry> out;
  auto add = [&](std::string name, LabeledGraph g) { out.push_back({std::move(name), std::move(g)}); };
  auto tag = [](const std::string& family, std::initializer_list<int> params) {
    std::string s = family + "(";
    bool first = true;
    for (int p : params) {
      s += (first ? "" : ",") + std::to_string(p);
      first = false;
    }
    return s + ")";
  };
  for (int r = 1; r <= 6; ++r) add(tag("simplex", {r}), simplex(r));
  for (int r = 1; r <= 4; ++r)
    for (int k = 2; k <= 3; ++k) add(tag("multisimplex", {r, k}), multisimplex(r, k));
  for (int r = 2; r <= 4; ++r)
    for (int h = 1; h <= r - 1; ++h) add(tag("result1", {h, r}), family_result1(h, r));
  for (int r = 2; r <= 5; ++r) add(tag("wreathsimp", {r}), family_wreathsimp(r));
  for (int r = 2; r <= 5; ++r) add(tag("lemme1", {r}), family_lemme1(r));
  for (int r = 3; r <= 6; ++r)
    for (int h = 1; h <= r - 2; ++h) add(tag("counterexample1", {r, h}), family_counterexample1(r, h));
  for (auto [r, h] : {std::pair{5, 1}, {6, 1}, {6, 2}}) add(tag("graph-x", {r, h}), family_graph_x(r, h));
  for (int r = 3; r <= 4; ++r) add(tag("speccase", {r}), family_speccase(r));
  for (int i = 2; i <= 3; ++i)
    for (int r = i + 1; r <= 5; ++r) add(tag("workswithsimplices", {i, r}), family_workswithsimplices(i, r));
  add("nonexample-doubleedge", nonexample_doubleedge());
  add("nonexample-doubleedge-base", nonexample_doubleedge_base());
  add("nonexample-sevenvertex", nonexample_sevenvertex());
  add("nonexample-sevenvertex-base", nonexample_sevenvertex_base());
  add("nonexample-simplex-union", nonexample_simplex_union());
  add("glue(simplex(2),simplex(2))", glue_theorem1(simplex(2), simplex(2)));
  add("glue(simplex(3),simplex(2))", glue_theorem1(simplex(3), simplex(2)));
  add("glue(simplex(1),dual(counterexample1(3,1)))", glue_theorem1(simplex(1), dual(family_counterexample1(3, 1))));
  add("pendant(simplex(3))", pendant_minus_one(simplex(3)));
  add("pendant(dual(counterexample1(4,1)))", pendant_minus_one(dual(family_counterexample1(4, 1))));
  return out;
}

struct CaseResult {
  bool pass = true;
  std::vector<std::string> lines;  // one per check, prefixed "ok" or "FAIL"

  void expect(bool ok, const std::string& what) {
    lines.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    pass = pass && ok;
  }
};

struct Case {
  std::string name;
  std::string summary;
  std::function<CaseResult()> run;
};

namespace detail {

inline std::uint64_t fact(std::size_t n) { return cprforge::detail::factorial(n); }

inline bool cpr(const LabeledGraph& g, IpMode mode = IpMode::recursive) {
  return is_string_c_group(Sggi::from_graph(g), mode).is_string_c_group();
}

inline std::string fmt_order(const std::string& name, std::uint64_t got, std::uint64_t want) {
  return name + ": order " + std::to_string(got) + " (expected " + std::to_string(want) + ")";
}

inline CaseResult theorem1_grid() {
  CaseResult res;
  std::vector<CorpusEntry> inputs;
  for (int r = 1; r <= 4; ++r) inputs.push_back({"simplex(" + std::to_string(r) + ")", simplex(r)});
  // counterexample1(r,1) has its 0-edge between two inner vertices; its dual has the required leaf.
  for (int r = 3; r <= 4; ++r) {
    auto g = family_counterexample1(r, 1);
    bool rejected = false;
    try {
      glue_theorem1(g, simplex(1));
    } catch (const ShapeViolation&) {
      rejected = true;
    }
    res.expect(rejected, "counterexample1(" + std::to_string(r) + ",1) as drawn is rejected by the shape check");
    inputs.push_back({"dual(counterexample1(" + std::to_string(r) + ",1))", dual(g)});
  }
  for (const auto& a : inputs)
    for (const auto& b : inputs) {
      auto g = glue_theorem1(a.graph, b.graph);
      auto s = Sggi::from_graph(g);
      const int ra = a.graph.window()->rank(), rb = b.graph.window()->rank();
      bool window_ok = s.window() == LabelWindow{-ra, rb - 1};
      bool ok = is_string_c_group(s).is_string_c_group();
      bool connected = components(g).size() == 1;
      std::uint64_t order = s.group()->order();
      res.expect(window_ok && ok && (!connected || order == fact(g.vertex_count())),
                 "glue(" + a.name + ", " + b.name + "): CPR, window [" + std::to_string(-ra) + "," + std::to_string(rb - 1) +
                     "], order " + std::to_string(order) + " = " + std::to_string(g.vertex_count()) + "!");
    }
  for (int r = 1; r <= 4; ++r)
    for (int t = 1; t <= 4; ++t)
      res.expect(shift_labels(glue_theorem1(simplex(r), simplex(t)), r) == simplex(r + t),
                 "glue(simplex(" + std::to_string(r) + "), simplex(" + std::to_string(t) + ")) shifted by " + std::to_string(r) +
                     " equals simplex(" + std::to_string(r + t) + ")");
  return res;
}

inline CaseResult graph_x_refutation() {
  CaseResult res;
  for (auto [r, h] : {std::pair{5, 1}, {6, 1}, {6, 2}}) {
    const std::string tag = "graph-x(" + std::to_string(r) + "," + std::to_string(h) + ")";
    auto g = family_graph_x(r, h);
    auto s = Sggi::from_graph(g);
    res.expect(s.group()->order() == fact(2 * r - 1), fmt_order(tag, s.group()->order(), fact(2 * r - 1)));
    auto cert = check_ip_recursive(s);
    res.expect(check_string_property(s).pass && !cert.pass && cert.actual_order > cert.expected_order,
               tag + ": intersection property fails (orders " + std::to_string(cert.actual_order) + " > " +
                   std::to_string(cert.expected_order) + ")");
    auto w = verify_graph_x_witness(r, h);
    res.expect(w.confirmed(), tag + ": sigma = " + to_cycle_string(w.sigma) + " lies in <rho_0..rho_" + std::to_string(h + 1) +
                                  "> and <rho_1..rho_" + std::to_string(h + 2) + "> but not in <rho_1..rho_" + std::to_string(h + 1) + ">");
  }
  return res;
}

inline CaseResult gluing_nonexamples() {
  CaseResult res;
  res.expect(!cpr(nonexample_doubleedge()), "double-edge graph (5 vertices) fails the intersection property");
  res.expect(cpr(nonexample_doubleedge_base()), "its 4-vertex base is a CPR graph");
  auto base = Sggi::from_graph(nonexample_doubleedge_base());
  res.expect(base.rho(0) == parse_cycles("(1,2)(3,4)", 4) && base.rho(1) == parse_cycles("(2,3)", 4) && base.rho(2) == parse_cycles("(3,4)", 4),
             "base generators are (1,2)(3,4), (2,3), (3,4)");
  bool rejected = false;
  try {
    pendant_minus_one(nonexample_doubleedge_base());
  } catch (const ShapeViolation&) {
    rejected = true;
  }
  res.expect(rejected, "base has two 0-edges, so the (-1)-pendant gluing does not apply");

  auto seven = nonexample_sevenvertex();
  res.expect(!cpr(seven), "seven-vertex-base graph with pendant fails the intersection property");
  auto s = Sggi::from_graph(seven);
  // Removal notation: Gamma_{-1} keeps {0,1,2}, Gamma_{1,2} keeps {-1,0}, Gamma_{-1,1,2} keeps {0}.
  auto inter = intersection(*s.section({0, 1, 2}), *s.section({-1, 0}));
  res.expect(inter.order() == 4, "|Gamma_{-1} ∩ Gamma_{1,2}| = " + std::to_string(inter.order()) + " (expected 4)");
  res.expect(s.section({0})->order() == 2, "|Gamma_{-1,1,2}| = " + std::to_string(s.section({0})->order()) + " (expected 2)");
  res.expect(cpr(nonexample_sevenvertex_base()), "its 7-vertex base is a CPR graph");
  return res;
}

inline CaseResult family_orders() {
  CaseResult res;
  auto check = [&](const std::string& tag, const LabeledGraph& g, std::uint64_t want, bool want_cpr = true) {
    auto s = Sggi::from_graph(g);
    std::uint64_t got = s.group()->order();
    bool verdict = is_string_c_group(s).is_string_c_group();
    res.expect(got == want && verdict == want_cpr, fmt_order(tag, got, want) + (want_cpr ? ", CPR" : ", not CPR"));
  };
  auto t = [](const std::string& f, std::initializer_list<int> ps) {
    std::string s = f + "(";
    bool first = true;
    for (int p : ps) {
      s += (first ? "" : ",") + std::to_string(p);
      first = false;
    }
    return s + ")";
  };
  for (int r = 1; r <= 6; ++r) check(t("simplex", {r}), simplex(r), fact(r + 1));
  for (int r = 1; r <= 4; ++r)
    for (int k = 1; k <= 3; ++k) check(t("multisimplex", {r, k}), multisimplex(r, k), fact(r + 1));
  for (int r = 2; r <= 5; ++r)
    for (int h = 1; h <= r - 1; ++h) check(t("result1", {h, r}), family_result1(h, r), fact(h + 1) * fact(r + 1));
  for (int r = 2; r <= 5; ++r) check(t("wreathsimp", {r}), family_wreathsimp(r), (std::uint64_t{1} << r) * fact(r));
  for (int r = 3; r <= 5; ++r) check(t("lemme1", {r}), family_lemme1(r), fact(r + 2) * fact(r));
  check("lemme1(2) (dihedral case)", family_lemme1(2), 8);
  for (int r = 3; r <= 6; ++r)
    for (int h = 1; h <= r - 2; ++h) check(t("counterexample1", {r, h}), family_counterexample1(r, h), fact(r + h + 1));
  for (int r = 3; r <= 4; ++r) check(t("speccase", {r}), family_speccase(r), 2 * fact(r) * fact(r));
  for (int i = 2; i <= 3; ++i)
    for (int r = i + 1; r <= 5; ++r)
      check(t("workswithsimplices", {i, r}), family_workswithsimplices(i, r), r > i + 1 ? fact(r + i + 1) : 2 * fact(r) * fact(r));
  check("nonexample-simplex-union", nonexample_simplex_union(), 48, false);
  auto u = Sggi::from_graph(nonexample_simplex_union());
  res.expect(u.section({1, 2})->order() == 12 && u.section({0, 1})->order() == 12,
             "union non-example: Gamma_0 and Gamma_2 have order 12");
  return res;
}

inline CaseResult speccase_generators() {
  CaseResult res;
  auto s = Sggi::from_graph(family_speccase(3));
  const char* want[] = {"(1,2)(5,6)", "(2,3)", "(3,4)(1,5)(2,6)"};
  for (int l = 0; l < 3; ++l)
    res.expect(s.rho(l) == parse_cycles(want[l], 6),
               "rho_" + std::to_string(l) + " = " + to_cycle_string(s.rho(l)) + " (expected " + want[l] + ")");
  res.expect(family_workswithsimplices(2, 3) == family_speccase(3), "workswithsimplices(2,3) coincides with speccase(3)");
  res.expect(conjecture_glue(simplex(3), 2) == family_speccase(3), "conjecture gluing of simplex(3) at i=2 gives speccase(3)");
  return res;
}

inline CaseResult oracle_equivalence() {
  CaseResult res;
  int compared = 0, failures = 0;
  for (const auto& entry : corpus()) {
    auto w = entry.graph.window();
    if (!w || w->rank() > 7 || entry.graph.vertex_count() > 10) continue;
    auto s = Sggi::from_graph(entry.graph);
    if (!check_string_property(s).pass) continue;
    bool rec = check_ip_recursive(s).pass;
    bool full = check_ip_full(s).pass;
    ++compared;
    failures += rec ? 0 : 1;
    res.expect(rec == full, entry.name + ": recursive " + (rec ? "pass" : "fail") + ", full " + (full ? "pass" : "fail"));
  }
  res.expect(compared >= 25, std::to_string(compared) + " instances compared (at least 25), " + std::to_string(failures) + " failing");
  return res;
}

inline CaseResult duality() {
  CaseResult res;
  for (const auto& entry : corpus()) {
    const auto& g = entry.graph;
    auto s = Sggi::from_graph(g);
    auto d = Sggi::from_graph(dual(g));
    std::vector<std::uint64_t> st, dt;
    if (s.rank() >= 2) {
      st = schlafli_type(s);
      dt = schlafli_type(d);
      std::reverse(dt.begin(), dt.end());
    }
    const bool verdict = is_string_c_group(s).is_string_c_group();
    res.expect(dual(dual(g)) == g && verdict == is_string_c_group(d).is_string_c_group() && st == dt,
               entry.name + ": dual involutive, verdict " + (verdict ? "CPR" : "not CPR") + " preserved, type reversed");
  }
  for (auto [r, h] : {std::pair{5, 1}, {6, 1}, {6, 2}}) {
    const int i = r - h - 2;
    auto glued = dual(conjecture_glue(dual(family_counterexample1(r, h)), i));
    std::vector<Point> id(glued.vertex_count());
    std::iota(id.begin(), id.end(), Point{1});
    for (int k = 1; k <= i; ++k) id[r + h + k] = static_cast<Point>(2 * r - k);  // u_k -> 2r-k
    res.expect(relabel_vertices(glued, id) == family_graph_x(r, h),
               "graph-x(" + std::to_string(r) + "," + std::to_string(h) + ") = dual of the conjecture gluing (i = " + std::to_string(i) +
                   ") of dual(counterexample1)");
  }
  return res;
}

inline CaseResult splits_primitivity() {
  CaseResult res;
  int shaped = 0;
  for (const auto& entry : corpus()) {
    const auto& g = entry.graph;
    auto labels = single_edge_split_labels(g);
    if (labels.empty()) continue;
    ++shaped;
    auto group = Sggi::from_graph(g).group();
    auto fracture = fracture_graph(g);
    for (int i : labels) {
      const Edge e = g.edges_of(i).front();
      // Splits are defined only in the presence of a fracture graph; without one the edge is judged on its own.
      bool perfect = fracture.exists ? is_perfect_split(g, i, e) : split_at(g, i).value().perfect;
      std::string where = entry.name + ", label " + std::to_string(i) + (fracture.exists ? "" : " (no fracture graph)");
      if (components(g).size() == 1) {
        res.expect(perfect && is_primitive(*group) && group->order() == fact(g.vertex_count()),
                   where + ": unique cross-edge is a perfect split; primitive of order " + std::to_string(g.vertex_count()) + "!");
      } else {
        // Disconnected: the component of the i-edge is symmetric and splits off as a direct factor.
        auto fp = fingerprint(*group);
        std::size_t t = 0;
        for (const auto& c : components(g))
          if (std::find(c.begin(), c.end(), e.a) != c.end()) t = c.size();
        bool named = fp.named_match &&
                     ((fp.named_match->kind == NamedKind::product_of_symmetric &&
                       (fp.named_match->params[0] == t || fp.named_match->params[1] == t)) ||
                      (fp.named_match->kind == NamedKind::s_times_h && fp.named_match->params[0] >= t));
        res.expect(perfect && named, where + ": perfect split; structure " + (fp.named_match ? fp.named_match->text() : "unmatched") +
                                         " with t = " + std::to_string(t));
      }
    }
  }
  res.expect(shaped > 0, std::to_string(shaped) + " corpus graphs have the one-edge shape");

  auto gx = family_graph_x(5, 1);
  auto splits = find_splits(gx);
  bool found = false, any_perfect = false;
  for (const auto& sp : splits) {
    any_perfect = any_perfect || sp.perfect;
    found = found || (sp.label == 3 && sp.edge == Edge{3, 5, 6} && !sp.perfect);
  }
  res.expect(found && !any_perfect, "graph-x(5,1): the 3-split 5-6 is not perfect, and no split is");

  // Perfect split on a transitive group implies primitivity, across the corpus.
  for (const auto& entry : corpus()) {
    if (components(entry.graph).size() != 1 || !fracture_graph(entry.graph).exists) continue;
    auto sp = find_splits(entry.graph);
    if (std::none_of(sp.begin(), sp.end(), [](const SplitReport& r) { return r.perfect; })) continue;
    res.expect(is_primitive(*Sggi::from_graph(entry.graph).group()), entry.name + ": perfect split and transitive, hence primitive");
  }
  return res;
}

inline CaseResult engine_self_checks(std::uint64_t seed = 20230917) {
  CaseResult res;
  std::mt19937_64 rng(seed);
  auto random_perm = [&](std::size_t n) {
    std::vector<Point> pts(n);
    std::iota(pts.begin(), pts.end(), Point{1});
    std::uniform_int_distribution<std::size_t> width(2, n);
    std::size_t k = width(rng);  // permute a random subset of k points
    std::vector<Point> chosen = pts;
    std::shuffle(chosen.begin(), chosen.end(), rng);
    chosen.resize(k);
    std::vector<Point> shuffled = chosen;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (std::size_t m = 0; m < k; ++m) pts[chosen[m] - 1] = shuffled[m];
    return Permutation::from_images(pts);
  };
  int intersections = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<std::size_t> deg(2, 8), count(1, 3);
    const std::size_t n = deg(rng);
    std::vector<Permutation> gens, other;
    for (std::size_t k = count(rng); k > 0; --k) gens.push_back(random_perm(n));
    for (std::size_t k = count(rng); k > 0; --k) other.push_back(random_perm(n));
    PermGroup g(n, gens), h(n, other);
    auto eg = brute::closure(n, gens), eh = brute::closure(n, other);
    bool ok = g.order() == eg.size() && h.order() == eh.size();
    for (int probe = 0; probe < 20 && ok; ++probe) {
      Permutation x = random_perm(n);
      ok = g.contains(x) == (eg.count(x) > 0);
    }
    for (const auto& x : eg) ok = ok && g.contains(x);
    if (g.order() <= 10'000 && h.order() <= 10'000) {
      ++intersections;
      auto both = brute::intersect(eg, eh);
      auto meet = intersection(g, h);
      std::size_t listed = 0;
      meet.for_each_element([&](const Permutation& x) {
        ok = ok && both.count(x) > 0;
        ++listed;
        return true;
      });
      ok = ok && listed == both.size();
    }
    res.expect(ok, "random set " + std::to_string(trial + 1) + ": degree " + std::to_string(n) + ", order " + std::to_string(g.order()) +
                       " and " + std::to_string(h.order()));
  }
  res.expect(intersections >= 10, std::to_string(intersections) + " intersections checked element by element");
  return res;
}

}  // namespace detail

inline const std::vector<Case>& cases() {
  static const std::vector<Case> all = {
      {"theorem1-simplex-grid", "gluing simplexes and counterexample1 graphs gives CPR graphs for S_n", detail::theorem1_grid},
      {"graph-x-refutation", "graph (X) represents S_{2r-1} but fails the intersection property", detail::graph_x_refutation},
      {"gluing-nonexamples", "the two gluing non-examples fail the intersection property", detail::gluing_nonexamples},
      {"family-orders", "orders and verdicts of every family", detail::family_orders},
      {"speccase-generators", "speccase(3) generators match the explicit set", detail::speccase_generators},
      {"oracle-equivalence", "recursive and full intersection checks agree", detail::oracle_equivalence},
      {"duality", "duals, Schlafli types and the graph (X) identity", detail::duality},
      {"splits-primitivity", "perfect splits, primitivity and the non-perfect split of graph (X)", detail::splits_primitivity},
      {"engine-self-checks", "stabilizer chains against breadth-first enumeration", [] { return detail::engine_self_checks(); }},
  };
  return all;
}

}  // namespace cprforge::reproduction
