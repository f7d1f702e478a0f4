#include <gtest/gtest.h>

#include "cprforge/constructions.hpp"
#include "cprforge/labeled_graph.hpp"
#include "cprforge/perm_group.hpp"
#include "cprforge/sggi.hpp"

using namespace cprforge;

TEST(Prg, ParseSingleEdge) {
  auto g = parse_prg("vertices 2\nedge 0 1 2\n");
  EXPECT_EQ(g.vertex_count(), 2u);
  ASSERT_EQ(g.edges().size(), 1u);
  EXPECT_EQ(g.edges()[0], (Edge{0, 1, 2}));
}

TEST(Prg, CommentsBlankLinesAndOrder) {
  auto g = parse_prg("# a comment\n\nvertices 3\n  # indented comment\nedge 1 3 2\nedge -1 1 2\n");
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{-1, 1, 2}, {1, 2, 3}}));
  EXPECT_EQ(g.labels(), (std::vector<int>{-1, 1}));
}

TEST(Prg, MatchingViolation) {
  EXPECT_THROW(parse_prg("vertices 3\nedge 0 1 2\nedge 0 2 3\n"), MatchingViolation);
}

TEST(Prg, Errors) {
  EXPECT_THROW(parse_prg("vertices 3\nedge 0 1 2\nedge 0 2 1\n"), DuplicateEdge);
  EXPECT_THROW(parse_prg("vertices 3\nedge 0 1 4\n"), VertexOutOfRange);
  EXPECT_THROW(parse_prg("edge 0 1 2\nvertices 3\n"), SyntaxError);
  EXPECT_THROW(parse_prg("vertices 3\nvertices 3\n"), SyntaxError);
  EXPECT_THROW(parse_prg("vertices 3\nedge 0 1\n"), SyntaxError);
  EXPECT_THROW(parse_prg("vertices 3\nedge zero 1 2\n"), SyntaxError);
  EXPECT_THROW(parse_prg("vertices 3\nedge 0 2 2\n"), SyntaxError);
  EXPECT_THROW(parse_prg("# nothing\n"), SyntaxError);
  EXPECT_THROW(parse_prg("vertices 3\nnode 1\n"), SyntaxError);
  try {
    parse_prg("vertices 3\nedge 0 1 2\nbogus\n");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Prg, RoundTrip) {
  for (const auto& g : {simplex(3), family_graph_x(5, 1), nonexample_doubleedge(), family_lemme1(3), LabeledGraph(4, {})}) {
    EXPECT_EQ(parse_prg(serialize_prg(g)), g);
  }
  EXPECT_EQ(serialize_prg(simplex(2)), "vertices 3\nedge 0 1 2\nedge 1 2 3\n");
}

TEST(Prg, ConstructorValidates) {
  EXPECT_THROW(LabeledGraph(3, {{0, 1, 2}, {0, 1, 3}}), MatchingViolation);
  EXPECT_THROW(LabeledGraph(3, {{0, 1, 1}}), SelfLoop);
  EXPECT_THROW(LabeledGraph(2, {{0, 1, 3}}), VertexOutOfRange);
  EXPECT_THROW(LabeledGraph(2, {{0, 2, 1}, {0, 1, 2}}), DuplicateEdge);
  EXPECT_EQ(LabeledGraph(2, {{0, 2, 1}}).edges()[0], (Edge{0, 1, 2}));
}

TEST(Prg, GeneratorOfLabel) {
  auto g = simplex(2);
  EXPECT_EQ(generator_of_label(g, 0), parse_cycles("(1,2)", 3));
  EXPECT_TRUE(generator_of_label(g, 5).is_identity());
  EXPECT_EQ(generator_of_label(family_speccase(3), 2), parse_cycles("(3,4)(1,5)(2,6)", 6));
  for (int l : family_graph_x(6, 2).labels()) {
    auto p = generator_of_label(family_graph_x(6, 2), l);
    EXPECT_TRUE(is_involution(p));
  }
}

TEST(Prg, RestrictLabels) {
  auto sub = restrict_labels(simplex(3), {0, 1});
  EXPECT_EQ(sub.vertex_count(), 4u);
  EXPECT_EQ(components(sub), (std::vector<std::vector<Point>>{{1, 2, 3}, {4}}));
  EXPECT_EQ(restrict_labels(simplex(3), {0, 1, 2}), simplex(3));

  auto x = restrict_labels(family_graph_x(5, 1), {0, 1, 2});
  EXPECT_EQ(x.labels(), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(x.edges_of(2).size(), 3u);
  EXPECT_EQ(generator_of_label(x, 2).cycles().size(), 3u);
}

TEST(Prg, Components) {
  EXPECT_EQ(components(multisimplex(2, 2)), (std::vector<std::vector<Point>>{{1, 2, 3}, {4, 5, 6}}));
  EXPECT_EQ(components(simplex(4)).size(), 1u);
  EXPECT_EQ(components(LabeledGraph(3, {})).size(), 3u);
}

TEST(Prg, ComponentsAreOrbits) {
  for (const auto& g : {multisimplex(3, 2), family_result1(2, 3), family_graph_x(5, 1), nonexample_simplex_union()}) {
    std::vector<Permutation> gens;
    for (int l : g.labels()) gens.push_back(generator_of_label(g, l));
    EXPECT_EQ(components(g), PermGroup(g.vertex_count(), gens).orbits());
  }
}

TEST(Prg, Dual) {
  auto d = dual(simplex(3));
  EXPECT_EQ(d.edges(), (std::vector<Edge>{{0, 3, 4}, {1, 2, 3}, {2, 1, 2}}));
  // Reversing the path turns the dual back into simplex(3).
  EXPECT_EQ(relabel_vertices(d, {4, 3, 2, 1}), simplex(3));
  for (const auto& g : {family_graph_x(6, 1), nonexample_sevenvertex(), family_lemme1(4)}) EXPECT_EQ(dual(dual(g)), g);

  auto r = dual(family_result1(1, 3));
  EXPECT_EQ(r.labels(), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(r.edges_of(2).size(), 2u);  // the two former 0-edges
}

TEST(Prg, NegateAndShift) {
  auto n = negate_relabel(simplex(3));
  EXPECT_EQ(n.labels(), (std::vector<int>{-3, -2, -1}));
  EXPECT_EQ(negate_relabel(negate_relabel(simplex(3))), simplex(3));
  EXPECT_EQ(shift_labels(shift_labels(simplex(3), 4), -4), simplex(3));
  for (const auto& g : {family_graph_x(5, 1), family_speccase(3)}) {
    for (const auto& t : {dual(g), negate_relabel(g), shift_labels(g, 7)}) {
      EXPECT_EQ(t.vertex_count(), g.vertex_count());
      EXPECT_EQ(t.edges().size(), g.edges().size());
    }
  }
}

TEST(Prg, UnionDisjoint) {
  EXPECT_EQ(union_disjoint(simplex(2), simplex(2)), multisimplex(2, 2));
  EXPECT_EQ(union_disjoint(simplex(3), LabeledGraph(2, {{1, 1, 2}})), nonexample_simplex_union());
  EXPECT_EQ(union_disjoint(simplex(3), LabeledGraph()), simplex(3));
}

TEST(Prg, ShapeCheck) {
  EXPECT_TRUE(check_shape_lemma(simplex(4)).pass);
  EXPECT_TRUE(check_shape_lemma(nonexample_doubleedge()).pass);
  auto bad = LabeledGraph(4, {{0, 1, 2}, {2, 2, 3}, {0, 3, 4}});
  auto v = check_shape_lemma(bad);
  EXPECT_FALSE(v.pass);
  EXPECT_EQ(v.label_i, 0);
  EXPECT_EQ(v.label_j, 2);
  EXPECT_EQ(v.component, (std::vector<Point>{1, 2, 3, 4}));
}

TEST(Prg, ShapeCheckMatchesStringProperty) {
  std::vector<LabeledGraph> graphs = {simplex(5), family_graph_x(6, 2), nonexample_doubleedge(), family_speccase(4),
                                      LabeledGraph(4, {{0, 1, 2}, {2, 2, 3}, {0, 3, 4}}),
                                      LabeledGraph(3, {{0, 1, 2}, {2, 1, 3}}),
                                      LabeledGraph(4, {{0, 1, 2}, {0, 3, 4}, {2, 1, 3}, {2, 2, 4}, {1, 2, 3}})};
  for (const auto& g : graphs)
    EXPECT_EQ(check_shape_lemma(g).pass, check_string_property(Sggi::from_graph(g, std::nullopt, true)).pass);
}
