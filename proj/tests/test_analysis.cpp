#include <gtest/gtest.h>

#include "cprforge/analysis.hpp"
#include "cprforge/constructions.hpp"

using namespace cprforge;

TEST(Fracture, SimplexIsItsOwnFractureGraph) {
  for (int r = 1; r <= 5; ++r) {
    auto f = fracture_graph(simplex(r));
    ASSERT_TRUE(f.exists);
    EXPECT_EQ(f.edges, simplex(r).edges());
  }
}

TEST(Fracture, WreathsimpZeroEdge) {
  auto f = fracture_graph(family_wreathsimp(3));
  ASSERT_TRUE(f.exists);
  EXPECT_EQ(f.edges.front(), (Edge{0, 3, 4}));
  EXPECT_EQ(f.edges.size(), 3u);
}

TEST(Fracture, MissingWhenALabelIsRedundant) {
  // Removing label 2 leaves 4-5 joined by the 0-edge.
  auto f = fracture_graph(nonexample_doubleedge());
  EXPECT_FALSE(f.exists);
  EXPECT_EQ(f.failing_labels, (std::vector<int>{2}));
  EXPECT_TRUE(f.edges.empty());
  EXPECT_THROW(find_splits(nonexample_doubleedge()), NoFractureGraph);
  EXPECT_FALSE(fracture_graph(LabeledGraph(3, {})).exists);
}

TEST(Fracture, EdgesAreOnePerLabel) {
  for (const auto& g : {family_graph_x(6, 2), family_lemme1(4), family_speccase(4), family_result1(2, 3)}) {
    auto f = fracture_graph(g);
    ASSERT_TRUE(f.exists);
    std::vector<int> labels;
    for (const auto& e : f.edges) labels.push_back(e.label);
    EXPECT_EQ(labels, g.labels());
  }
}

TEST(Splits, SimplexSplitsEverywhere) {
  auto splits = find_splits(simplex(4));
  ASSERT_EQ(splits.size(), 4u);
  for (const auto& s : splits) {
    EXPECT_TRUE(s.perfect);
    EXPECT_EQ(s.orientation, SplitOrientation::forward);
    EXPECT_EQ(s.side_a.size() + s.side_b.size(), 5u);
  }
  EXPECT_EQ(splits[2].edge, (Edge{2, 3, 4}));
  EXPECT_EQ(splits[2].j_a, (std::vector<int>{0, 1}));
  EXPECT_EQ(splits[2].j_b, (std::vector<int>{3}));
  EXPECT_TRUE(is_perfect_split(simplex(4), 2, Edge{2, 4, 3}));
  EXPECT_FALSE(is_perfect_split(simplex(4), 2, Edge{2, 1, 2}));
}

TEST(Splits, ReversedOrientation) {
  auto s = split_at(dual(simplex(3)), 1);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->orientation, SplitOrientation::reversed);
  EXPECT_EQ(to_string(s->orientation), "reversed");
}

TEST(Splits, GraphXHasImperfectSplits) {
  auto splits = find_splits(family_graph_x(5, 1));
  std::vector<int> labels;
  for (const auto& s : splits) {
    labels.push_back(s.label);
    EXPECT_FALSE(s.perfect);
  }
  EXPECT_EQ(labels, (std::vector<int>{0, 3}));
  EXPECT_EQ(splits[0].edge, (Edge{0, 2, 3}));
  EXPECT_EQ(splits[1].edge, (Edge{3, 5, 6}));
}

TEST(Splits, IntransitiveGraphSplitsWithinOneOrbit) {
  auto s = split_at(family_result1(1, 3), 2);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->side_a, (std::vector<Point>{3, 4, 5}));
  EXPECT_EQ(s->side_b, (std::vector<Point>{6}));
  EXPECT_TRUE(s->perfect);
  // label 0 has two edges and each separates its own orbit, so there is no 0-split
  EXPECT_FALSE(split_at(family_result1(1, 3), 0).has_value());
}

TEST(Splits, PendantIsAPerfectSplit) {
  auto s = split_at(nonexample_doubleedge(), -1);
  ASSERT_TRUE(s.has_value());
  EXPECT_TRUE(s->perfect);
  EXPECT_EQ(s->side_a, (std::vector<Point>{1}));
  EXPECT_TRUE(s->j_a.empty());
  EXPECT_EQ(s->j_b, (std::vector<int>{0, 1, 2}));
}

TEST(SingleEdgeSplit, Labels) {
  EXPECT_EQ(single_edge_split_labels(simplex(3)), (std::vector<int>{0, 1, 2}));
  // label 1 splits 1-2-3 from 4-5, but label 0 acts on both sides
  EXPECT_EQ(single_edge_split_labels(nonexample_doubleedge()), (std::vector<int>{-1}));
  EXPECT_TRUE(single_edge_split_labels(family_graph_x(5, 1)).empty());
  // label 1 has two edges; for 0 and 2 the extra 1-edge sits on one side
  EXPECT_EQ(single_edge_split_labels(nonexample_simplex_union()), (std::vector<int>{0, 2}));
}

TEST(Fingerprint, NamedGroups) {
  auto s = fingerprint(simplex(4));
  EXPECT_TRUE(s.transitive);
  EXPECT_EQ(s.primitive, std::optional<bool>(true));
  ASSERT_TRUE(s.named_match);
  EXPECT_EQ(s.named_match->text(), "S_5");

  auto l = fingerprint(family_lemme1(3));
  ASSERT_TRUE(l.named_match);
  EXPECT_EQ(l.named_match->kind, NamedKind::product_of_symmetric);
  EXPECT_EQ(l.named_match->text(), "S_5 x S_3");
  EXPECT_TRUE(l.factorization_check);

  auto w = fingerprint(family_wreathsimp(3));
  ASSERT_TRUE(w.named_match);
  EXPECT_EQ(w.named_match->text(), "C2 wr S_3");
  EXPECT_EQ(w.primitive, std::optional<bool>(false));

  auto sc = fingerprint(family_speccase(3));
  ASSERT_TRUE(sc.named_match);
  EXPECT_EQ(sc.named_match->text(), "S_3 wr C2");
  EXPECT_EQ(sc.block_shapes, (std::vector<std::pair<std::size_t, std::size_t>>{{2, 3}}));

  EXPECT_EQ(fingerprint(family_counterexample1(3, 1)).named_match->text(), "S_5");
}

TEST(Fingerprint, DiagonalActionIsNotAProduct) {
  auto m = fingerprint(multisimplex(2, 2));
  EXPECT_FALSE(m.transitive);
  EXPECT_EQ(m.orbit_sizes, (std::vector<std::size_t>{3, 3}));
  EXPECT_EQ(m.orbit_orders, (std::vector<std::uint64_t>{6, 6}));
  EXPECT_FALSE(m.factorization_check);
  EXPECT_FALSE(m.named_match.has_value());
  EXPECT_FALSE(m.primitive.has_value());
  EXPECT_EQ(m.orbit_primitive, (std::vector<bool>{true, true}));
}

TEST(Fingerprint, ExtraEdgeGivesADirectProduct) {
  // No sign map on S_4 sends rho_1 alone to the swap, so the swap splits off.
  for (const auto& g : {nonexample_simplex_union(), union_disjoint(simplex(3), multisimplex(1, 1))}) {
    auto fp = fingerprint(g);
    EXPECT_EQ(fp.group_order, 48u);
    EXPECT_TRUE(fp.factorization_check);
    ASSERT_TRUE(fp.named_match);
    EXPECT_EQ(fp.named_match->text(), "S_4 x S_2");
  }
}

TEST(Fingerprint, SymmetricTimesH) {
  // three orbits: S_4 on 1..4, and two 2-point orbits moved together by label 0
  auto g = union_disjoint(shift_labels(simplex(3), 1), multisimplex(1, 2));
  auto fp = fingerprint(g);
  ASSERT_TRUE(fp.named_match);
  EXPECT_EQ(fp.named_match->kind, NamedKind::s_times_h);
  EXPECT_EQ(fp.named_match->params, (std::vector<std::uint64_t>{4, 2}));
  EXPECT_EQ(fp.named_match->text(), "S_4 x H (|H| = 2)");
}

TEST(GraphXWitness, Confirmed) {
  auto w = verify_graph_x_witness(5, 1);
  EXPECT_TRUE(w.confirmed());
  EXPECT_EQ(w.sigma, parse_cycles("(6,8)(7,9)", 9));
  EXPECT_EQ(w.low_order, 240u);
  EXPECT_EQ(w.high_order, 480u);
  EXPECT_EQ(w.middle_order, 12u);
  EXPECT_TRUE(w.middle_checked_by_enumeration);
  EXPECT_TRUE(w.middle_enumeration_agrees);
  for (auto [r, h] : {std::pair{6, 1}, {6, 2}, {7, 3}}) EXPECT_TRUE(verify_graph_x_witness(r, h).confirmed()) << r << " " << h;
}
