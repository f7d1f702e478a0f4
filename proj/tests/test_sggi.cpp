#include <gtest/gtest.h>

#include "cprforge/brute_force.hpp"
#include "cprforge/constructions.hpp"
#include "cprforge/sggi.hpp"

using namespace cprforge;

namespace {

bool cpr(const LabeledGraph& g, IpMode mode = IpMode::recursive) {
  return is_string_c_group(Sggi::from_graph(g), mode).is_string_c_group();
}

// The three membership facts every failing certificate must satisfy, rechecked from scratch.
void expect_sound(const Sggi& s, const IpCertificate& c) {
  ASSERT_FALSE(c.pass);
  ASSERT_TRUE(c.witness.has_value());
  std::vector<int> both;
  std::set_intersection(c.left.begin(), c.left.end(), c.right.begin(), c.right.end(), std::back_inserter(both));
  auto gens = [&](const std::vector<int>& labels) {
    std::vector<Permutation> out;
    for (int l : labels) out.push_back(s.rho(l));
    return PermGroup(s.degree(), out);
  };
  EXPECT_TRUE(gens(c.left).contains(*c.witness));
  EXPECT_TRUE(gens(c.right).contains(*c.witness));
  EXPECT_FALSE(gens(both).contains(*c.witness));
  EXPECT_EQ(gens(both).order(), c.expected_order);
  EXPECT_GT(c.actual_order, c.expected_order);
}

}  // namespace

TEST(Sggi, FromGraph) {
  auto s = Sggi::from_graph(simplex(3));
  EXPECT_EQ(s.rank(), 3);
  EXPECT_EQ(s.degree(), 4u);
  EXPECT_EQ(s.window(), (LabelWindow{0, 2}));

  auto glued = Sggi::from_graph(glue_theorem1(simplex(2), simplex(3)));
  EXPECT_EQ(glued.window(), (LabelWindow{-2, 2}));
}

TEST(Sggi, EdgelessLabelInWindowIsAnError) {
  auto g = LabeledGraph(4, {{0, 1, 2}, {2, 3, 4}});
  EXPECT_THROW(Sggi::from_graph(g), IdentityGenerator);
  EXPECT_NO_THROW(Sggi::from_graph(g, std::nullopt, true));
  EXPECT_THROW(Sggi::from_graph(simplex(2), LabelWindow{0, 2}), IdentityGenerator);
  EXPECT_THROW(Sggi::from_graph(simplex(2), LabelWindow{1, 2}), LabelOutsideWindow);
}

TEST(Sggi, RejectsNonInvolutions) {
  EXPECT_THROW(Sggi(LabelWindow{0, 0}, {parse_cycles("(1,2,3)", 3)}), InvalidPermutation);
}

TEST(StringProperty, Examples) {
  EXPECT_TRUE(check_string_property(Sggi::from_graph(simplex(5))).pass);
  Sggi s(LabelWindow{0, 2}, {parse_cycles("(1,2)", 3), parse_cycles("(2,3)", 3), parse_cycles("(1,3)", 3)});
  auto v = check_string_property(s);
  EXPECT_FALSE(v.pass);
  EXPECT_EQ(v.label_i, 0);
  EXPECT_EQ(v.label_j, 2);
}

TEST(StringProperty, AllFamiliesPass) {
  for (const auto& g : {family_wreathsimp(4), family_lemme1(4), family_graph_x(6, 2), family_speccase(4),
                        family_workswithsimplices(3, 5), family_counterexample1(6, 3), family_result1(2, 4)})
    EXPECT_TRUE(check_string_property(Sggi::from_graph(g)).pass);
}

TEST(Schlafli, Types) {
  EXPECT_EQ(schlafli_type(Sggi::from_graph(simplex(3))), (std::vector<std::uint64_t>{3, 3}));
  Sggi s(LabelWindow{0, 1}, {parse_cycles("(1,2)", 3), parse_cycles("(2,3)", 3)});
  EXPECT_EQ(schlafli_type(s), (std::vector<std::uint64_t>{3}));
  EXPECT_THROW(schlafli_type(Sggi::from_graph(simplex(1))), RankTooLarge);
  auto x = Sggi::from_graph(family_graph_x(5, 1));
  auto t = schlafli_type(x), d = schlafli_type(x.dual());
  std::reverse(d.begin(), d.end());
  EXPECT_EQ(t, d);
}

TEST(Sections, CachedAndSized) {
  auto s = Sggi::from_graph(family_graph_x(5, 1));
  auto a = s.section({0, 1, 2});
  EXPECT_EQ(a, s.section({2, 1, 0}));  // same cached object
  EXPECT_EQ(s.section({0, 1, 2, 3, 4})->order(), 362880u);
  EXPECT_EQ(s.section({})->order(), 1u);
  EXPECT_THROW(s.section({5}), LabelOutsideWindow);
}

TEST(RecursiveIp, SimplexesPass) {
  for (int r = 1; r <= 6; ++r) EXPECT_TRUE(cpr(simplex(r))) << r;
}

TEST(RecursiveIp, GraphXFails) {
  auto s = Sggi::from_graph(family_graph_x(5, 1));
  auto c = check_ip_recursive(s);
  expect_sound(s, c);
  EXPECT_EQ(c.left, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(c.right, (std::vector<int>{1, 2, 3}));
  // Frozen from the first run; the chain code and the recheck above agree on its soundness.
  EXPECT_EQ(c.expected_order, 12u);
  EXPECT_EQ(c.actual_order, 24u);
  EXPECT_EQ(to_cycle_string(*c.witness), "(1,2)(3,5)(6,8)(7,9)");
}

TEST(RecursiveIp, DoubleEdgePendantFails) {
  auto s = Sggi::from_graph(nonexample_doubleedge());
  expect_sound(s, check_ip_recursive(s));
}

TEST(FullIp, Examples) {
  EXPECT_TRUE(cpr(multisimplex(3, 2), IpMode::full));
  auto s = Sggi::from_graph(nonexample_sevenvertex());
  auto c = check_ip_full(s);
  expect_sound(s, c);
  Sggi rank2(LabelWindow{0, 1}, {parse_cycles("(1,2)(3,4)", 4), parse_cycles("(2,3)", 4)});
  EXPECT_TRUE(check_ip_full(rank2).pass);
}

TEST(FullIp, RankBound) {
  IpOptions o;
  o.max_full_rank = 3;
  EXPECT_THROW(check_ip_full(Sggi::from_graph(simplex(4)), o), RankTooLarge);
}

TEST(FullIp, ThreadedRunReportsCanonicalFailure) {
  auto s = Sggi::from_graph(family_graph_x(5, 1));
  auto serial = check_ip_full(s);
  IpOptions o;
  o.jobs = 4;
  for (int rep = 0; rep < 3; ++rep) {
    auto parallel = check_ip_full(Sggi::from_graph(family_graph_x(5, 1)), o);
    EXPECT_EQ(parallel.left, serial.left);
    EXPECT_EQ(parallel.right, serial.right);
    EXPECT_EQ(parallel.witness, serial.witness);
  }
  o.any_failure = true;
  expect_sound(s, check_ip_full(s, o));
}

TEST(FullIp, AgreesWithBruteForce) {
  for (const auto& g : {simplex(3), nonexample_doubleedge(), nonexample_simplex_union(), family_wreathsimp(3), family_speccase(3),
                        family_lemme1(2)}) {
    auto s = Sggi::from_graph(g);
    EXPECT_EQ(check_ip_full(s).pass, brute::intersection_property(s.degree(), s.involutions()));
  }
}

TEST(Ip, CapPropagates) {
  auto s = Sggi::from_graph(family_graph_x(5, 1));
  try {
    check_ip_recursive(s, 10);
    FAIL();
  } catch (const IntersectionTooLarge& e) {
    EXPECT_FALSE(e.left_labels.empty());
    EXPECT_FALSE(e.right_labels.empty());
  }
}

TEST(Ip, EqualAdjacentGeneratorsFailAtRankTwo) {
  Sggi s(LabelWindow{0, 1}, {parse_cycles("(1,2)", 2), parse_cycles("(1,2)", 2)});
  auto c = check_ip_recursive(s);
  EXPECT_FALSE(c.pass);
  EXPECT_EQ(c.witness, parse_cycles("(1,2)", 2));
}

TEST(Ip, IntervalSectionsOfCGroupsAreCGroups) {
  for (const auto& g : {family_lemme1(4), family_speccase(4), family_counterexample1(5, 2)}) {
    auto s = Sggi::from_graph(g);
    ASSERT_TRUE(check_ip_recursive(s).pass);
    const int lo = s.window().lo, hi = s.window().hi;
    for (int a = lo; a <= hi; ++a)
      for (int b = a; b <= hi; ++b) {
        std::vector<Permutation> rho(s.involutions().begin() + (a - lo), s.involutions().begin() + (b - lo + 1));
        EXPECT_TRUE(check_ip_full(Sggi(LabelWindow{a, b}, rho)).pass);
      }
  }
}

TEST(Ip, DualityPreservesVerdict) {
  for (const auto& g : {family_graph_x(5, 1), family_wreathsimp(4), nonexample_sevenvertex(), family_lemme1(3)}) {
    auto s = Sggi::from_graph(g);
    EXPECT_EQ(is_string_c_group(s).is_string_c_group(), is_string_c_group(s.dual()).is_string_c_group());
  }
}

TEST(Sesqui, ExtendsDegreeAndKeepsCGroups) {
  auto base = Sggi(LabelWindow{0, 0}, {parse_cycles("(1,2)", 2)});
  auto ext = sesqui_extend(base, 0);
  EXPECT_EQ(ext.degree(), 4u);
  EXPECT_EQ(ext.rho(0), parse_cycles("(1,2)(3,4)", 4));
  EXPECT_EQ(ext.group()->order(), 2u);

  auto s = Sggi::from_graph(simplex(4));
  for (int k = 0; k <= 3; ++k) {
    auto e = sesqui_extend(s, k);
    auto order = e.group()->order();
    EXPECT_TRUE(order == s.group()->order() || order == 2 * s.group()->order());
    EXPECT_EQ(Sggi::from_graph(sesqui_extend(simplex(4), k)).involutions(), e.involutions());
  }
  EXPECT_TRUE(is_string_c_group(sesqui_extend(s, 3)).is_string_c_group());
  EXPECT_TRUE(is_string_c_group(sesqui_extend(s, 0)).is_string_c_group());
}
