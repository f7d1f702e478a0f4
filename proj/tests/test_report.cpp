#include <gtest/gtest.h>

#include "cprforge/report.hpp"

using namespace cprforge;

namespace {

InputDescriptor family_input(const std::string& name, std::map<std::string, int> params) {
  InputDescriptor in;
  in.family = FamilySpec{name, std::move(params)};
  return in;
}

Report check_family(const std::string& name, std::map<std::string, int> params, CheckOptions options = {}) {
  auto in = family_input(name, params);
  return check_graph(make_family(*in.family), in, options);
}

}  // namespace

TEST(Report, CGroup) {
  auto rep = check_family("simplex", {{"r", 4}});
  EXPECT_EQ(rep.exit_code, exit_c_group);
  EXPECT_TRUE(rep.string_c_group);
  EXPECT_EQ(rep.group_order, 120u);
  EXPECT_EQ(rep.schlafli, (std::vector<std::uint64_t>{3, 3, 3}));
  EXPECT_FALSE(rep.error);
  for (const char* phase : {"group", "string_property", "intersection", "structure"}) EXPECT_TRUE(rep.timings_ms.count(phase)) << phase;

  auto j = to_json(rep);
  EXPECT_EQ(j["schema"], kReportSchema);
  EXPECT_EQ(j["input"]["kind"], "family");
  EXPECT_EQ(j["input"]["params"]["r"], 4);
  EXPECT_EQ(j["label_window"]["rank"], 4);
  EXPECT_EQ(j["certificate"]["status"], "pass");
  EXPECT_TRUE(j["certificate"]["witness"].is_null());
  EXPECT_EQ(j["structure"]["named_match"]["text"], "S_5");
  EXPECT_TRUE(j["error"].is_null());
  EXPECT_FALSE(to_json(rep, false).contains("timings_ms"));
}

TEST(Report, IntersectionFailure) {
  auto rep = check_family("graph_x", {{"r", 5}, {"h", 1}});
  EXPECT_EQ(rep.exit_code, exit_ip_fails);
  auto j = to_json(rep);
  EXPECT_EQ(j["input"]["family"], "graph-x");
  EXPECT_EQ(j["certificate"]["status"], "fail");
  EXPECT_EQ(j["certificate"]["I"], (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(j["certificate"]["J"], (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(j["certificate"]["witness"], "(1,2)(3,5)(6,8)(7,9)");
}

TEST(Report, StringPropertyFailure) {
  LabeledGraph g(3, {{0, 1, 2}, {1, 2, 3}, {2, 1, 3}});
  InputDescriptor in;
  in.path = "triangle.prg";
  auto rep = check_graph(g, in);
  EXPECT_EQ(rep.exit_code, exit_sp_fails);
  EXPECT_FALSE(rep.certificate);
  auto j = to_json(rep);
  EXPECT_EQ(j["input"]["path"], "triangle.prg");
  EXPECT_EQ(j["string_property"]["failing_pair"], (std::vector<int>{0, 2}));
  EXPECT_TRUE(j["certificate"].is_null());
}

TEST(Report, CapExceeded) {
  CheckOptions o;
  o.ip.cap = 10;
  auto rep = check_family("simplex", {{"r", 4}}, o);
  EXPECT_EQ(rep.exit_code, exit_error);
  ASSERT_TRUE(rep.error);
  EXPECT_EQ(rep.error->type, "IntersectionTooLarge");
  EXPECT_FALSE(rep.error->left.empty());
  auto j = to_json(rep);
  EXPECT_EQ(j["error"]["I"], rep.error->left);
  EXPECT_EQ(j["error"]["J"], rep.error->right);
}

TEST(Report, MissingLabelIsAValidationError) {
  InputDescriptor in;
  in.path = "gap.prg";
  auto rep = check_graph(LabeledGraph(4, {{0, 1, 2}, {2, 3, 4}}), in);
  EXPECT_EQ(rep.exit_code, exit_error);
  ASSERT_TRUE(rep.error);
  EXPECT_EQ(rep.error->type, "ValidationError");
  EXPECT_FALSE(to_json(rep)["error"].contains("I"));
}

TEST(Report, FullModeAndNoStructure) {
  CheckOptions o;
  o.mode = IpMode::full;
  o.structure = false;
  auto rep = check_family("nonexample-sevenvertex", {}, o);
  EXPECT_EQ(rep.exit_code, exit_ip_fails);
  EXPECT_FALSE(rep.structure);
  auto j = to_json(rep);
  EXPECT_EQ(j["mode"], "full");
  EXPECT_TRUE(j["structure"].is_null());
}
