#include <algorithm>
#include <set>

#include "regmod/catalog.hpp"
#include "regmod/runner.hpp"
#include "test_support.hpp"

using namespace regmod;
using regmod::testing::expect_code;

TEST(Catalog, ListsRequiredEntries) {
  std::set<std::string> names;
  for (const auto& e : catalog()) names.insert(e.name);
  for (const char* want : {"ex21_branch_parabola", "ex22_hyperbola", "ex31_sqrt_problem",
                           "linear_onto", "shift_halfline", "affine_inclusion",
                           "cubic_inclusion"}) {
    EXPECT_TRUE(names.count(want)) << want;
  }
  EXPECT_EQ(names.size(), catalog().size());
  EXPECT_TRUE(find_entry("ex31_sqrt_problem").parameters.count("beta"));
}

TEST(Catalog, EveryEntryHasExpectationsAndValidFixtures) {
  for (const auto& e : catalog()) {
    EXPECT_FALSE(e.expected.empty()) << e.name;
    const auto& ops = operations_for(e.kind);
    for (const auto& ex : e.expected) {
      EXPECT_NE(std::find(ops.begin(), ops.end(), ex.operation), ops.end())
          << e.name << " " << ex.operation;
      EXPECT_TRUE(ex.check) << e.name;
      if (ex.provenance == Provenance::Paper) EXPECT_FALSE(ex.citation.empty()) << e.name;
    }
    const Subject s = e.build(e.parameters);
    std::visit([](const auto& v) { EXPECT_NO_THROW(v.validate()); }, s);
  }
}

TEST(Catalog, UnknownNamesThrow) {
  expect_code(ErrorCode::UnknownEntry, [] { find_entry("no_such_entry"); });
  expect_code(ErrorCode::UnknownEntry, [] { run_entry("no_such_entry", "duality", {}); });
  expect_code(ErrorCode::UnknownOperation,
              [] { run_entry("ex22_hyperbola", "exact_threshold", {}); });
}

TEST(RunEntry, ChecksMatchingExpectations) {
  RunConfig cfg;
  const auto rep = run_entry("ex22_hyperbola", "uniform_hemiregularity", cfg);
  EXPECT_FALSE(rep.error);
  ASSERT_EQ(rep.expectations.size(), 1u);
  EXPECT_TRUE(rep.passed);
  EXPECT_LE(number_from(rep.result.at("limiting_value")), 0.05);
  EXPECT_TRUE(rep.has_estimate);
}

TEST(RunEntry, ParametersSelectExpectations) {
  RunConfig cfg;
  cfg.params = {{"beta", 2.0}};
  const auto rep = run_entry("ex31_sqrt_problem", "problem_calmness", cfg);
  ASSERT_EQ(rep.expectations.size(), 1u);
  EXPECT_TRUE(rep.passed);
  EXPECT_NEAR(number_from(rep.result.at("limiting_value")), 1.0, 0.05);
}

TEST(RunEntry, EstimatorErrorsAreEmbedded) {
  RunConfig cfg;
  cfg.params = {{"c", 0.0}};
  const auto rep = run_entry("affine_inclusion", "displacement", cfg);
  ASSERT_TRUE(rep.error);
  EXPECT_FALSE(rep.passed);
}

TEST(RunEntry, IsDeterministic) {
  RunConfig cfg;
  cfg.params = {{"kappa", 10.0}};
  const auto a = run_entry("ex21_branch_parabola", "metric_regularity_witness", cfg);
  const auto b = run_entry("ex21_branch_parabola", "metric_regularity_witness", cfg);
  EXPECT_EQ(a.to_json(false).dump(), b.to_json(false).dump());
  EXPECT_TRUE(a.passed);
}

TEST(Serialize, InfinityRoundTrips) {
  EXPECT_EQ(number(kInfinity), Json("inf"));
  EXPECT_EQ(number_from(Json("inf")), kInfinity);
  EXPECT_EQ(number_from(Json("-inf")), -kInfinity);
  EXPECT_EQ(number_from(number(0.25)), 0.25);
}
