#include <gtest/gtest.h>

#include "support/properties.hpp"

namespace {

std::string first_few(const std::vector<std::string>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size() && i < 5; ++i) out += v[i] + "\n";
  return out;
}

}  // namespace

TEST(Properties, SemanticsAgainstOracle) {
  const auto v = properties::check_semantics(300, 10, 7u);
  EXPECT_TRUE(v.empty()) << first_few(v);
}

TEST(Properties, SelectionAgainstOracle) {
  const auto v = properties::check_selection(150, 12, 11u);
  EXPECT_TRUE(v.empty()) << first_few(v);
}

TEST(Properties, PipelineCoherence) {
  const auto v = properties::check_pipeline_coherence(150, 12, 13u);
  EXPECT_TRUE(v.empty()) << first_few(v);
}

TEST(Properties, ArgmaxInvariantUnderPositiveScaling) {
  std::mt19937 rng(17u);
  for (int k = 0; k < 100; ++k) {
    auto s = properties::random_scenario(rng, 10);
    const auto base = goalxai::select(goalxai::apply_successful_attacks(goalxai::goal_af_from_conflicts(s.goals, s.conflicts)));
    for (auto& g : s.goals) g.preference /= 3;
    const auto scaled = goalxai::select(goalxai::apply_successful_attacks(goalxai::goal_af_from_conflicts(s.goals, s.conflicts)));
    EXPECT_EQ(base.all_max_extensions, scaled.all_max_extensions);
  }
}

TEST(Properties, IndependentComponentsMultiplyCounts) {
  std::mt19937 rng(19u);
  for (int k = 0; k < 50; ++k) {
    const auto left = properties::random_af(rng, 6);
    const auto right = properties::random_af(rng, 6);
    std::vector<std::string> nodes;
    std::vector<goalxai::IdPair> edges;
    for (const auto& n : left.af.nodes()) nodes.push_back("L" + n);
    for (const auto& n : right.af.nodes()) nodes.push_back("R" + n);
    for (const auto& [a, b] : left.af.attacks()) edges.push_back({"L" + a, "L" + b});
    for (const auto& [a, b] : right.af.attacks()) edges.push_back({"R" + a, "R" + b});
    const goalxai::af::AbstractAF joined(nodes, edges);
    EXPECT_EQ(goalxai::af::count_conflict_free(joined),
              goalxai::af::count_conflict_free(left.af) * goalxai::af::count_conflict_free(right.af));
  }
}
