#pragma once

#include <string>
#include <vector>

#include "goalxai/af_core.hpp"
#include "goalxai/goal_graph.hpp"

namespace goalxai {

enum class UtilityKind { sum_all, sum_main };

inline std::string_view to_string(UtilityKind k) { return k == UtilityKind::sum_all ? "sum_all" : "sum_main"; }

inline UtilityKind parse_utility(std::string_view name) {
  if (name == "sum_all" || name == "sum-all") return UtilityKind::sum_all;
  if (name == "sum_main" || name == "sum-main") return UtilityKind::sum_main;
  throw InputError("unknown utility '" + std::string(name) + "' (expected sum_all or sum_main)");
}

struct UtilitySpec {
  UtilityKind kind = UtilityKind::sum_all;
  IdSet main_goals;  // only read for sum_main
};

inline Rational utility_sum_all(const IdSet& extension, const GoalAF& goals) {
  Rational total{0};
  for (const auto& g : extension) total += goals.pref(g);
  return total;
}

inline Rational utility_sum_main(const IdSet& extension, const GoalAF& goals, const IdSet& main_goals) {
  Rational total{0};
  for (const auto& g : extension) {
    if (main_goals.count(g) != 0) total += goals.pref(g);
  }
  return total;
}

inline Rational utility(const IdSet& extension, const GoalAF& goals, const UtilitySpec& spec) {
  return spec.kind == UtilityKind::sum_all ? utility_sum_all(extension, goals)
                                           : utility_sum_main(extension, goals, spec.main_goals);
}

struct SelectionResult {
  IdSet pursued;                           // G'
  Rational winning_utility{0};
  std::vector<IdSet> all_max_extensions;   // sorted by IdSetLess
  std::size_t cf_count = 0;

  bool tied() const { return all_max_extensions.size() > 1; }
};

/// MAX_UTIL over the conflict-free goal sets. Ties resolve to the
/// lexicographically least extension; every maximum stays in all_max_extensions.
inline SelectionResult select(const GoalAF& filtered, const UtilitySpec& spec = {}) {
  if (filtered.stage() != GoalAF::Stage::successful)
    throw InputError("selection needs the preference-filtered goal framework");

  SelectionResult result;
  const auto candidates = af::conflict_free_sets(filtered.to_abstract_af());
  result.cf_count = candidates.size();
  bool first = true;
  for (const auto& s : candidates) {
    const Rational u = utility(s, filtered, spec);
    if (first || u > result.winning_utility) {
      result.winning_utility = u;
      result.all_max_extensions.clear();
      first = false;
    }
    if (u == result.winning_utility) result.all_max_extensions.push_back(s);
  }
  // candidates arrive sorted, so the first maximum is the least one
  result.pursued = result.all_max_extensions.front();
  return result;
}

}  // namespace goalxai
