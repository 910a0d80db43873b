#pragma once

// Ground beliefs describing the outcome of goal selection. They are the
// only facts the explanatory rules consume.

#include <string>
#include <tuple>
#include <vector>

#include "goalxai/goal_graph.hpp"
#include "goalxai/selection.hpp"

namespace goalxai {

enum class BeliefKind { not_incomp, pref, not_pref, eq_pref, incompat, max_util, not_max_util };

struct Belief {
  Id id;  // b1, b2, ...
  BeliefKind kind = BeliefKind::not_incomp;
  Id x;
  Id y;           // second goal for binary shapes, empty otherwise
  KindSet labels; // incompat only
  std::string provenance;

  /// Content key; ignores id and provenance.
  auto key() const { return std::tuple(kind, x, y, labels); }

  std::string text() const {
    switch (kind) {
      case BeliefKind::not_incomp: return "¬incomp(" + x + ")";
      case BeliefKind::pref: return "pref(" + x + "," + y + ")";
      case BeliefKind::not_pref: return "¬pref(" + x + "," + y + ")";
      case BeliefKind::eq_pref: return "eq_pref(" + x + "," + y + ")";
      case BeliefKind::incompat: return "incompat(" + x + "," + y + ",'" + labels.letters() + "')";
      case BeliefKind::max_util: return "max_util(" + x + ")";
      case BeliefKind::not_max_util: return "¬max_util(" + x + ")";
    }
    return {};
  }
};

/// Goals with no incident attack.
inline IdSet comps(const GoalAF& filtered) {
  IdSet out = filtered.goal_ids();
  for (const auto& [from, to] : filtered.attacks()) {
    out.erase(from);
    out.erase(to);
  }
  return out;
}

/// Attacks whose reverse is absent.
inline IdPairSet eval_pref(const GoalAF& filtered) {
  IdPairSet out;
  for (const auto& [from, to] : filtered.attacks()) {
    if (!filtered.attacks(to, from)) out.insert({from, to});
  }
  return out;
}

/// Beliefs in generation order: ¬incomp, pref/¬pref, eq_pref, incompat,
/// max_util, ¬max_util; each group by natural goal-id order.
inline std::vector<Belief> generate_beliefs(const GoalAF& filtered, const SelectionResult& selection) {
  if (filtered.stage() != GoalAF::Stage::successful)
    throw InputError("belief generation needs the preference-filtered goal framework");

  std::vector<Belief> out;
  auto add = [&](BeliefKind kind, Id x, Id y, KindSet labels, const char* provenance) {
    out.push_back({"b" + std::to_string(out.size() + 1), kind, std::move(x), std::move(y), labels, provenance});
  };

  for (const auto& g : comps(filtered)) add(BeliefKind::not_incomp, g, {}, {}, "comps");

  const auto asymmetric = eval_pref(filtered);
  for (const auto& [g, h] : asymmetric) {
    if (filtered.pref(g) > filtered.pref(h)) {
      add(BeliefKind::pref, g, h, {}, "eval_pref");
      add(BeliefKind::not_pref, h, g, {}, "eval_pref");
    }
  }
  for (const auto& pair : filtered.attacks()) {
    if (asymmetric.count(pair) == 0) add(BeliefKind::eq_pref, pair.first, pair.second, {}, "equal_pref");
  }
  for (const auto& [pair, kinds] : filtered.incomp()) add(BeliefKind::incompat, pair.first, pair.second, kinds, "attack");
  for (const auto& g : selection.pursued) add(BeliefKind::max_util, g, {}, {}, "max_util");
  for (const auto& [g, decl] : filtered.goals()) {
    if (selection.pursued.count(g) == 0) add(BeliefKind::not_max_util, g, {}, {}, "not_max_util");
  }
  return out;
}

}  // namespace goalxai
