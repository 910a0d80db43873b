#pragma once

// Scenario documents (JSON). Two input paths:
//   - "arguments" + "attacks": the plan-level framework, goal attacks derived;
//   - "goal_attacks": goal conflicts declared directly.
//
//   {
//     "goals":     [{"id": "g1", "predicate": "clean(5,5)", "preference": 0.8}, ...],
//     "arguments": [{"id": "A", "claim": "g1", "sub_args": ["E"]}, ...],
//     "attacks":   [{"from": "A", "to": "B", "kinds": ["t", "r"]}, ...],
//     "main_goals": ["g1", "g5"],
//     "config":    {"utility": "sum_all", "semantics": "grounded", "tie_break": "lexicographic"}
//   }

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "goalxai/af_core.hpp"
#include "goalxai/goal_graph.hpp"
#include "goalxai/instrumental.hpp"
#include "goalxai/selection.hpp"

namespace goalxai {

/// Malformed document; `location` is "line:col" for syntax errors or a JSON
/// pointer for schema errors.
class ScenarioError : public InputError {
 public:
  ScenarioError(std::string location, const std::string& message)
      : InputError(location + ": " + message), location_(std::move(location)) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

struct ScenarioConfig {
  std::optional<UtilityKind> utility;
  std::optional<af::Semantics> semantics;
  std::optional<std::string> tie_break;
};

/// Resolved configuration after applying flags over file config over defaults.
struct Config {
  UtilityKind utility = UtilityKind::sum_all;
  af::Semantics semantics = af::Semantics::grounded;
  std::string tie_break = "lexicographic";

  static Config resolve(const ScenarioConfig& file, const ScenarioConfig& flags) {
    Config c;
    if (file.utility) c.utility = *file.utility;
    if (file.semantics) c.semantics = *file.semantics;
    if (file.tie_break) c.tie_break = *file.tie_break;
    if (flags.utility) c.utility = *flags.utility;
    if (flags.semantics) c.semantics = *flags.semantics;
    if (flags.tie_break) c.tie_break = *flags.tie_break;
    if (c.tie_break != "lexicographic") throw InputError("unsupported tie_break '" + c.tie_break + "'");
    return c;
  }
};

struct Scenario {
  std::vector<GoalDecl> goals;
  std::optional<GeneralAF> general;                              // plan-level path
  std::optional<std::map<IdPair, KindSet, PairLess>> goal_attacks;  // direct path
  std::optional<IdSet> main_goals;
  ScenarioConfig config;

  /// Main goals as declared, else goals that are no sub-argument's claim.
  IdSet effective_main_goals() const {
    if (main_goals) return *main_goals;
    if (general) return goalxai::main_goals(*general);
    IdSet all;
    for (const auto& g : goals) all.insert(g.id);
    return all;
  }
};

namespace detail {

using nlohmann::json;

inline std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

inline const json& member(const json& obj, const char* key, const std::string& at) {
  if (!obj.is_object()) throw ScenarioError(at, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ScenarioError(at, std::string("missing key '") + key + "'");
  return *it;
}

inline std::string string_at(const json& v, const std::string& at) {
  if (!v.is_string()) throw ScenarioError(at, "expected a string");
  return v.get<std::string>();
}

inline const json& array_at(const json& v, const std::string& at) {
  if (!v.is_array()) throw ScenarioError(at, "expected an array");
  return v;
}

inline Rational rational_at(const json& v, const std::string& at) {
  try {
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_number_float()) return rational_from_double(v.get<double>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
  } catch (const InputError& e) {
    throw ScenarioError(at, e.what());
  }
  throw ScenarioError(at, "expected a number or a fraction string");
}

inline KindSet kinds_at(const json& v, const std::string& at) {
  KindSet out;
  const auto& arr = array_at(v, at);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto loc = at + "/" + std::to_string(i);
    try {
      out.insert(KindSet::parse_letter(string_at(arr[i], loc)).members().front());
    } catch (const ScenarioError&) {
      throw;
    } catch (const InputError& e) {
      throw ScenarioError(loc, e.what());
    }
  }
  return out;
}

inline std::map<IdPair, KindSet, PairLess> attacks_at(const json& v, const std::string& at) {
  std::map<IdPair, KindSet, PairLess> out;
  const auto& arr = array_at(v, at);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto loc = at + "/" + std::to_string(i);
    const auto from = string_at(member(arr[i], "from", loc), loc + "/from");
    const auto to = string_at(member(arr[i], "to", loc), loc + "/to");
    // repeated pairs merge, so R_t, R_r and R_s may be listed separately
    out[{from, to}] |= kinds_at(member(arr[i], "kinds", loc), loc + "/kinds");
  }
  return out;
}

}  // namespace detail

inline Scenario parse_scenario(std::string_view text) {
  using detail::json;
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ScenarioError(detail::line_col(text, e.byte == 0 ? 0 : e.byte - 1), "malformed JSON");
  }
  if (!doc.is_object()) throw ScenarioError("/", "expected an object at top level");

  Scenario sc;
  const auto& goals = detail::array_at(detail::member(doc, "goals", "/"), "/goals");
  for (std::size_t i = 0; i < goals.size(); ++i) {
    const auto loc = "/goals/" + std::to_string(i);
    GoalDecl g;
    g.id = detail::string_at(detail::member(goals[i], "id", loc), loc + "/id");
    g.predicate = goals[i].contains("predicate") ? detail::string_at(goals[i]["predicate"], loc + "/predicate") : g.id;
    g.preference = detail::rational_at(detail::member(goals[i], "preference", loc), loc + "/preference");
    sc.goals.push_back(std::move(g));
  }

  const bool has_attacks = doc.contains("attacks");
  const bool has_goal_attacks = doc.contains("goal_attacks");
  if (has_attacks == has_goal_attacks)
    throw ScenarioError("/", "exactly one of 'attacks' or 'goal_attacks' must be present");

  if (has_attacks) {
    GeneralAF gaf;
    gaf.goals = sc.goals;
    if (doc.contains("arguments")) {
      const auto& args = detail::array_at(doc["arguments"], "/arguments");
      for (std::size_t i = 0; i < args.size(); ++i) {
        const auto loc = "/arguments/" + std::to_string(i);
        InstrumentalArgDecl a;
        a.id = detail::string_at(detail::member(args[i], "id", loc), loc + "/id");
        a.claim = detail::string_at(detail::member(args[i], "claim", loc), loc + "/claim");
        if (args[i].contains("sub_args")) {
          const auto& subs = detail::array_at(args[i]["sub_args"], loc + "/sub_args");
          for (std::size_t k = 0; k < subs.size(); ++k)
            a.sub_args.push_back(detail::string_at(subs[k], loc + "/sub_args/" + std::to_string(k)));
        }
        gaf.args.push_back(std::move(a));
      }
    }
    gaf.attacks = detail::attacks_at(doc["attacks"], "/attacks");
    sc.general = std::move(gaf);
  } else {
    sc.goal_attacks = detail::attacks_at(doc["goal_attacks"], "/goal_attacks");
  }

  if (doc.contains("main_goals")) {
    IdSet mains;
    const auto& arr = detail::array_at(doc["main_goals"], "/main_goals");
    for (std::size_t i = 0; i < arr.size(); ++i)
      mains.insert(detail::string_at(arr[i], "/main_goals/" + std::to_string(i)));
    sc.main_goals = std::move(mains);
  }

  if (doc.contains("config")) {
    const auto& cfg = doc["config"];
    if (!cfg.is_object()) throw ScenarioError("/config", "expected an object");
    try {
      if (cfg.contains("utility")) sc.config.utility = parse_utility(detail::string_at(cfg["utility"], "/config/utility"));
      if (cfg.contains("semantics"))
        sc.config.semantics = af::parse_semantics(detail::string_at(cfg["semantics"], "/config/semantics"));
      if (cfg.contains("tie_break")) sc.config.tie_break = detail::string_at(cfg["tie_break"], "/config/tie_break");
    } catch (const ScenarioError&) {
      throw;
    } catch (const InputError& e) {
      throw ScenarioError("/config", e.what());
    }
  }
  return sc;
}

inline Scenario load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

/// Structural checks for either path. Unknown main goals and bad goal attacks are errors.
inline ValidationReport validate(const Scenario& sc) {
  ValidationReport report;
  if (sc.general) {
    report = validate(*sc.general);
  } else {
    GeneralAF goals_only;
    goals_only.goals = sc.goals;
    report = validate(goals_only);
    std::set<Id> ids;
    for (const auto& g : sc.goals) ids.insert(g.id);
    for (const auto& [pair, kinds] : *sc.goal_attacks) {
      const std::string loc = "goal_attacks(" + pair.first + "," + pair.second + ")";
      for (const auto* end : {&pair.first, &pair.second}) {
        if (ids.count(*end) == 0)
          report.diagnostics.push_back({Diagnostic::Severity::error, loc, "attack references undeclared goal '" + *end + "'"});
      }
      if (pair.first == pair.second)
        report.diagnostics.push_back({Diagnostic::Severity::error, loc, "self-attack on '" + pair.first + "'"});
      if (kinds.empty())
        report.diagnostics.push_back({Diagnostic::Severity::error, loc + ".kinds", "empty incompatibility label set"});
    }
  }
  if (sc.main_goals) {
    for (const auto& m : *sc.main_goals) {
      const bool known = std::any_of(sc.goals.begin(), sc.goals.end(), [&](const GoalDecl& g) { return g.id == m; });
      if (!known)
        report.diagnostics.push_back({Diagnostic::Severity::error, "main_goals", "undeclared goal '" + m + "'"});
    }
  }
  return report;
}

/// Raw goal framework for either input path.
inline GoalAF raw_goal_af(const Scenario& sc) {
  auto report = validate(sc);
  if (!report.ok()) throw ValidationError(std::move(report));
  if (sc.general) return derive_goal_af(*sc.general);
  return goal_af_from_conflicts(sc.goals, *sc.goal_attacks);
}

}  // namespace goalxai
