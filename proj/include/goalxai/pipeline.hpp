#pragma once

// End-to-end run over a scenario, plus structured (JSON) views of each stage.

#include <chrono>
#include <string>

#include <json.hpp>

#include "goalxai/explain.hpp"
#include "goalxai/render.hpp"
#include "goalxai/scenario.hpp"

namespace goalxai {

struct StageTimings {
  std::chrono::nanoseconds goal_graph{0};
  std::chrono::nanoseconds selection{0};
  std::chrono::nanoseconds explanation{0};
};

struct RunReport {
  Config config;
  IdSet main_goals;
  GoalAF raw;
  GoalAF filtered;
  Explainer explainer;
  std::map<Id, af::Extensions, NaturalLess> extensions;  // per goal, under config.semantics
  StageTimings timings;

  const SelectionResult& selection() const { return explainer.selection(); }
};

inline RunReport run(const Scenario& sc, const Config& config) {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  GoalAF raw = raw_goal_af(sc);
  GoalAF filtered = apply_successful_attacks(raw);
  const auto t1 = clock::now();
  const IdSet mains = sc.effective_main_goals();
  SelectionResult selection = select(filtered, {config.utility, mains});
  const auto t2 = clock::now();
  Explainer explainer(filtered, std::move(selection));
  std::map<Id, af::Extensions, NaturalLess> extensions;
  for (const auto& [g, xaf] : explainer.xafs()) extensions.emplace(g, af::extensions(xaf.to_abstract_af(), config.semantics));
  const auto t3 = clock::now();

  return RunReport{config,
                   mains,
                   std::move(raw),
                   std::move(filtered),
                   std::move(explainer),
                   std::move(extensions),
                   {t1 - t0, t2 - t1, t3 - t2}};
}

/// Accepts a goal id or its predicate.
inline Id resolve_goal(const GoalAF& goals, const std::string& name) {
  if (goals.goals().count(name) != 0) return name;
  for (const auto& [id, g] : goals.goals()) {
    if (g.predicate == name) return id;
  }
  throw InputError("unknown goal '" + name + "'");
}

namespace json_out {

using ordered_json = nlohmann::ordered_json;

inline ordered_json ids(const IdSet& s) {
  ordered_json out = ordered_json::array();
  for (const auto& id : s) out.push_back(id);
  return out;
}

inline ordered_json kinds(KindSet k) {
  ordered_json out = ordered_json::array();
  for (auto m : k.members()) out.push_back(std::string(1, letter(m)));
  return out;
}

/// Same shape as the scenario's "goals" and "goal_attacks" keys.
inline ordered_json goal_af(const GoalAF& g) {
  ordered_json out;
  out["stage"] = g.stage() == GoalAF::Stage::raw ? "raw" : "successful";
  out["goals"] = ordered_json::array();
  for (const auto& [id, decl] : g.goals())
    out["goals"].push_back({{"id", id}, {"predicate", decl.predicate}, {"preference", to_string(decl.preference)}});
  out["goal_attacks"] = ordered_json::array();
  for (const auto& [pair, k] : g.incomp())
    out["goal_attacks"].push_back({{"from", pair.first}, {"to", pair.second}, {"kinds", kinds(k)}});
  return out;
}

inline ordered_json selection(const SelectionResult& s, bool all_maxima = true) {
  ordered_json out;
  out["pursued"] = ids(s.pursued);
  out["utility"] = to_string(s.winning_utility);
  out["cf_count"] = s.cf_count;
  out["tied"] = s.tied();
  if (all_maxima) {
    out["all_max_extensions"] = ordered_json::array();
    for (const auto& e : s.all_max_extensions) out["all_max_extensions"].push_back(ids(e));
  }
  return out;
}

inline ordered_json belief(const Belief& b) {
  ordered_json out;
  out["id"] = b.id;
  out["text"] = b.text();
  out["provenance"] = b.provenance;
  return out;
}

inline ordered_json beliefs(const std::vector<Belief>& bs) {
  ordered_json out = ordered_json::array();
  for (const auto& b : bs) out.push_back(belief(b));
  return out;
}

inline ordered_json rule_instances(const Explainer& ex) {
  std::map<Id, const Belief*> by_id;
  for (const auto& b : ex.beliefs()) by_id.emplace(b.id, &b);
  ordered_json out = ordered_json::array();
  for (const auto& r : ex.rule_instances()) {
    out.push_back({{"id", r.id}, {"schema", to_string(r.schema)}, {"body", r.body}, {"head", r.head.text()},
                   {"text", r.text(by_id)}});
  }
  return out;
}

inline ordered_json argument(const ExplanatoryArgument& a) {
  return {{"id", a.id}, {"support", a.support()}, {"claim", a.claim.text()}};
}

inline ordered_json xaf(const ExplanatoryAF& x) {
  ordered_json out;
  out["goal"] = x.goal;
  out["arguments"] = ordered_json::array();
  for (const auto& a : x.arguments) out["arguments"].push_back(argument(a));
  out["defeats"] = ordered_json::array();
  for (const auto& [from, to] : x.defeats) out["defeats"].push_back({from, to});
  return out;
}

inline ordered_json explanation(const Explanation& e, const Explainer& ctx) {
  ordered_json out;
  out["query"] = std::string(to_string(e.query));
  out["goal"] = e.goal;
  out["kind"] = std::string(to_string(e.kind));
  out["xaf"] = xaf(e.xaf);
  if (e.kind == ExplanationKind::partial) {
    out["semantics"] = std::string(af::to_string(e.semantics));
    out["extensions"] = ordered_json::array();
    for (std::size_t i = 0; i < e.extensions.size(); ++i) {
      ordered_json ext;
      ext["arguments"] = ids(e.extensions[i]);
      ext["sentences"] = ordered_json::array();
      for (const auto& s : render_partial_explanation(e, ctx, i))
        ext["sentences"].push_back({{"argument", s.argument}, {"scheme", to_string(s.scheme)}, {"text", s.text}});
      out["extensions"].push_back(std::move(ext));
    }
  }
  return out;
}

/// The full run. Timings are excluded unless asked for, so output is byte-stable.
inline ordered_json report(const RunReport& r, bool with_timings = false) {
  ordered_json out;
  out["config"] = {{"utility", std::string(to_string(r.config.utility))},
                   {"semantics", std::string(af::to_string(r.config.semantics))},
                   {"tie_break", r.config.tie_break}};
  out["main_goals"] = ids(r.main_goals);
  out["goal_af_raw"] = goal_af(r.raw);
  out["goal_af"] = goal_af(r.filtered);
  out["selection"] = selection(r.selection());
  out["beliefs"] = beliefs(r.explainer.beliefs());
  out["rule_instances"] = rule_instances(r.explainer);
  out["arguments"] = ordered_json::array();
  for (const auto& a : r.explainer.arguments()) out["arguments"].push_back(argument(a));
  out["xafs"] = ordered_json::array();
  for (const auto& [g, x] : r.explainer.xafs()) {
    auto entry = xaf(x);
    entry["status"] = r.explainer.is_pursued(g) ? "pursued" : "not_pursued";
    entry["extensions"] = ordered_json::array();
    for (const auto& e : r.extensions.at(g)) entry["extensions"].push_back(ids(e));
    out["xafs"].push_back(std::move(entry));
  }
  if (with_timings) {
    out["timings_ns"] = {{"goal_graph", r.timings.goal_graph.count()},
                         {"selection", r.timings.selection.count()},
                         {"explanation", r.timings.explanation.count()}};
  }
  return out;
}

}  // namespace json_out

}  // namespace goalxai
