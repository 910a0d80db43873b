#pragma once

// Command-line front end. Kept in a header so the test suite can drive it
// in-process with captured streams.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "goalxai/goalxai.hpp"

namespace goalxai::cli {

enum class Format { text, structured, dot };

inline Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "structured" || s == "json") return Format::structured;
  if (s == "dot") return Format::dot;
  throw InputError("unknown format '" + s + "'");
}

struct Options {
  std::string scenario;
  std::string goal;
  std::string format = "text";
  std::string semantics;
  std::string utility;
  std::string stage;
  bool complete = false;
  bool all = false;
  bool timings = false;
};

inline RunReport run_scenario(const Options& o) {
  const Scenario sc = load_scenario(o.scenario);
  ScenarioConfig flags;
  if (!o.utility.empty()) flags.utility = parse_utility(o.utility);
  if (!o.semantics.empty()) flags.semantics = af::parse_semantics(o.semantics);
  return run(sc, Config::resolve(sc.config, flags));
}

inline void print_set(std::ostream& out, const IdSet& s) { out << "{" << join(s) << "}"; }

inline int cmd_validate(const Options& o, std::ostream& out) {
  const Scenario sc = load_scenario(o.scenario);
  const auto report = validate(sc);
  out << report.summary();
  if (!report.ok()) return 1;
  // goal-level checks only run on structurally valid input
  auto raw = raw_goal_af(sc);
  out << "valid: " << raw.goals().size() << " goals, " << raw.conflict_pairs().size() << " conflict pairs";
  if (report.count(Diagnostic::Severity::warning) > 0) out << ", " << report.count(Diagnostic::Severity::warning) << " warnings";
  out << "\n";
  return 0;
}

inline int cmd_select(const Options& o, std::ostream& out) {
  const auto r = run_scenario(o);
  const auto& s = r.selection();
  if (parse_format(o.format) == Format::structured) {
    out << json_out::selection(s, o.all).dump(2) << "\n";
    return 0;
  }
  out << "pursued: ";
  print_set(out, s.pursued);
  out << "\nutility: " << to_string(s.winning_utility) << "\ncf_count: " << s.cf_count << "\n";
  if (s.tied()) out << "tie: " << s.all_max_extensions.size() << " extensions reach the maximum\n";
  if (o.all) {
    for (const auto& e : s.all_max_extensions) {
      out << "max_extension: ";
      print_set(out, e);
      out << "\n";
    }
  }
  return 0;
}

inline int cmd_beliefs(const Options& o, std::ostream& out) {
  const auto r = run_scenario(o);
  if (parse_format(o.format) == Format::structured) {
    out << json_out::beliefs(r.explainer.beliefs()).dump(2) << "\n";
    return 0;
  }
  for (const auto& b : r.explainer.beliefs()) out << b.id << ": " << b.text() << "  [" << b.provenance << "]\n";
  return 0;
}

inline int cmd_explain(const Options& o, QueryKind query, std::ostream& out) {
  const auto r = run_scenario(o);
  const Id goal = resolve_goal(r.filtered, o.goal);
  const ExplainOptions opts{o.complete ? ExplanationKind::complete : ExplanationKind::partial, r.config.semantics};
  const Explanation e = query == QueryKind::why ? r.explainer.why(goal, opts) : r.explainer.why_not(goal, opts);

  switch (parse_format(o.format)) {
    case Format::structured:
      out << json_out::explanation(e, r.explainer).dump(2) << "\n";
      return 0;
    case Format::dot:
      out << export_dot(e.xaf);
      return 0;
    case Format::text:
      break;
  }
  if (e.kind == ExplanationKind::complete) {
    // no sentence form for complete explanations; print the framework itself
    out << to_string(e.query) << "(" << goal << ") complete explanation\n";
    for (const auto& a : e.xaf.arguments) {
      const auto support = a.support();
      out << a.id << " = <{" << join(IdSet(support.begin(), support.end())) << "}, " << a.claim.text() << ">\n";
    }
    for (const auto& [from, to] : e.xaf.defeats) out << "defeat: " << from << " -> " << to << "\n";
    return 0;
  }
  for (std::size_t i = 0; i < e.extensions.size(); ++i) {
    if (e.extensions.size() > 1) {
      out << "extension " << (i + 1) << ": ";
      print_set(out, e.extensions[i]);
      out << "\n";
    }
    for (const auto& s : render_partial_explanation(e, r.explainer, i)) out << s.text << "\n";
  }
  if (e.extensions.empty()) out << "no " << af::to_string(e.semantics) << " extension\n";
  return 0;
}

inline int cmd_report(const Options& o, std::ostream& out) {
  out << json_out::report(run_scenario(o), o.timings).dump(2) << "\n";
  return 0;
}

inline int cmd_export(const Options& o, std::ostream& out) {
  if (o.stage == "general") {
    const Scenario sc = load_scenario(o.scenario);
    if (!sc.general) throw InputError("scenario declares goal attacks directly; no general framework to export");
    require_valid(*sc.general);
    out << export_dot(*sc.general);
    return 0;
  }
  const auto r = run_scenario(o);
  if (o.stage == "goals-raw") {
    out << export_dot(r.raw, "goals_raw");
  } else if (o.stage == "goals") {
    out << export_dot(r.filtered, "goals");
  } else if (o.stage == "xaf") {
    if (o.goal.empty()) throw InputError("--goal is required for the xaf stage");
    out << export_dot(r.explainer.xaf(resolve_goal(r.filtered, o.goal)));
  } else {
    throw InputError("unknown stage '" + o.stage + "' (expected general, goals-raw, goals or xaf)");
  }
  return 0;
}

/// Returns the process exit status: 0 success, 1 input or query error, 2 usage error.
inline int main(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Argumentation-based goal selection with WHY / WHY_NOT explanations", "goalxai"};
  app.require_subcommand(1);
  Options o;

  auto scenario_arg = [&](CLI::App* cmd) { cmd->add_option("scenario", o.scenario, "Scenario JSON file")->required(); };
  auto format_opt = [&](CLI::App* cmd, std::vector<std::string> allowed) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember(std::move(allowed)));
  };
  auto config_opts = [&](CLI::App* cmd) {
    cmd->add_option("--utility", o.utility, "Utility: sum_all or sum_main")
        ->check(CLI::IsMember({"sum_all", "sum_main", "sum-all", "sum-main"}));
    cmd->add_option("--semantics", o.semantics, "Semantics for partial explanations")
        ->check(CLI::IsMember({"grounded", "preferred", "stable", "complete"}));
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check a scenario file");
  scenario_arg(validate_cmd);

  auto* select_cmd = app.add_subcommand("select", "Compute the pursued goals");
  scenario_arg(select_cmd);
  select_cmd->add_flag("--all", o.all, "List every maximal-utility extension");
  format_opt(select_cmd, {"text", "structured", "json"});
  config_opts(select_cmd);

  auto* beliefs_cmd = app.add_subcommand("beliefs", "Dump the generated beliefs");
  scenario_arg(beliefs_cmd);
  format_opt(beliefs_cmd, {"text", "structured", "json"});
  config_opts(beliefs_cmd);

  auto* explain_cmd = app.add_subcommand("explain", "Answer WHY / WHY_NOT queries");
  explain_cmd->require_subcommand(1);
  std::vector<CLI::App*> queries;
  for (const char* name : {"why", "why-not"}) {
    auto* q = explain_cmd->add_subcommand(name, std::string(name == std::string("why") ? "Why a goal was pursued"
                                                                                       : "Why a goal was not pursued"));
    q->add_option("goal", o.goal, "Goal id or predicate")->required();
    scenario_arg(q);
    q->add_flag("--complete", o.complete, "Return the whole explanatory framework");
    format_opt(q, {"text", "structured", "json", "dot"});
    config_opts(q);
    queries.push_back(q);
  }

  auto* report_cmd = app.add_subcommand("report", "Full run as structured output");
  scenario_arg(report_cmd);
  report_cmd->add_flag("--timings", o.timings, "Include stage timings (output is no longer byte-stable)");
  config_opts(report_cmd);

  auto* export_cmd = app.add_subcommand("export", "Export a stage as a DOT graph");
  export_cmd->add_option("--dot", o.stage, "Stage: general, goals-raw, goals or xaf")->required();
  export_cmd->add_option("--goal", o.goal, "Goal for the xaf stage");
  scenario_arg(export_cmd);
  config_opts(export_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*validate_cmd) return cmd_validate(o, out);
    if (*select_cmd) return cmd_select(o, out);
    if (*beliefs_cmd) return cmd_beliefs(o, out);
    if (*queries[0]) return cmd_explain(o, QueryKind::why, out);
    if (*queries[1]) return cmd_explain(o, QueryKind::why_not, out);
    if (*report_cmd) return cmd_report(o, out);
    if (*export_cmd) return cmd_export(o, out);
  } catch (const ValidationError& e) {
    err << e.report().summary();
    return 1;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace goalxai::cli
