#pragma once

// Command-line front end. Output: one "RESULT: ..." line on stdout, then
// optional JSON. Diagnostics go to stderr. Exit 0 for true/valid/unknown,
// 1 for false/invalid, 2 for errors.

#include <cstddef>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "inclogic/inclogic.hpp"

namespace inclogic::cli {

enum ExitCode : int { kPositive = 0, kNegative = 1, kError = 2 };

struct Options {
  std::string model_path, team_path, formula, semantics = "lax";
  bool trace = false, stats = false, force_oracle = false;
  std::size_t guard_team = 0, guard_worlds = 0;  // 0: library defaults
  std::string logic = "pl";
  std::size_t max_worlds = 3, max_team = 3, workers = 1, max_vars = kDefaultPlVarBound;
  std::string circuit_path, input_bits, family_path, instance_path, check;
};

namespace detail {

inline OracleGuards oracle_guards(const Options& o) {
  OracleGuards g;
  if (o.guard_team) g.max_team = o.guard_team;
  if (o.guard_worlds) g.max_worlds = o.guard_worlds;
  return g;
}

inline StrictGuards strict_guards(const Options& o) {
  StrictGuards g;
  if (o.guard_team) g.max_team = o.guard_team;
  return g;
}

inline int verdict(std::ostream& out, bool positive) {
  out << "RESULT: " << (positive ? "true" : "false") << '\n';
  return positive ? kPositive : kNegative;
}

inline int modal_check(const Options& o, bool oracle, std::ostream& out, std::ostream& err) {
  const KripkeModel m = model_from_json(read_json_file(o.model_path));
  const WorldTeam t = team_from_json(m, read_json_file(o.team_path));
  const Formula f = parse_formula(o.formula);
  const Semantics mode = parse_semantics(o.semantics);
  if (oracle) return verdict(out, eval_team_modal(m, t, f, mode, oracle_guards(o)));
  StrictStats stats;
  const bool r = model_check(m, t, f, mode, strict_guards(o), &stats, o.trace ? &err : nullptr);
  if (o.stats && mode == Semantics::Strict)
    err << "states: " << stats.states << ", memo hits: " << stats.memo_hits << '\n';
  return verdict(out, r);
}

inline int prop_check(const Options& o, bool oracle, std::ostream& out, std::ostream& err) {
  const PropTeam x = prop_team_from_json(read_json_file(o.team_path));
  const Formula f = parse_formula(o.formula);
  const Semantics mode = parse_semantics(o.semantics);
  if (oracle) return verdict(out, eval_team_prop(x, f, mode, oracle_guards(o)));
  StrictStats stats;
  const bool r = model_check_prop(x, f, mode, strict_guards(o), &stats, o.trace ? &err : nullptr);
  if (o.stats && mode == Semantics::Strict)
    err << "states: " << stats.states << ", memo hits: " << stats.memo_hits << '\n';
  return verdict(out, r);
}

inline int validity(const Options& o, std::ostream& out) {
  const Formula f = parse_formula(o.formula);
  ValidityVerdict v;
  if (o.logic == "pl") {
    v = pl_validity(f, o.max_vars);
  } else if (o.logic == "plinc-strict") {
    v = plinc_strict_validity(f, o.max_vars);
  } else if (o.logic == "plinc-lax") {
    v = plinc_lax_validity(f, o.max_vars);
  } else if (o.logic == "minc-bounded") {
    BoundedSearchOptions opt;
    opt.max_worlds = o.max_worlds;
    opt.max_team = o.max_team;
    opt.mode = parse_semantics(o.semantics);
    opt.workers = o.workers;
    v = minc_bounded_counterexample(f, opt);
  } else {
    throw FormatError("unknown logic '" + o.logic + "'");
  }
  out << "RESULT: " << to_string(v.kind) << '\n';
  if (v.prop_witness) out << prop_team_to_json(*v.prop_witness).dump() << '\n';
  if (v.modal_witness) {
    json w = model_to_json(v.modal_witness->model);
    w["team"] = team_to_json(v.modal_witness->model, v.modal_witness->team)["team"];
    out << w.dump() << '\n';
  }
  if (v.unknown())
    out << json{{"max_worlds", v.bound_worlds}, {"max_team", v.bound_team}}.dump() << '\n';
  return v.invalid() ? kNegative : kPositive;
}

inline int translate(const std::string& which, const Options& o, std::ostream& out) {
  const Formula f = parse_formula(o.formula);
  json j;
  if (which == "eminc-to-minc") {
    const KripkeModel m = model_from_json(read_json_file(o.model_path));
    auto [m2, f2] = eminc_preprocess(m, f);
    j = {{"formula", render_formula(f2)}, {"model", model_to_json(m2)}};
  } else if (which == "eminc-val-to-minc") {
    j = {{"formula", render_formula(eminc_val_to_minc(f))}};
  } else {
    const Formula g = f.kind() == Kind::Inclusion ? inclusion_to_pl_singleton(f) : plinc_to_pl(f);
    j = {{"formula", render_formula(g)}};
  }
  out << "RESULT: true\n" << j.dump() << '\n';
  return kPositive;
}

inline bool prop_check_mode(const PropTeam& x, const Formula& f, const std::string& check,
                            const Options& o) {
  return model_check_prop(x, f, parse_semantics(check), strict_guards(o));
}

inline int gen(const std::string& which, const Options& o, std::ostream& out, std::ostream& err) {
  bool expected = false;
  std::optional<bool> checked;
  json j;
  if (which == "mcvp") {
    std::istringstream in(read_text_file(o.circuit_path));
    const MonotoneCircuit c = parse_circuit(in);
    const auto bits = parse_bits(o.input_bits);
    auto [x, f] = mcvp_encode(c, bits);
    expected = evaluate_circuit(c, bits);
    j = {{"team", prop_team_to_json(x)}, {"formula", render_formula(f)}};
    if (!o.check.empty()) checked = prop_check_mode(x, f, o.check, o);
  } else if (which == "setsplit") {
    std::istringstream in(read_text_file(o.family_path));
    const SetSplitInstance inst = parse_set_family(in);
    auto [x, f] = setsplit_encode(inst);
    expected = split_oracle(inst);
    j = {{"team", prop_team_to_json(x)}, {"formula", render_formula(f)}};
    if (!o.check.empty()) checked = prop_check_mode(x, f, o.check, o);
  } else {
    const DqbfInstance inst = parse_dqbf(read_text_file(o.instance_path));
    expected = dqbf_oracle(inst) == DqbfAnswer::Nonvalid;
    j = {{"formula", render_formula(dqbf_encode_nonvalidity(inst))},
         {"oracle", to_string(dqbf_oracle(inst))}};
    if (!o.check.empty()) {
      const Formula body = dqbf_body(inst);
      const Semantics mode = parse_semantics(o.check);
      bool all = true;
      for (const auto& label : all_q_labels(inst)) {
        auto [m, t] = canonical_models(inst, label);
        all = all && model_check(m, t, body, mode, strict_guards(o));
      }
      checked = all;
    }
  }
  j["expected"] = expected;
  if (checked) {
    j["checked"] = *checked;
    if (*checked != expected) err << "checker disagrees with the source-problem oracle\n";
  }
  out << "RESULT: " << ((checked ? *checked == expected : expected) ? "true" : "false") << '\n'
      << j.dump() << '\n';
  return (checked ? *checked == expected : expected) ? kPositive : kNegative;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  Options o;
  CLI::App app{"Model checking and validity for propositional and modal inclusion logic"};
  app.require_subcommand(1);

  auto add_semantics = [&](CLI::App* sub) {
    sub->add_option("--semantics", o.semantics, "lax or strict")
        ->check(CLI::IsMember({"lax", "strict"}));
  };
  auto add_guards = [&](CLI::App* sub) {
    sub->add_option("--guard-team", o.guard_team, "team size guard")->check(CLI::PositiveNumber);
    sub->add_option("--guard-worlds", o.guard_worlds, "world count guard")
        ->check(CLI::PositiveNumber);
  };
  auto add_modal = [&](CLI::App* sub) {
    sub->add_option("--model", o.model_path, "Kripke model JSON")->required();
    sub->add_option("--team", o.team_path, "team JSON")->required();
    sub->add_option("--formula", o.formula, "formula")->required();
    add_semantics(sub);
    add_guards(sub);
  };
  auto add_prop = [&](CLI::App* sub) {
    sub->add_option("--team", o.team_path, "propositional team JSON")->required();
    sub->add_option("--formula", o.formula, "formula")->required();
    add_semantics(sub);
    add_guards(sub);
  };

  auto* mc = app.add_subcommand("mc", "model check a modal formula on a team");
  add_modal(mc);
  mc->add_flag("--trace", o.trace, "print labelling rounds to stderr");
  mc->add_flag("--stats", o.stats, "print strict search statistics to stderr");
  mc->add_flag("--force-oracle", o.force_oracle, "use the brute-force evaluator");

  auto* mc_prop = app.add_subcommand("mc-prop", "model check a propositional formula on a team");
  add_prop(mc_prop);
  mc_prop->add_flag("--trace", o.trace, "print labelling rounds to stderr");
  mc_prop->add_flag("--stats", o.stats, "print strict search statistics to stderr");
  mc_prop->add_flag("--force-oracle", o.force_oracle, "use the brute-force evaluator");

  auto* oracle = app.add_subcommand("oracle", "brute-force team semantics");
  oracle->require_subcommand(1);
  auto* oracle_mc = oracle->add_subcommand("mc", "modal");
  add_modal(oracle_mc);
  auto* oracle_prop = oracle->add_subcommand("prop", "propositional");
  add_prop(oracle_prop);

  auto* val = app.add_subcommand("validity", "decide or bound validity");
  val->add_option("--logic", o.logic, "pl, plinc-strict, plinc-lax or minc-bounded")
      ->check(CLI::IsMember({"pl", "plinc-strict", "plinc-lax", "minc-bounded"}));
  val->add_option("--formula", o.formula, "formula")->required();
  add_semantics(val);
  val->add_option("--max-worlds", o.max_worlds, "bounded search: model size")
      ->check(CLI::PositiveNumber);
  val->add_option("--max-team", o.max_team, "bounded search: team size")->check(CLI::PositiveNumber);
  val->add_option("--workers", o.workers, "bounded search: worker threads")
      ->check(CLI::PositiveNumber);
  val->add_option("--max-vars", o.max_vars, "propositional variable bound")
      ->check(CLI::PositiveNumber);

  auto* tr = app.add_subcommand("translate", "formula translations");
  tr->require_subcommand(1);
  auto* tr_pre = tr->add_subcommand("eminc-to-minc", "substitute extended parameters on a model");
  tr_pre->add_option("--model", o.model_path, "Kripke model JSON")->required();
  tr_pre->add_option("--formula", o.formula, "formula")->required();
  auto* tr_val = tr->add_subcommand("eminc-val-to-minc", "validity-preserving translation");
  tr_val->add_option("--formula", o.formula, "formula")->required();
  auto* tr_pl = tr->add_subcommand("inclusion-to-pl", "singleton translation of inclusion atoms");
  tr_pl->add_option("--formula", o.formula, "formula")->required();

  auto* gen = app.add_subcommand("gen", "encode a source problem");
  gen->require_subcommand(1);
  auto add_check = [&](CLI::App* sub) {
    sub->add_option("--check", o.check, "cross-validate with a checker")
        ->check(CLI::IsMember({"lax", "strict"}));
    add_guards(sub);
  };
  auto* gen_mcvp = gen->add_subcommand("mcvp", "monotone circuit value");
  gen_mcvp->add_option("--circuit", o.circuit_path, "circuit file")->required();
  gen_mcvp->add_option("--input", o.input_bits, "input bits, e.g. 101")->required();
  add_check(gen_mcvp);
  auto* gen_split = gen->add_subcommand("setsplit", "set splitting");
  gen_split->add_option("--family", o.family_path, "set family file")->required();
  add_check(gen_split);
  auto* gen_dqbf = gen->add_subcommand("dqbf", "DQBF non-validity");
  gen_dqbf->add_option("--instance", o.instance_path, "DQBF file")->required();
  add_check(gen_dqbf);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPositive;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPositive;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kError;
  }

  try {
    if (mc->parsed()) return detail::modal_check(o, o.force_oracle, out, err);
    if (mc_prop->parsed()) return detail::prop_check(o, o.force_oracle, out, err);
    if (oracle_mc->parsed()) return detail::modal_check(o, true, out, err);
    if (oracle_prop->parsed()) return detail::prop_check(o, true, out, err);
    if (val->parsed()) return detail::validity(o, out);
    for (auto* sub : {tr_pre, tr_val, tr_pl})
      if (sub->parsed()) return detail::translate(sub->get_name(), o, out);
    for (auto* sub : {gen_mcvp, gen_split, gen_dqbf})
      if (sub->parsed()) return detail::gen(sub->get_name(), o, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  err << "no command given\n";
  return kError;
}

}  // namespace inclogic::cli
