#include "xcsp3/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <map>

#include "text.hpp"
#include "xcsp3/error.hpp"
#include "xcsp3/parser.hpp"
#include "xcsp3/solver.hpp"
#include "xcsp3/writer.hpp"

namespace xcsp3::cli {

namespace {

struct Options {
  bool lenient = false;
  std::vector<std::string> drop_classes;
  std::string file;
  // validate
  std::string canonical_out;
  // check
  std::string solution_file;
  std::string values;
  std::vector<std::string> vars;
  bool partial = false;
  // solve
  std::uint64_t max_solutions = 1;
  bool all = false;
  bool count = false;
  bool satisfy = false;
  double time_limit = 0;
  std::uint64_t node_limit = 0;
  std::string order = "decl";
  bool decision = false;
};

ParseResult load(const Options& o, std::ostream& err) {
  ParseOptions po;
  po.strict = !o.lenient;
  po.drop_classes = o.drop_classes;
  auto r = parse_document(read_file(o.file), po);
  for (const auto& w : r.warnings) err << "warning: " << w << "\n";
  return r;
}

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
  auto r = load(o, err);
  const auto& inst = r.instance;
  if (!o.canonical_out.empty()) {
    auto xml = write_instance(inst);
    if (o.canonical_out == "-") {
      out << xml;
      return kOk;
    }
    std::ofstream f(o.canonical_out, std::ios::binary);
    if (!f) throw Error(ErrorKind::Usage, "cannot write '" + o.canonical_out + "'");
    f << xml;
  }
  out << "valid: " << inst.vars.size() << " variables, " << inst.constraints.size() << " constraints"
      << (inst.objective ? ", 1 objective" : "") << "\n";
  return kOk;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  auto inst = load(o, err).instance;
  if (o.solution_file.empty() == o.values.empty())
    throw Error(ErrorKind::Usage, "give exactly one of --solution and --values");
  std::string text = o.values.empty() ? read_file(o.solution_file) : o.values;
  auto sol = parse_solution(text, inst, o.vars);
  auto verdict = check_solution(inst, sol, o.partial ? CheckMode::PartialAllowed : CheckMode::TotalRequired);
  switch (verdict.status) {
    case Verdict::Status::Violated:
      out << "violated: " << text::join(verdict.violated, " ") << "\n";
      return kViolated;
    case Verdict::Status::Incomplete:
      out << "incomplete: missing " << text::join(verdict.missing, " ") << "\n";
      return kIncomplete;
    case Verdict::Status::Satisfied:
      break;
  }
  out << "satisfied";
  if (verdict.cost_verified)
    out << ", cost verified: " << format_cost(*verdict.cost);
  else if (verdict.cost)
    out << ", cost: " << format_cost(*verdict.cost);
  if (!verdict.missing.empty()) out << " (partial, missing " << verdict.missing.size() << ")";
  out << "\n";
  return kOk;
}

SearchConfig search_config(const Options& o) {
  SearchConfig cfg;
  if (o.order == "dom")
    cfg.order = VarOrder::MinDomain;
  else if (o.order != "decl")
    throw Error(ErrorKind::Usage, "unknown variable order '" + o.order + "'");
  if (o.time_limit > 0) cfg.time_limit = o.time_limit;
  if (o.node_limit > 0) cfg.node_limit = o.node_limit;
  cfg.max_solutions = o.all ? 0 : o.max_solutions;
  cfg.decision_only = o.decision;
  return cfg;
}

int status_code(SolveStatus s) {
  switch (s) {
    case SolveStatus::Satisfiable:
    case SolveStatus::Optimum: return kOk;
    case SolveStatus::Unsatisfiable: return kUnsat;
    case SolveStatus::Limit: return kLimit;
  }
  return kOk;
}

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
  auto inst = load(o, err).instance;
  auto cfg = search_config(o);
  if (o.count) {
    auto r = count_solutions(inst, cfg);
    out << "solutions=" << r.count << (r.status == SolveStatus::Limit ? " (lower bound)" : "") << "\n";
    out << status_name(r.status) << "\n";
    return status_code(r.status);
  }
  if (inst.objective && !o.satisfy) {
    auto r = optimize(inst, cfg);
    if (!r.solutions.empty())
      out << write_solution(inst, r.solutions.back(), r.cost, r.status == SolveStatus::Optimum);
    out << status_name(r.status);
    if (r.cost) out << " " << format_cost(*r.cost);
    out << "\n";
    return status_code(r.status);
  }
  auto r = solve(inst, cfg);
  for (const auto& s : r.solutions) {
    std::optional<Cost> cost;
    if (inst.objective) cost = eval_objective(*inst.objective, s);
    out << write_solution(inst, s, cost);
  }
  out << status_name(r.status) << "\n";
  return status_code(r.status);
}

int cmd_stats(const Options& o, std::ostream& out, std::ostream& err) {
  auto inst = load(o, err).instance;
  auto useful = inst.useful();
  std::size_t defined = 0, n_useful = 0;
  for (std::size_t v = 0; v < inst.vars.size(); ++v) {
    if (inst.vars[v].domain) ++defined;
    if (useful[v]) ++n_useful;
  }
  out << "framework=" << (inst.framework == Framework::COP ? "COP" : "CSP") << "\n";
  out << "arrays=" << inst.arrays.size() << "\n";
  out << "variables=" << inst.vars.size() << "\n";
  out << "variables.defined=" << defined << "\n";
  out << "variables.useful=" << n_useful << "\n";
  out << "constraints=" << inst.constraints.size() << "\n";
  std::map<std::string, std::size_t> kinds;
  for (const auto& c : inst.constraints) ++kinds[std::string(kind_name(c.kind))];
  for (const auto& [k, n] : kinds) out << "constraints." << k << "=" << n << "\n";
  if (inst.objective)
    out << "objective=" << (inst.objective->sense == Sense::Minimize ? "minimize" : "maximize") << " "
        << objective_type_name(inst.objective->type) << "\n";
  if (inst.decision) out << "decision=" << inst.decision->size() << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Validate, check and solve XCSP3-core instances", "xcsp3"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "instance file")->required();
    sub->add_flag("--lenient", o.lenient, "skip unsupported elements with a warning");
    sub->add_flag("!--strict", o.lenient, "reject unsupported elements (default)");
    sub->add_option("--drop-class", o.drop_classes, "drop constraints carrying this class");
  };
  auto* validate = app.add_subcommand("validate", "parse and validate an instance");
  add_common(validate);
  validate->add_option("--canonical-out", o.canonical_out, "write the flat canonical form ('-' for stdout)");

  auto* check = app.add_subcommand("check", "check a solution against an instance");
  add_common(check);
  check->add_option("--solution", o.solution_file, "solution file: <instantiation> or a value list");
  check->add_option("--values", o.values, "inline value list");
  check->add_option("--vars", o.vars, "variables matching a plain value list");
  check->add_flag("--partial", o.partial, "accept missing values");

  auto* solve_cmd = app.add_subcommand("solve", "search for solutions");
  add_common(solve_cmd);
  solve_cmd->add_option("--max-solutions", o.max_solutions, "stop after N solutions")->check(CLI::PositiveNumber);
  solve_cmd->add_flag("--all", o.all, "enumerate every solution");
  solve_cmd->add_flag("--count", o.count, "count solutions only");
  solve_cmd->add_flag("--satisfy", o.satisfy, "ignore the objective");
  solve_cmd->add_option("--time-limit", o.time_limit, "seconds")->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--node-limit", o.node_limit, "search nodes");
  solve_cmd->add_option("--order", o.order, "variable order: decl or dom");
  solve_cmd->add_flag("--decision", o.decision, "branch on the decision annotation only");

  auto* stats = app.add_subcommand("stats", "print instance statistics");
  add_common(stats);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }
  try {
    if (validate->parsed()) return cmd_validate(o, out, err);
    if (check->parsed()) return cmd_check(o, out, err);
    if (solve_cmd->parsed()) return cmd_solve(o, out, err);
    return cmd_stats(o, out, err);
  } catch (const Error& e) {
    err << o.file << ": " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::Usage: return kUsage;
      case ErrorKind::CostMismatch: return kViolated;
      default: return kInvalid;
    }
  }
}

}  // namespace xcsp3::cli
