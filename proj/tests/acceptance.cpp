// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "random_gen.hpp"
#include "xcsp3/cli.hpp"
#include "xcsp3/error.hpp"
#include "xcsp3/parser.hpp"
#include "xcsp3/solver.hpp"
#include "xcsp3/writer.hpp"

using namespace xcsp3;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

std::string fixture(const std::string& name) { return std::string(XCSP3_FIXTURES) + "/" + name; }

#define EXPECT(cond, msg)              \
  do {                                 \
    if (!(cond)) return {false, msg};  \
  } while (0)

std::int64_t value_of(const Instance& inst, const Assignment& env, const std::string& id) {
  return env.value(*inst.find_var(id));
}

Instantiation to_instantiation(const Instance& inst, const Assignment& env) {
  Instantiation sol;
  auto useful = inst.useful();
  for (std::size_t v = 0; v < inst.vars.size(); ++v)
    if (useful[v]) sol.add(inst.vars[v].id, env.value(static_cast<VarId>(v)));
  return sol;
}

const std::vector<std::string> kCakes{"cake_intension.xml", "cake_group.xml", "cake_sum.xml"};

Outcome cake_optimum() {
  for (const auto& f : kCakes) {
    auto inst = parse_instance_file(fixture(f));
    auto r = optimize(inst);
    EXPECT(r.status == SolveStatus::Optimum, f + ": status " + std::string(status_name(r.status)));
    EXPECT(r.cost && *r.cost == Cost{1700}, f + ": best cost " + (r.cost ? format_cost(*r.cost) : "none"));
    const auto& best = r.solutions.back();
    EXPECT(value_of(inst, best, "b") == 2 && value_of(inst, best, "c") == 2, f + ": optimum not at (2,2)");
    auto printed = parse_solution(read_file(fixture("cake_optimum.xml")), inst);
    auto verdict = check_solution(inst, printed);
    EXPECT(verdict.status == Verdict::Status::Satisfied && verdict.cost_verified,
           f + ": printed optimum instantiation not verified");
  }
  return {true, "3 encodings, OPTIMUM 1700 at b=2 c=2"};
}

Outcome cake_equivalence() {
  // Independent reading of the recipe constraints.
  std::set<oracle::Values> expected;
  for (std::int64_t b = 0; b <= 99; ++b)
    for (std::int64_t c = 0; c <= 99; ++c)
      if (250 * b + 200 * c <= 4000 && 2 * b <= 6 && 75 * b + 150 * c <= 2000 && 100 * b + 150 * c <= 500 && 75 * c <= 500)
        expected.insert({b, c});
  for (const auto& f : kCakes) {
    auto inst = parse_instance_file(fixture(f));
    SearchConfig all;
    all.max_solutions = 0;
    auto r = solve(inst, all);
    std::set<oracle::Values> got;
    for (const auto& s : r.solutions) {
      auto b = value_of(inst, s, "b"), c = value_of(inst, s, "c");
      if (b <= 99 && c <= 99) got.insert({b, c});
    }
    EXPECT(got == expected, f + ": solution set differs (" + std::to_string(got.size()) + " vs " +
                                std::to_string(expected.size()) + ")");
    auto n = count_solutions(inst).count;
    EXPECT(n == expected.size(), f + ": count_solutions " + std::to_string(n));
  }
  return {true, std::to_string(expected.size()) + " solutions in each encoding"};
}

Outcome toy() {
  auto inst = parse_instance_file(fixture("toy.xml"));
  auto r = count_solutions(inst);
  EXPECT(r.status == SolveStatus::Unsatisfiable && r.count == 0, "solver found solutions");
  std::size_t total = 0;
  std::vector<oracle::Values> doms;
  for (const auto& v : inst.vars) doms.push_back(v.domain->values());
  oracle::cartesian(doms, [&](const oracle::Values&) { ++total; });
  EXPECT(total == 8, "expected 8 total assignments");
  EXPECT(oracle::naive_solutions(inst).empty(), "naive filter found solutions");
  return {true, "UNSAT, 0 of 8 assignments"};
}

Outcome langford() {
  auto inst = parse_instance_file(fixture("langford.xml"));
  SearchConfig all;
  all.max_solutions = 0;
  auto r = solve(inst, all);
  EXPECT(r.solutions.size() == 2, "found " + std::to_string(r.solutions.size()) + " solutions");
  for (const auto& s : r.solutions)
    EXPECT(check_solution(inst, to_instantiation(inst, s)).status == Verdict::Status::Satisfied, "solution rejected");
  // Reversing the sequence maps position p to 7 - p and swaps first and second occurrences.
  for (int row = 0; row < 2; ++row)
    for (int i = 0; i < 4; ++i) {
      auto cell = [&](int r) { return "x[" + std::to_string(r) + "][" + std::to_string(i) + "]"; };
      EXPECT(value_of(inst, r.solutions[0], cell(row)) + value_of(inst, r.solutions[1], cell(1 - row)) == 7,
             "solutions are not a reverse pair");
    }
  EXPECT(count_solutions(inst).count == 2, "count_solutions disagrees");
  return {true, "2 solutions, reverse pair, both checked"};
}

Outcome magic() {
  auto inst = parse_instance_file(fixture("magic.xml"));
  auto n = count_solutions(inst).count;
  EXPECT(n == 8, "count " + std::to_string(n));
  SearchConfig all;
  all.max_solutions = 0;
  auto r = solve(inst, all);
  EXPECT(r.solutions.size() == 8, "solve found " + std::to_string(r.solutions.size()));
  for (const auto& s : r.solutions)
    EXPECT(check_solution(inst, to_instantiation(inst, s)).status == Verdict::Status::Satisfied, "solution rejected");
  return {true, "8 solutions"};
}

Outcome expansion() {
  const std::vector<std::pair<std::string, std::string>> pairs{
      {"group_g.xml", "group_g_expanded.xml"},     {"group_h.xml", "group_h_expanded.xml"},
      {"slides.xml", "slides_expanded.xml"},       {"latin_group.xml", "latin_expanded.xml"},
      {"latin_compact.xml", "latin_expanded.xml"},
  };
  std::size_t n = 0;
  for (const auto& [meta, flat] : pairs) {
    auto a = parse_instance_file(fixture(meta));
    auto b = parse_instance_file(fixture(flat));
    EXPECT(a.constraints.size() == b.constraints.size(), meta + ": " + std::to_string(a.constraints.size()) + " constraints vs " +
                                                             std::to_string(b.constraints.size()));
    for (std::size_t i = 0; i < a.constraints.size(); ++i)
      EXPECT(a.constraints[i] == b.constraints[i], meta + ": constraint " + std::to_string(i) + " differs:\n" +
                                                       write_constraint(a.constraints[i]) + write_constraint(b.constraints[i]));
    n += a.constraints.size();
  }
  return {true, std::to_string(n) + " expanded constraints match"};
}

Outcome short_tables() {
  gen::Random rng(7);
  std::size_t assignments = 0;
  for (int k = 0; k < 200; ++k) {
    int arity = rng.between(3, 4);
    Extension star, full;
    std::vector<oracle::Values> doms;
    Assignment env(static_cast<std::size_t>(arity));
    for (int i = 0; i < arity; ++i) {
      star.list.push_back(Expr::var("v" + std::to_string(i), i));
      int d = rng.between(1, 4);
      oracle::Values vals;
      for (int x = 0; x < d; ++x) vals.push_back(x);
      doms.push_back(vals);
    }
    full.list = star.list;
    star.supports = full.supports = rng.coin();
    int n = rng.between(1, 6);
    for (int t = 0; t < n; ++t) {
      Tuple tup;
      for (int i = 0; i < arity; ++i)
        tup.push_back(rng.coin(0.35) ? std::nullopt : TableValue(rng.pick(doms[static_cast<std::size_t>(i)])));
      star.tuples.push_back(tup);
    }
    auto expanded = oracle::expand_short(star.tuples, doms);
    for (const auto& t : expanded) {
      Tuple tup;
      for (auto v : t) tup.push_back(v);
      full.tuples.push_back(tup);
    }
    bool agree = true;
    oracle::cartesian(doms, [&](const oracle::Values& vals) {
      ++assignments;
      for (int i = 0; i < arity; ++i) env.set(i, vals[static_cast<std::size_t>(i)]);
      bool member = expanded.count(vals) > 0;
      bool want = star.supports ? member : !member;
      if (check(star, env) != want || check(full, env) != want) agree = false;
    });
    EXPECT(agree, "table " + std::to_string(k) + " disagrees with its expansion");
  }
  return {true, "200 tables, " + std::to_string(assignments) + " assignments"};
}

std::vector<oracle::Arc> arcs_of(const std::vector<Transition>& ts) {
  std::vector<oracle::Arc> out;
  for (const auto& t : ts) out.push_back({t.from, t.value, t.to});
  return out;
}

// Compares check() with path enumeration on every word over `alphabet`.
bool words_agree(const ConstraintKind& kind, std::size_t n, const std::set<oracle::Values>& accepted,
                 const oracle::Values& alphabet) {
  std::vector<oracle::Values> doms(n, alphabet);
  Assignment env(n);
  bool ok = true;
  oracle::cartesian(doms, [&](const oracle::Values& w) {
    for (std::size_t i = 0; i < n; ++i) env.set(static_cast<VarId>(i), w[i]);
    if (check(kind, env) != (accepted.count(w) > 0)) ok = false;
  });
  return ok;
}

Operands word_vars(std::size_t n) {
  Operands out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(Expr::var("w" + std::to_string(i), static_cast<VarId>(i)));
  return out;
}

Outcome regular_mdd() {
  auto reg_inst = parse_instance_file(fixture("regular.xml"));
  const auto& reg = std::get<Regular>(reg_inst.constraints.at(0).kind);
  Assignment word(7);
  const oracle::Values w{0, 1, 1, 0, 0, 1, 0};
  for (std::size_t i = 0; i < w.size(); ++i) word.set(*reg_inst.find_var("x" + std::to_string(i + 1)), w[i]);
  EXPECT(check(reg, word), "automaton rejects 0110010");
  auto reg_words = oracle::path_words(arcs_of(reg.transitions), reg.start, {reg.finals.begin(), reg.finals.end()}, 7);
  EXPECT(reg_words.count(w), "path enumeration misses 0110010");

  auto mdd_inst = parse_instance_file(fixture("mdd.xml"));
  const auto& mdd = std::get<Mdd>(mdd_inst.constraints.at(0).kind);
  std::set<oracle::Values> accepted;
  oracle::cartesian({{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}, [&](const oracle::Values& t) {
    Assignment env(3);
    for (std::size_t i = 0; i < 3; ++i) env.set(*mdd_inst.find_var("x" + std::to_string(i + 1)), t[i]);
    if (check(mdd, env)) accepted.insert(t);
  });
  const std::set<oracle::Values> expected{{0, 2, 0}, {1, 2, 0}, {2, 0, 0}};
  EXPECT(accepted == expected, "MDD accepts a different tuple set");
  EXPECT(oracle::path_words(arcs_of(mdd.transitions), "r", {"t"}, 3) == expected, "MDD path enumeration differs");

  gen::Random rng(11);
  const oracle::Values alphabet{-1, 0, 1, 2};
  for (int k = 0; k < 250; ++k) {
    std::size_t n = static_cast<std::size_t>(rng.between(1, 6));
    Regular r;
    r.list = word_vars(n);
    int states = rng.between(1, 4);
    int m = rng.between(1, 10);
    for (int a = 0; a < m; ++a)
      r.transitions.push_back({"s" + std::to_string(rng.between(0, states - 1)), rng.pick(alphabet),
                               "s" + std::to_string(rng.between(0, states - 1))});
    r.start = "s0";
    std::set<std::string> finals;
    for (int f = rng.between(1, states); f > 0; --f) finals.insert("s" + std::to_string(rng.between(0, states - 1)));
    r.finals.assign(finals.begin(), finals.end());
    auto acc = oracle::path_words(arcs_of(r.transitions), r.start, finals, n);
    EXPECT(words_agree(r, n, acc, alphabet), "random automaton " + std::to_string(k) + " disagrees");
  }
  for (int k = 0; k < 250; ++k) {
    std::size_t n = static_cast<std::size_t>(rng.between(1, 6));
    Mdd d;
    d.list = word_vars(n);
    std::vector<int> width(n + 1, 1);
    for (std::size_t i = 1; i < n; ++i) width[i] = rng.between(1, 3);
    auto node = [&](std::size_t level, int j) {
      if (level == 0) return std::string("root");
      if (level == n) return std::string("end");
      return "n" + std::to_string(level) + "_" + std::to_string(j);
    };
    for (std::size_t i = 0; i < n; ++i)
      for (int j = 0; j < width[i]; ++j) {
        std::set<std::int64_t> used;
        for (int a = rng.between(1, 3); a > 0; --a) {
          auto v = rng.pick(alphabet);
          if (used.insert(v).second) d.transitions.push_back({node(i, j), v, node(i + 1, rng.between(0, width[i + 1] - 1))});
        }
      }
    auto acc = oracle::path_words(arcs_of(d.transitions), "root", {"end"}, n);
    EXPECT(words_agree(d, n, acc, alphabet), "random MDD " + std::to_string(k) + " disagrees");
  }
  return {true, "0110010 accepted, MDD tuples match, 500 random diagrams agree"};
}

Outcome solver_agreement() {
  gen::InstanceGen g(2024);
  std::size_t total = 0;
  for (int k = 0; k < 500; ++k) {
    auto text = g.instance(6, 5);
    Instance inst;
    try {
      inst = parse_instance(text);
    } catch (const Error& e) {
      return {false, "instance " + std::to_string(k) + " does not parse: " + e.what() + "\n" + text};
    }
    auto naive = oracle::naive_solutions(inst);
    auto r = count_solutions(inst);
    EXPECT(r.count == naive.size(), "instance " + std::to_string(k) + ": count " + std::to_string(r.count) + " vs naive " +
                                        std::to_string(naive.size()) + "\n" + text);
    SearchConfig all;
    all.max_solutions = 0;
    std::set<oracle::Values> found;
    for (const auto& s : solve(inst, all).solutions) found.insert(oracle::project(inst, s));
    EXPECT(found == naive, "instance " + std::to_string(k) + ": solution sets differ\n" + text);
    total += naive.size();
  }
  return {true, "500 instances, " + std::to_string(total) + " solutions in total"};
}

Outcome round_trip() {
  std::size_t n = 0;
  for (const auto& entry : std::filesystem::directory_iterator(XCSP3_FIXTURES)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".xml") continue;
    auto text = read_file(entry.path().string());
    if (text.find("<instance") == std::string::npos) continue;
    auto name = entry.path().filename().string();
    auto a = parse_instance(text);
    auto flat = write_instance(a);
    Instance b;
    try {
      b = parse_instance(flat);
    } catch (const Error& e) {
      return {false, name + ": canonical form does not reparse: " + e.what()};
    }
    EXPECT(a == b, name + ": reparsed instance differs");
    EXPECT(write_instance(b) == flat, name + ": canonical form is not stable");
    ++n;
  }
  EXPECT(n >= 15, "only " + std::to_string(n) + " fixtures found");
  return {true, std::to_string(n) + " fixtures"};
}

Outcome negatives() {
  const std::map<std::string, std::string> cases{
      {"attribute_whitespace.xml", "AttributeWhitespace"}, {"condition_whitespace.xml", "ConditionWhitespace"},
      {"expression_whitespace.xml", "ExpressionWhitespace"}, {"interval_whitespace.xml", "IntervalWhitespace"},
      {"tuple_whitespace.xml", "TupleWhitespace"},         {"domain_order.xml", "DomainOutOfOrder"},
  };
  for (const auto& [file, rule] : cases) {
    std::ostringstream out, err;
    int code = cli::run({"validate", fixture("negative/" + file)}, out, err);
    EXPECT(code == cli::kInvalid, file + ": exit " + std::to_string(code));
    EXPECT(err.str().find(rule) != std::string::npos, file + ": diagnostic does not name " + rule + ": " + err.str());
  }
  return {true, std::to_string(cases.size()) + " documents rejected with exit 2"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double budget;  // seconds, 0 for none
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "cake-optimum", 1, cake_optimum},
      {2, "cake-encoding-equivalence", 5, cake_equivalence},
      {3, "toy-network-unsat", 1, toy},
      {4, "langford-2-04", 60, langford},
      {5, "magic-square-3", 60, magic},
      {6, "group-slide-expansion", 0, expansion},
      {7, "short-table-property", 10, short_tables},
      {8, "regular-mdd-oracle", 0, regular_mdd},
      {9, "solver-checker-agreement", 120, solver_agreement},
      {10, "canonical-round-trip", 0, round_trip},
      {11, "negative-parse-suite", 0, negatives},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && c.budget > 0 && secs >= c.budget) o = {false, "took " + std::to_string(secs) + " s"};
    if (!o.ok) ++failures;
    std::ostringstream line;
    line.precision(3);
    line << (o.ok ? "PASS" : "FAIL") << " " << c.id << " " << c.name << " (" << std::fixed << secs << " s): " << o.detail;
    std::cout << line.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
