#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "random_gen.hpp"
#include "support.hpp"
#include "xcsp3/parser.hpp"
#include "xcsp3/solver.hpp"

using namespace xcsp3;
using support::csp;

TEST_CASE("counts match the naive filter", "[solver][property]") {
  gen::InstanceGen g(5);
  for (int k = 0; k < 150; ++k) {
    auto text = g.instance(5, 4);
    INFO(text);
    auto inst = parse_instance(text);
    auto naive = oracle::naive_solutions(inst);
    SearchConfig dom;
    dom.order = VarOrder::MinDomain;
    CHECK(count_solutions(inst).count == naive.size());
    CHECK(count_solutions(inst, dom).count == naive.size());
  }
}

TEST_CASE("every enumerated solution is accepted and distinct", "[solver][property]") {
  gen::InstanceGen g(17);
  for (int k = 0; k < 100; ++k) {
    auto inst = parse_instance(g.instance(5, 4));
    SearchConfig all;
    all.max_solutions = 0;
    auto r = solve(inst, all);
    std::set<oracle::Values> seen;
    for (const auto& s : r.solutions) {
      CHECK(check_assignment(inst, s).status == Verdict::Status::Satisfied);
      CHECK(seen.insert(oracle::project(inst, s)).second);
    }
    CHECK(r.status == (r.solutions.empty() ? SolveStatus::Unsatisfiable : SolveStatus::Satisfiable));
  }
}

TEST_CASE("optimization finds the best cost", "[solver]") {
  const std::string vars = "<array id=\"x\" size=\"[3]\"> 0..4 </array>";
  const std::string doc = "<instance format=\"XCSP3\" type=\"COP\"><variables>" + vars +
                          "</variables><constraints><allDifferent> x[] </allDifferent>"
                          "<intension> gt(x[0],x[2]) </intension></constraints><objectives>";
  auto best = [&](const std::string& objective) {
    auto inst = parse_instance(doc + objective + "</objectives></instance>");
    auto r = optimize(inst);
    REQUIRE(r.status == SolveStatus::Optimum);
    REQUIRE(r.cost);
    return *r.cost;
  };
  CHECK(best("<minimize type=\"sum\"><list> x[] </list></minimize>") == Cost{3});
  CHECK(best("<maximize type=\"sum\"><list> x[] </list><coeffs> 1 -1 1 </coeffs></maximize>") == Cost{7});
  CHECK(best("<maximize> sub(x[0],x[1]) </maximize>") == Cost{4});
  CHECK(best("<minimize type=\"maximum\"><list> x[] </list></minimize>") == Cost{2});
  CHECK(best("<maximize type=\"minimum\"><list> x[] </list></maximize>") == Cost{2});
  CHECK(best("<minimize type=\"nValues\"><list> x[] </list></minimize>") == Cost{3});
  CHECK(best("<minimize type=\"lex\"><list> x[1] x[0] </list></minimize>") == Cost{0, 2});
}

TEST_CASE("optimization agrees with brute force", "[solver][property]") {
  gen::InstanceGen g(41);
  gen::Random rng(41);
  for (int k = 0; k < 60; ++k) {
    auto text = g.instance(4, 4);
    auto close = text.rfind("</instance>");
    text.replace(text.find("type=\"CSP\""), 10, "type=\"COP\"");
    auto list = text.find("<array") == std::string::npos ? "x0 x1" : "v[0] v[1]";
    text.insert(close, std::string("<objectives><minimize type=\"sum\"><list> ") + list + " </list><coeffs> " +
                           std::to_string(rng.between(-3, 3)) + " " + std::to_string(rng.between(-3, 3)) +
                           " </coeffs></minimize></objectives>");
    INFO(text);
    auto inst = parse_instance(text);
    std::optional<std::int64_t> brute;
    auto useful = oracle::useful_vars(inst);
    for (const auto& sol : oracle::naive_solutions(inst)) {
      Assignment env(inst.vars.size());
      for (std::size_t i = 0; i < useful.size(); ++i) env.set(useful[i], sol[i]);
      auto c = eval_objective(*inst.objective, env)[0];
      if (!brute || c < *brute) brute = c;
    }
    auto r = optimize(inst);
    if (!brute) {
      CHECK(r.status == SolveStatus::Unsatisfiable);
    } else {
      CHECK(r.status == SolveStatus::Optimum);
      CHECK(r.cost == Cost{*brute});
    }
  }
}

TEST_CASE("limits stop the search", "[solver]") {
  auto inst = parse_instance(csp("<array id=\"x\" size=\"[7]\"> 0..6 </array>", "<allDifferent> x[] </allDifferent>"));
  SearchConfig nodes;
  nodes.node_limit = 50;
  nodes.max_solutions = 0;
  auto r = solve(inst, nodes);
  CHECK(r.status == SolveStatus::Satisfiable);
  CHECK_FALSE(r.complete);
  CHECK(count_solutions(inst, nodes).status == SolveStatus::Limit);
  CHECK(r.nodes <= 51);
  SearchConfig some;
  some.max_solutions = 3;
  auto s = solve(inst, some);
  CHECK(s.solutions.size() == 3);
  CHECK(s.status == SolveStatus::Satisfiable);
  SearchConfig timed;
  timed.time_limit = 0.0;
  CHECK(count_solutions(inst, timed).status == SolveStatus::Limit);
  CHECK(count_solutions(inst).count == 5040);
}

TEST_CASE("search covers useful variables only", "[solver]") {
  auto inst = parse_instance(csp("<var id=\"x\"> 0..2 </var><var id=\"y\"> 0..2 </var><var id=\"free\"> 0..9 </var>",
                                 "<intension> lt(x,y) </intension>"));
  CHECK(count_solutions(inst).count == 3);
  CHECK(support::parse_error(csp("<array id=\"x\" size=\"[2]\"><domain for=\"x[0]\"> 0 1 </domain></array>",
                                 "<intension> lt(x[0],x[1]) </intension>")) == ErrorKind::UndefinedVariable);
  auto empty = parse_instance(csp("<var id=\"x\"> 0 </var><var id=\"y\"> 0 </var>", "<intension> lt(x,y) </intension>"));
  empty.vars[0].domain = Domain();
  CHECK(support::error_of([&] { solve(empty); }) == ErrorKind::EmptyDomain);
}

TEST_CASE("decision variables", "[solver]") {
  const std::string vars = "<var id=\"x\"> 0..3 </var><var id=\"y\"> 0..6 </var>";
  auto with = [&](const std::string& ctr) {
    return parse_instance("<instance format=\"XCSP3\" type=\"CSP\"><variables>" + vars + "</variables><constraints>" +
                          ctr + "</constraints><annotations><decision> x </decision></annotations></instance>");
  };
  SearchConfig dec;
  dec.decision_only = true;
  dec.max_solutions = 0;
  auto functional = with("<intension> eq(y,mul(x,2)) </intension>");
  CHECK(solve(functional, dec).solutions.size() == 4);
  auto loose = with("<intension> le(y,mul(x,2)) </intension>");
  CHECK(support::error_of([&] { solve(loose, dec); }) == ErrorKind::NotFunctional);
  CHECK(solve(loose, SearchConfig{.max_solutions = 0}).solutions.size() == 1 + 3 + 5 + 7);
}
