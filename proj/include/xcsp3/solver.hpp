#ifndef XCSP3_SOLVER_HPP
#define XCSP3_SOLVER_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "xcsp3/model.hpp"

namespace xcsp3 {

enum class VarOrder { Declaration, MinDomain };

struct SearchConfig {
  VarOrder order = VarOrder::Declaration;
  std::optional<double> time_limit;          // seconds
  std::optional<std::uint64_t> node_limit;
  std::uint64_t max_solutions = 1;           // 0 for all; ignored by count and optimize
  // Branch on the decision annotation only and derive the other variables.
  // Throws NotFunctional when a decision assignment has two completions.
  bool decision_only = false;
};

enum class SolveStatus { Satisfiable, Unsatisfiable, Optimum, Limit };

struct SolveResult {
  SolveStatus status = SolveStatus::Unsatisfiable;
  std::vector<Assignment> solutions;   // solve(); optimize() keeps the improving sequence
  std::optional<Cost> cost;            // optimize(): cost of solutions.back()
  std::uint64_t count = 0;             // solutions found (a lower bound when status is Limit)
  std::uint64_t nodes = 0;
  bool complete = true;                // search space exhausted
};

// Depth-first backtracking over the useful variables. Throws EmptyDomain when
// a useful variable has an empty domain.
SolveResult solve(const Instance& inst, const SearchConfig& config = {});
SolveResult count_solutions(const Instance& inst, const SearchConfig& config = {});
// Branch and bound; the instance must have an objective.
SolveResult optimize(const Instance& inst, const SearchConfig& config = {});

std::string_view status_name(SolveStatus s);

}  // namespace xcsp3

#endif
