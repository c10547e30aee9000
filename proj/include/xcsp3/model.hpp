#ifndef XCSP3_MODEL_HPP
#define XCSP3_MODEL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "xcsp3/assignment.hpp"
#include "xcsp3/constraints.hpp"
#include "xcsp3/domain.hpp"

namespace xcsp3 {

enum class Framework { CSP, COP };

struct Variable {
  std::string id;                 // "x" or "x[1][2]"
  std::optional<Domain> domain;   // nullopt for an undefined array cell
  std::string note;
  std::int32_t array = -1;        // index into Instance::arrays

  bool operator==(const Variable&) const = default;
};

struct VarArray {
  std::string id;
  std::vector<std::int64_t> dims;
  VarId first = 0;  // cells occupy [first, first + cell_count()) in row-major order
  std::string note;

  std::size_t cell_count() const;
  bool operator==(const VarArray&) const = default;
};

struct Instance {
  Framework framework = Framework::CSP;
  std::vector<Variable> vars;
  std::vector<VarArray> arrays;
  std::vector<Constraint> constraints;
  std::optional<Objective> objective;
  std::optional<std::vector<VarId>> decision;

  std::optional<VarId> find_var(std::string_view id) const;
  const VarArray* find_array(std::string_view id) const;

  // Rebuilds the lookup tables; call after editing vars or arrays by hand.
  void reindex();
  // Variables referenced by at least one constraint or by the objective.
  std::vector<bool> useful() const;

  bool operator==(const Instance& o) const;

 private:
  std::unordered_map<std::string, VarId> var_index_;
  std::unordered_map<std::string, std::size_t> array_index_;
};

// A solution as written in documents: ordered ids with values, nullopt for '*'.
struct Instantiation {
  std::vector<std::string> ids;
  std::vector<std::optional<std::int64_t>> values;
  std::string type;                   // "solution", "optimum" or empty
  std::optional<std::string> cost;    // raw attribute text

  // Throws DuplicateId if `id` is already present.
  void add(std::string id, std::optional<std::int64_t> value);
  std::map<std::string, std::int64_t> as_map() const;
};

// "v" or "vxk" tokens.
std::vector<std::int64_t> expand_vxk(const std::vector<std::string_view>& tokens);
std::vector<std::int64_t> expand_vxk(std::string_view text);

enum class ListContext { List, Matrix };

// Expands a token such as "x[2..3][]" or "x[]" against the arrays of `inst`.
// In Matrix context the token must reference a 2-dimensional array and the
// result has one row per selected first index.
std::vector<std::vector<std::string>> expand_compact(std::string_view token, const Instance& inst, ListContext ctx);
std::vector<std::string> expand_compact_list(std::string_view token, const Instance& inst);
bool is_compact_token(std::string_view token);

// "x[0][3]" -> "x_0_3".
std::string flat_name(std::string_view id);

// Solution checking

enum class CheckMode { PartialAllowed, TotalRequired };

struct Verdict {
  enum class Status { Satisfied, Violated, Incomplete } status = Status::Satisfied;
  std::vector<std::string> violated;  // constraint ids, or "#k" for anonymous ones
  std::vector<std::string> missing;   // useful variables without a value
  std::optional<Cost> cost;           // computed when the instance has an objective
  bool cost_verified = false;         // a declared cost was present and matched
};

// Maps an instantiation to a dense assignment. Throws UnknownVariable,
// ValueOutsideDomain and UndefinedVariable.
Assignment to_assignment(const Instance& inst, const Instantiation& sol);

Verdict check_solution(const Instance& inst, const Instantiation& sol, CheckMode mode = CheckMode::TotalRequired);
Verdict check_assignment(const Instance& inst, const Assignment& env, CheckMode mode = CheckMode::TotalRequired);

std::string constraint_label(const Instance& inst, std::size_t index);

}  // namespace xcsp3

#endif
