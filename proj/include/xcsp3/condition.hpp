#ifndef XCSP3_CONDITION_HPP
#define XCSP3_CONDITION_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "xcsp3/assignment.hpp"
#include "xcsp3/domain.hpp"
#include "xcsp3/expr.hpp"

namespace xcsp3 {

enum class CondOp : std::uint8_t { Lt, Le, Gt, Ge, Eq, Ne, In, NotIn };

std::string_view cond_op_name(CondOp op);
std::optional<CondOp> cond_op_from_name(std::string_view name);
bool compare(std::int64_t lhs, CondOp op, std::int64_t rhs);

// Relational operators take an integer or a variable (an Expr that is Const
// or Var); in/notin take an interval or an explicit integer set.
struct Condition {
  CondOp op = CondOp::Eq;
  std::variant<Expr, Interval, std::vector<std::int64_t>> operand;

  bool operator==(const Condition&) const = default;
};

// Parses "(op,operand)"; leading/trailing whitespace around the parentheses is
// the caller's business, anything inside is rejected.
Condition parse_condition(std::string_view text);
std::string format_condition(const Condition& c);

bool eval_condition(std::int64_t lhs, const Condition& c, const Assignment& env);
bool eval_condition(std::int64_t lhs, const Condition& c, const std::map<std::string, std::int64_t>& env);

// The operand variable, if any.
const Expr* condition_var(const Condition& c);

}  // namespace xcsp3

#endif
