#ifndef XCSP3_EXPR_HPP
#define XCSP3_EXPR_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xcsp3/assignment.hpp"

namespace xcsp3 {

enum class Op : std::uint8_t {
  Const,
  Var,
  Param,
  ParamRest,
  Set,
  // integer operators
  Neg, Abs, Add, Sub, Mul, Div, Mod, Sqr, Pow, Min, Max, Dist, If,
  // relational operators
  Lt, Le, Ge, Gt, Ne, Eq, In,
  // logical operators
  Not, And, Or, Xor, Iff, Imp,
};

std::string_view op_name(Op op);
std::optional<Op> op_from_name(std::string_view name);
bool is_keyword(std::string_view word);
bool is_boolean_op(Op op);

struct Expr {
  Op op = Op::Const;
  // Const: the value. Param: the index. Var: resolved VarId, -1 if unresolved.
  std::int64_t value = 0;
  std::string name;                // Var only
  std::vector<std::int64_t> set;   // Set only
  std::vector<Expr> args;

  static Expr constant(std::int64_t v);
  static Expr var(std::string id, VarId index = -1);
  static Expr param(std::int64_t k);
  static Expr make(Op op, std::vector<Expr> args);

  bool is_const() const { return op == Op::Const; }
  bool is_var() const { return op == Op::Var; }

  // Variables compare by name; the resolved index is ignored.
  bool operator==(const Expr& other) const;
};

Expr parse_expr(std::string_view text);

// A single list token: integer constant, variable reference, %k, %... or an
// expression. Used for list contents where any of these may appear.
Expr parse_operand(std::string_view token);

std::string print(const Expr& e);

// Replaces Param(k) with args[k]. ParamRest must not occur.
Expr substitute_params(const Expr& tmpl, const std::vector<Expr>& args);

// Highest %k index, or -1. Sets *has_rest when %... occurs anywhere.
std::int64_t max_param(const Expr& e, bool* has_rest = nullptr);

std::vector<std::string> free_vars(const Expr& e);
void collect_var_ids(const Expr& e, std::vector<VarId>& out);

// Resolves every Var node through `lookup`; throws UnknownVariable when it
// yields nothing.
void resolve(Expr& e, const std::function<std::optional<VarId>(const std::string&)>& lookup);

// Evaluation. Booleans are 0 and 1; connectives treat any nonzero as true.
std::int64_t eval(const Expr& e, const Assignment& env);
std::int64_t eval(const Expr& e, const std::map<std::string, std::int64_t>& env);

// Checked arithmetic shared with the constraint checkers.
namespace arith {
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t sub(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
std::int64_t div(std::int64_t a, std::int64_t b);
std::int64_t mod(std::int64_t a, std::int64_t b);
std::int64_t pow(std::int64_t a, std::int64_t b);
std::int64_t neg(std::int64_t a);
std::int64_t abs(std::int64_t a);
}  // namespace arith

}  // namespace xcsp3

#endif
