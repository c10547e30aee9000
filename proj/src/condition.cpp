#include "xcsp3/condition.hpp"

#include <algorithm>

#include "text.hpp"
#include "xcsp3/error.hpp"

namespace xcsp3 {

namespace {

constexpr std::pair<CondOp, std::string_view> kNames[] = {
    {CondOp::Lt, "lt"}, {CondOp::Le, "le"}, {CondOp::Gt, "gt"}, {CondOp::Ge, "ge"},
    {CondOp::Eq, "eq"}, {CondOp::Ne, "ne"}, {CondOp::In, "in"}, {CondOp::NotIn, "notin"},
};

bool is_set_op(CondOp op) { return op == CondOp::In || op == CondOp::NotIn; }

template <typename Env>
bool eval_with(std::int64_t lhs, const Condition& c, const Env& env) {
  if (const auto* e = std::get_if<Expr>(&c.operand)) {
    std::int64_t rhs;
    try {
      rhs = eval(*e, env);
    } catch (const Error& err) {
      if (err.kind() == ErrorKind::UnboundVariable || err.kind() == ErrorKind::StarInScope)
        throw Error(ErrorKind::UnresolvedOperand, "condition operand " + print(*e) + " has no value");
      throw;
    }
    return compare(lhs, c.op, rhs);
  }
  bool member;
  if (const auto* iv = std::get_if<Interval>(&c.operand)) {
    member = iv->contains(lhs);
  } else {
    const auto& s = std::get<std::vector<std::int64_t>>(c.operand);
    member = std::find(s.begin(), s.end(), lhs) != s.end();
  }
  return c.op == CondOp::In ? member : !member;
}

}  // namespace

std::string_view cond_op_name(CondOp op) {
  for (const auto& [o, n] : kNames)
    if (o == op) return n;
  return "?";
}

std::optional<CondOp> cond_op_from_name(std::string_view name) {
  for (const auto& [o, n] : kNames)
    if (n == name) return o;
  return std::nullopt;
}

bool compare(std::int64_t lhs, CondOp op, std::int64_t rhs) {
  switch (op) {
    case CondOp::Lt: return lhs < rhs;
    case CondOp::Le: return lhs <= rhs;
    case CondOp::Gt: return lhs > rhs;
    case CondOp::Ge: return lhs >= rhs;
    case CondOp::Eq: return lhs == rhs;
    case CondOp::Ne: return lhs != rhs;
    default: break;
  }
  throw Error(ErrorKind::Syntax, "set operator used as a relational operator");
}

Condition parse_condition(std::string_view s) {
  std::string shown(s);
  if (text::has_space(s))
    throw Error(ErrorKind::ConditionWhitespace, "whitespace inside condition '" + shown + "'");
  if (s.size() < 5 || s.front() != '(' || s.back() != ')')
    throw Error(ErrorKind::Syntax, "condition must have the form (operator,operand), got '" + shown + "'");
  auto body = s.substr(1, s.size() - 2);
  auto comma = body.find(',');
  if (comma == std::string_view::npos)
    throw Error(ErrorKind::Syntax, "condition must have the form (operator,operand), got '" + shown + "'");
  auto op = cond_op_from_name(body.substr(0, comma));
  if (!op) throw Error(ErrorKind::Syntax, "unknown operator in condition '" + shown + "'");
  auto rhs = body.substr(comma + 1);
  Condition c;
  c.op = *op;
  if (is_set_op(*op)) {
    if (rhs.starts_with("set(")) {
      Expr e = parse_expr("in(0," + std::string(rhs) + ")");
      c.operand = e.args[1].set;
    } else {
      c.operand = parse_interval(rhs);
    }
  } else {
    Expr e = parse_operand(rhs);
    if (!e.is_const() && !e.is_var())
      throw Error(ErrorKind::Syntax, "relational condition operand must be a value or a variable in '" + shown + "'");
    c.operand = std::move(e);
  }
  return c;
}

std::string format_condition(const Condition& c) {
  std::string out = "(";
  out += cond_op_name(c.op);
  out += ',';
  if (const auto* e = std::get_if<Expr>(&c.operand)) {
    out += print(*e);
  } else if (const auto* iv = std::get_if<Interval>(&c.operand)) {
    out += format_interval(*iv);
  } else {
    Expr s;
    s.op = Op::Set;
    s.set = std::get<std::vector<std::int64_t>>(c.operand);
    out += print(s);
  }
  return out + ")";
}

bool eval_condition(std::int64_t lhs, const Condition& c, const Assignment& env) { return eval_with(lhs, c, env); }

bool eval_condition(std::int64_t lhs, const Condition& c, const std::map<std::string, std::int64_t>& env) {
  return eval_with(lhs, c, env);
}

const Expr* condition_var(const Condition& c) {
  const auto* e = std::get_if<Expr>(&c.operand);
  return e && e->is_var() ? e : nullptr;
}

}  // namespace xcsp3
