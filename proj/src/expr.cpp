#include "xcsp3/expr.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "text.hpp"
#include "xcsp3/error.hpp"

namespace xcsp3 {

namespace {

struct OpInfo {
  Op op;
  std::string_view name;
  int min_arity;
  int max_arity;  // -1 for unbounded
};

constexpr std::array<OpInfo, 27> kOps{{
    {Op::Neg, "neg", 1, 1},  {Op::Abs, "abs", 1, 1},  {Op::Add, "add", 2, -1},
    {Op::Sub, "sub", 2, 2},  {Op::Mul, "mul", 2, -1}, {Op::Div, "div", 2, 2},
    {Op::Mod, "mod", 2, 2},  {Op::Sqr, "sqr", 1, 1},  {Op::Pow, "pow", 2, 2},
    {Op::Min, "min", 2, -1}, {Op::Max, "max", 2, -1}, {Op::Dist, "dist", 2, 2},
    {Op::If, "if", 3, 3},    {Op::Lt, "lt", 2, 2},    {Op::Le, "le", 2, 2},
    {Op::Ge, "ge", 2, 2},    {Op::Gt, "gt", 2, 2},    {Op::Ne, "ne", 2, 2},
    {Op::Eq, "eq", 2, -1},   {Op::In, "in", 2, 2},    {Op::Not, "not", 1, 1},
    {Op::And, "and", 2, -1}, {Op::Or, "or", 2, -1},   {Op::Xor, "xor", 2, -1},
    {Op::Iff, "iff", 2, -1}, {Op::Imp, "imp", 2, 2},  {Op::Set, "set", 0, -1},
}};

const OpInfo* info(Op op) {
  for (const auto& i : kOps)
    if (i.op == op) return &i;
  return nullptr;
}

constexpr std::string_view kKeywords[] = {
    "neg",  "abs",    "add",   "sub",   "mul",    "div",    "mod",  "sqr",   "pow",  "min",
    "max",  "dist",   "lt",    "le",    "ge",     "gt",     "ne",   "eq",    "set",  "in",
    "not",  "and",    "or",    "xor",   "iff",    "imp",    "if",   "card",  "union", "inter",
    "diff", "sdiff",  "hull",  "djoint", "subset", "subseq", "supseq", "supset", "convex", "PI",
    "E",    "fdiv",   "fmod",  "sqrt",  "nroot",  "exp",    "ln",   "log",   "sin",  "cos",
    "tan",  "asin",   "acos",  "atan",  "sinh",   "cosh",   "tanh", "others",
};

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Expr parse_all() {
    for (std::size_t i = 0; i < s_.size(); ++i)
      if (text::is_space(s_[i]))
        throw Error(ErrorKind::ExpressionWhitespace,
                    "whitespace at offset " + std::to_string(i) + " in expression '" + std::string(s_) + "'");
    if (s_.empty()) throw Error(ErrorKind::Syntax, "empty expression");
    Expr e = parse_term();
    if (pos_ != s_.size()) error("unexpected trailing characters");
    if (e.op == Op::Set) error("a set literal may only appear as the second operand of in");
    return e;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    throw Error(ErrorKind::Syntax,
                msg + " at offset " + std::to_string(pos_) + " in expression '" + std::string(s_) + "'");
  }

  bool at(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

  void expect(char c) {
    if (!at(c)) error(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::int64_t parse_integer() {
    std::size_t b = pos_;
    if (at('+') || at('-')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && text::is_digit(s_[pos_])) ++pos_;
    if (pos_ == digits) error("expected digits");
    return text::parse_int(s_.substr(b, pos_ - b));
  }

  Expr parse_term() {
    if (pos_ >= s_.size()) error("unexpected end of expression");
    char c = s_[pos_];
    if (c == '%') {
      ++pos_;
      if (s_.substr(pos_, 3) == "...") {
        pos_ += 3;
        Expr e;
        e.op = Op::ParamRest;
        return e;
      }
      std::size_t b = pos_;
      while (pos_ < s_.size() && text::is_digit(s_[pos_])) ++pos_;
      if (pos_ == b) error("expected a parameter index after '%'");
      return Expr::param(text::parse_int(s_.substr(b, pos_ - b)));
    }
    if (c == '+' || c == '-' || text::is_digit(c)) return Expr::constant(parse_integer());
    if (!text::is_letter(c)) error(std::string("unexpected character '") + c + "'");
    std::size_t b = pos_;
    while (pos_ < s_.size() && (text::is_letter(s_[pos_]) || text::is_digit(s_[pos_]) || s_[pos_] == '_'))
      ++pos_;
    std::string_view word = s_.substr(b, pos_ - b);
    if (at('(')) return parse_call(word);
    if (is_keyword(word))
      throw Error(ErrorKind::ReservedIdentifier, "keyword '" + std::string(word) + "' used as a variable");
    while (at('[')) {
      ++pos_;
      std::size_t d = pos_;
      while (pos_ < s_.size() && text::is_digit(s_[pos_])) ++pos_;
      if (pos_ == d) error("expected an index");
      expect(']');
    }
    return Expr::var(std::string(s_.substr(b, pos_ - b)));
  }

  Expr parse_call(std::string_view word) {
    auto op = op_from_name(word);
    if (!op) error("unknown operator '" + std::string(word) + "'");
    expect('(');
    Expr e;
    e.op = *op;
    if (*op == Op::Set) {
      if (!at(')')) {
        e.set.push_back(parse_integer());
        while (at(',')) {
          ++pos_;
          e.set.push_back(parse_integer());
        }
      }
      expect(')');
      return e;
    }
    if (at(')')) error("operator '" + std::string(word) + "' needs operands");
    e.args.push_back(parse_term());
    while (at(',')) {
      ++pos_;
      e.args.push_back(parse_term());
    }
    expect(')');
    const OpInfo* oi = info(*op);
    int n = static_cast<int>(e.args.size());
    if (n < oi->min_arity || (oi->max_arity >= 0 && n > oi->max_arity))
      throw Error(ErrorKind::Arity, "operator '" + std::string(word) + "' does not accept " + std::to_string(n) +
                                        " operand(s)");
    for (std::size_t i = 0; i < e.args.size(); ++i) {
      bool set_slot = *op == Op::In && i == 1;
      if (set_slot && e.args[i].op != Op::Set && e.args[i].op != Op::Param)
        error("the second operand of in must be a set literal");
      if (!set_slot && e.args[i].op == Op::Set) error("a set literal may only appear as the second operand of in");
    }
    return e;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

template <typename Leaf>
std::int64_t eval_with(const Expr& e, const Leaf& leaf) {
  auto truth = [&](const Expr& a) { return eval_with(a, leaf) != 0; };
  switch (e.op) {
    case Op::Const: return e.value;
    case Op::Var: return leaf(e);
    case Op::Param:
    case Op::ParamRest: throw Error(ErrorKind::UnboundVariable, "unsubstituted template parameter");
    case Op::Set: throw Error(ErrorKind::Syntax, "set literal evaluated outside of in");
    case Op::Neg: return arith::neg(eval_with(e.args[0], leaf));
    case Op::Abs: return arith::abs(eval_with(e.args[0], leaf));
    case Op::Add: {
      std::int64_t r = eval_with(e.args[0], leaf);
      for (std::size_t i = 1; i < e.args.size(); ++i) r = arith::add(r, eval_with(e.args[i], leaf));
      return r;
    }
    case Op::Mul: {
      std::int64_t r = eval_with(e.args[0], leaf);
      for (std::size_t i = 1; i < e.args.size(); ++i) r = arith::mul(r, eval_with(e.args[i], leaf));
      return r;
    }
    case Op::Sub: return arith::sub(eval_with(e.args[0], leaf), eval_with(e.args[1], leaf));
    case Op::Div: return arith::div(eval_with(e.args[0], leaf), eval_with(e.args[1], leaf));
    case Op::Mod: return arith::mod(eval_with(e.args[0], leaf), eval_with(e.args[1], leaf));
    case Op::Sqr: {
      auto v = eval_with(e.args[0], leaf);
      return arith::mul(v, v);
    }
    case Op::Pow: return arith::pow(eval_with(e.args[0], leaf), eval_with(e.args[1], leaf));
    case Op::Min: {
      std::int64_t r = eval_with(e.args[0], leaf);
      for (std::size_t i = 1; i < e.args.size(); ++i) r = std::min(r, eval_with(e.args[i], leaf));
      return r;
    }
    case Op::Max: {
      std::int64_t r = eval_with(e.args[0], leaf);
      for (std::size_t i = 1; i < e.args.size(); ++i) r = std::max(r, eval_with(e.args[i], leaf));
      return r;
    }
    case Op::Dist: return arith::abs(arith::sub(eval_with(e.args[0], leaf), eval_with(e.args[1], leaf)));
    case Op::If: return truth(e.args[0]) ? eval_with(e.args[1], leaf) : eval_with(e.args[2], leaf);
    case Op::Lt: return eval_with(e.args[0], leaf) < eval_with(e.args[1], leaf);
    case Op::Le: return eval_with(e.args[0], leaf) <= eval_with(e.args[1], leaf);
    case Op::Ge: return eval_with(e.args[0], leaf) >= eval_with(e.args[1], leaf);
    case Op::Gt: return eval_with(e.args[0], leaf) > eval_with(e.args[1], leaf);
    case Op::Ne: return eval_with(e.args[0], leaf) != eval_with(e.args[1], leaf);
    case Op::Eq: {
      std::int64_t first = eval_with(e.args[0], leaf);
      bool all = true;
      for (std::size_t i = 1; i < e.args.size(); ++i) all = (eval_with(e.args[i], leaf) == first) && all;
      return all;
    }
    case Op::In: {
      auto v = eval_with(e.args[0], leaf);
      const auto& s = e.args[1].set;
      return std::find(s.begin(), s.end(), v) != s.end();
    }
    case Op::Not: return !truth(e.args[0]);
    case Op::And: {
      bool r = true;
      for (const auto& a : e.args) r = truth(a) && r;
      return r;
    }
    case Op::Or: {
      bool r = false;
      for (const auto& a : e.args) r = truth(a) || r;
      return r;
    }
    case Op::Xor: {
      bool r = false;
      for (const auto& a : e.args) r ^= truth(a);
      return r;
    }
    case Op::Iff: {
      bool first = truth(e.args[0]);
      bool all = true;
      for (std::size_t i = 1; i < e.args.size(); ++i) all = (truth(e.args[i]) == first) && all;
      return all;
    }
    case Op::Imp: {
      bool a = truth(e.args[0]);
      bool b = truth(e.args[1]);
      return !a || b;
    }
  }
  return 0;
}

void print_to(const Expr& e, std::string& out) {
  switch (e.op) {
    case Op::Const: out += std::to_string(e.value); return;
    case Op::Var: out += e.name; return;
    case Op::Param: out += '%' + std::to_string(e.value); return;
    case Op::ParamRest: out += "%..."; return;
    case Op::Set:
      out += "set(";
      for (std::size_t i = 0; i < e.set.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(e.set[i]);
      }
      out += ')';
      return;
    default: break;
  }
  out += op_name(e.op);
  out += '(';
  for (std::size_t i = 0; i < e.args.size(); ++i) {
    if (i) out += ',';
    print_to(e.args[i], out);
  }
  out += ')';
}

}  // namespace

std::string_view op_name(Op op) {
  switch (op) {
    case Op::Const: return "const";
    case Op::Var: return "var";
    case Op::Param: return "param";
    case Op::ParamRest: return "rest";
    default: break;
  }
  return info(op)->name;
}

std::optional<Op> op_from_name(std::string_view name) {
  for (const auto& i : kOps)
    if (i.name == name) return i.op;
  return std::nullopt;
}

bool is_keyword(std::string_view word) {
  return std::find(std::begin(kKeywords), std::end(kKeywords), word) != std::end(kKeywords);
}

bool is_boolean_op(Op op) {
  switch (op) {
    case Op::Lt: case Op::Le: case Op::Ge: case Op::Gt: case Op::Ne: case Op::Eq: case Op::In:
    case Op::Not: case Op::And: case Op::Or: case Op::Xor: case Op::Iff: case Op::Imp:
      return true;
    default:
      return false;
  }
}

Expr Expr::constant(std::int64_t v) {
  Expr e;
  e.op = Op::Const;
  e.value = v;
  return e;
}

Expr Expr::var(std::string id, VarId index) {
  Expr e;
  e.op = Op::Var;
  e.name = std::move(id);
  e.value = index;
  return e;
}

Expr Expr::param(std::int64_t k) {
  Expr e;
  e.op = Op::Param;
  e.value = k;
  return e;
}

Expr Expr::make(Op op, std::vector<Expr> args) {
  Expr e;
  e.op = op;
  e.args = std::move(args);
  return e;
}

bool Expr::operator==(const Expr& o) const {
  if (op != o.op) return false;
  if (op != Op::Var && value != o.value) return false;
  return name == o.name && set == o.set && args == o.args;
}

Expr parse_expr(std::string_view text) { return Parser(text).parse_all(); }

Expr parse_operand(std::string_view token) {
  if (text::looks_like_int(token)) return Expr::constant(text::parse_int(token));
  return parse_expr(token);
}

std::string print(const Expr& e) {
  std::string out;
  print_to(e, out);
  return out;
}

Expr substitute_params(const Expr& t, const std::vector<Expr>& args) {
  if (t.op == Op::Param) {
    if (t.value < 0 || static_cast<std::size_t>(t.value) >= args.size())
      throw Error(ErrorKind::MissingArgument, "no argument for %" + std::to_string(t.value));
    return args[static_cast<std::size_t>(t.value)];
  }
  if (t.op == Op::ParamRest)
    throw Error(ErrorKind::RestInsideExpression, "%... cannot occur inside a functional expression");
  Expr out = t;
  for (auto& a : out.args) a = substitute_params(a, args);
  return out;
}

std::int64_t max_param(const Expr& e, bool* has_rest) {
  std::int64_t m = -1;
  if (e.op == Op::Param) m = e.value;
  if (e.op == Op::ParamRest && has_rest) *has_rest = true;
  for (const auto& a : e.args) m = std::max(m, max_param(a, has_rest));
  return m;
}

std::vector<std::string> free_vars(const Expr& e) {
  std::vector<std::string> out;
  std::function<void(const Expr&)> walk = [&](const Expr& n) {
    if (n.op == Op::Var && std::find(out.begin(), out.end(), n.name) == out.end()) out.push_back(n.name);
    for (const auto& a : n.args) walk(a);
  };
  walk(e);
  return out;
}

void collect_var_ids(const Expr& e, std::vector<VarId>& out) {
  if (e.op == Op::Var) out.push_back(static_cast<VarId>(e.value));
  for (const auto& a : e.args) collect_var_ids(a, out);
}

void resolve(Expr& e, const std::function<std::optional<VarId>(const std::string&)>& lookup) {
  if (e.op == Op::Var) {
    auto id = lookup(e.name);
    if (!id) throw Error(ErrorKind::UnknownVariable, "unknown variable '" + e.name + "'");
    e.value = *id;
  }
  for (auto& a : e.args) resolve(a, lookup);
}

std::int64_t eval(const Expr& e, const Assignment& env) {
  return eval_with(e, [&](const Expr& v) -> std::int64_t {
    if (v.value < 0 || static_cast<std::size_t>(v.value) >= env.size())
      throw Error(ErrorKind::UnboundVariable, "variable '" + v.name + "' is not resolved");
    auto id = static_cast<VarId>(v.value);
    switch (env.state(id)) {
      case Assignment::State::Set: return env.value(id);
      case Assignment::State::Star: throw Error(ErrorKind::StarInScope, "variable '" + v.name + "' is '*'");
      case Assignment::State::Unset: break;
    }
    throw Error(ErrorKind::UnboundVariable, "variable '" + v.name + "' has no value");
  });
}

std::int64_t eval(const Expr& e, const std::map<std::string, std::int64_t>& env) {
  return eval_with(e, [&](const Expr& v) -> std::int64_t {
    auto it = env.find(v.name);
    if (it == env.end()) throw Error(ErrorKind::UnboundVariable, "variable '" + v.name + "' has no value");
    return it->second;
  });
}

namespace arith {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer overflow in addition");
  return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer overflow in subtraction");
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer overflow in multiplication");
  return r;
}

std::int64_t div(std::int64_t a, std::int64_t b) {
  if (b == 0) throw Error(ErrorKind::DivisionByZero, "division by zero");
  if (a == std::numeric_limits<std::int64_t>::min() && b == -1)
    throw Error(ErrorKind::Overflow, "integer overflow in division");
  return a / b;
}

std::int64_t mod(std::int64_t a, std::int64_t b) {
  if (b == 0) throw Error(ErrorKind::DivisionByZero, "modulo by zero");
  if (b == -1) return 0;
  return a % b;
}

std::int64_t pow(std::int64_t a, std::int64_t b) {
  if (b < 0) throw Error(ErrorKind::NegativeExponent, "negative exponent " + std::to_string(b));
  std::int64_t result = 1;
  std::int64_t base = a;
  while (b > 0) {
    if (b & 1) result = mul(result, base);
    b >>= 1;
    if (b > 0) base = mul(base, base);
  }
  return result;
}

std::int64_t neg(std::int64_t a) { return sub(0, a); }

std::int64_t abs(std::int64_t a) { return a < 0 ? neg(a) : a; }

}  // namespace arith

}  // namespace xcsp3
