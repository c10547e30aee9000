#ifndef XCSP3_CONSTRAINTS_HPP
#define XCSP3_CONSTRAINTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "xcsp3/assignment.hpp"
#include "xcsp3/condition.hpp"
#include "xcsp3/domain.hpp"
#include "xcsp3/expr.hpp"

namespace xcsp3 {

// Operands are expressions throughout. Slots that the format restricts to
// variables (or to a value or a variable) hold Var / Const nodes, and the
// parser enforces the restriction.
using Operands = std::vector<Expr>;
using Matrix = std::vector<Operands>;

// A table entry; nullopt is '*'.
using TableValue = std::optional<std::int64_t>;
using Tuple = std::vector<TableValue>;

struct Intension {
  Expr expr;
  bool operator==(const Intension&) const = default;
};

struct Extension {
  Operands list;
  bool supports = true;
  std::vector<Tuple> tuples;    // arity >= 2
  std::optional<Domain> unary;  // arity 1, domain-style values
  bool operator==(const Extension&) const = default;
};

struct Transition {
  std::string from;
  std::int64_t value = 0;
  std::string to;
  bool operator==(const Transition&) const = default;
};

struct Regular {
  Operands list;
  std::vector<Transition> transitions;
  std::string start;
  std::vector<std::string> finals;
  bool operator==(const Regular&) const = default;
};

struct Mdd {
  Operands list;
  std::vector<Transition> transitions;
  bool operator==(const Mdd&) const = default;
};

struct AllDifferent {
  Operands list;
  std::vector<std::int64_t> except;
  bool operator==(const AllDifferent&) const = default;
};

struct AllDifferentLists {
  Matrix lists;
  std::vector<std::vector<std::int64_t>> except;
  bool operator==(const AllDifferentLists&) const = default;
};

struct AllDifferentMatrix {
  Matrix matrix;
  bool operator==(const AllDifferentMatrix&) const = default;
};

struct AllEqual {
  Operands list;
  bool operator==(const AllEqual&) const = default;
};

struct Ordered {
  Operands list;
  Operands lengths;  // empty means all zero
  CondOp op = CondOp::Le;
  bool operator==(const Ordered&) const = default;
};

struct Lex {
  Matrix lists;
  CondOp op = CondOp::Le;
  bool operator==(const Lex&) const = default;
};

struct LexMatrix {
  Matrix matrix;
  CondOp op = CondOp::Le;
  bool operator==(const LexMatrix&) const = default;
};

struct Sum {
  Operands list;
  Operands coeffs;  // empty means all ones
  Condition condition;
  bool operator==(const Sum&) const = default;
};

struct Count {
  Operands list;
  Operands values;
  Condition condition;
  bool operator==(const Count&) const = default;
};

struct NValues {
  Operands list;
  std::vector<std::int64_t> except;
  Condition condition;
  bool operator==(const NValues&) const = default;
};

struct Cardinality {
  Operands list;
  Operands values;
  bool closed = false;
  std::vector<std::variant<Expr, Interval>> occurs;
  bool operator==(const Cardinality&) const = default;
};

struct Minimum {
  Operands list;
  Condition condition;
  bool operator==(const Minimum&) const = default;
};

struct Maximum {
  Operands list;
  Condition condition;
  bool operator==(const Maximum&) const = default;
};

using ElementRhs = std::variant<Expr, Condition>;

struct Element {
  Operands list;
  Expr index;
  ElementRhs rhs;
  bool operator==(const Element&) const = default;
};

struct ElementMatrix {
  Matrix matrix;
  Expr row;
  Expr col;
  ElementRhs rhs;
  bool operator==(const ElementMatrix&) const = default;
};

struct Channel {
  Operands list;
  bool operator==(const Channel&) const = default;
};

struct ChannelLists {
  Operands first;
  Operands second;
  bool operator==(const ChannelLists&) const = default;
};

struct ChannelValue {
  Operands list;
  Expr value;
  bool operator==(const ChannelValue&) const = default;
};

struct NoOverlap {
  Operands origins;
  Operands lengths;
  bool zero_ignored = true;
  bool operator==(const NoOverlap&) const = default;
};

struct NoOverlapBoxes {
  Matrix origins;
  Matrix lengths;
  bool zero_ignored = true;
  bool operator==(const NoOverlapBoxes&) const = default;
};

struct Cumulative {
  Operands origins;
  Operands lengths;
  Operands heights;
  Condition condition;
  bool operator==(const Cumulative&) const = default;
};

struct Circuit {
  Operands list;
  std::optional<Expr> size;
  bool operator==(const Circuit&) const = default;
};

struct InstantiationCtr {
  Operands list;
  std::vector<std::int64_t> values;
  bool operator==(const InstantiationCtr&) const = default;
};

using ConstraintKind =
    std::variant<Intension, Extension, Regular, Mdd, AllDifferent, AllDifferentLists, AllDifferentMatrix, AllEqual,
                 Ordered, Lex, LexMatrix, Sum, Count, NValues, Cardinality, Minimum, Maximum, Element, ElementMatrix,
                 Channel, ChannelLists, ChannelValue, NoOverlap, NoOverlapBoxes, Cumulative, Circuit,
                 InstantiationCtr>;

struct Constraint {
  std::string id;  // may be empty
  ConstraintKind kind;
  std::vector<std::string> classes;
  std::string note;
  std::vector<VarId> scope;  // sorted, filled by the parser

  bool operator==(const Constraint& o) const {
    return id == o.id && kind == o.kind && classes == o.classes && note == o.note;
  }
};

// Short name used in reports: "allDifferent", "allDifferent-list", "lex-matrix", ...
std::string_view kind_name(const ConstraintKind& kind);

// Every Var node reachable from the constraint, sorted and deduplicated.
std::vector<VarId> compute_scope(const ConstraintKind& kind);

// Applies `f` to every expression held by the constraint, mutably.
void for_each_expr(ConstraintKind& kind, const std::function<void(Expr&)>& f);
void for_each_expr(const ConstraintKind& kind, const std::function<void(const Expr&)>& f);

// Full semantic check; every scope variable must be set.
bool check(const ConstraintKind& kind, const Assignment& env);

// False only when the constraint is violated by every completion of `env`.
// Constraints without a dedicated partial test answer true.
bool may_hold(const ConstraintKind& kind, const Assignment& env);

// Checks structural prerequisites (list sizes and the like). Throws Structure.
void validate_structure(const ConstraintKind& kind);

// Objectives

enum class Sense { Minimize, Maximize };
enum class ObjectiveType { Expression, Sum, Minimum, Maximum, NValues, Lex };

std::string_view objective_type_name(ObjectiveType t);

struct Objective {
  std::string id;
  Sense sense = Sense::Minimize;
  ObjectiveType type = ObjectiveType::Expression;
  Expr expr;                          // Expression form
  Operands list;                      // specialized forms
  std::vector<std::int64_t> coeffs;  // empty means all ones
  std::string note;

  bool operator==(const Objective&) const = default;
};

// One component, except for lex which yields one per operand.
using Cost = std::vector<std::int64_t>;

Cost eval_objective(const Objective& obj, const Assignment& env);
std::string format_cost(const Cost& cost);
// True when `a` is strictly better than `b` for `sense`.
bool better(const Cost& a, const Cost& b, Sense sense);

}  // namespace xcsp3

#endif
