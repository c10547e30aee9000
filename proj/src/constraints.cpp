#include "xcsp3/constraints.hpp"

#include <algorithm>
#include <set>

#include "xcsp3/error.hpp"

namespace xcsp3 {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::string_view kind_name(const ConstraintKind& kind) {
  return std::visit(overloaded{
                        [](const Intension&) { return std::string_view("intension"); },
                        [](const Extension&) { return std::string_view("extension"); },
                        [](const Regular&) { return std::string_view("regular"); },
                        [](const Mdd&) { return std::string_view("mdd"); },
                        [](const AllDifferent&) { return std::string_view("allDifferent"); },
                        [](const AllDifferentLists&) { return std::string_view("allDifferent-list"); },
                        [](const AllDifferentMatrix&) { return std::string_view("allDifferent-matrix"); },
                        [](const AllEqual&) { return std::string_view("allEqual"); },
                        [](const Ordered&) { return std::string_view("ordered"); },
                        [](const Lex&) { return std::string_view("lex"); },
                        [](const LexMatrix&) { return std::string_view("lex-matrix"); },
                        [](const Sum&) { return std::string_view("sum"); },
                        [](const Count&) { return std::string_view("count"); },
                        [](const NValues&) { return std::string_view("nValues"); },
                        [](const Cardinality&) { return std::string_view("cardinality"); },
                        [](const Minimum&) { return std::string_view("minimum"); },
                        [](const Maximum&) { return std::string_view("maximum"); },
                        [](const Element&) { return std::string_view("element"); },
                        [](const ElementMatrix&) { return std::string_view("element-matrix"); },
                        [](const Channel&) { return std::string_view("channel"); },
                        [](const ChannelLists&) { return std::string_view("channel"); },
                        [](const ChannelValue&) { return std::string_view("channel"); },
                        [](const NoOverlap&) { return std::string_view("noOverlap"); },
                        [](const NoOverlapBoxes&) { return std::string_view("noOverlap"); },
                        [](const Cumulative&) { return std::string_view("cumulative"); },
                        [](const Circuit&) { return std::string_view("circuit"); },
                        [](const InstantiationCtr&) { return std::string_view("instantiation"); },
                    },
                    kind);
}

namespace {

template <typename K, typename F>
void each_expr(K& kind, F&& f) {
  auto all = [&](auto& list) {
    for (auto& e : list) f(e);
  };
  auto rows = [&](auto& m) {
    for (auto& r : m) all(r);
  };
  auto cond = [&](auto& c) {
    if (auto* e = std::get_if<Expr>(&c.operand)) f(*e);
  };
  auto rhs = [&](auto& r) {
    if (auto* e = std::get_if<Expr>(&r))
      f(*e);
    else
      cond(std::get<Condition>(r));
  };
  std::visit(
      [&](auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Intension>) {
          f(c.expr);
        } else if constexpr (std::is_same_v<T, Extension> || std::is_same_v<T, Regular> || std::is_same_v<T, Mdd> ||
                             std::is_same_v<T, AllDifferent> || std::is_same_v<T, AllEqual> ||
                             std::is_same_v<T, Channel> || std::is_same_v<T, InstantiationCtr>) {
          all(c.list);
        } else if constexpr (std::is_same_v<T, AllDifferentLists> || std::is_same_v<T, Lex>) {
          rows(c.lists);
        } else if constexpr (std::is_same_v<T, AllDifferentMatrix> || std::is_same_v<T, LexMatrix>) {
          rows(c.matrix);
        } else if constexpr (std::is_same_v<T, Ordered>) {
          all(c.list);
          all(c.lengths);
        } else if constexpr (std::is_same_v<T, Sum>) {
          all(c.list);
          all(c.coeffs);
          cond(c.condition);
        } else if constexpr (std::is_same_v<T, Count>) {
          all(c.list);
          all(c.values);
          cond(c.condition);
        } else if constexpr (std::is_same_v<T, NValues> || std::is_same_v<T, Minimum> ||
                             std::is_same_v<T, Maximum>) {
          all(c.list);
          cond(c.condition);
        } else if constexpr (std::is_same_v<T, Cardinality>) {
          all(c.list);
          all(c.values);
          for (auto& o : c.occurs)
            if (auto* e = std::get_if<Expr>(&o)) f(*e);
        } else if constexpr (std::is_same_v<T, Element>) {
          all(c.list);
          f(c.index);
          rhs(c.rhs);
        } else if constexpr (std::is_same_v<T, ElementMatrix>) {
          rows(c.matrix);
          f(c.row);
          f(c.col);
          rhs(c.rhs);
        } else if constexpr (std::is_same_v<T, ChannelLists>) {
          all(c.first);
          all(c.second);
        } else if constexpr (std::is_same_v<T, ChannelValue>) {
          all(c.list);
          f(c.value);
        } else if constexpr (std::is_same_v<T, NoOverlap>) {
          all(c.origins);
          all(c.lengths);
        } else if constexpr (std::is_same_v<T, NoOverlapBoxes>) {
          rows(c.origins);
          rows(c.lengths);
        } else if constexpr (std::is_same_v<T, Cumulative>) {
          all(c.origins);
          all(c.lengths);
          all(c.heights);
          cond(c.condition);
        } else if constexpr (std::is_same_v<T, Circuit>) {
          all(c.list);
          if (c.size) f(*c.size);
        } else {
          static_assert(sizeof(T) == 0, "unhandled constraint kind");
        }
      },
      kind);
}

[[noreturn]] void structure(std::string_view kind, const std::string& msg) {
  throw Error(ErrorKind::Structure, std::string(kind) + ": " + msg);
}

void need(bool ok, std::string_view kind, const std::string& msg) {
  if (!ok) structure(kind, msg);
}

void same_width(const Matrix& m, std::size_t min_rows, std::size_t min_width, std::string_view kind) {
  need(m.size() >= min_rows, kind, "needs at least " + std::to_string(min_rows) + " rows");
  for (const auto& r : m) {
    need(r.size() == m.front().size(), kind, "rows must have the same length");
    need(r.size() >= min_width, kind, "rows need at least " + std::to_string(min_width) + " elements");
  }
}

bool relational(CondOp op) { return op == CondOp::Lt || op == CondOp::Le || op == CondOp::Ge || op == CondOp::Gt; }

}  // namespace

void for_each_expr(ConstraintKind& kind, const std::function<void(Expr&)>& f) { each_expr(kind, f); }

void for_each_expr(const ConstraintKind& kind, const std::function<void(const Expr&)>& f) { each_expr(kind, f); }

std::vector<VarId> compute_scope(const ConstraintKind& kind) {
  std::vector<VarId> out;
  each_expr(kind, [&](const Expr& e) { collect_var_ids(e, out); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void validate_structure(const ConstraintKind& kind) {
  std::string_view name = kind_name(kind);
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Extension>) {
          need(!c.list.empty(), name, "empty scope");
          if (c.list.size() == 1) {
            need(c.unary.has_value(), name, "unary table expected");
          } else {
            need(!c.unary.has_value(), name, "unary values on a non-unary scope");
            for (const auto& t : c.tuples) need(t.size() == c.list.size(), name, "tuple width differs from scope size");
          }
        } else if constexpr (std::is_same_v<T, Regular>) {
          need(!c.list.empty(), name, "empty list");
          need(!c.finals.empty(), name, "no final state");
        } else if constexpr (std::is_same_v<T, Mdd>) {
          need(!c.list.empty(), name, "empty list");
          need(!c.transitions.empty(), name, "no transition");
          std::set<std::string> targets;
          for (const auto& t : c.transitions) targets.insert(t.to);
          std::set<std::string> roots;
          for (const auto& t : c.transitions)
            if (!targets.count(t.from)) roots.insert(t.from);
          need(roots.size() == 1, name, "exactly one root node expected, found " + std::to_string(roots.size()));
        } else if constexpr (std::is_same_v<T, AllDifferent> || std::is_same_v<T, AllEqual>) {
          need(c.list.size() >= 2, name, "needs at least 2 operands");
        } else if constexpr (std::is_same_v<T, AllDifferentLists>) {
          same_width(c.lists, 2, 1, name);
          for (const auto& t : c.except) need(t.size() == c.lists.front().size(), name, "except tuple width");
        } else if constexpr (std::is_same_v<T, AllDifferentMatrix>) {
          same_width(c.matrix, 2, 2, name);
        } else if constexpr (std::is_same_v<T, Ordered>) {
          need(c.list.size() >= 2, name, "needs at least 2 variables");
          need(c.lengths.empty() || c.lengths.size() + 1 == c.list.size(), name,
               "lengths must have one element less than the list");
          need(relational(c.op), name, "operator must be lt, le, ge or gt");
        } else if constexpr (std::is_same_v<T, Lex>) {
          same_width(c.lists, 2, 1, name);
          need(relational(c.op), name, "operator must be lt, le, ge or gt");
        } else if constexpr (std::is_same_v<T, LexMatrix>) {
          same_width(c.matrix, 2, 2, name);
          need(relational(c.op), name, "operator must be lt, le, ge or gt");
        } else if constexpr (std::is_same_v<T, Sum>) {
          need(!c.list.empty(), name, "empty list");
          need(c.coeffs.empty() || c.coeffs.size() == c.list.size(), name, "coeffs and list differ in size");
        } else if constexpr (std::is_same_v<T, Count>) {
          need(!c.list.empty(), name, "empty list");
          need(!c.values.empty(), name, "empty values");
        } else if constexpr (std::is_same_v<T, NValues> || std::is_same_v<T, Minimum> ||
                             std::is_same_v<T, Maximum>) {
          need(!c.list.empty(), name, "empty list");
        } else if constexpr (std::is_same_v<T, Cardinality>) {
          need(!c.list.empty(), name, "empty list");
          need(!c.values.empty() && c.values.size() == c.occurs.size(), name,
               "values and occurs must have the same non-zero size");
        } else if constexpr (std::is_same_v<T, Element>) {
          need(!c.list.empty(), name, "empty list");
        } else if constexpr (std::is_same_v<T, ElementMatrix>) {
          same_width(c.matrix, 1, 1, name);
        } else if constexpr (std::is_same_v<T, Channel>) {
          need(c.list.size() >= 2, name, "needs at least 2 variables");
        } else if constexpr (std::is_same_v<T, ChannelLists>) {
          need(c.first.size() >= 2, name, "needs at least 2 variables per list");
          need(c.first.size() <= c.second.size(), name, "the first list must not be longer than the second");
        } else if constexpr (std::is_same_v<T, ChannelValue>) {
          need(!c.list.empty(), name, "empty list");
        } else if constexpr (std::is_same_v<T, NoOverlap>) {
          need(c.origins.size() >= 2 && c.origins.size() == c.lengths.size(), name,
               "origins and lengths must have the same size, at least 2");
        } else if constexpr (std::is_same_v<T, NoOverlapBoxes>) {
          same_width(c.origins, 2, 1, name);
          same_width(c.lengths, 2, 1, name);
          need(c.origins.size() == c.lengths.size() && c.origins.front().size() == c.lengths.front().size(), name,
               "origins and lengths must have the same shape");
        } else if constexpr (std::is_same_v<T, Cumulative>) {
          need(c.origins.size() >= 2 && c.origins.size() == c.lengths.size() && c.lengths.size() == c.heights.size(),
               name, "origins, lengths and heights must have the same size, at least 2");
        } else if constexpr (std::is_same_v<T, Circuit>) {
          need(c.list.size() >= 2, name, "needs at least 2 variables");
        } else if constexpr (std::is_same_v<T, InstantiationCtr>) {
          need(!c.list.empty() && c.list.size() == c.values.size(), name,
               "list and values must have the same non-zero size");
        }
      },
      kind);
}

std::string_view objective_type_name(ObjectiveType t) {
  switch (t) {
    case ObjectiveType::Expression: return "expression";
    case ObjectiveType::Sum: return "sum";
    case ObjectiveType::Minimum: return "minimum";
    case ObjectiveType::Maximum: return "maximum";
    case ObjectiveType::NValues: return "nValues";
    case ObjectiveType::Lex: return "lex";
  }
  return "expression";
}

Cost eval_objective(const Objective& obj, const Assignment& env) {
  if (obj.type == ObjectiveType::Expression) return {eval(obj.expr, env)};
  std::vector<std::int64_t> terms;
  terms.reserve(obj.list.size());
  for (std::size_t i = 0; i < obj.list.size(); ++i) {
    std::int64_t c = obj.coeffs.empty() ? 1 : obj.coeffs[i];
    terms.push_back(arith::mul(c, eval(obj.list[i], env)));
  }
  switch (obj.type) {
    case ObjectiveType::Sum: {
      std::int64_t s = 0;
      for (auto t : terms) s = arith::add(s, t);
      return {s};
    }
    case ObjectiveType::Minimum: return {*std::min_element(terms.begin(), terms.end())};
    case ObjectiveType::Maximum: return {*std::max_element(terms.begin(), terms.end())};
    case ObjectiveType::NValues: {
      std::sort(terms.begin(), terms.end());
      return {static_cast<std::int64_t>(std::unique(terms.begin(), terms.end()) - terms.begin())};
    }
    case ObjectiveType::Lex: return terms;
    case ObjectiveType::Expression: break;
  }
  return {};
}

std::string format_cost(const Cost& cost) {
  std::string out;
  for (std::size_t i = 0; i < cost.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(cost[i]);
  }
  return out;
}

bool better(const Cost& a, const Cost& b, Sense sense) { return sense == Sense::Minimize ? a < b : a > b; }

}  // namespace xcsp3
