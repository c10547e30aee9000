#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "xcsp3/constraints.hpp"
#include "xcsp3/error.hpp"

namespace xcsp3 {

namespace {

using Values = std::vector<std::int64_t>;

Values values_of(const Operands& list, const Assignment& env) {
  Values out;
  out.reserve(list.size());
  for (const auto& e : list) out.push_back(eval(e, env));
  return out;
}

std::int64_t value_of(const Expr& e, const Assignment& env) {
  if (e.op == Op::Const) return e.value;
  return eval(e, env);
}

bool assigned(const Expr& e, const Assignment& env) {
  if (e.op == Op::Var) return e.value >= 0 && env.is_set(static_cast<VarId>(e.value));
  for (const auto& a : e.args)
    if (!assigned(a, env)) return false;
  return true;
}

std::optional<std::int64_t> try_value(const Expr& e, const Assignment& env) {
  if (!assigned(e, env)) return std::nullopt;
  return eval(e, env);
}

bool lex_compare(const Values& a, const Values& b, CondOp op) {
  auto cmp = a <=> b;
  switch (op) {
    case CondOp::Lt: return cmp < 0;
    case CondOp::Le: return cmp <= 0;
    case CondOp::Gt: return cmp > 0;
    case CondOp::Ge: return cmp >= 0;
    case CondOp::Eq: return cmp == 0;
    case CondOp::Ne: return cmp != 0;
    default: break;
  }
  return false;
}

bool all_different(const Values& v, const std::vector<std::int64_t>& except) {
  Values kept;
  kept.reserve(v.size());
  for (auto x : v)
    if (std::find(except.begin(), except.end(), x) == except.end()) kept.push_back(x);
  std::sort(kept.begin(), kept.end());
  return std::adjacent_find(kept.begin(), kept.end()) == kept.end();
}

bool tuple_matches(const Tuple& t, const Values& v) {
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] && *t[i] != v[i]) return false;
  return true;
}

bool check_extension(const Extension& c, const Assignment& env) {
  if (c.unary) {
    bool in = c.unary->contains(value_of(c.list[0], env));
    return c.supports ? in : !in;
  }
  Values v = values_of(c.list, env);
  bool found = std::any_of(c.tuples.begin(), c.tuples.end(), [&](const Tuple& t) { return tuple_matches(t, v); });
  return c.supports ? found : !found;
}

// Nondeterministic automaton run over the given word prefix. Returns the set
// of reachable states (empty when the prefix is rejected).
std::set<std::string> run_automaton(const std::vector<Transition>& transitions, const std::set<std::string>& start,
                                    const Values& word) {
  std::multimap<std::pair<std::string, std::int64_t>, const std::string*> delta;
  for (const auto& t : transitions) delta.emplace(std::make_pair(t.from, t.value), &t.to);
  std::set<std::string> current = start;
  for (auto symbol : word) {
    std::set<std::string> next;
    for (const auto& s : current) {
      auto [b, e] = delta.equal_range({s, symbol});
      for (auto it = b; it != e; ++it) next.insert(*it->second);
    }
    current = std::move(next);
    if (current.empty()) break;
  }
  return current;
}

bool check_regular(const Regular& c, const Assignment& env) {
  auto reached = run_automaton(c.transitions, {c.start}, values_of(c.list, env));
  return std::any_of(c.finals.begin(), c.finals.end(), [&](const std::string& f) { return reached.count(f) > 0; });
}

std::string mdd_root(const Mdd& c) {
  std::set<std::string> targets;
  for (const auto& t : c.transitions) targets.insert(t.to);
  for (const auto& t : c.transitions)
    if (!targets.count(t.from)) return t.from;
  throw Error(ErrorKind::Structure, "mdd has no root node");
}

bool check_mdd(const Mdd& c, const Assignment& env) {
  auto reached = run_automaton(c.transitions, {mdd_root(c)}, values_of(c.list, env));
  std::set<std::string> sources;
  for (const auto& t : c.transitions) sources.insert(t.from);
  return std::any_of(reached.begin(), reached.end(), [&](const std::string& s) { return !sources.count(s); });
}

bool check_ordered(const Ordered& c, const Assignment& env) {
  Values v = values_of(c.list, env);
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    std::int64_t len = c.lengths.empty() ? 0 : value_of(c.lengths[i], env);
    if (!compare(arith::add(v[i], len), c.op, v[i + 1])) return false;
  }
  return true;
}

std::vector<Values> rows_of(const Matrix& m, const Assignment& env) {
  std::vector<Values> out;
  for (const auto& r : m) out.push_back(values_of(r, env));
  return out;
}

std::vector<Values> transpose(const std::vector<Values>& m) {
  std::vector<Values> out(m.front().size(), Values(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) out[j][i] = m[i][j];
  return out;
}

bool chain(const std::vector<Values>& rows, CondOp op) {
  for (std::size_t i = 0; i + 1 < rows.size(); ++i)
    if (!lex_compare(rows[i], rows[i + 1], op)) return false;
  return true;
}

bool check_sum(const Sum& c, const Assignment& env) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < c.list.size(); ++i) {
    std::int64_t coeff = c.coeffs.empty() ? 1 : value_of(c.coeffs[i], env);
    s = arith::add(s, arith::mul(coeff, value_of(c.list[i], env)));
  }
  return eval_condition(s, c.condition, env);
}

bool check_count(const Count& c, const Assignment& env) {
  Values values = values_of(c.values, env);
  std::int64_t n = 0;
  for (const auto& e : c.list)
    if (std::find(values.begin(), values.end(), value_of(e, env)) != values.end()) ++n;
  return eval_condition(n, c.condition, env);
}

bool check_nvalues(const NValues& c, const Assignment& env) {
  std::set<std::int64_t> distinct;
  for (const auto& e : c.list) {
    auto v = value_of(e, env);
    if (std::find(c.except.begin(), c.except.end(), v) == c.except.end()) distinct.insert(v);
  }
  return eval_condition(static_cast<std::int64_t>(distinct.size()), c.condition, env);
}

bool check_cardinality(const Cardinality& c, const Assignment& env) {
  Values list = values_of(c.list, env);
  Values values = values_of(c.values, env);
  Values sorted = values;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (c.closed)
    for (auto x : list)
      if (!std::binary_search(sorted.begin(), sorted.end(), x)) return false;
  for (std::size_t j = 0; j < values.size(); ++j) {
    auto n = static_cast<std::int64_t>(std::count(list.begin(), list.end(), values[j]));
    if (const auto* e = std::get_if<Expr>(&c.occurs[j])) {
      if (n != value_of(*e, env)) return false;
    } else if (!std::get<Interval>(c.occurs[j]).contains(n)) {
      return false;
    }
  }
  return true;
}

bool check_rhs(std::int64_t picked, const ElementRhs& rhs, const Assignment& env) {
  if (const auto* e = std::get_if<Expr>(&rhs)) return picked == value_of(*e, env);
  return eval_condition(picked, std::get<Condition>(rhs), env);
}

bool check_element(const Element& c, const Assignment& env) {
  auto i = value_of(c.index, env);
  if (i < 0 || static_cast<std::size_t>(i) >= c.list.size()) return false;
  return check_rhs(value_of(c.list[static_cast<std::size_t>(i)], env), c.rhs, env);
}

bool check_element_matrix(const ElementMatrix& c, const Assignment& env) {
  auto i = value_of(c.row, env);
  auto j = value_of(c.col, env);
  if (i < 0 || static_cast<std::size_t>(i) >= c.matrix.size()) return false;
  const auto& row = c.matrix[static_cast<std::size_t>(i)];
  if (j < 0 || static_cast<std::size_t>(j) >= row.size()) return false;
  return check_rhs(value_of(row[static_cast<std::size_t>(j)], env), c.rhs, env);
}

bool in_range(std::int64_t v, std::size_t n) { return v >= 0 && static_cast<std::size_t>(v) < n; }

bool check_channel(const Channel& c, const Assignment& env) {
  Values x = values_of(c.list, env);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!in_range(x[i], x.size())) return false;
    if (x[static_cast<std::size_t>(x[i])] != static_cast<std::int64_t>(i)) return false;
  }
  return true;
}

bool check_channel_lists(const ChannelLists& c, const Assignment& env) {
  Values x = values_of(c.first, env);
  Values y = values_of(c.second, env);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!in_range(x[i], y.size())) return false;
    if (y[static_cast<std::size_t>(x[i])] != static_cast<std::int64_t>(i)) return false;
  }
  if (x.size() == y.size()) {
    for (std::size_t j = 0; j < y.size(); ++j)
      if (in_range(y[j], x.size()) && x[static_cast<std::size_t>(y[j])] != static_cast<std::int64_t>(j)) return false;
  }
  return true;
}

bool check_channel_value(const ChannelValue& c, const Assignment& env) {
  Values x = values_of(c.list, env);
  auto v = value_of(c.value, env);
  bool some = false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    bool one = x[i] == 1;
    some = some || one;
    if (one != (v == static_cast<std::int64_t>(i))) return false;
  }
  return some;
}

bool disjoint(std::int64_t xi, std::int64_t li, std::int64_t xj, std::int64_t lj) {
  return arith::add(xi, li) <= xj || arith::add(xj, lj) <= xi;
}

bool check_no_overlap(const NoOverlap& c, const Assignment& env) {
  Values x = values_of(c.origins, env);
  Values l = values_of(c.lengths, env);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (c.zero_ignored && (l[i] == 0 || l[j] == 0)) continue;
      if (!disjoint(x[i], l[i], x[j], l[j])) return false;
    }
  return true;
}

bool check_no_overlap_boxes(const NoOverlapBoxes& c, const Assignment& env) {
  auto x = rows_of(c.origins, env);
  auto l = rows_of(c.lengths, env);
  auto flat = [](const Values& v) { return std::find(v.begin(), v.end(), 0) != v.end(); };
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (c.zero_ignored && (flat(l[i]) || flat(l[j]))) continue;
      bool separated = false;
      for (std::size_t k = 0; k < x[i].size() && !separated; ++k)
        separated = disjoint(x[i][k], l[i][k], x[j][k], l[j][k]);
      if (!separated) return false;
    }
  return true;
}

bool check_cumulative(const Cumulative& c, const Assignment& env) {
  Values x = values_of(c.origins, env);
  Values l = values_of(c.lengths, env);
  Values h = values_of(c.heights, env);
  // The load is constant between consecutive start/end events, so it is
  // enough to look at every event time covered by at least one task.
  Values events;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (l[i] <= 0) continue;
    events.push_back(x[i]);
    events.push_back(arith::add(x[i], l[i]));
  }
  std::sort(events.begin(), events.end());
  events.erase(std::unique(events.begin(), events.end()), events.end());
  for (auto t : events) {
    bool covered = false;
    std::int64_t load = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (l[i] > 0 && x[i] <= t && t < x[i] + l[i]) {
        covered = true;
        load = arith::add(load, h[i]);
      }
    if (covered && !eval_condition(load, c.condition, env)) return false;
  }
  return true;
}

bool check_circuit(const Circuit& c, const Assignment& env) {
  Values x = values_of(c.list, env);
  std::size_t n = x.size();
  std::size_t arcs = 0;
  std::size_t start = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (!in_range(x[i], n)) return false;
    if (x[i] != static_cast<std::int64_t>(i)) {
      ++arcs;
      if (start == n) start = i;
    }
  }
  if (arcs == 0) return false;
  std::size_t steps = 0;
  std::size_t node = start;
  do {
    auto next = static_cast<std::size_t>(x[node]);
    if (next == node) return false;
    node = next;
    ++steps;
  } while (node != start && steps <= arcs);
  if (node != start || steps != arcs) return false;
  if (c.size) return static_cast<std::int64_t>(arcs) == value_of(*c.size, env);
  return true;
}

bool check_instantiation(const InstantiationCtr& c, const Assignment& env) {
  for (std::size_t i = 0; i < c.list.size(); ++i)
    if (value_of(c.list[i], env) != c.values[i]) return false;
  return true;
}

// Partial tests

bool partial_all_different(const Operands& list, const std::vector<std::int64_t>& except, const Assignment& env) {
  Values known;
  for (const auto& e : list)
    if (auto v = try_value(e, env)) known.push_back(*v);
  return all_different(known, except);
}

bool partial_all_equal(const Operands& list, const Assignment& env) {
  std::optional<std::int64_t> first;
  for (const auto& e : list)
    if (auto v = try_value(e, env)) {
      if (first && *first != *v) return false;
      first = v;
    }
  return true;
}

bool partial_ordered(const Ordered& c, const Assignment& env) {
  for (std::size_t i = 0; i + 1 < c.list.size(); ++i) {
    auto a = try_value(c.list[i], env);
    auto b = try_value(c.list[i + 1], env);
    if (!a || !b) continue;
    std::optional<std::int64_t> len = c.lengths.empty() ? std::optional<std::int64_t>(0) : try_value(c.lengths[i], env);
    if (len && !compare(arith::add(*a, *len), c.op, *b)) return false;
  }
  return true;
}

std::optional<Values> try_values(const Operands& list, const Assignment& env) {
  Values out;
  for (const auto& e : list) {
    auto v = try_value(e, env);
    if (!v) return std::nullopt;
    out.push_back(*v);
  }
  return out;
}

bool partial_chain(const Matrix& lists, CondOp op, const Assignment& env) {
  for (std::size_t i = 0; i + 1 < lists.size(); ++i) {
    auto a = try_values(lists[i], env);
    auto b = try_values(lists[i + 1], env);
    if (a && b && !lex_compare(*a, *b, op)) return false;
  }
  return true;
}

bool partial_extension(const Extension& c, const Assignment& env) {
  if (c.unary) {
    auto v = try_value(c.list[0], env);
    return !v || (c.unary->contains(*v) == c.supports);
  }
  std::vector<std::optional<std::int64_t>> known;
  for (const auto& e : c.list) known.push_back(try_value(e, env));
  auto consistent = [&](const Tuple& t) {
    for (std::size_t i = 0; i < t.size(); ++i)
      if (known[i] && t[i] && *t[i] != *known[i]) return false;
    return true;
  };
  if (c.supports) return std::any_of(c.tuples.begin(), c.tuples.end(), consistent);
  // A conflict tuple rules out every completion only if it fixes nothing
  // beyond the assigned positions.
  for (const auto& t : c.tuples) {
    if (!consistent(t)) continue;
    bool covers = true;
    for (std::size_t i = 0; i < t.size() && covers; ++i) covers = known[i].has_value() || !t[i].has_value();
    if (covers) return false;
  }
  return true;
}

bool partial_regular(const std::vector<Transition>& transitions, const std::set<std::string>& start,
                     const Operands& list, const Assignment& env) {
  Values prefix;
  for (const auto& e : list) {
    auto v = try_value(e, env);
    if (!v) break;
    prefix.push_back(*v);
  }
  if (prefix.empty()) return true;
  return !run_automaton(transitions, start, prefix).empty();
}

bool partial_instantiation(const InstantiationCtr& c, const Assignment& env) {
  for (std::size_t i = 0; i < c.list.size(); ++i) {
    auto v = try_value(c.list[i], env);
    if (v && *v != c.values[i]) return false;
  }
  return true;
}

}  // namespace

bool check(const ConstraintKind& kind, const Assignment& env) {
  return std::visit(
      [&](const auto& c) -> bool {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Intension>) {
          return eval(c.expr, env) == 1;
        } else if constexpr (std::is_same_v<T, Extension>) {
          return check_extension(c, env);
        } else if constexpr (std::is_same_v<T, Regular>) {
          return check_regular(c, env);
        } else if constexpr (std::is_same_v<T, Mdd>) {
          return check_mdd(c, env);
        } else if constexpr (std::is_same_v<T, AllDifferent>) {
          return all_different(values_of(c.list, env), c.except);
        } else if constexpr (std::is_same_v<T, AllDifferentLists>) {
          auto rows = rows_of(c.lists, env);
          for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = i + 1; j < rows.size(); ++j) {
              if (rows[i] != rows[j]) continue;
              bool excepted = std::find(c.except.begin(), c.except.end(), rows[i]) != c.except.end();
              if (!excepted) return false;
            }
          return true;
        } else if constexpr (std::is_same_v<T, AllDifferentMatrix>) {
          auto rows = rows_of(c.matrix, env);
          for (const auto& r : rows)
            if (!all_different(r, {})) return false;
          for (const auto& col : transpose(rows))
            if (!all_different(col, {})) return false;
          return true;
        } else if constexpr (std::is_same_v<T, AllEqual>) {
          Values v = values_of(c.list, env);
          return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
        } else if constexpr (std::is_same_v<T, Ordered>) {
          return check_ordered(c, env);
        } else if constexpr (std::is_same_v<T, Lex>) {
          return chain(rows_of(c.lists, env), c.op);
        } else if constexpr (std::is_same_v<T, LexMatrix>) {
          auto rows = rows_of(c.matrix, env);
          return chain(rows, c.op) && chain(transpose(rows), c.op);
        } else if constexpr (std::is_same_v<T, Sum>) {
          return check_sum(c, env);
        } else if constexpr (std::is_same_v<T, Count>) {
          return check_count(c, env);
        } else if constexpr (std::is_same_v<T, NValues>) {
          return check_nvalues(c, env);
        } else if constexpr (std::is_same_v<T, Cardinality>) {
          return check_cardinality(c, env);
        } else if constexpr (std::is_same_v<T, Minimum>) {
          Values v = values_of(c.list, env);
          return eval_condition(*std::min_element(v.begin(), v.end()), c.condition, env);
        } else if constexpr (std::is_same_v<T, Maximum>) {
          Values v = values_of(c.list, env);
          return eval_condition(*std::max_element(v.begin(), v.end()), c.condition, env);
        } else if constexpr (std::is_same_v<T, Element>) {
          return check_element(c, env);
        } else if constexpr (std::is_same_v<T, ElementMatrix>) {
          return check_element_matrix(c, env);
        } else if constexpr (std::is_same_v<T, Channel>) {
          return check_channel(c, env);
        } else if constexpr (std::is_same_v<T, ChannelLists>) {
          return check_channel_lists(c, env);
        } else if constexpr (std::is_same_v<T, ChannelValue>) {
          return check_channel_value(c, env);
        } else if constexpr (std::is_same_v<T, NoOverlap>) {
          return check_no_overlap(c, env);
        } else if constexpr (std::is_same_v<T, NoOverlapBoxes>) {
          return check_no_overlap_boxes(c, env);
        } else if constexpr (std::is_same_v<T, Cumulative>) {
          return check_cumulative(c, env);
        } else if constexpr (std::is_same_v<T, Circuit>) {
          return check_circuit(c, env);
        } else if constexpr (std::is_same_v<T, InstantiationCtr>) {
          return check_instantiation(c, env);
        } else {
          static_assert(sizeof(T) == 0, "unhandled constraint kind");
        }
      },
      kind);
}

bool may_hold(const ConstraintKind& kind, const Assignment& env) {
  return std::visit(
      [&](const auto& c) -> bool {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, AllDifferent>) {
          return partial_all_different(c.list, c.except, env);
        } else if constexpr (std::is_same_v<T, AllEqual>) {
          return partial_all_equal(c.list, env);
        } else if constexpr (std::is_same_v<T, AllDifferentMatrix>) {
          for (const auto& r : c.matrix)
            if (!partial_all_different(r, {}, env)) return false;
          for (std::size_t j = 0; j < c.matrix.front().size(); ++j) {
            Operands col;
            for (const auto& r : c.matrix) col.push_back(r[j]);
            if (!partial_all_different(col, {}, env)) return false;
          }
          return true;
        } else if constexpr (std::is_same_v<T, Ordered>) {
          return partial_ordered(c, env);
        } else if constexpr (std::is_same_v<T, Lex>) {
          return partial_chain(c.lists, c.op, env);
        } else if constexpr (std::is_same_v<T, Extension>) {
          return partial_extension(c, env);
        } else if constexpr (std::is_same_v<T, Regular>) {
          return partial_regular(c.transitions, {c.start}, c.list, env);
        } else if constexpr (std::is_same_v<T, Mdd>) {
          return partial_regular(c.transitions, {mdd_root(c)}, c.list, env);
        } else if constexpr (std::is_same_v<T, InstantiationCtr>) {
          return partial_instantiation(c, env);
        } else {
          return true;
        }
      },
      kind);
}

}  // namespace xcsp3
