// Test-side reference implementations, written without the library's
// checkers so they can cross-check them.
#ifndef XCSP3_TESTS_ORACLES_HPP
#define XCSP3_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "xcsp3/model.hpp"

namespace oracle {

using Values = std::vector<std::int64_t>;

// Calls f on every element of the Cartesian product of `domains`.
inline void cartesian(const std::vector<Values>& domains, const std::function<void(const Values&)>& f) {
  Values cur(domains.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == domains.size()) {
      f(cur);
      return;
    }
    for (auto v : domains[i]) {
      cur[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
}

inline std::vector<xcsp3::VarId> useful_vars(const xcsp3::Instance& inst) {
  std::vector<xcsp3::VarId> out;
  auto useful = inst.useful();
  for (std::size_t v = 0; v < inst.vars.size(); ++v)
    if (useful[v]) out.push_back(static_cast<xcsp3::VarId>(v));
  return out;
}

// Naive filter: every total assignment of the useful variables that the
// checker accepts, as value vectors in useful-variable order.
inline std::set<Values> naive_solutions(const xcsp3::Instance& inst) {
  auto vars = useful_vars(inst);
  std::vector<Values> doms;
  for (auto v : vars) doms.push_back(inst.vars[static_cast<std::size_t>(v)].domain->values());
  std::set<Values> out;
  cartesian(doms, [&](const Values& vals) {
    xcsp3::Assignment env(inst.vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) env.set(vars[i], vals[i]);
    if (xcsp3::check_assignment(inst, env).status == xcsp3::Verdict::Status::Satisfied) out.insert(vals);
  });
  return out;
}

inline Values project(const xcsp3::Instance& inst, const xcsp3::Assignment& env) {
  Values out;
  for (auto v : useful_vars(inst)) out.push_back(env.value(v));
  return out;
}

// Short table expansion: each '*' replaced by every value of its column.
inline std::set<Values> expand_short(const std::vector<xcsp3::Tuple>& tuples, const std::vector<Values>& domains) {
  std::set<Values> out;
  for (const auto& t : tuples) {
    std::vector<Values> cols;
    for (std::size_t i = 0; i < t.size(); ++i) cols.push_back(t[i] ? Values{*t[i]} : domains[i]);
    cartesian(cols, [&](const Values& v) { out.insert(v); });
  }
  return out;
}

struct Arc {
  std::string from;
  std::int64_t value;
  std::string to;
};

// Words of length n spelled by some path from `start` ending in `finals`.
inline std::set<Values> path_words(const std::vector<Arc>& arcs, const std::string& start,
                                   const std::set<std::string>& finals, std::size_t n) {
  std::set<Values> out;
  Values word;
  std::function<void(const std::string&)> walk = [&](const std::string& state) {
    if (word.size() == n) {
      if (finals.count(state)) out.insert(word);
      return;
    }
    for (const auto& a : arcs) {
      if (a.from != state) continue;
      word.push_back(a.value);
      walk(a.to);
      word.pop_back();
    }
  };
  walk(start);
  return out;
}

// Reference semantics for a handful of constraints over plain values.
inline bool all_different(const Values& xs, const Values& except = {}) {
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (xs[i] == xs[j] && std::find(except.begin(), except.end(), xs[i]) == except.end()) return false;
  return true;
}

inline bool cmp(std::int64_t a, const std::string& op, std::int64_t b) {
  if (op == "lt") return a < b;
  if (op == "le") return a <= b;
  if (op == "ge") return a >= b;
  if (op == "gt") return a > b;
  if (op == "eq") return a == b;
  return a != b;
}

inline std::int64_t count_in(const Values& xs, const Values& vals) {
  return std::count_if(xs.begin(), xs.end(), [&](auto x) { return std::find(vals.begin(), vals.end(), x) != vals.end(); });
}

inline std::int64_t n_distinct(const Values& xs) { return static_cast<std::int64_t>(std::set<std::int64_t>(xs.begin(), xs.end()).size()); }

// Successor-array circuit: the non-loop arcs form exactly one cycle of length >= 2.
inline bool circuit(const Values& succ, std::int64_t* size = nullptr) {
  auto n = static_cast<std::int64_t>(succ.size());
  std::int64_t arcs = 0, start = -1;
  for (std::int64_t i = 0; i < n; ++i) {
    if (succ[i] < 0 || succ[i] >= n) return false;
    if (succ[i] != i) {
      ++arcs;
      if (start < 0) start = i;
    }
  }
  if (arcs < 2) return false;
  std::int64_t cur = start, steps = 0;
  std::set<std::int64_t> seen;
  do {
    if (!seen.insert(cur).second) return false;
    cur = succ[cur];
    ++steps;
  } while (cur != start && steps <= n);
  if (size) *size = steps;
  return cur == start && steps == arcs;
}

}  // namespace oracle

#endif
