#include "xcsp3/solver.hpp"

#include <algorithm>
#include <chrono>

#include "xcsp3/error.hpp"

namespace xcsp3 {

std::string_view status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Satisfiable: return "SAT";
    case SolveStatus::Unsatisfiable: return "UNSAT";
    case SolveStatus::Optimum: return "OPTIMUM";
    case SolveStatus::Limit: return "LIMIT";
  }
  return "?";
}

namespace {

enum class Mode { Enumerate, Count, Optimize };

bool undefined_outcome(const Error& e) {
  return e.kind() == ErrorKind::DivisionByZero || e.kind() == ErrorKind::NegativeExponent;
}

class Search {
 public:
  Search(const Instance& inst, const SearchConfig& cfg, Mode mode)
      : inst_(inst), cfg_(cfg), mode_(mode), env_(inst.vars.size()) {}

  SolveResult run() {
    start_ = std::chrono::steady_clock::now();
    if (mode_ == Mode::Optimize && !inst_.objective)
      throw Error(ErrorKind::Usage, "the instance has no objective to optimize");
    build_order();
    build_watch();
    bool root_ok = true;
    for (std::size_t c = 0; c < inst_.constraints.size(); ++c)
      if (inst_.constraints[c].scope.empty() && !holds(c)) root_ok = false;
    if (root_ok) dfs(0);
    SolveResult r = std::move(result_);
    r.complete = !limit_hit_ && !stop_;
    if (mode_ == Mode::Optimize) {
      if (limit_hit_)
        r.status = SolveStatus::Limit;
      else
        r.status = r.cost ? SolveStatus::Optimum : SolveStatus::Unsatisfiable;
    } else if (r.count > 0 && mode_ == Mode::Enumerate) {
      r.status = SolveStatus::Satisfiable;
    } else if (limit_hit_) {
      r.status = SolveStatus::Limit;
    } else {
      r.status = r.count > 0 ? SolveStatus::Satisfiable : SolveStatus::Unsatisfiable;
    }
    return r;
  }

 private:
  void build_order() {
    auto useful = inst_.useful();
    std::vector<bool> taken(inst_.vars.size(), false);
    auto take = [&](VarId v) {
      auto i = static_cast<std::size_t>(v);
      if (taken[i]) return;
      const auto& var = inst_.vars[i];
      if (!var.domain) throw Error(ErrorKind::UndefinedVariable, "variable '" + var.id + "' has no domain");
      if (var.domain->empty()) throw Error(ErrorKind::EmptyDomain, "variable '" + var.id + "' has an empty domain");
      taken[i] = true;
      order_.push_back(v);
    };
    if (cfg_.decision_only && inst_.decision) {
      for (auto v : *inst_.decision) take(v);
      decision_depth_ = order_.size();
    }
    std::vector<VarId> rest;
    for (std::size_t v = 0; v < inst_.vars.size(); ++v)
      if (useful[v] && !taken[v]) rest.push_back(static_cast<VarId>(v));
    if (cfg_.order == VarOrder::MinDomain)
      std::stable_sort(rest.begin(), rest.end(), [&](VarId a, VarId b) {
        return inst_.vars[static_cast<std::size_t>(a)].domain->size() < inst_.vars[static_cast<std::size_t>(b)].domain->size();
      });
    for (auto v : rest) take(v);
    values_.resize(inst_.vars.size());
    for (auto v : order_) values_[static_cast<std::size_t>(v)] = inst_.vars[static_cast<std::size_t>(v)].domain->values();
  }

  void build_watch() {
    watch_.resize(inst_.vars.size());
    unset_.resize(inst_.constraints.size());
    for (std::size_t c = 0; c < inst_.constraints.size(); ++c) {
      const auto& scope = inst_.constraints[c].scope;
      unset_[c] = scope.size();
      for (auto v : scope) watch_[static_cast<std::size_t>(v)].push_back(c);
    }
  }

  bool holds(std::size_t c) {
    try {
      return check(inst_.constraints[c].kind, env_);
    } catch (const Error& e) {
      if (undefined_outcome(e)) return false;
      throw;
    }
  }

  bool may(std::size_t c) {
    try {
      return may_hold(inst_.constraints[c].kind, env_);
    } catch (const Error& e) {
      if (undefined_outcome(e) || e.kind() == ErrorKind::UnboundVariable) return true;
      throw;
    }
  }

  bool consistent(VarId v) {
    for (auto c : watch_[static_cast<std::size_t>(v)]) {
      bool ok = unset_[c] == 0 ? holds(c) : may(c);
      if (!ok) return false;
    }
    return mode_ != Mode::Optimize || bound_allows();
  }

  // Optimistic bound for linear objectives over variables.
  bool bound_allows() {
    if (!result_.cost || in_sub_) return true;
    const auto& obj = *inst_.objective;
    bool maximize = obj.sense == Sense::Maximize;
    std::int64_t bound = 0;
    auto best_of = [&](const Expr& e, std::int64_t coeff, std::int64_t& out) {
      if (e.is_const()) {
        out = coeff * e.value;
        return true;
      }
      if (!e.is_var()) return false;
      auto id = static_cast<VarId>(e.value);
      if (env_.is_set(id)) {
        out = coeff * env_.value(id);
        return true;
      }
      const auto& d = *inst_.vars[static_cast<std::size_t>(id)].domain;
      bool want_high = (coeff >= 0) == maximize;
      out = coeff * (want_high ? d.max() : d.min());
      return true;
    };
    if (obj.type == ObjectiveType::Sum) {
      for (std::size_t i = 0; i < obj.list.size(); ++i) {
        std::int64_t t = 0;
        if (!best_of(obj.list[i], obj.coeffs.empty() ? 1 : obj.coeffs[i], t)) return true;
        bound += t;
      }
    } else if (obj.type == ObjectiveType::Expression) {
      if (!best_of(obj.expr, 1, bound)) return true;
    } else {
      return true;
    }
    return better(Cost{bound}, *result_.cost, obj.sense);
  }

  bool out_of_budget() {
    if (cfg_.node_limit && result_.nodes >= *cfg_.node_limit) return true;
    if (cfg_.time_limit && (result_.nodes & 255) == 0) {
      std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start_;
      if (dt.count() >= *cfg_.time_limit) return true;
    }
    return false;
  }

  bool halted() const { return stop_ || limit_hit_ || sub_stop_; }

  void dfs(std::size_t depth) {
    if (cfg_.decision_only && !in_sub_ && depth == decision_depth_ && inst_.decision) {
      in_sub_ = true;
      sub_found_.clear();
      dfs(depth);
      in_sub_ = false;
      sub_stop_ = false;
      if (sub_found_.size() > 1)
        throw Error(ErrorKind::NotFunctional, "a decision assignment extends to more than one solution");
      if (sub_found_.size() == 1) record(sub_found_.front());
      return;
    }
    if (depth == order_.size()) {
      if (in_sub_) {
        sub_found_.push_back(env_);
        if (sub_found_.size() > 1) sub_stop_ = true;
      } else {
        record(env_);
      }
      return;
    }
    VarId v = order_[depth];
    for (auto val : values_[static_cast<std::size_t>(v)]) {
      if (out_of_budget()) {
        limit_hit_ = true;
        return;
      }
      ++result_.nodes;
      env_.set(v, val);
      for (auto c : watch_[static_cast<std::size_t>(v)]) --unset_[c];
      if (consistent(v)) dfs(depth + 1);
      for (auto c : watch_[static_cast<std::size_t>(v)]) ++unset_[c];
      env_.unset(v);
      if (halted()) return;
    }
  }

  void record(const Assignment& env) {
    switch (mode_) {
      case Mode::Enumerate:
        result_.solutions.push_back(env);
        ++result_.count;
        if (cfg_.max_solutions && result_.count >= cfg_.max_solutions) stop_ = true;
        break;
      case Mode::Count:
        ++result_.count;
        break;
      case Mode::Optimize: {
        Cost cost;
        try {
          cost = eval_objective(*inst_.objective, env);
        } catch (const Error& e) {
          if (undefined_outcome(e)) return;
          throw;
        }
        ++result_.count;
        if (!result_.cost || better(cost, *result_.cost, inst_.objective->sense)) {
          result_.cost = cost;
          result_.solutions.push_back(env);
        }
        break;
      }
    }
  }

  const Instance& inst_;
  const SearchConfig& cfg_;
  Mode mode_;
  Assignment env_;
  std::vector<VarId> order_;
  std::vector<std::vector<std::int64_t>> values_;
  std::vector<std::vector<std::size_t>> watch_;
  std::vector<std::size_t> unset_;
  std::size_t decision_depth_ = 0;
  bool in_sub_ = false;
  bool sub_stop_ = false;
  std::vector<Assignment> sub_found_;
  bool stop_ = false;
  bool limit_hit_ = false;
  std::chrono::steady_clock::time_point start_;
  SolveResult result_;
};

}  // namespace

SolveResult solve(const Instance& inst, const SearchConfig& config) { return Search(inst, config, Mode::Enumerate).run(); }

SolveResult count_solutions(const Instance& inst, const SearchConfig& config) {
  return Search(inst, config, Mode::Count).run();
}

SolveResult optimize(const Instance& inst, const SearchConfig& config) { return Search(inst, config, Mode::Optimize).run(); }

}  // namespace xcsp3
