#include "xcsp3/model.hpp"

#include <algorithm>

#include "text.hpp"
#include "xcsp3/error.hpp"

namespace xcsp3 {

std::size_t VarArray::cell_count() const {
  std::size_t n = 1;
  for (auto d : dims) n *= static_cast<std::size_t>(d);
  return n;
}

std::optional<VarId> Instance::find_var(std::string_view id) const {
  auto it = var_index_.find(std::string(id));
  if (it == var_index_.end()) return std::nullopt;
  return it->second;
}

const VarArray* Instance::find_array(std::string_view id) const {
  auto it = array_index_.find(std::string(id));
  if (it == array_index_.end()) return nullptr;
  return &arrays[it->second];
}

void Instance::reindex() {
  var_index_.clear();
  array_index_.clear();
  for (std::size_t i = 0; i < vars.size(); ++i) var_index_.emplace(vars[i].id, static_cast<VarId>(i));
  for (std::size_t i = 0; i < arrays.size(); ++i) array_index_.emplace(arrays[i].id, i);
}

std::vector<bool> Instance::useful() const {
  std::vector<bool> out(vars.size(), false);
  for (const auto& c : constraints)
    for (auto v : c.scope) out[static_cast<std::size_t>(v)] = true;
  if (objective) {
    std::vector<VarId> ids;
    collect_var_ids(objective->expr, ids);
    for (const auto& e : objective->list) collect_var_ids(e, ids);
    for (auto v : ids) out[static_cast<std::size_t>(v)] = true;
  }
  return out;
}

bool Instance::operator==(const Instance& o) const {
  return framework == o.framework && vars == o.vars && arrays == o.arrays && constraints == o.constraints &&
         objective == o.objective && decision == o.decision;
}

void Instantiation::add(std::string id, std::optional<std::int64_t> value) {
  if (std::find(ids.begin(), ids.end(), id) != ids.end())
    throw Error(ErrorKind::DuplicateId, "variable '" + id + "' occurs twice in the instantiation");
  ids.push_back(std::move(id));
  values.push_back(value);
}

std::map<std::string, std::int64_t> Instantiation::as_map() const {
  std::map<std::string, std::int64_t> out;
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (values[i]) out.emplace(ids[i], *values[i]);
  return out;
}

std::vector<std::int64_t> expand_vxk(const std::vector<std::string_view>& tokens) {
  std::vector<std::int64_t> out;
  for (auto tok : tokens) {
    auto x = tok.find('x');
    if (x == std::string_view::npos) {
      out.push_back(text::parse_int(tok, ErrorKind::MalformedCompactToken));
      continue;
    }
    auto v = text::parse_int(tok.substr(0, x), ErrorKind::MalformedCompactToken);
    auto k = text::parse_int(tok.substr(x + 1), ErrorKind::MalformedCompactToken);
    if (k <= 0 || tok[x + 1] == '+' || tok[x + 1] == '-')
      throw Error(ErrorKind::MalformedCompactToken, "repetition count must be a positive integer in '" +
                                                        std::string(tok) + "'");
    out.insert(out.end(), static_cast<std::size_t>(k), v);
  }
  return out;
}

std::vector<std::int64_t> expand_vxk(std::string_view s) { return expand_vxk(text::split_ws(s)); }

namespace {

struct Slot {
  std::int64_t lo;
  std::int64_t hi;
};

struct CompactRef {
  std::string name;
  std::vector<std::optional<Slot>> slots;  // nullopt for "[]"
};

CompactRef parse_compact(std::string_view token) {
  auto open = token.find('[');
  if (open == std::string_view::npos || open == 0)
    throw Error(ErrorKind::MalformedCompactToken, "not an array reference: '" + std::string(token) + "'");
  CompactRef ref;
  ref.name = std::string(token.substr(0, open));
  std::size_t pos = open;
  while (pos < token.size()) {
    if (token[pos] != '[')
      throw Error(ErrorKind::MalformedCompactToken, "malformed array reference '" + std::string(token) + "'");
    auto close = token.find(']', pos);
    if (close == std::string_view::npos)
      throw Error(ErrorKind::MalformedCompactToken, "unclosed bracket in '" + std::string(token) + "'");
    auto inside = token.substr(pos + 1, close - pos - 1);
    if (inside.empty()) {
      ref.slots.push_back(std::nullopt);
    } else if (inside.find("..") != std::string_view::npos) {
      auto iv = parse_interval(inside);
      ref.slots.push_back(Slot{iv.lo, iv.hi});
    } else {
      auto v = text::parse_int(inside, ErrorKind::MalformedCompactToken);
      ref.slots.push_back(Slot{v, v});
    }
    pos = close + 1;
  }
  return ref;
}

std::string cell_name(const std::string& base, const std::vector<std::int64_t>& idx) {
  std::string out = base;
  for (auto i : idx) out += '[' + std::to_string(i) + ']';
  return out;
}

}  // namespace

bool is_compact_token(std::string_view token) {
  return token.find("[]") != std::string_view::npos || token.find("..") != std::string_view::npos;
}

std::vector<std::vector<std::string>> expand_compact(std::string_view token, const Instance& inst, ListContext ctx) {
  CompactRef ref = parse_compact(token);
  const VarArray* arr = inst.find_array(ref.name);
  if (!arr) throw Error(ErrorKind::UnknownArray, "unknown array '" + ref.name + "' in '" + std::string(token) + "'");
  if (ref.slots.size() != arr->dims.size())
    throw Error(ErrorKind::MalformedCompactToken, "'" + std::string(token) + "' does not match the " +
                                                      std::to_string(arr->dims.size()) + " dimension(s) of '" +
                                                      ref.name + "'");
  if (ctx == ListContext::Matrix && arr->dims.size() != 2)
    throw Error(ErrorKind::NotMatrix, "'" + std::string(token) + "' is not a 2-dimensional array reference");
  std::vector<Slot> ranges;
  for (std::size_t d = 0; d < ref.slots.size(); ++d) {
    Slot s = ref.slots[d].value_or(Slot{0, arr->dims[d] - 1});
    if (s.lo < 0 || s.hi >= arr->dims[d])
      throw Error(ErrorKind::IndexOutOfBounds, "index out of bounds in '" + std::string(token) + "'");
    ranges.push_back(s);
  }
  std::vector<std::string> cells;
  std::vector<std::int64_t> idx(ranges.size());
  for (std::size_t d = 0; d < ranges.size(); ++d) idx[d] = ranges[d].lo;
  bool done = false;
  while (!done) {
    cells.push_back(cell_name(ref.name, idx));
    done = true;
    for (std::size_t d = ranges.size(); d-- > 0;) {
      if (idx[d] < ranges[d].hi) {
        ++idx[d];
        done = false;
        break;
      }
      idx[d] = ranges[d].lo;
    }
  }
  if (ctx == ListContext::List) return {cells};
  std::vector<std::vector<std::string>> rows;
  auto width = static_cast<std::size_t>(ranges[1].hi - ranges[1].lo + 1);
  for (std::size_t i = 0; i < cells.size(); i += width)
    rows.emplace_back(cells.begin() + static_cast<std::ptrdiff_t>(i), cells.begin() + static_cast<std::ptrdiff_t>(i + width));
  return rows;
}

std::vector<std::string> expand_compact_list(std::string_view token, const Instance& inst) {
  return expand_compact(token, inst, ListContext::List).front();
}

std::string flat_name(std::string_view id) {
  std::string out;
  for (char c : id) {
    if (c == '[')
      out += '_';
    else if (c != ']')
      out += c;
  }
  return out;
}

std::string constraint_label(const Instance& inst, std::size_t index) {
  const auto& id = inst.constraints[index].id;
  return id.empty() ? "#" + std::to_string(index) : id;
}

Assignment to_assignment(const Instance& inst, const Instantiation& sol) {
  Assignment env(inst.vars.size());
  for (std::size_t i = 0; i < sol.ids.size(); ++i) {
    auto id = inst.find_var(sol.ids[i]);
    if (!id) throw Error(ErrorKind::UnknownVariable, "unknown variable '" + sol.ids[i] + "' in the instantiation");
    const auto& var = inst.vars[static_cast<std::size_t>(*id)];
    if (!var.domain) continue;  // undefined cells are ignored
    if (!sol.values[i]) {
      env.set_star(*id);
      continue;
    }
    if (!var.domain->contains(*sol.values[i]))
      throw Error(ErrorKind::ValueOutsideDomain, "value " + std::to_string(*sol.values[i]) + " is outside the domain of '" +
                                                     var.id + "'");
    env.set(*id, *sol.values[i]);
  }
  return env;
}

namespace {

bool undefined_outcome(const Error& e) {
  return e.kind() == ErrorKind::DivisionByZero || e.kind() == ErrorKind::NegativeExponent;
}

}  // namespace

Verdict check_assignment(const Instance& inst, const Assignment& env, CheckMode mode) {
  Verdict verdict;
  auto useful = inst.useful();
  for (std::size_t v = 0; v < inst.vars.size(); ++v) {
    if (!useful[v]) continue;
    auto state = env.state(static_cast<VarId>(v));
    if (state == Assignment::State::Star)
      throw Error(ErrorKind::StarInScope, "useful variable '" + inst.vars[v].id + "' is given '*'");
    if (state == Assignment::State::Unset) verdict.missing.push_back(inst.vars[v].id);
  }
  for (std::size_t i = 0; i < inst.constraints.size(); ++i) {
    const auto& c = inst.constraints[i];
    bool complete = std::all_of(c.scope.begin(), c.scope.end(), [&](VarId v) { return env.is_set(v); });
    if (!complete) continue;
    bool ok;
    try {
      ok = check(c.kind, env);
    } catch (const Error& e) {
      if (!undefined_outcome(e)) throw;
      ok = false;
    }
    if (!ok) verdict.violated.push_back(constraint_label(inst, i));
  }
  if (!verdict.violated.empty())
    verdict.status = Verdict::Status::Violated;
  else if (!verdict.missing.empty() && mode == CheckMode::TotalRequired)
    verdict.status = Verdict::Status::Incomplete;
  if (inst.objective) {
    try {
      verdict.cost = eval_objective(*inst.objective, env);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::UnboundVariable && !undefined_outcome(e)) throw;
    }
  }
  return verdict;
}

Verdict check_solution(const Instance& inst, const Instantiation& sol, CheckMode mode) {
  Verdict verdict = check_assignment(inst, to_assignment(inst, sol), mode);
  if (sol.cost && verdict.status == Verdict::Status::Satisfied) {
    if (!inst.objective) throw Error(ErrorKind::CostMismatch, "a cost is declared but the instance has no objective");
    Cost declared;
    for (auto tok : text::split_ws(*sol.cost)) declared.push_back(text::parse_int(tok));
    if (!verdict.cost)
      throw Error(ErrorKind::CostMismatch, "declared cost " + *sol.cost + " cannot be verified: objective incomplete");
    if (declared != *verdict.cost)
      throw Error(ErrorKind::CostMismatch,
                  "declared cost " + *sol.cost + " differs from the computed cost " + format_cost(*verdict.cost));
    verdict.cost_verified = true;
  }
  return verdict;
}

}  // namespace xcsp3
