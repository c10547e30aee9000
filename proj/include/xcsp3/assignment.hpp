#ifndef XCSP3_ASSIGNMENT_HPP
#define XCSP3_ASSIGNMENT_HPP

#include <cstdint>
#include <vector>

namespace xcsp3 {

using VarId = std::int32_t;

// Dense per-variable state used by checkers and the solver.
class Assignment {
 public:
  enum class State : std::uint8_t { Unset, Set, Star };

  Assignment() = default;
  explicit Assignment(std::size_t n) : values_(n, 0), states_(n, State::Unset) {}

  std::size_t size() const { return values_.size(); }
  State state(VarId v) const { return states_[static_cast<std::size_t>(v)]; }
  bool is_set(VarId v) const { return state(v) == State::Set; }
  std::int64_t value(VarId v) const { return values_[static_cast<std::size_t>(v)]; }

  void set(VarId v, std::int64_t value) {
    values_[static_cast<std::size_t>(v)] = value;
    states_[static_cast<std::size_t>(v)] = State::Set;
  }
  void set_star(VarId v) { states_[static_cast<std::size_t>(v)] = State::Star; }
  void unset(VarId v) { states_[static_cast<std::size_t>(v)] = State::Unset; }

 private:
  std::vector<std::int64_t> values_;
  std::vector<State> states_;
};

}  // namespace xcsp3

#endif
