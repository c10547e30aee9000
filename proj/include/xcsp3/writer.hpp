#ifndef XCSP3_WRITER_HPP
#define XCSP3_WRITER_HPP

#include <optional>
#include <string>
#include <vector>

#include "xcsp3/model.hpp"

namespace xcsp3 {

// Flat canonical form: no groups, slides, blocks or aliases, explicit
// variable names everywhere. Parsing it yields an equal Instance.
std::string write_instance(const Instance& inst);

// One constraint element, indented by `indent` spaces.
std::string write_constraint(const Constraint& c, int indent = 0);

// <instantiation> over the useful variables of `inst`, in declaration order.
std::string write_solution(const Instance& inst, const Assignment& env, const std::optional<Cost>& cost = std::nullopt,
                           bool optimum = false);

}  // namespace xcsp3

#endif
