#ifndef XCSP3_SRC_READER_HPP
#define XCSP3_SRC_READER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "xcsp3/model.hpp"
#include "xcsp3/xml.hpp"

namespace xcsp3::detail {

// "(a,b)(c,d)" -> {{a,b},{c,d}}. Whitespace between tuples is allowed, inside
// is not.
std::vector<std::vector<std::string_view>> split_tuples(std::string_view text);

// Whitespace separated tokens with compact array references expanded.
std::vector<std::string> expand_tokens(std::string_view text, const Instance& inst);

Objective read_objective(const RawElement& e, const Instance& inst);
std::vector<VarId> read_var_list(std::string_view text, const Instance& inst);

}  // namespace xcsp3::detail

#endif
