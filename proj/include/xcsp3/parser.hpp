#ifndef XCSP3_PARSER_HPP
#define XCSP3_PARSER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "xcsp3/model.hpp"
#include "xcsp3/xml.hpp"

namespace xcsp3 {

struct ParseOptions {
  // Unknown or out-of-core elements are errors when strict, skipped with a
  // warning otherwise.
  bool strict = true;
  // Constraints carrying any of these classes are dropped.
  std::vector<std::string> drop_classes;
};

struct ParseResult {
  Instance instance;
  std::vector<std::string> warnings;
};

ParseResult parse_document(std::string_view document, const ParseOptions& options = {});
Instance parse_instance(std::string_view document, const ParseOptions& options = {});
Instance parse_instance_file(const std::string& path, const ParseOptions& options = {});

std::string read_file(const std::string& path);

// A constraint element ready for reading, with the classes inherited from
// enclosing blocks followed by its own.
struct FlatConstraint {
  RawElement element;
  std::vector<std::string> classes;
};

// Depth-first flattening of blocks, in document order. Groups and slides are
// returned unexpanded.
std::vector<FlatConstraint> flatten_blocks(const RawElement& constraints);

// Instantiates a group template once per args element; members are named
// id[i] when the group has an id. Compact tokens in args are expanded
// through `inst`.
std::vector<RawElement> expand_group(const RawElement& group, const Instance& inst);

// Unrolls a slide into intension/extension elements.
std::vector<RawElement> expand_slide(const RawElement& slide, const Instance& inst);

// Builds the cells of an array declaration and appends them to `inst`.
void build_array(const RawElement& decl, Instance& inst);

// Reads one flat constraint element against the variables of `inst`.
ConstraintKind read_constraint(const RawElement& element, const Instance& inst, bool strict = true);

// Solutions: either an <instantiation> element or a whitespace separated
// value list matched against `vars` (all useful variables in declaration
// order when `vars` is empty).
Instantiation parse_solution(std::string_view text, const Instance& inst, const std::vector<std::string>& vars = {});

}  // namespace xcsp3

#endif
