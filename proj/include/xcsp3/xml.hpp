#ifndef XCSP3_XML_HPP
#define XCSP3_XML_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace xcsp3 {

// One XML element with its attributes in document order and its direct
// character data concatenated (child elements excluded).
struct RawElement {
  std::string tag;
  std::vector<std::pair<std::string, std::string>> attributes;
  std::vector<RawElement> children;
  std::string text;
  int line = 0;
  std::string path;

  const std::string* attr(std::string_view name) const;
  std::string attr_or(std::string_view name, std::string_view fallback) const;
  void set_attr(std::string_view name, std::string value);
  void remove_attr(std::string_view name);

  const RawElement* child(std::string_view tag) const;
  std::vector<const RawElement*> children_named(std::string_view tag) const;

  // "line N, /a/b[2]" style location for diagnostics.
  std::string where() const;
};

// Parses a complete document and returns its root element. Attribute values
// with leading or trailing whitespace are rejected.
RawElement parse_xml(std::string_view document);

// Recomputes `path` for the subtree, given the parent path.
void assign_paths(RawElement& e, const std::string& parent_path, std::size_t position);

std::string xml_escape(std::string_view s);

}  // namespace xcsp3

#endif
