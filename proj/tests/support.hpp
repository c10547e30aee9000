// Small helpers shared by the unit tests.
#ifndef XCSP3_TESTS_SUPPORT_HPP
#define XCSP3_TESTS_SUPPORT_HPP

#include <optional>
#include <string>

#include "xcsp3/error.hpp"
#include "xcsp3/parser.hpp"

namespace support {

// Kind of the xcsp3::Error thrown by f, or nullopt when f returns normally.
template <class F>
std::optional<xcsp3::ErrorKind> error_of(F&& f) {
  try {
    f();
  } catch (const xcsp3::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

inline std::string fixture(const std::string& name) { return std::string(XCSP3_FIXTURES) + "/" + name; }

// Wraps variable declarations and constraints into a CSP document.
inline std::string csp(const std::string& variables, const std::string& constraints) {
  return "<instance format=\"XCSP3\" type=\"CSP\">\n<variables>\n" + variables + "\n</variables>\n<constraints>\n" +
         constraints + "\n</constraints>\n</instance>\n";
}

inline std::optional<xcsp3::ErrorKind> parse_error(const std::string& doc, const xcsp3::ParseOptions& o = {}) {
  return error_of([&] { xcsp3::parse_instance(doc, o); });
}

}  // namespace support

#ifdef CATCH_VERSION_MAJOR
template <>
struct Catch::StringMaker<std::optional<xcsp3::ErrorKind>> {
  static std::string convert(const std::optional<xcsp3::ErrorKind>& k) {
    return k ? std::string(xcsp3::to_string(*k)) : "no error";
  }
};
template <>
struct Catch::StringMaker<xcsp3::ErrorKind> {
  static std::string convert(xcsp3::ErrorKind k) { return std::string(xcsp3::to_string(k)); }
};
#endif

#endif
