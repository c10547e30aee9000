#ifndef XCSP3_SRC_TEXT_HPP
#define XCSP3_SRC_TEXT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "xcsp3/error.hpp"

namespace xcsp3::text {

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
inline bool is_digit(char c) { return c >= '0' && c <= '9'; }
inline bool is_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

std::string_view trim(std::string_view s);
std::vector<std::string_view> split_ws(std::string_view s);
bool has_space(std::string_view s);

// Strict integer: optional sign then digits. Throws `kind` on anything else,
// Overflow when the value does not fit in 64 bits.
std::int64_t parse_int(std::string_view s, ErrorKind kind = ErrorKind::Syntax);
bool looks_like_int(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace xcsp3::text

#endif
