#ifndef XCSP3_DOMAIN_HPP
#define XCSP3_DOMAIN_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace xcsp3 {

struct Interval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  bool contains(std::int64_t v) const { return lo <= v && v <= hi; }
  bool operator==(const Interval&) const = default;
};

// Parses "l..u" with no surrounding or inner whitespace.
Interval parse_interval(std::string_view text);
std::string format_interval(const Interval& iv);

// Ordered union of values and closed intervals. A single value is stored as
// an item with lo == hi; the textual form distinguishes "3" from "3..3" only
// at parse time.
class Domain {
 public:
  Domain() = default;
  explicit Domain(std::vector<Interval> items);

  static Domain range(std::int64_t lo, std::int64_t hi);
  static Domain of(const std::vector<std::int64_t>& sorted_values);

  const std::vector<Interval>& items() const { return items_; }
  bool empty() const { return items_.empty(); }
  std::int64_t min() const { return items_.front().lo; }
  std::int64_t max() const { return items_.back().hi; }
  std::uint64_t size() const;
  bool contains(std::int64_t v) const;
  std::vector<std::int64_t> values() const;

  std::string str() const;

  bool operator==(const Domain&) const = default;

 private:
  std::vector<Interval> items_;
};

Domain parse_domain(std::string_view text);

}  // namespace xcsp3

#endif
