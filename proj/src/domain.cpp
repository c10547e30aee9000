#include "xcsp3/domain.hpp"

#include <algorithm>

#include "text.hpp"
#include "xcsp3/error.hpp"

namespace xcsp3 {

Interval parse_interval(std::string_view s) {
  auto dots = s.find("..");
  if (dots == std::string_view::npos)
    throw Error(ErrorKind::MalformedInterval, "expected 'l..u', got '" + std::string(s) + "'");
  if (text::has_space(s))
    throw Error(ErrorKind::IntervalWhitespace, "whitespace inside interval '" + std::string(s) + "'");
  Interval iv;
  iv.lo = text::parse_int(s.substr(0, dots), ErrorKind::MalformedInterval);
  iv.hi = text::parse_int(s.substr(dots + 2), ErrorKind::MalformedInterval);
  if (iv.lo > iv.hi)
    throw Error(ErrorKind::MalformedInterval, "interval '" + std::string(s) + "' has lo > hi");
  return iv;
}

std::string format_interval(const Interval& iv) {
  return std::to_string(iv.lo) + ".." + std::to_string(iv.hi);
}

Domain::Domain(std::vector<Interval> items) : items_(std::move(items)) {
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (items_[i].lo > items_[i].hi)
      throw Error(ErrorKind::MalformedInterval, "interval " + format_interval(items_[i]) + " has lo > hi");
    if (i > 0 && items_[i - 1].hi >= items_[i].lo)
      throw Error(ErrorKind::DomainOutOfOrder,
                  "domain items must be strictly increasing without repeated values");
  }
}

Domain Domain::range(std::int64_t lo, std::int64_t hi) { return Domain({Interval{lo, hi}}); }

Domain Domain::of(const std::vector<std::int64_t>& values) {
  std::vector<Interval> items;
  items.reserve(values.size());
  for (auto v : values) items.push_back({v, v});
  return Domain(std::move(items));
}

std::uint64_t Domain::size() const {
  std::uint64_t n = 0;
  for (const auto& iv : items_)
    n += static_cast<std::uint64_t>(iv.hi) - static_cast<std::uint64_t>(iv.lo) + 1;
  return n;
}

bool Domain::contains(std::int64_t v) const {
  auto it = std::upper_bound(items_.begin(), items_.end(), v,
                             [](std::int64_t x, const Interval& iv) { return x < iv.lo; });
  if (it == items_.begin()) return false;
  return std::prev(it)->hi >= v;
}

std::vector<std::int64_t> Domain::values() const {
  std::vector<std::int64_t> out;
  for (const auto& iv : items_)
    for (std::int64_t v = iv.lo;; ++v) {
      out.push_back(v);
      if (v == iv.hi) break;
    }
  return out;
}

std::string Domain::str() const {
  std::string out;
  for (const auto& iv : items_) {
    if (!out.empty()) out += ' ';
    out += iv.lo == iv.hi ? std::to_string(iv.lo) : format_interval(iv);
  }
  return out;
}

Domain parse_domain(std::string_view s) {
  std::vector<Interval> items;
  auto tokens = text::split_ws(s);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    auto tok = tokens[i];
    bool dangling = tok.starts_with("..") || tok.ends_with("..");
    bool next_dangling = i + 1 < tokens.size() && tokens[i + 1].starts_with("..");
    if (dangling || next_dangling)
      throw Error(ErrorKind::IntervalWhitespace, "whitespace inside an interval near '" + std::string(tok) + "'");
    if (tok.find("..") != std::string_view::npos) {
      items.push_back(parse_interval(tok));
    } else {
      auto v = text::parse_int(tok, ErrorKind::MalformedInterval);
      items.push_back({v, v});
    }
    if (items.size() > 1 && items[items.size() - 2].hi >= items.back().lo)
      throw Error(ErrorKind::DomainOutOfOrder,
                  "domain values must be in increasing order without repetition near '" + std::string(tok) + "'");
  }
  return Domain(std::move(items));
}

}  // namespace xcsp3
