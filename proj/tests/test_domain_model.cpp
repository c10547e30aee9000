#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"
#include "xcsp3/model.hpp"
#include "xcsp3/parser.hpp"

using namespace xcsp3;
using support::error_of;

TEST_CASE("intervals parse without whitespace", "[domain]") {
  CHECK(parse_interval("-3..7") == Interval{-3, 7});
  CHECK(parse_interval("+2..2") == Interval{2, 2});
  CHECK(error_of([] { parse_interval("1 ..3"); }) == ErrorKind::IntervalWhitespace);
  CHECK(error_of([] { parse_interval("1.. 3"); }) == ErrorKind::IntervalWhitespace);
  CHECK(error_of([] { parse_interval("4..3"); }) == ErrorKind::MalformedInterval);
  CHECK(error_of([] { parse_interval("1...3"); }) == ErrorKind::MalformedInterval);
  CHECK(error_of([] { parse_interval("a..3"); }) == ErrorKind::MalformedInterval);
}

TEST_CASE("domains are ordered unions", "[domain]") {
  auto d = parse_domain(" 1 3..5\n 9 ");
  CHECK(d.size() == 5);
  CHECK(d.values() == std::vector<std::int64_t>{1, 3, 4, 5, 9});
  CHECK(d.min() == 1);
  CHECK(d.max() == 9);
  CHECK(d.contains(4));
  CHECK_FALSE(d.contains(2));
  CHECK_FALSE(d.contains(10));
  CHECK(d.str() == "1 3..5 9");
  CHECK(parse_domain("").empty());
}

TEST_CASE("domain items must strictly increase", "[domain]") {
  CHECK(error_of([] { parse_domain("3 1"); }) == ErrorKind::DomainOutOfOrder);
  CHECK(error_of([] { parse_domain("1..4 4"); }) == ErrorKind::DomainOutOfOrder);
  CHECK(error_of([] { parse_domain("2 2"); }) == ErrorKind::DomainOutOfOrder);
  CHECK(error_of([] { parse_domain("1..3 2..5"); }) == ErrorKind::DomainOutOfOrder);
  CHECK_FALSE(error_of([] { parse_domain("1..3 4..5"); }));
}

TEST_CASE("domain size counts every value", "[domain][property]") {
  for (std::int64_t lo = -5; lo <= 5; ++lo)
    for (std::int64_t hi = lo; hi <= 8; ++hi) {
      auto d = Domain::range(lo, hi);
      CHECK(d.size() == d.values().size());
      CHECK(d.size() == static_cast<std::uint64_t>(hi - lo + 1));
    }
}

TEST_CASE("vxk repetition", "[model]") {
  CHECK(expand_vxk("1x3 2 -1x2") == std::vector<std::int64_t>{1, 1, 1, 2, -1, -1});
  CHECK(error_of([] { expand_vxk("1x0"); }) == ErrorKind::MalformedCompactToken);
  CHECK(error_of([] { expand_vxk("1x-2"); }) == ErrorKind::MalformedCompactToken);
}

namespace {

Instance arrays() {
  return parse_instance(support::csp(R"(<array id="x" size="[4]"> 0..3 </array>
<array id="m" size="[2][3]"> 0..1 </array>
<array id="t" size="[2][2][2]"> 0 1 </array>)",
                                     "<allDifferent> x[] </allDifferent>"));
}

}  // namespace

TEST_CASE("compact array tokens", "[model]") {
  auto inst = arrays();
  using L = std::vector<std::string>;
  CHECK(expand_compact_list("x[]", inst) == L{"x[0]", "x[1]", "x[2]", "x[3]"});
  CHECK(expand_compact_list("x[1..2]", inst) == L{"x[1]", "x[2]"});
  CHECK(expand_compact_list("m[][1]", inst) == L{"m[0][1]", "m[1][1]"});
  CHECK(expand_compact_list("m[1][]", inst) == L{"m[1][0]", "m[1][1]", "m[1][2]"});
  CHECK(expand_compact_list("m[][]", inst).size() == 6);
  CHECK(expand_compact_list("t[1][][0]", inst) == L{"t[1][0][0]", "t[1][1][0]"});
  auto rows = expand_compact("m[][0..1]", inst, ListContext::Matrix);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1] == L{"m[1][0]", "m[1][1]"});
  CHECK(is_compact_token("x[]"));
  CHECK(is_compact_token("m[0..1][2]"));
  CHECK_FALSE(is_compact_token("x[2]"));
  CHECK(error_of([&] { expand_compact_list("y[]", inst); }) == ErrorKind::UnknownArray);
  CHECK(error_of([&] { expand_compact_list("x[2..7]", inst); }) == ErrorKind::IndexOutOfBounds);
  CHECK(error_of([&] { expand_compact_list("m[]", inst); }) == ErrorKind::MalformedCompactToken);
  CHECK(error_of([&] { expand_compact("x[]", inst, ListContext::Matrix); }) == ErrorKind::NotMatrix);
}

TEST_CASE("flat names", "[model]") {
  CHECK(flat_name("x") == "x");
  CHECK(flat_name("x[0][3]") == "x_0_3");
}

TEST_CASE("array cells are laid out row-major", "[model]") {
  auto inst = arrays();
  const auto* m = inst.find_array("m");
  REQUIRE(m);
  CHECK(m->cell_count() == 6);
  CHECK(inst.vars[static_cast<std::size_t>(m->first) + 4].id == "m[1][1]");
  CHECK(*inst.find_var("m[1][1]") == m->first + 4);
  CHECK_FALSE(inst.find_var("m[2][0]"));
  auto useful = inst.useful();
  CHECK(useful[static_cast<std::size_t>(*inst.find_var("x[3]"))]);
  CHECK_FALSE(useful[static_cast<std::size_t>(*inst.find_var("m[0][0]"))]);
}

TEST_CASE("instantiations reject duplicate ids", "[model]") {
  Instantiation s;
  s.add("x", 1);
  s.add("y", std::nullopt);
  CHECK(error_of([&] { s.add("x", 2); }) == ErrorKind::DuplicateId);
  CHECK(s.as_map() == std::map<std::string, std::int64_t>{{"x", 1}});
}

TEST_CASE("solution checking verdicts", "[model]") {
  auto inst = parse_instance(support::csp(R"(<var id="x"> 0..3 </var>
<var id="y"> 0..3 </var>
<var id="unused"> 0..3 </var>)",
                                          R"(<intension id="lt"> lt(x,y) </intension>
<intension> ne(x,2) </intension>)"));
  Instantiation ok;
  ok.add("x", 0);
  ok.add("y", 1);
  CHECK(check_solution(inst, ok).status == Verdict::Status::Satisfied);

  Instantiation bad;
  bad.add("x", 2);
  bad.add("y", 1);
  auto v = check_solution(inst, bad);
  CHECK(v.status == Verdict::Status::Violated);
  CHECK(v.violated == std::vector<std::string>{"lt", "#1"});

  Instantiation part;
  part.add("x", 0);
  CHECK(check_solution(inst, part).status == Verdict::Status::Incomplete);
  CHECK(check_solution(inst, part).missing == std::vector<std::string>{"y"});
  CHECK(check_solution(inst, part, CheckMode::PartialAllowed).status == Verdict::Status::Satisfied);

  Instantiation star;
  star.add("x", 0);
  star.add("y", 1);
  star.add("unused", std::nullopt);
  CHECK(check_solution(inst, star).status == Verdict::Status::Satisfied);
  Instantiation star_useful;
  star_useful.add("x", std::nullopt);
  CHECK(error_of([&] { check_solution(inst, star_useful); }) == ErrorKind::StarInScope);

  Instantiation outside;
  outside.add("x", 7);
  CHECK(error_of([&] { check_solution(inst, outside); }) == ErrorKind::ValueOutsideDomain);
  Instantiation unknown;
  unknown.add("w", 0);
  CHECK(error_of([&] { check_solution(inst, unknown); }) == ErrorKind::UnknownVariable);
}
