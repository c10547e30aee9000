#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "xcsp3/cli.hpp"

using namespace xcsp3;
using support::fixture;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("validate", "[cli]") {
  auto r = run({"validate", fixture("cake_sum.xml")});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "valid: 2 variables, 5 constraints, 1 objective\n");
  auto bad = run({"validate", fixture("negative/tuple_whitespace.xml")});
  CHECK(bad.code == cli::kInvalid);
  CHECK(contains(bad.err, "TupleWhitespace"));
  CHECK(contains(bad.err, "tuple_whitespace.xml: "));
  CHECK(run({"validate", "/nonexistent/file.xml"}).code == cli::kUsage);
  CHECK(run({"validate"}).code == cli::kUsage);
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate", fixture("toy.xml")}).code == cli::kUsage);
}

TEST_CASE("canonical output", "[cli]") {
  auto r = run({"validate", fixture("group_g.xml"), "--canonical-out", "-"});
  CHECK(r.code == cli::kOk);
  CHECK(contains(r.out, "<instance"));
  CHECK_FALSE(contains(r.out, "<group"));
  auto path = (std::filesystem::temp_directory_path() / "xcsp3_cli_canonical.xml").string();
  CHECK(run({"validate", fixture("slides.xml"), "--canonical-out", path}).code == cli::kOk);
  auto again = run({"validate", path});
  CHECK(again.code == cli::kOk);
  CHECK(again.out == run({"validate", fixture("slides.xml")}).out);
  std::filesystem::remove(path);
}

TEST_CASE("check", "[cli]") {
  auto ok = run({"check", fixture("cake_sum.xml"), "--solution", fixture("cake_optimum.xml")});
  CHECK(ok.code == cli::kOk);
  CHECK(ok.out == "satisfied, cost verified: 1700\n");
  auto plain = run({"check", fixture("cake_sum.xml"), "--values", "1 2"});
  CHECK(plain.code == cli::kOk);
  CHECK(plain.out == "satisfied, cost: 1300\n");
  auto violated = run({"check", fixture("cake_sum.xml"), "--values", "4 0"});
  CHECK(violated.code == cli::kViolated);
  CHECK(violated.out == "violated: #1\n");
  auto incomplete = run({"check", fixture("cake_sum.xml"), "--values", "2", "--vars", "b"});
  CHECK(incomplete.code == cli::kIncomplete);
  CHECK(incomplete.out == "incomplete: missing c\n");
  auto partial = run({"check", fixture("cake_sum.xml"), "--values", "2", "--vars", "b", "--partial"});
  CHECK(partial.code == cli::kOk);
  auto mismatch = run({"check", fixture("cake_sum.xml"), "--values",
                       "<instantiation cost=\"1\"><list> b c </list><values> 2 2 </values></instantiation>"});
  CHECK(mismatch.code == cli::kViolated);
  CHECK(contains(mismatch.err, "CostMismatch"));
  CHECK(run({"check", fixture("cake_sum.xml")}).code == cli::kUsage);
  CHECK(run({"check", fixture("cake_sum.xml"), "--values", "200 0"}).code == cli::kInvalid);
}

TEST_CASE("solve", "[cli]") {
  auto cake = run({"solve", fixture("cake_intension.xml")});
  CHECK(cake.code == cli::kOk);
  CHECK(contains(cake.out, "<instantiation type=\"optimum\" cost=\"1700\">"));
  CHECK(contains(cake.out, "OPTIMUM 1700\n"));
  auto toy = run({"solve", fixture("toy.xml")});
  CHECK(toy.code == cli::kUnsat);
  CHECK(toy.out == "UNSAT\n");
  auto count = run({"solve", fixture("langford.xml"), "--count"});
  CHECK(count.code == cli::kOk);
  CHECK(count.out == "solutions=2\nSAT\n");
  auto magic = run({"solve", fixture("magic.xml"), "--count", "--order", "dom"});
  CHECK(magic.out == "solutions=8\nSAT\n");
  auto all = run({"solve", fixture("langford.xml"), "--all"});
  CHECK(all.code == cli::kOk);
  std::size_t n = 0;
  for (auto p = all.out.find("<instantiation"); p != std::string::npos; p = all.out.find("<instantiation", p + 1)) ++n;
  CHECK(n == 2);
  auto limited = run({"solve", fixture("magic.xml"), "--count", "--node-limit", "5"});
  CHECK(limited.code == cli::kLimit);
  CHECK(contains(limited.out, "LIMIT"));
  auto satisfy = run({"solve", fixture("cake_sum.xml"), "--satisfy"});
  CHECK(satisfy.code == cli::kOk);
  CHECK(contains(satisfy.out, "SAT\n"));
  CHECK(run({"solve", fixture("toy.xml"), "--order", "random"}).code == cli::kUsage);
}

TEST_CASE("stats", "[cli]") {
  auto r = run({"stats", fixture("features.xml")});
  CHECK(r.code == cli::kOk);
  CHECK(contains(r.out, "framework=COP\n"));
  CHECK(contains(r.out, "constraints.circuit=2\n"));
  CHECK(contains(r.out, "objective=minimize sum\n"));
  CHECK(contains(r.out, "decision=4\n"));
  auto dropped = run({"stats", fixture("features.xml"), "--drop-class", "grouped"});
  CHECK_FALSE(contains(dropped.out, "constraints.intension=3\n"));
}
