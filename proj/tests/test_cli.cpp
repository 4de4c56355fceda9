#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uac/cli/harness.hpp"
#include "uac/core/error.hpp"

using namespace uac;

namespace {

ErrorKind kind_of(std::string_view text) {
  try {
    parse_config(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::kStructural;
}

const CheckRow* row(const Report& r, std::string_view id) {
  for (const auto& x : r.rows)
    if (x.id == id) return &x;
  return nullptr;
}

}  // namespace

TEST_CASE("config lines set the fields") {
  const auto c = parse_config("suite pgl2\nq 5\nprec 8");
  CHECK(c.suites == std::vector<std::string>{"pgl2"});
  CHECK(c.q == 5);
  CHECK(c.prec == 8);
  CHECK(c.warnings.empty());
}

TEST_CASE("comments, blank lines and comma lists") {
  const auto c = parse_config("# header\n\nsuite witt, coxeter   # trailing\n  p 5\nformat text\n");
  // canonical order, not file order
  CHECK(c.suites == std::vector<std::string>{"coxeter", "witt"});
  CHECK(c.p == 5);
  CHECK(c.format == "text");
  CHECK(parse_config("suite all").suites == known_suites());
}

TEST_CASE("render round-trips") {
  for (const char* t : {"suite pgl2\nq 5\nprec 8", "suite all\nformat text\noutput /tmp/x.tsv\nwindow 10", "", "suite\nn 2\np 7"}) {
    const auto c = parse_config(t);
    CHECK(parse_config(c.render()) == c);
  }
}

TEST_CASE("unknown key names the line") {
  try {
    parse_config("suite pgl2\n\nfoo 3\n");
    FAIL("accepted unknown key");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kParse);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    CHECK(std::string(e.what()).find("foo") != std::string::npos);
  }
  CHECK(kind_of("suite nonsense") == ErrorKind::kParse);
  CHECK(kind_of("q three") == ErrorKind::kParse);
}

TEST_CASE("duplicate key: last wins with a warning") {
  const auto c = parse_config("q 3\nq 5\n");
  CHECK(c.q == 5);
  REQUIRE(c.warnings.size() == 1);
  CHECK(c.warnings[0].find("line 2") != std::string::npos);
}

TEST_CASE("out-of-range values are usage errors") {
  CHECK(kind_of("q 1") == ErrorKind::kUsage);
  CHECK(kind_of("q 6") == ErrorKind::kUsage);
  CHECK(kind_of("p 2") == ErrorKind::kUsage);
  CHECK(kind_of("format json") == ErrorKind::kUsage);
  CHECK(kind_of("window 1") == ErrorKind::kUsage);
  CHECK_NOTHROW(parse_config("q 4"));
  CHECK_NOTHROW(parse_config("q 9"));
  SuiteConfig bad = default_config();
  bad.q = 1;
  CHECK_THROWS_AS(run_suite(bad), Error);
}

TEST_CASE("empty selection gives an empty passing report") {
  const auto r = run_suite(parse_config("suite"));
  CHECK(r.rows.empty());
  CHECK(r.ok());
  CHECK(r.render("tsv") == "check_id\tanchor\tstatus\twitness\n");
  CHECK(r.render("text").empty());
}

TEST_CASE("pgl2 at q=2: two fixed points, discriminant fails") {
  const auto r = run_suite(parse_config("suite pgl2\nq 2\nprec 6"));
  const auto* fp = row(r, "pgl2.fixed_points");
  REQUIRE(fp);
  CHECK(fp->status == "PASS");
  CHECK(r.render("text").find("count=2: PASS") != std::string::npos);
  // characteristic 2: (l-l')^2 is a square, so its valuation is even
  const auto* disc = row(r, "pgl2.discriminant");
  REQUIRE(disc);
  CHECK(disc->status == "FAIL");
  CHECK_FALSE(r.ok());
}

TEST_CASE("pgl2 at odd q passes") {
  for (int q : {3, 5}) {
    SuiteConfig c = parse_config("suite pgl2");
    c.q = q;
    const auto r = run_suite(c);
    CHECK(r.rows.size() == 7);
    CHECK(r.ok());
  }
}

TEST_CASE("full default run passes and is byte-identical") {
  const auto c = default_config();
  const auto a = run_suite(c);
  const auto b = run_suite(c);
  CHECK(a.ok());
  CHECK(a.render("tsv") == b.render("tsv"));
  CHECK(a.render("text") == b.render("text"));
  for (const char* id : {"coxeter.quotient", "alcove.lift", "reps.mackey", "reps.costandard", "springer.table", "fourier.pairing",
                         "pgl2.discriminant", "pgl2.fixed_points", "pgl2.recurrence", "pgl2.almost_char", "pgl2.a_space",
                         "pgl2.coinvariants", "witt.oracle", "witt.lattices", "witt.borel"})
    CHECK_MESSAGE(row(a, id) != nullptr, id);
}

TEST_CASE("witt suite at p=5") {
  const auto r = run_suite(parse_config("suite witt\np 5"));
  CHECK(r.ok());
  CHECK(row(r, "witt.oracle")->witness.find("pairs=625") != std::string::npos);
  CHECK(row(r, "witt.borel")->witness.find("borels=6") != std::string::npos);
}
