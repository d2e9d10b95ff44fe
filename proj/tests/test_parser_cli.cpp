#include <doctest.h>

#include "recring/parser.hpp"
#include "recring/recursion_system.hpp"

using namespace recring;

namespace {

const char* kR2Source = R"(# functionally recursive system R2
system R2 arity 2
gen s : phi 0 : [[0,0],[1,0]]
gen t : phi 0 : [[0,t],[0,s]]
)";

}  // namespace

TEST_CASE("golden R2 source parses to the built-in") {
  const RecursionSystem parsed = parse_system(kR2Source);
  CHECK(parsed == builtin_system("R2"));
  CHECK(parsed.name() == "R2");
  CHECK(parsed.arity() == 2);
  CHECK(parsed.generator('t').blocks[0][1] == NcPolynomial::word("t"));
}

TEST_CASE("serialization round-trips") {
  for (const auto& name : builtin_system_names()) {
    const RecursionSystem sys = builtin_system(name);
    const std::string text = serialize_system(sys);
    CHECK(parse_system(text) == sys);
    CHECK(serialize_system(parse_system(text)) == text);
  }
}

TEST_CASE("shape errors carry positions") {
  const char* bad =
      "system X arity 2\n"
      "gen s : phi 0 : [[0,0,0],[1,0]]\n";
  CHECK_THROWS_WITH_AS(parse_system(bad),
                       doctest::Contains("3 entries, expected 2"), ParseError);
  try {
    parse_system(bad);
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("undeclared generators are rejected") {
  const char* bad =
      "system X arity 2\n"
      "gen s : phi 0 : [[0,u],[0,0]]\n";
  CHECK_THROWS_WITH_AS(parse_system(bad),
                       doctest::Contains("undeclared generator 'u'"),
                       ParseError);
}

TEST_CASE("assorted malformed sources") {
  CHECK_THROWS_AS(parse_system(""), ParseError);
  CHECK_THROWS_AS(parse_system("system X\n"), ParseError);
  CHECK_THROWS_AS(parse_system("system X arity 0\ngen s : phi 0 : [[0]]\n"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_system("system X arity 2\n"
                   "gen s : phi 0 : [[0,0],[1,0]]\n"
                   "gen s : phi 0 : [[0,0],[1,0]]\n"),
      ParseError);
  CHECK_THROWS_AS(parse_system("system X arity 2\nnot a gen line\n"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_system("system X arity 2\ngen s : phi 1/0 : [[0,0],[0,0]]\n"),
      ParseError);
}

TEST_CASE("expression grammar") {
  CHECK(parse_poly_expr("s t") == NcPolynomial::word("st"));
  CHECK(parse_poly_expr("(s t)^3") == NcPolynomial::word("ststst"));
  CHECK(parse_poly_expr("2*s - s") == NcPolynomial::word("s"));
  CHECK(parse_poly_expr("1/2 * t + 1/2 * t") == NcPolynomial::word("t"));
  CHECK(parse_poly_expr("s + t - s - t").is_zero());
  CHECK(parse_poly_expr("-s + s").is_zero());
  CHECK(parse_poly_expr("(s + t)^2") ==
        parse_poly_expr("s s + s t + t s + t t"));
  CHECK(parse_poly_expr("0").is_zero());
  CHECK_THROWS_AS(parse_poly_expr("(s"), ParseError);
  CHECK_THROWS_AS(parse_poly_expr("s ^ t"), ParseError);
  CHECK_THROWS_AS(parse_poly_expr(""), ParseError);
  CHECK_THROWS_AS(parse_poly_expr("1/0"), ParseError);
}

TEST_CASE("polynomial strings re-parse to themselves") {
  for (const char* src : {"1 - 2*s*t", "s", "0", "1/3*t + s", "2 + t"}) {
    const NcPolynomial p = parse_poly_expr(src);
    CHECK(parse_poly_expr(p.to_string()) == p);
  }
}
