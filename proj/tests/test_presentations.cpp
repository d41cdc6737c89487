#include <doctest.h>

#include "pi2/presentation.hpp"

using namespace pi2;

namespace {
const std::vector<std::string> kXY{"x", "y"};
}

TEST_CASE("words are freely reduced") {
  Word w = parse_word("x y y^-1 x^-1", kXY);
  CHECK(w.empty());
  CHECK(w.to_string() == "1");
  CHECK(parse_word("x^2 x^3 y", kXY).to_string() == "x^5 y");
  CHECK(parse_word("xyx", kXY) == Word::gen("x") * Word::gen("y") * Word::gen("x"));
  CHECK(parse_word("1", kXY).empty());
  Word u = parse_word("x^3 y^-1 x^2 y", kXY);
  CHECK((u * u.inverse()).empty());
  CHECK(u.length() == 7);
  CHECK(u.pow(-2) == u.inverse() * u.inverse());
}

TEST_CASE("relator is lhs^-1 rhs") {
  Relation rel{Word::gen("y", 2), Word::gen("x", 7)};
  CHECK(relator(rel).to_string() == "y^-2 x^7");
}

TEST_CASE("parse the two presentations of Q28") {
  Presentation p = parse_presentation("<x,y | y^2 = x^7, y^-1 x y x^2 = x^3 y^-1 x^2 y>");
  CHECK(p == enr(7, 3));
  CHECK(p.to_string() == "<x, y | y^2 = x^7, y^-1 x y x^2 = x^3 y^-1 x^2 y>");
  Presentation s = parse_presentation("<x, y | y^2 = x^7, y = xyx>");
  CHECK(s == standard_presentation(7));
  CHECK(parse_presentation(p.to_string()) == p);
}

TEST_CASE("family constructors") {
  CHECK(enr(7, 2).to_string() == "<x, y | y^2 = x^7, y^-1 x y x = x^2 y^-1 x^2 y>");
  CHECK(enr(2, 3).to_string() == "<x, y | y^2 = x^2, y^-1 x y x^2 = x^3 y^-1 x^2 y>");
  CHECK(enr(5, 1).relations()[1].lhs.to_string() == "y^-1 x y");
  CHECK_THROWS_AS(enr(1, 3), std::invalid_argument);
  CHECK(rewritten_p_prime().to_string() == "<x, y | y^2 = x^7, y^-1 x^2 y x^2 = x^-3 y^-1 x y x^4>");
}

TEST_CASE("bare relators and empty relation lists") {
  Presentation p = parse_presentation("<a, b | a^3, b^2, a b a b>");
  CHECK(p.relations().size() == 3);
  CHECK(p.relator(0).to_string() == "a^3");
  CHECK(parse_presentation("<x | >").relations().empty());
}

TEST_CASE("parse errors carry a location") {
  try {
    parse_presentation("<x, y | y^2 = z^7>");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 15);
  }
  CHECK_THROWS_AS(parse_presentation("<x, y | y^2 = x^7"), ParseError);
  CHECK_THROWS_AS(parse_presentation("<x, x | x>"), ParseError);
  try {
    parse_presentation("<x, y |\n  y^2 = x^^7>");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("huge exponents stay exact") {
  Presentation p = parse_presentation("<x | x^123456789012345678901234567890>");
  CHECK(p.relator(0).letters()[0].exp == BigInt("123456789012345678901234567890"));
}

TEST_CASE("rewrite chain from E73 to the rewritten relation") {
  auto steps = p_prime_rewrite_steps();
  CHECK(steps.size() == 4);
  CheckReport rep = rewrite_chain_check(steps);
  CHECK(rep.ok());

  steps[2].relation.rhs = steps[2].relation.rhs * Word::gen("x");
  CheckReport bad = rewrite_chain_check(steps);
  CHECK_FALSE(bad.ok());
  REQUIRE(bad.first_failure() != nullptr);
  CHECK_FALSE(bad.first_failure()->witness.empty());
}
