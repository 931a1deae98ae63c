#include <doctest.h>

#include "orbicurve/errors.hpp"
#include "orbicurve/presentation.hpp"

using namespace orbicurve;

TEST_CASE("free reduction cancels and merges") {
  Word w{{0, 2}, {1, 1}, {1, -1}, {0, -1}, {2, 3}, {2, -3}};
  CHECK(free_reduce(w) == Word{{0, 1}});
  CHECK(free_reduce(Word{{0, 1}, {0, -1}}).empty());
  CHECK(letter_length(Word{{0, -3}, {1, 2}}) == 5);
}

TEST_CASE("inverse of a word") {
  const Word w{{0, 2}, {1, -1}};
  CHECK(inverse(w) == Word{{1, 1}, {0, -2}});
  CHECK(free_reduce(concat(w, inverse(w))).empty());
}

TEST_CASE("parse and format round trip") {
  FinitePresentation p({"x", "y"}, {});
  const Word w = p.parse_word("x^2 y^-1 x");
  CHECK(w == Word{{0, 2}, {1, -1}, {0, 1}});
  CHECK(p.format_word(w) == "x^2 y^-1 x");
  CHECK(p.format_word({}) == "1");
  CHECK(p.parse_word(p.format_word(w)) == w);
  CHECK_THROWS_AS(p.parse_word("z"), UnknownGenerator);
  CHECK_THROWS_AS(p.parse_word("x^"), ParseError);
}

TEST_CASE("relators with foreign generators are rejected") {
  CHECK_THROWS_AS(FinitePresentation({"x"}, {Word{{1, 1}}}), UnknownGenerator);
}

TEST_CASE("presentation text format") {
  const auto pf = parse_presentation_text(
      "# comment\n"
      "gens a b\n"
      "rel a^2   # trailing\n"
      "rel b^3\n"
      "\n"
      "rel a b a b a b\n"
      "sub a\n");
  CHECK(pf.presentation.generator_count() == 2);
  CHECK(pf.presentation.relators().size() == 3);
  REQUIRE(pf.subgroup_generators.size() == 1);
  CHECK(pf.subgroup_generators[0] == Word{{0, 1}});

  CHECK_THROWS_AS(parse_presentation_text("rel a\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation_text("gens a a\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation_text("gens a\nfoo a\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation_text("gens a\nrel b\n"), UnknownGenerator);
}
