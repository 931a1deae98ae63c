#include <doctest.h>

#include <set>

#include "orbicurve/cosets.hpp"
#include "orbicurve/errors.hpp"
#include "orbicurve/fixtures.hpp"
#include "orbicurve/signature.hpp"

using namespace orbicurve;

namespace {

FinitePresentation parse(const char* text) { return parse_presentation_text(text).presentation; }

// Closure of a set of permutations under composition, by brute force over
// word length.
std::size_t brute_closure(const std::vector<Permutation>& gens) {
  std::set<Permutation> seen{identity_permutation(gens.front().size())};
  std::vector<Permutation> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier)
      for (const auto& g : gens) {
        auto q = compose(p, g);
        if (seen.insert(q).second) next.push_back(q);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace

TEST_CASE("orders of small groups") {
  CHECK(group_order(parse("gens a b\nrel a^2\nrel b^3\nrel a b a b a b\n")) == 12u);
  CHECK(group_order(parse("gens a\nrel a^7\n")) == 7u);
  CHECK(group_order(parse("gens a b\nrel a^2\nrel b^2\nrel a b a b\n")) == 4u);
  CHECK(group_order(parse("gens a b\nrel a^2\nrel b^3\nrel a b a b a b a b a b\n")) == 60u);
  CHECK(group_order(parse("gens a b\nrel a b a^-1 b^-1\nrel a^3\nrel b^5\n")) == 15u);
  CHECK(group_order(parse("gens a\n")) == std::nullopt);
  CHECK(group_order(parse("gens a b\nrel a^2\nrel b^3\nrel a b a b a b\n"), 10) == std::nullopt);
}

TEST_CASE("subgroup index") {
  const auto pf = parse_presentation_text("gens x y\nrel x^2\nrel y^3\nrel x y x y\nsub x\n");
  const auto t = coset_enumeration(pf.presentation, pf.subgroup_generators, 100);
  REQUIRE(t);
  CHECK(t->cosets == 3);
  CHECK(table_is_closed(*t, pf.presentation));
}

TEST_CASE("coset action is a faithful-enough homomorphism") {
  const FinitePresentation p = presentation_of({0, 0, {2, 3, 4}});
  const auto t = coset_enumeration(p, {}, 1000);
  REQUIRE(t);
  CHECK(table_is_closed(*t, p));
  const PermutationImages perms = generator_permutations(*t);
  CHECK(verify_homomorphism(p, perms));
  CHECK(permutation_group_order(perms) == 24u);
  CHECK(brute_closure(perms.images) == 24);
}

TEST_CASE("permutation utilities") {
  const Permutation a = parse_cycles("(1 2 3)", 4);
  const Permutation b = parse_cycles("(3 4)", 4);
  CHECK(format_cycles(a) == "(1 2 3)");
  CHECK(format_cycles(identity_permutation(3)) == "()");
  CHECK(permutation_order(a) == 3);
  CHECK(permutation_order(compose(a, b)) == 4);
  // apply a first, then b: 2 -> 3 -> 4
  CHECK(compose(a, b)[1] == 3);
  CHECK(compose(a, invert(a)) == identity_permutation(4));
  CHECK_FALSE(is_bijection(Permutation{0, 0}));
  CHECK_THROWS(parse_cycles("(1 1)", 3));
  CHECK_THROWS(parse_cycles("(1 5)", 3));
}

TEST_CASE("permutation files") {
  const FinitePresentation p = presentation_of({0, 0, {2, 3}});
  const auto perms = parse_permutation_file("# comment\nx1 = (1 2)\nx2 = (1 2 3)\n", p);
  CHECK(perms.degree == 3);
  CHECK_THROWS_AS(parse_permutation_file("x1 = (1 2)\n", p), ArityMismatch);
  CHECK_THROWS_AS(verify_homomorphism(p, PermutationImages{3, {identity_permutation(3)}}), ArityMismatch);
}

TEST_CASE("psl(2,7) fixture generates a group of order 168") {
  const PermutationImages f = psl27_triangle_fixture();
  f.validate();
  CHECK(permutation_order(f.images[0]) == 2);
  CHECK(permutation_order(f.images[1]) == 3);
  CHECK(permutation_order(f.images[2]) == 7);
  CHECK(brute_closure(f.images) == 168);
  CHECK(permutation_group_order(f) == 168u);
  CHECK(verify_homomorphism(presentation_of({0, 0, {2, 3, 7}}), f));
}
