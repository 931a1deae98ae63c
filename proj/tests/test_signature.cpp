#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "orbicurve/abelian.hpp"
#include "orbicurve/cosets.hpp"
#include "orbicurve/errors.hpp"
#include "orbicurve/signature.hpp"

using namespace orbicurve;

namespace {

// chi from the definition, with plain rationals as (num, den) pairs of long.
std::pair<long, long> chi_oracle(const Signature& s) {
  long num = 2 - 2L * s.g - s.r;
  long den = 1;
  for (int m : s.m) {
    // subtract (m - 1) / m
    num = num * m - (m - 1L) * den;
    den *= m;
    const long g = std::gcd(num, den);
    num /= g;
    den /= g;
  }
  const long g = std::gcd(num, den);
  return {num / g, den / g};
}

std::vector<Signature> small_grid(int max_gr, int max_n, int max_m) {
  std::vector<Signature> out;
  std::vector<std::vector<int>> tuples{{}};
  for (int len = 1; len <= max_n; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& t : tuples) {
      if (static_cast<int>(t.size()) != len - 1) continue;
      for (int v = t.empty() ? 2 : t.back(); v <= max_m; ++v) {
        auto u = t;
        u.push_back(v);
        next.push_back(u);
      }
    }
    tuples.insert(tuples.end(), next.begin(), next.end());
  }
  for (int g = 0; g <= max_gr; ++g)
    for (int r = 0; r <= max_gr; ++r)
      for (const auto& m : tuples) out.push_back({g, r, m});
  return out;
}

}  // namespace

TEST_CASE("canonicalize sorts and validates") {
  CHECK(canonicalize({0, 0, {7, 2, 3}}) == Signature{0, 0, {2, 3, 7}});
  CHECK_THROWS_AS(canonicalize({-1, 0, {}}), MalformedSignature);
  CHECK_THROWS_AS(canonicalize({0, -2, {}}), MalformedSignature);
  CHECK_THROWS_AS(canonicalize({0, 0, {1, 3}}), MalformedSignature);
  CHECK_THROWS_AS(canonicalize({0, 0, {0}}), MalformedSignature);
  CHECK_THROWS_AS(require_canonical({0, 0, {3, 2}}), MalformedSignature);
}

TEST_CASE("rational strings") {
  CHECK(to_string(euler_characteristic({0, 0, {2, 3, 7}})) == "-1/42");
  CHECK(to_string(euler_characteristic({1, 0, {}})) == "0/1");
  CHECK(to_string(euler_characteristic({0, 0, {}})) == "2/1");
  CHECK(parse_rational("-1/42") == Rational(-1, 42));
  CHECK(to_string(parse_rational("6/4")) == "3/2");
}

TEST_CASE("euler characteristic matches the defining sum") {
  for (const Signature& s : small_grid(3, 4, 9)) {
    const auto [num, den] = chi_oracle(s);
    const Rational chi = euler_characteristic(s);
    CHECK(chi.get_num() == num);
    CHECK(chi.get_den() == den);
  }
}

TEST_CASE("euler characteristic ignores the order of m") {
  std::mt19937 rng(7);
  for (const Signature& s : small_grid(2, 4, 8)) {
    auto m = s.m;
    std::shuffle(m.begin(), m.end(), rng);
    CHECK(euler_characteristic_unsorted({s.g, s.r, m}) == euler_characteristic(s));
  }
}

TEST_CASE("kind follows the sign of chi") {
  CHECK(classify_kind({0, 0, {2, 3, 7}}).geometry == Geometry::Hyperbolic);
  CHECK(classify_kind({0, 0, {2, 3, 6}}).geometry == Geometry::Euclidean);
  CHECK(classify_kind({0, 0, {2, 3, 5}}).geometry == Geometry::Spherical);
  CHECK(classify_kind({1, 0, {}}).geometry == Geometry::Euclidean);
  CHECK(classify_kind({0, 1, {}}).geometry == Geometry::Spherical);
  CHECK(classify_kind({0, 2, {}}).geometry == Geometry::Euclidean);
}

TEST_CASE("finite orders") {
  CHECK(finite_order({0, 0, {}}) == 1u);
  CHECK(finite_order({0, 0, {5}}) == 1u);
  CHECK(finite_order({0, 0, {4, 6}}) == 2u);
  CHECK(finite_order({0, 0, {2, 2, 5}}) == 10u);
  CHECK(finite_order({0, 0, {2, 3, 3}}) == 12u);
  CHECK(finite_order({0, 0, {2, 3, 4}}) == 24u);
  CHECK(finite_order({0, 0, {2, 3, 5}}) == 60u);
  CHECK(finite_order({0, 1, {}}) == 1u);
  CHECK(finite_order({0, 1, {9}}) == 9u);
  CHECK_FALSE(finite_order({0, 2, {}}).has_value());
  CHECK_FALSE(finite_order({1, 0, {}}).has_value());
  CHECK_FALSE(finite_order({0, 0, {2, 3, 7}}).has_value());
}

TEST_CASE("finite iff chi > 0") {
  for (const Signature& s : small_grid(4, 5, 12)) {
    const bool finite = finite_order(s).has_value();
    CHECK_MESSAGE(finite == (sgn(euler_characteristic(s)) > 0), to_string(s));
  }
}

TEST_CASE("finite orders agree with coset enumeration") {
  for (const Signature& s : small_grid(1, 3, 10)) {
    const auto o = finite_order(s);
    if (!o) continue;
    CHECK_MESSAGE(group_order(presentation_of(s), 10000) == o, to_string(s));
  }
}

TEST_CASE("presentation shape") {
  const FinitePresentation p = presentation_of({1, 1, {2, 3}});
  CHECK(p.generators() == std::vector<std::string>{"a1", "b1", "x1", "x2", "y1"});
  CHECK(p.relators().size() == 3);
  CHECK(presentation_of({0, 0, {}}).relators().empty());
}

TEST_CASE("abelianization of presentation_of agrees with the formula") {
  for (const Signature& s : small_grid(2, 4, 8)) {
    CHECK_MESSAGE(abelianization_of_presentation(presentation_of(s)) == abelianization(s), to_string(s));
  }
}

TEST_CASE("NINF") {
  CHECK(satisfies_ninf({0, 0, {2, 3, 7}}).status == Ninf::Satisfies);
  CHECK(satisfies_ninf({1, 0, {}}).status == Ninf::Fails);
  CHECK_FALSE(satisfies_ninf({1, 0, {}}).witness.empty());
  CHECK(satisfies_ninf({0, 0, {2, 2, 2, 2}}).status == Ninf::Fails);
  for (const Signature& s : {Signature{0, 0, {3, 3, 3}}, Signature{0, 0, {2, 4, 4}}, Signature{0, 0, {2, 3, 6}}}) {
    CHECK(satisfies_ninf(s).status == Ninf::Undetermined);
  }
  CHECK(satisfies_ninf({0, 2, {}}).status == Ninf::Satisfies);
}
