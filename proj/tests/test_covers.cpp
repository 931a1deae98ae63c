#include <doctest.h>

#include <numeric>

#include "orbicurve/covers.hpp"
#include "orbicurve/errors.hpp"
#include "orbicurve/fixtures.hpp"

using namespace orbicurve;

TEST_CASE("ranks") {
  CHECK(torsion_free_subgroup_rank({0, 1, {2, 3}}, 6).rho == 2);
  CHECK(torsion_free_subgroup_rank({0, 2, {2, 3}}, 6).rho == 8);
  const CoverReport r = torsion_free_subgroup_rank({0, 0, {2, 3, 7}}, 168);
  CHECK(r.rho == 3);
  CHECK(r.compact);
  CHECK(lcm_cover_for_free_product({0, 1, {2, 3}}).d == 6);
}

TEST_CASE("rank errors") {
  CHECK_THROWS_AS(torsion_free_subgroup_rank({0, 1, {2, 3}}, 4), LcmNotDividing);
  CHECK_THROWS_AS(torsion_free_subgroup_rank({0, 0, {2, 3, 7}}, 42), NonIntegralRank);
  CHECK(torsion_free_subgroup_rank({0, 0, {3, 3, 3}}, 3).rho == 1);
  CHECK_THROWS_AS(lcm_cover_for_free_product({0, 0, {2, 3, 7}}), NotOpenGroup);
}

TEST_CASE("rank against Riemann-Hurwitz by hand") {
  // compact: 2 - 2 rho = d chi; open: 1 - rho = d chi
  for (int m3 = 7; m3 <= 12; ++m3) {
    const Signature s{0, 0, {2, 3, m3}};
    const long d = std::lcm(6L, static_cast<long>(m3)) * 2;
    const Rational lhs = Rational(2 - 2 * static_cast<long>(torsion_free_subgroup_rank(s, d).rho));
    CHECK(lhs == Rational(d) * euler_characteristic(s));
  }
}

TEST_CASE("sign law") {
  for (int r = 1; r <= 3; ++r) {
    for (int a = 2; a <= 6; ++a) {
      for (int b = a; b <= 6; ++b) {
        const Signature s{0, r, {a, b}};
        const CoverReport c = lcm_cover_for_free_product(s);
        CHECK((c.rho >= 2) == (sgn(euler_characteristic(s)) < 0));
      }
    }
  }
}

TEST_CASE("kernel verification") {
  const Signature s{0, 0, {2, 3, 7}};
  const KernelCheck k = verify_torsion_free_kernel(s, psl27_triangle_fixture());
  CHECK(k.verdict == KernelVerdict::TorsionFreeKernel);
  CHECK(k.index == 168);

  PermutationImages bad = psl27_triangle_fixture();
  bad.images[0] = identity_permutation(8);
  CHECK(verify_torsion_free_kernel(s, bad).verdict == KernelVerdict::NotHomomorphism);

  // Z/2 * Z/3 -> S_3 with x1 trivial is a homomorphism with torsion kernel.
  // Generators are x1, x2, y1 with x1 x2 y1 = 1.
  const Signature open{0, 1, {2, 3}};
  auto with_y = [](Permutation a, Permutation b) {
    Permutation y = invert(compose(a, b));
    return PermutationImages{3, {std::move(a), std::move(b), std::move(y)}};
  };
  PermutationImages t = with_y(identity_permutation(3), parse_cycles("(1 2 3)", 3));
  const KernelCheck kt = verify_torsion_free_kernel(open, t);
  CHECK(kt.verdict == KernelVerdict::TorsionInKernel);
  CHECK(kt.cone_point == 1);
  PermutationImages good = with_y(parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3));
  CHECK(verify_torsion_free_kernel(open, good).verdict == KernelVerdict::TorsionFreeKernel);

  CHECK_THROWS_AS(verify_torsion_free_kernel({0, 0, {2, 3, 5}}, PermutationImages{60, {identity_permutation(60), identity_permutation(60), identity_permutation(60)}}), UnsupportedKind);
}
