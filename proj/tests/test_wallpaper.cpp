#include <doctest.h>

#include "orbicurve/abelian.hpp"
#include "orbicurve/errors.hpp"
#include "orbicurve/wallpaper.hpp"

using namespace orbicurve;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

Triple rational_triple(Rational a, Rational b, Rational c) { return {Cyclo(a), Cyclo(b), Cyclo(c)}; }

}  // namespace

TEST_CASE("cyclotomic arithmetic") {
  const Cyclo w = Cyclo::omega();
  CHECK(w.pow(3) == Cyclo(1));
  CHECK(w * w == Cyclo::omega_bar());
  CHECK(w + w * w == Cyclo(-1));
  CHECK(w.conj() == Cyclo::omega_bar());
  const Cyclo z(q(3, 2), q(-5, 7));
  CHECK(z * z.inverse() == Cyclo(1));
  CHECK(z * z.conj() == Cyclo(z.norm()));
  CHECK_THROWS(Cyclo().inverse());
}

TEST_CASE("quotient map at (2, 3)") {
  const TorusPoint p{Cyclo(2), Cyclo(3)};
  CHECK(apply_pibar(2, p) == rational_triple(q(5, 2), q(10, 3), q(37, 6)));
  CHECK(apply_pibar(3, p) == rational_triple(q(23, 6), q(25, 6), q(251, 36)));
  CHECK(apply_pibar(4, p) == rational_triple(q(35, 6), q(25, 3), q(605, 36)));
  for (int k : {2, 3, 4, 6}) CHECK(surface_residual(k, apply_pibar(k, p)).is_zero());
}

TEST_CASE("quotient map at the identity") {
  const TorusPoint one{Cyclo(1), Cyclo(1)};
  for (int k : {2, 3, 4, 6}) {
    CHECK(apply_pibar(k, one) == rational_triple(k, k, k));
  }
}

TEST_CASE("sextic surface transcription") {
  const Polynomial3& f = surface_polynomial(6);
  CHECK(f.size() == 19);
  long coeff_sum = 0;
  for (const auto& mono : f) coeff_sum += mono.coeff;
  // f(1,1,1)
  CHECK(coeff_sum == 1 + 1 - 8 - 23 - 9 + 14 + 1 + 2 - 1 - 20 + 82 + 31 - 2 - 4 + 1 + 120 + 132 - 12 + 144);
  CHECK(evaluate(f, rational_triple(6, 6, 6)).is_zero());
  CHECK(evaluate(surface_polynomial(2), rational_triple(2, 2, 2)).is_zero());
}

TEST_CASE("sigma has order k and pibar is invariant") {
  const TorusPoint p{Cyclo(q(2, 3), q(1, 5)), Cyclo(q(-7, 4), q(3))};
  for (int k : {2, 3, 4, 6}) {
    CHECK(apply_sigma_power(k, p, k) == p);
    for (int e = 1; e < k; ++e) CHECK_FALSE(apply_sigma_power(k, p, e) == p);
    CHECK(apply_pibar(k, apply_sigma(k, p)) == apply_pibar(k, p));
    CHECK(surface_residual(k, apply_pibar(k, p)).is_zero());
  }
}

TEST_CASE("fixed points count cone points") {
  // Each cone point of order m_i is an orbit of k / m_i points.
  for (int k : {2, 3, 4, 6}) {
    std::size_t expected = 0;
    for (int m : wallpaper_signature(k).m) expected += k / m;
    CHECK(fixed_point_set(k).size() == expected);
  }
}

TEST_CASE("lattice action") {
  for (int k : {2, 3, 4, 6}) CHECK(matrix_order(h_matrix(k)) == k);
  CHECK(wallpaper_signature(3) == Signature{0, 0, {3, 3, 3}});
  for (int k : {2, 3, 4, 6}) CHECK(euler_characteristic(wallpaper_signature(k)) == 0);
}

TEST_CASE("suites pass and are deterministic") {
  for (int k : {2, 3, 4, 6}) {
    const SuiteReport r = run_wallpaper_suite(k, 20, 11);
    CHECK(r.pass);
    CHECK(r.checks.size() >= 6);
  }
  CHECK(sample_points(4, 10, 5) == sample_points(4, 10, 5));
  CHECK_FALSE(sample_points(4, 10, 5) == sample_points(4, 10, 6));
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(require_wallpaper_k(5), BadK);
  CHECK_THROWS_AS(run_wallpaper_suite(2, 0, 1), BadParameters);
  CHECK_THROWS_AS(TorusPoint(Cyclo(0), Cyclo(1)), BadParameters);
}

TEST_CASE("a corrupted surface fails the suite") {
  // A point off the quotient image must leave a nonzero residual.
  CHECK_FALSE(surface_residual(6, rational_triple(6, 6, 7)).is_zero());
  CHECK_FALSE(surface_residual(3, rational_triple(1, 2, 3)).is_zero());
}
