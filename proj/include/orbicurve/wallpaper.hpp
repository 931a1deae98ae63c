#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "orbicurve/report.hpp"
#include "orbicurve/signature.hpp"

namespace orbicurve {

/// Element a + b w of Q(w), where w is a primitive cube root of unity
/// (w^2 = -1 - w).
class Cyclo {
 public:
  Cyclo() = default;
  Cyclo(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  Cyclo(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  Cyclo(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static Cyclo omega() { return {Rational(0), Rational(1)}; }
  static Cyclo omega_bar() { return {Rational(-1), Rational(-1)}; }

  const Rational& real_part() const { return a_; }
  const Rational& omega_part() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  Cyclo conj() const { return {a_ - b_, -b_}; }
  /// Field norm a^2 - ab + b^2.
  Rational norm() const;
  /// Throws std::domain_error on zero.
  Cyclo inverse() const;

  friend Cyclo operator+(const Cyclo& x, const Cyclo& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
  friend Cyclo operator-(const Cyclo& x, const Cyclo& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
  friend Cyclo operator-(const Cyclo& x) { return {-x.a_, -x.b_}; }
  friend Cyclo operator*(const Cyclo& x, const Cyclo& y);
  friend Cyclo operator/(const Cyclo& x, const Cyclo& y) { return x * y.inverse(); }
  friend bool operator==(const Cyclo& x, const Cyclo& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  Cyclo pow(int e) const;
  std::string str() const;

 private:
  Rational a_{0};
  Rational b_{0};
};

/// A point of (C*)^2 with coordinates in Q(w).
struct TorusPoint {
  Cyclo s;
  Cyclo t;

  /// Throws BadParameters if a coordinate is zero.
  TorusPoint(Cyclo s_, Cyclo t_);

  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;
  std::string str() const;
};

using Triple = std::array<Cyclo, 3>;

/// c * x^ex * y^ey * z^ez
struct Monomial3 {
  long coeff;
  int ex;
  int ey;
  int ez;
};

using Polynomial3 = std::vector<Monomial3>;

Cyclo evaluate(const Polynomial3& f, const Triple& q);

using Matrix2 = std::array<std::array<long, 2>, 2>;

Matrix2 multiply(const Matrix2& a, const Matrix2& b);
/// Smallest e >= 1 with a^e = I, or 0 if none up to `limit`.
int matrix_order(const Matrix2& a, int limit = 64);

/// Throws BadK unless k is 2, 3, 4 or 6.
void require_wallpaper_k(int k);

TorusPoint apply_sigma(int k, const TorusPoint& p);
/// sigma_k applied `times` times.
TorusPoint apply_sigma_power(int k, const TorusPoint& p, int times);
/// Invariant functions of the Z/k action, giving the quotient map to the
/// affine surface of `surface_polynomial(k)`.
Triple apply_pibar(int k, const TorusPoint& p);
/// Defining polynomial of the quotient surface, in the form f(x, y, z) = 0.
const Polynomial3& surface_polynomial(int k);
Cyclo surface_residual(int k, const Triple& q);
/// Points with nontrivial isotropy.
std::vector<TorusPoint> fixed_point_set(int k);
/// Action of the generator on the lattice Z a + Z b.
Matrix2 h_matrix(int k);

/// Compact signature whose orbifold group is the extension of Z/k by Z^2.
Signature wallpaper_signature(int k);

struct WallpaperAction {
  int k = 2;
  Polynomial3 surface;
  std::vector<TorusPoint> fixed_points;
  Matrix2 h{};
};

WallpaperAction wallpaper_action(int k);

struct SuiteReport {
  int k = 0;
  bool pass = false;
  std::vector<Check> checks;
};

/// Deterministic rational sample points, numerators and denominators in
/// [1, 1000] with random signs, never in the fixed-point set.
std::vector<TorusPoint> sample_points(int k, std::size_t samples, std::uint64_t seed);

SuiteReport run_wallpaper_suite(int k, std::size_t samples, std::uint64_t seed);
SuiteReport run_wallpaper_suite_on(int k, const std::vector<TorusPoint>& points);

}  // namespace orbicurve
