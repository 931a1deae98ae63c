#include "orbicurve/wallpaper.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "orbicurve/errors.hpp"

namespace orbicurve {

Rational Cyclo::norm() const {
  Rational n = a_ * a_ - a_ * b_ + b_ * b_;
  n.canonicalize();
  return n;
}

Cyclo Cyclo::inverse() const {
  const Rational n = norm();
  if (sgn(n) == 0) throw std::domain_error("inverse of zero in Q(w)");
  const Cyclo c = conj();
  Rational a = c.a_ / n;
  Rational b = c.b_ / n;
  return {a, b};
}

Cyclo operator*(const Cyclo& x, const Cyclo& y) {
  // (a + b w)(c + d w) = (ac - bd) + (ad + bc - bd) w
  const Rational bd = x.b_ * y.b_;
  Rational re = x.a_ * y.a_ - bd;
  Rational om = x.a_ * y.b_ + x.b_ * y.a_ - bd;
  return {re, om};
}

Cyclo Cyclo::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclo acc(1);
  Cyclo base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::string Cyclo::str() const {
  if (sgn(b_) == 0) return a_.get_str();
  std::string out;
  if (sgn(a_) != 0) out = a_.get_str() + (sgn(b_) > 0 ? "+" : "");
  return out + b_.get_str() + "*w";
}

TorusPoint::TorusPoint(Cyclo s_, Cyclo t_) : s(std::move(s_)), t(std::move(t_)) {
  if (s.is_zero() || t.is_zero()) throw BadParameters("torus point needs nonzero coordinates");
}

std::string TorusPoint::str() const { return "(" + s.str() + ", " + t.str() + ")"; }

Cyclo evaluate(const Polynomial3& f, const Triple& q) {
  Cyclo acc(0);
  for (const Monomial3& term : f) {
    acc = acc + Cyclo(term.coeff) * q[0].pow(term.ex) * q[1].pow(term.ey) * q[2].pow(term.ez);
  }
  return acc;
}

Matrix2 multiply(const Matrix2& a, const Matrix2& b) {
  Matrix2 c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return c;
}

int matrix_order(const Matrix2& a, int limit) {
  const Matrix2 id{{{1, 0}, {0, 1}}};
  Matrix2 p = a;
  for (int e = 1; e <= limit; ++e) {
    if (p == id) return e;
    p = multiply(p, a);
  }
  return 0;
}

void require_wallpaper_k(int k) {
  if (k != 2 && k != 3 && k != 4 && k != 6) {
    throw BadK("k must be one of 2, 3, 4, 6; got " + std::to_string(k));
  }
}

TorusPoint apply_sigma(int k, const TorusPoint& p) {
  require_wallpaper_k(k);
  const Cyclo& s = p.s;
  const Cyclo& t = p.t;
  switch (k) {
    case 2: return {s.inverse(), t.inverse()};
    case 3: return {t.inverse(), s / t};
    case 4: return {t.inverse(), s};
    default: return {s * t, s.inverse()};
  }
}

TorusPoint apply_sigma_power(int k, const TorusPoint& p, int times) {
  TorusPoint q = p;
  for (int i = 0; i < times; ++i) q = apply_sigma(k, q);
  return q;
}

Triple apply_pibar(int k, const TorusPoint& p) {
  require_wallpaper_k(k);
  const Cyclo& s = p.s;
  const Cyclo& t = p.t;
  const Cyclo st = s * t;
  const Cyclo s2t2 = st * st;
  switch (k) {
    case 2:
      return {(s * s + 1) / s, (t * t + 1) / t, (s2t2 + 1) / st};
    case 3:
      return {(s * s * t + s + t * t) / st, (s * t * t + t + s * s) / st,
              (st.pow(3) + s.pow(3) + t.pow(3)) / s2t2};
    case 4:
      return {(st + 1) * (s + t) / st, (s * s + 1) * (t * t + 1) / st,
              (s * t.pow(3) + 1) * (s.pow(3) + t) / s2t2};
    default: {
      // Orbit sums of the monomials s, s^2 t and s^3 t under sigma_6.
      const Cyclo x = (s2t2 + s * s * t + s * t * t + s + t + 1) / st;
      const Cyclo y = (s.pow(4) * t.pow(3) + s.pow(3) * t.pow(4) + s.pow(3) * t + s * t.pow(3) + s + t) / s2t2;
      const Cyclo z = s.pow(3) * t + s * s * t.pow(3) + t * t / s + (s.pow(3) * t).inverse() +
                      (s * s * t.pow(3)).inverse() + s / (t * t);
      return {x, y, z};
    }
  }
}

const Polynomial3& surface_polynomial(int k) {
  require_wallpaper_k(k);
  static const Polynomial3 k2{{1, 2, 0, 0}, {1, 0, 2, 0}, {1, 0, 0, 2}, {-1, 1, 1, 1}, {-4, 0, 0, 0}};
  static const Polynomial3 k3{{1, 3, 0, 0}, {1, 0, 3, 0}, {1, 0, 0, 2}, {-1, 1, 1, 1},
                              {-6, 1, 1, 0}, {3, 0, 0, 1}, {9, 0, 0, 0}};
  static const Polynomial3 k4{{1, 4, 0, 0}, {-7, 2, 1, 0}, {1, 0, 3, 0}, {-1, 1, 1, 1}, {-3, 2, 0, 0},
                              {8, 0, 2, 0}, {2, 1, 0, 1}, {1, 0, 0, 2}, {16, 0, 1, 0}};
  // f6, 19 terms.
  static const Polynomial3 k6{
      {1, 5, 0, 0},   {1, 4, 0, 0},  {-8, 3, 1, 0},  {-23, 3, 0, 0}, {-9, 2, 1, 0},
      {14, 1, 2, 0},  {1, 0, 3, 0},  {2, 2, 0, 1},   {-1, 1, 1, 1},  {-20, 2, 0, 0},
      {82, 1, 1, 0},  {31, 0, 2, 0}, {-2, 1, 0, 1},  {-4, 0, 1, 1},  {1, 0, 0, 2},
      {120, 1, 0, 0}, {132, 0, 1, 0}, {-12, 0, 0, 1}, {144, 0, 0, 0}};
  switch (k) {
    case 2: return k2;
    case 3: return k3;
    case 4: return k4;
    default: return k6;
  }
}

Cyclo surface_residual(int k, const Triple& q) { return evaluate(surface_polynomial(k), q); }

std::vector<TorusPoint> fixed_point_set(int k) {
  require_wallpaper_k(k);
  const Cyclo one(1);
  const Cyclo minus_one(-1);
  std::vector<TorusPoint> p2{{one, one}, {minus_one, minus_one}, {one, minus_one}, {minus_one, one}};
  switch (k) {
    case 2:
    case 4:
      return p2;
    case 3:
      return {{one, one}, {Cyclo::omega(), Cyclo::omega_bar()}, {Cyclo::omega_bar(), Cyclo::omega()}};
    default:
      p2.push_back({Cyclo::omega(), Cyclo::omega()});
      p2.push_back({Cyclo::omega_bar(), Cyclo::omega_bar()});
      return p2;
  }
}

Matrix2 h_matrix(int k) {
  require_wallpaper_k(k);
  // Columns are the images of a and b.
  switch (k) {
    case 2: return {{{-1, 0}, {0, -1}}};   // (a,b) -> (-a,-b)
    case 3: return {{{0, -1}, {1, -1}}};   // (a,b) -> (-b, a-b)
    case 4: return {{{0, -1}, {1, 0}}};    // (a,b) -> (-b, a)
    default: return {{{1, 1}, {-1, 0}}};   // (a,b) -> (a+b, -a)
  }
}

Signature wallpaper_signature(int k) {
  require_wallpaper_k(k);
  switch (k) {
    case 2: return {0, 0, {2, 2, 2, 2}};
    case 3: return {0, 0, {3, 3, 3}};
    case 4: return {0, 0, {2, 4, 4}};
    default: return {0, 0, {2, 3, 6}};
  }
}

WallpaperAction wallpaper_action(int k) {
  return {k, surface_polynomial(k), fixed_point_set(k), h_matrix(k)};
}

namespace {

bool has_nontrivial_isotropy(int k, const TorusPoint& p) {
  TorusPoint q = p;
  for (int j = 1; j < k; ++j) {
    q = apply_sigma(k, q);
    if (q == p) return true;
  }
  return false;
}

bool contains(const std::vector<TorusPoint>& pts, const TorusPoint& p) {
  return std::find(pts.begin(), pts.end(), p) != pts.end();
}

// The 36 points whose coordinates are sixth roots of unity. Every point with
// nontrivial isotropy under these monomial actions lies among them.
std::vector<TorusPoint> sixth_root_grid() {
  const std::vector<Cyclo> roots{Cyclo(1),  Cyclo(-1),          Cyclo::omega(),
                                 -Cyclo::omega(), Cyclo::omega_bar(), -Cyclo::omega_bar()};
  std::vector<TorusPoint> out;
  for (const auto& a : roots)
    for (const auto& b : roots) out.push_back({a, b});
  return out;
}

class CheckList {
 public:
  void add(std::string name, bool pass, std::string detail) {
    checks_.push_back({std::move(name), pass, std::move(detail)});
  }
  SuiteReport finish(int k) && {
    const bool ok = std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
    return {k, ok, std::move(checks_)};
  }

 private:
  std::vector<Check> checks_;
};

// Runs `pred` over the points and reports the first failure.
template <class Pred>
std::pair<bool, std::string> over_points(const std::vector<TorusPoint>& pts, Pred pred) {
  for (const auto& p : pts) {
    if (!pred(p)) return {false, "fails at " + p.str()};
  }
  return {true, std::to_string(pts.size()) + " points"};
}

}  // namespace

std::vector<TorusPoint> sample_points(int k, std::size_t samples, std::uint64_t seed) {
  require_wallpaper_k(k);
  // mt19937_64 output is fully specified; reduce modulo by hand so the
  // sequence does not depend on the standard library's distributions.
  std::mt19937_64 rng(seed);
  auto coord = [&rng] {
    const long num = 1 + static_cast<long>(rng() % 1000);
    const long den = 1 + static_cast<long>(rng() % 1000);
    const bool negative = (rng() & 1U) != 0;
    Rational q(negative ? -num : num, den);
    q.canonicalize();
    return Cyclo(q);
  };
  const auto fixed = fixed_point_set(k);
  std::vector<TorusPoint> out;
  out.reserve(samples);
  while (out.size() < samples) {
    Cyclo s = coord();
    Cyclo t = coord();
    TorusPoint p(std::move(s), std::move(t));
    if (contains(fixed, p)) continue;
    out.push_back(std::move(p));
  }
  return out;
}

SuiteReport run_wallpaper_suite(int k, std::size_t samples, std::uint64_t seed) {
  if (samples < 1) throw BadParameters("samples must be >= 1");
  return run_wallpaper_suite_on(k, sample_points(k, samples, seed));
}

SuiteReport run_wallpaper_suite_on(int k, const std::vector<TorusPoint>& points) {
  require_wallpaper_k(k);
  const auto fixed = fixed_point_set(k);
  const auto grid = sixth_root_grid();
  std::vector<TorusPoint> all = points;
  all.insert(all.end(), fixed.begin(), fixed.end());

  CheckList checks;
  {
    auto [ok, detail] = over_points(all, [k](const TorusPoint& p) { return apply_sigma_power(k, p, k) == p; });
    checks.add("sigma_order", ok, detail);
  }
  {
    auto [ok, detail] = over_points(
        all, [k](const TorusPoint& p) { return apply_pibar(k, apply_sigma(k, p)) == apply_pibar(k, p); });
    checks.add("pibar_invariance", ok, detail);
  }
  {
    auto [ok, detail] = over_points(all, [k](const TorusPoint& p) {
      return surface_residual(k, apply_pibar(k, p)).is_zero();
    });
    checks.add("image_on_surface", ok, detail);
  }
  {
    auto [ok, detail] = over_points(fixed, [k](const TorusPoint& p) { return has_nontrivial_isotropy(k, p); });
    checks.add("fixed_points_isotropy", ok, detail);
  }
  {
    auto [ok, detail] = over_points(points, [k, &fixed](const TorusPoint& p) {
      return contains(fixed, p) || !has_nontrivial_isotropy(k, p);
    });
    checks.add("generic_points_free", ok, detail);
  }
  {
    auto [ok, detail] = over_points(grid, [k, &fixed](const TorusPoint& p) {
      return has_nontrivial_isotropy(k, p) == contains(fixed, p);
    });
    checks.add("fixed_points_complete", ok, "sixth-root grid: " + detail);
  }
  {
    const int order = matrix_order(h_matrix(k));
    checks.add("h_matrix_order", order == k, "order " + std::to_string(order));
  }
  {
    const TorusPoint base(Cyclo(1), Cyclo(1));
    const Triple target = apply_pibar(k, base);
    std::vector<TorusPoint> tested = all;
    tested.insert(tested.end(), grid.begin(), grid.end());
    auto [ok, detail] = over_points(tested, [&](const TorusPoint& p) {
      return p == base || apply_pibar(k, p) != target;
    });
    checks.add("total_ramification", ok, "fiber over pibar(1,1) within tested points: " + detail);
  }
  return std::move(checks).finish(k);
}

}  // namespace orbicurve
