#include "orbicurve/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <regex>

#include "orbicurve/errors.hpp"

namespace orbicurve {

int CuspidalFamily::n() const { return (std::gcd(2 * a + 1, 2 * b + 1) - 1) / 2; }

namespace {

Word word(std::initializer_list<std::pair<std::size_t, long>> letters) {
  Word w;
  for (auto [g, e] : letters) w.push_back({g, e});
  return free_reduce(std::move(w));
}

Word power(const Word& w, long e) {
  Word out;
  const Word base = e < 0 ? inverse(w) : w;
  for (long i = 0; i < (e < 0 ? -e : e); ++i) out = concat(out, base);
  return out;
}

AbelianGroup cyclic(long n) { return abelian_from_cyclic_orders({mpz_class(n)}); }

ExpectedFact order_fact(std::uint64_t n, std::string description) {
  ExpectedFact f;
  f.kind = FactKind::Order;
  f.order = n;
  f.description = std::move(description);
  return f;
}

ExpectedFact abelian_fact(std::vector<Word> extra, AbelianGroup a, std::string description) {
  ExpectedFact f;
  f.kind = FactKind::AbelianizationMatches;
  f.extra = std::move(extra);
  f.abelian = std::move(a);
  f.description = std::move(description);
  return f;
}

ExpectedFact quotient_order_fact(std::vector<Word> extra, std::uint64_t n, std::string description) {
  ExpectedFact f;
  f.kind = FactKind::QuotientOrder;
  f.extra = std::move(extra);
  f.order = n;
  f.description = std::move(description);
  return f;
}

ExpectedFact quotient_presentation_fact(std::vector<Word> extra, Signature target, std::string description) {
  ExpectedFact f;
  f.kind = FactKind::QuotientPresentationOf;
  f.extra = std::move(extra);
  f.target = canonicalize(std::move(target));
  f.description = std::move(description);
  return f;
}

// <x, y | xyx = yxy, x y^2 x = 1>
NamedExample quartic() {
  const std::size_t x = 0, y = 1;
  std::vector<Word> rels{word({{x, 1}, {y, 1}, {x, 1}, {y, -1}, {x, -1}, {y, -1}}),
                         word({{x, 1}, {y, 2}, {x, 1}})};
  NamedExample ex{"quartic-b3p1", FinitePresentation({"x", "y"}, std::move(rels)), {}, {}};
  // alpha^2 = beta^3 = (alpha beta)^2 holds for alpha = xyx, beta = xy.
  const Word alpha = word({{x, 1}, {y, 1}, {x, 1}});
  const Word beta = word({{x, 1}, {y, 1}});
  const Word alpha_sq = power(alpha, 2);
  const Word ab_sq = power(concat(alpha, beta), 2);
  ex.facts.push_back(order_fact(12, "order 12"));
  ex.facts.push_back(quotient_order_fact({concat(alpha_sq, inverse(power(beta, 3)))}, 12,
                                         "alpha^2 = beta^3 holds (alpha = xyx, beta = xy)"));
  ex.facts.push_back(quotient_order_fact({concat(alpha_sq, inverse(ab_sq))}, 12,
                                         "alpha^2 = (alpha beta)^2 holds (alpha = xyx, beta = xy)"));
  ex.facts.push_back(quotient_order_fact({alpha_sq}, 6, "quotient by (xyx)^2 has order 6"));
  ex.facts.push_back(
      quotient_presentation_fact({alpha_sq}, {0, 0, {2, 2, 3}}, "quotient by (xyx)^2 matches G_{0,(2,2,3)}"));
  ex.limitation = "with alpha = xy instead, the quotient by alpha^2 is Z/4";
  return ex;
}

// Braid group of 4 strands on the sphere.
NamedExample sextic() {
  const std::size_t a1 = 0, a2 = 1, a3 = 2;
  std::vector<Word> rels{
      word({{a1, 1}, {a2, 1}, {a1, 1}, {a2, -1}, {a1, -1}, {a2, -1}}),
      word({{a2, 1}, {a3, 1}, {a2, 1}, {a3, -1}, {a2, -1}, {a3, -1}}),
      word({{a1, 1}, {a3, 1}, {a1, -1}, {a3, -1}}),
      word({{a1, 1}, {a2, 1}, {a3, 2}, {a2, 1}, {a1, 1}}),
  };
  NamedExample ex{"sextic-b4p1", FinitePresentation({"a1", "a2", "a3"}, std::move(rels)), {}, {}};
  const Word xw = word({{a1, 1}, {a2, 1}, {a1, 1}});
  const Word yw = word({{a1, 1}, {a2, 1}});
  const Word zw = word({{a3, 1}});
  const Word x_sq = power(xw, 2);
  const Word zxy = concat(concat(zw, xw), yw);
  ex.facts.push_back(abelian_fact({}, cyclic(6), "abelianization Z/6 (irreducible sextic)"));
  ex.facts.push_back(abelian_fact({x_sq, zxy}, abelianization(Signature{0, 1, {2, 3}}),
                                  "quotient by x^2, zxy abelianizes like Z/2 * Z/3"));
  ex.limitation = "the quotient Z/2 * Z/3 is infinite; only its abelianization is compared";
  return ex;
}

// v^5 = alpha^2 = beta^3 = gamma^7 = alpha beta gamma, v central.
NamedExample quintic() {
  const std::size_t al = 0, be = 1, ga = 2, v = 3;
  std::vector<Word> rels{
      word({{v, 5}, {al, -2}}),
      word({{al, 2}, {be, -3}}),
      word({{be, 3}, {ga, -7}}),
      concat(word({{ga, 7}}), inverse(word({{al, 1}, {be, 1}, {ga, 1}}))),
      word({{v, 1}, {al, 1}, {v, -1}, {al, -1}}),
      word({{v, 1}, {be, 1}, {v, -1}, {be, -1}}),
      word({{v, 1}, {ga, 1}, {v, -1}, {ga, -1}}),
  };
  NamedExample ex{"quintic-237", FinitePresentation({"alpha", "beta", "gamma", "v"}, std::move(rels)), {}, {}};
  ex.facts.push_back(abelian_fact({}, cyclic(5), "abelianization Z/5 (irreducible quintic)"));
  ex.facts.push_back(quotient_presentation_fact({word({{v, 1}})}, {0, 0, {2, 3, 7}},
                                                "quotient by v matches G_{0,(2,3,7)}"));
  ex.limitation = "the quotient is infinite; enumeration is compared up to the coset bound";
  return ex;
}

std::optional<CuspidalFamily> parse_family_name(std::string_view name) {
  static const std::regex re(R"((?:artal|cuspidal)[(\-:]?\s*(\d+)\s*[,\-]\s*(\d+)\s*[,\-]\s*(\d+)\s*\)?)");
  std::match_results<std::string_view::const_iterator> mr;
  if (!std::regex_match(name.begin(), name.end(), mr, re)) return std::nullopt;
  return CuspidalFamily{std::stoi(mr[1].str()), std::stoi(mr[2].str()), std::stoi(mr[3].str())};
}

}  // namespace

NamedExample cuspidal_family_example(const CuspidalFamily& prm) {
  if (!(prm.d > 3 && prm.a >= prm.b && prm.b > 0 && prm.a + prm.b == prm.d - 2)) {
    throw BadParameters("(d,a,b) needs d > 3, a >= b > 0, a + b = d - 2; got (" +
                        std::to_string(prm.d) + "," + std::to_string(prm.a) + "," + std::to_string(prm.b) + ")");
  }
  const int n = prm.n();
  const std::size_t u = 0, v = 1;
  // u^2 = v^{2n+1}, (v^-n u)^{d-2} = v^{d-1}
  std::vector<Word> rels{
      word({{u, 2}, {v, -(2L * n + 1)}}),
      concat(power(word({{v, -n}, {u, 1}}), prm.d - 2), word({{v, -(prm.d - 1L)}})),
  };
  NamedExample ex{"artal(" + std::to_string(prm.d) + "," + std::to_string(prm.a) + "," + std::to_string(prm.b) + ")",
                  FinitePresentation({"u", "v"}, std::move(rels)), {}, {}};
  ex.facts.push_back(abelian_fact({}, cyclic(prm.d), "abelianization Z/" + std::to_string(prm.d) +
                                                         " (irreducible curve of degree d)"));
  if (n > 0) {
    Signature target{0, 0, {2, 2 * n + 1, prm.d - 2}};
    ex.facts.push_back(quotient_presentation_fact({word({{u, 2}})}, target,
                                                  "quotient by u^2 matches " + to_string(canonicalize(target))));
    ex.limitation =
        "relator images in the triangle group are not checked (word problem); only abelianization and "
        "bounded enumeration of the quotient are compared";
  } else {
    ex.limitation = "n = 0: only the abelianization is checked";
  }
  return ex;
}

NamedExample example_presentation(std::string_view name) {
  if (name == "quartic-b3p1") return quartic();
  if (name == "sextic-b4p1") return sextic();
  if (name == "quintic-237") return quintic();
  if (name.starts_with("artal") || name.starts_with("cuspidal")) {
    auto prm = parse_family_name(name);
    if (!prm) throw BadParameters("cannot parse family parameters from '" + std::string(name) + "'");
    return cuspidal_family_example(*prm);
  }
  throw UnknownExample("unknown example '" + std::string(name) + "'");
}

std::vector<std::string> example_names() { return {"quartic-b3p1", "sextic-b4p1", "quintic-237", "artal(d,a,b)"}; }

FinitePresentation quotient_by_relators(const FinitePresentation& p, const std::vector<Word>& extra) {
  std::vector<Word> rels = p.relators();
  for (const Word& w : extra) {
    p.check_word(w);
    rels.push_back(w);
  }
  return FinitePresentation(p.generators(), std::move(rels));
}

namespace {

std::string order_text(const std::optional<std::uint64_t>& o) {
  return o ? std::to_string(*o) : std::string("exceeded");
}

Check check_fact(const FinitePresentation& p, const ExpectedFact& f, std::size_t bound) {
  const FinitePresentation q = quotient_by_relators(p, f.extra);
  switch (f.kind) {
    case FactKind::Order:
    case FactKind::QuotientOrder: {
      const auto o = group_order(q, bound);
      return {f.description, o && *o == f.order,
              "enumerated " + order_text(o) + ", expected " + std::to_string(f.order)};
    }
    case FactKind::AbelianizationMatches: {
      const AbelianGroup got = abelianization_of_presentation(q);
      return {f.description, got == f.abelian, "got " + to_string(got) + ", expected " + to_string(f.abelian)};
    }
    case FactKind::QuotientPresentationOf: {
      const FinitePresentation target = presentation_of(f.target);
      const AbelianGroup got = abelianization_of_presentation(q);
      const AbelianGroup want = abelianization(f.target);
      const auto oq = group_order(q, bound);
      const auto ot = group_order(target, bound);
      const bool ok = got == want && oq == ot;
      return {f.description, ok,
              "abelianization " + to_string(got) + " vs " + to_string(want) + "; enumeration " + order_text(oq) +
                  " vs " + order_text(ot) + " (bound " + std::to_string(bound) + ")"};
    }
  }
  return {f.description, false, "unknown fact kind"};
}

}  // namespace

ExampleReport verify_example(const NamedExample& example, std::size_t bound) {
  ExampleReport r;
  r.name = example.name;
  r.limitation = example.limitation;
  for (const ExpectedFact& f : example.facts) r.facts.push_back(check_fact(example.presentation, f, bound));
  r.pass = std::all_of(r.facts.begin(), r.facts.end(), [](const Check& c) { return c.pass; });
  return r;
}

ExampleReport verify_example(std::string_view name, std::size_t bound) {
  return verify_example(example_presentation(name), bound);
}

PermutationImages psl27_triangle_fixture() {
  constexpr std::uint32_t kInf = 7;
  constexpr std::uint32_t kP = 7;
  auto inv_mod = [](std::uint32_t z) {
    for (std::uint32_t w = 1; w < kP; ++w)
      if (z * w % kP == 1) return w;
    return 0U;
  };
  // z -> -1/z
  Permutation a(8);
  for (std::uint32_t z = 0; z < 8; ++z) {
    if (z == kInf) a[z] = 0;
    else if (z == 0) a[z] = kInf;
    else a[z] = (kP - inv_mod(z)) % kP;
  }
  // z -> -1/(z+1)
  Permutation b(8);
  for (std::uint32_t z = 0; z < 8; ++z) {
    if (z == kInf) b[z] = 0;
    else if ((z + 1) % kP == 0) b[z] = kInf;
    else b[z] = (kP - inv_mod((z + 1) % kP)) % kP;
  }
  Permutation c = invert(compose(a, b));
  return {8, {std::move(a), std::move(b), std::move(c)}};
}

Matrix2d mat_mul(const Matrix2d& a, const Matrix2d& b) {
  Matrix2d c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return c;
}

double projective_distance_to_identity(const Matrix2d& a) {
  double plus = 0.0;
  double minus = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double id = i == j ? 1.0 : 0.0;
      plus = std::max(plus, std::abs(a[i][j] - id));
      minus = std::max(minus, std::abs(a[i][j] + id));
    }
  }
  return std::min(plus, minus);
}

namespace {

Matrix2d rotation(double theta) {
  return {{{std::cos(theta), std::sin(theta)}, {-std::sin(theta), std::cos(theta)}}};
}

Matrix2d boost(double dist) {
  return {{{std::exp(dist / 2), 0.0}, {0.0, std::exp(-dist / 2)}}};
}

Matrix2d inverse_sl2(const Matrix2d& a) { return {{{a[1][1], -a[0][1]}, {-a[1][0], a[0][0]}}}; }

Matrix2d conjugate(const Matrix2d& by, const Matrix2d& a) { return mat_mul(mat_mul(by, a), inverse_sl2(by)); }

double det(const Matrix2d& a) { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }

}  // namespace

TriangleRep triangle_representation(int m1, int m2, int m3, double tolerance) {
  for (int mi : {m1, m2, m3}) {
    if (mi < 2) throw MalformedSignature("triangle entries must be >= 2");
  }
  const long p = m1, q = m2, r = m3;
  if (q * r + p * r + p * q >= p * q * r) {
    throw NotHyperbolic("(" + std::to_string(m1) + "," + std::to_string(m2) + "," + std::to_string(m3) +
                        ") is not hyperbolic");
  }
  const double alpha = std::numbers::pi / m1;
  const double beta = std::numbers::pi / m2;
  const double gamma = std::numbers::pi / m3;
  // Hyperbolic law of cosines for the sides PQ and PR.
  const double side_pq = std::acosh((std::cos(alpha) * std::cos(beta) + std::cos(gamma)) /
                                    (std::sin(alpha) * std::sin(beta)));
  const double side_pr = std::acosh((std::cos(alpha) * std::cos(gamma) + std::cos(beta)) /
                                    (std::sin(alpha) * std::sin(gamma)));
  // P = i, Q straight above P, R on the ray from P turned by alpha.
  // rotation(theta) turns the tangent space at i by 2 theta.
  TriangleRep rep;
  rep.m = {m1, m2, m3};
  rep.tolerance = tolerance;
  rep.generators[0] = rotation(alpha);
  rep.generators[1] = conjugate(boost(side_pq), rotation(beta));
  rep.generators[2] = conjugate(mat_mul(rotation(alpha / 2), boost(side_pr)), rotation(gamma));
  return rep;
}

TriangleReport check_triangle_representation(const TriangleRep& rep, double rejection_margin) {
  TriangleReport out;
  for (std::size_t i = 0; i < 3; ++i) {
    const Matrix2d& x = rep.generators[i];
    const std::string name = "x" + std::to_string(i + 1);
    const double det_err = std::abs(det(x) - 1.0);
    out.checks.push_back({name + "_determinant", det_err <= rep.tolerance, "|det - 1| = " + std::to_string(det_err)});

    Matrix2d acc = x;
    double min_early = std::numeric_limits<double>::infinity();
    for (int a = 1; a < rep.m[i]; ++a) {
      min_early = std::min(min_early, projective_distance_to_identity(acc));
      acc = mat_mul(acc, x);
    }
    const double final_err = projective_distance_to_identity(acc);
    out.checks.push_back({name + "_power_identity", final_err <= rep.tolerance,
                          "|x^" + std::to_string(rep.m[i]) + " -+ I| = " + std::to_string(final_err)});
    out.checks.push_back({name + "_exact_order", min_early > rejection_margin,
                          "min over smaller powers " + std::to_string(min_early)});
  }
  const Matrix2d prod = mat_mul(mat_mul(rep.generators[0], rep.generators[1]), rep.generators[2]);
  const double prod_err = projective_distance_to_identity(prod);
  out.checks.push_back({"product_relator", prod_err <= rep.tolerance, "|x1 x2 x3 -+ I| = " + std::to_string(prod_err)});
  out.pass = std::all_of(out.checks.begin(), out.checks.end(), [](const Check& c) { return c.pass; });
  return out;
}

}  // namespace orbicurve
