#include "orbicurve/signature.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "orbicurve/errors.hpp"

namespace orbicurve {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw ParseError("bad rational '" + s + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Signature& s) {
  std::ostringstream os;
  os << "(g=" << s.g << ",r=" << s.r << ",m=(";
  for (std::size_t i = 0; i < s.m.size(); ++i) os << (i ? "," : "") << s.m[i];
  os << "))";
  return os.str();
}

namespace {

void check_entries(const Signature& sig) {
  if (sig.g < 0) throw MalformedSignature("genus must be non-negative in " + to_string(sig));
  if (sig.r < 0) throw MalformedSignature("punctures must be non-negative in " + to_string(sig));
  for (int mi : sig.m) {
    if (mi < 2) {
      throw MalformedSignature("multiplicity " + std::to_string(mi) + " < 2 in " + to_string(sig) +
                               "; punctures are given by r");
    }
  }
}

std::uint64_t gcd_u(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

}  // namespace

Signature canonicalize(Signature sig) {
  check_entries(sig);
  std::sort(sig.m.begin(), sig.m.end());
  return sig;
}

bool is_canonical(const Signature& sig) {
  if (sig.g < 0 || sig.r < 0) return false;
  if (std::any_of(sig.m.begin(), sig.m.end(), [](int x) { return x < 2; })) return false;
  return std::is_sorted(sig.m.begin(), sig.m.end());
}

void require_canonical(const Signature& sig) {
  check_entries(sig);
  if (!std::is_sorted(sig.m.begin(), sig.m.end())) {
    throw MalformedSignature("signature " + to_string(sig) + " is not canonical (m must be sorted)");
  }
}

Rational euler_characteristic(const Signature& sig) {
  require_canonical(sig);
  Rational chi(2 - 2 * sig.g - sig.r);
  for (int mi : sig.m) chi -= Rational(mi - 1, mi);
  chi.canonicalize();
  return chi;
}

Rational euler_characteristic_unsorted(const Signature& sig) {
  return euler_characteristic(canonicalize(sig));
}

std::string to_string(Geometry g) {
  switch (g) {
    case Geometry::Spherical: return "spherical";
    case Geometry::Euclidean: return "euclidean";
    case Geometry::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

GroupOrder finite_order(const Signature& sig) {
  require_canonical(sig);
  const auto& m = sig.m;
  if (sig.r >= 1) {
    if (2 * sig.g + sig.r - 1 != 0) return std::nullopt;
    if (m.empty()) return 1;
    if (m.size() == 1) return static_cast<std::uint64_t>(m[0]);
    return std::nullopt;
  }
  if (sig.g != 0) return std::nullopt;
  switch (m.size()) {
    case 0:
    case 1:
      return 1;
    case 2:
      return gcd_u(static_cast<std::uint64_t>(m[0]), static_cast<std::uint64_t>(m[1]));
    case 3: {
      if (m[0] != 2) return std::nullopt;
      if (m[1] == 2) return 2 * static_cast<std::uint64_t>(m[2]);  // (2,2,n), including (2,2,2)
      if (m[1] == 3) {
        switch (m[2]) {
          case 3: return 12;
          case 4: return 24;
          case 5: return 60;
          default: return std::nullopt;
        }
      }
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

Kind classify_kind(const Signature& sig) {
  const Rational chi = euler_characteristic(sig);
  Kind k;
  const int s = sgn(chi);
  k.geometry = s > 0 ? Geometry::Spherical : (s == 0 ? Geometry::Euclidean : Geometry::Hyperbolic);
  k.order = finite_order(sig);
  return k;
}

bool is_finite_cyclic(const Signature& sig) {
  require_canonical(sig);
  if (sig.r == 0) return sig.g == 0 && sig.n() <= 2;
  return 2 * sig.g + sig.r - 1 == 0 && sig.n() <= 1;
}

FinitePresentation presentation_of(const Signature& sig) {
  require_canonical(sig);
  std::vector<std::string> gens;
  const std::size_t g = static_cast<std::size_t>(sig.g);
  const std::size_t n = sig.n();
  const std::size_t r = static_cast<std::size_t>(sig.r);
  for (std::size_t i = 1; i <= g; ++i) {
    gens.push_back("a" + std::to_string(i));
    gens.push_back("b" + std::to_string(i));
  }
  for (std::size_t j = 1; j <= n; ++j) gens.push_back("x" + std::to_string(j));
  for (std::size_t k = 1; k <= r; ++k) gens.push_back("y" + std::to_string(k));

  const std::size_t x0 = 2 * g;
  const std::size_t y0 = x0 + n;
  std::vector<Word> rels;
  for (std::size_t j = 0; j < n; ++j) rels.push_back({{x0 + j, sig.m[j]}});

  Word commutators;
  for (std::size_t i = 0; i < g; ++i) {
    const std::size_t a = 2 * i;
    const std::size_t b = 2 * i + 1;
    commutators.insert(commutators.end(), {{a, 1}, {b, 1}, {a, -1}, {b, -1}});
  }
  Word product;
  for (std::size_t j = 0; j < n; ++j) product.push_back({x0 + j, 1});
  for (std::size_t k = 0; k < r; ++k) product.push_back({y0 + k, 1});
  Word long_relator = concat(commutators, inverse(product));
  if (!long_relator.empty()) rels.push_back(std::move(long_relator));
  return FinitePresentation(std::move(gens), std::move(rels));
}

std::string to_string(Ninf n) {
  switch (n) {
    case Ninf::Satisfies: return "satisfies";
    case Ninf::Fails: return "fails";
    case Ninf::Undetermined: return "undetermined";
  }
  return "?";
}

NinfStatus satisfies_ninf(const Signature& sig) {
  require_canonical(sig);
  if (sig.r == 0 && sgn(euler_characteristic(sig)) == 0) {
    const bool torus = sig.g == 1 && sig.m.empty();
    const bool pillowcase = sig.g == 0 && sig.m == std::vector<int>{2, 2, 2, 2};
    if (torus || pillowcase) {
      return {Ninf::Fails, "<translation> = Z normal, f.g., infinite index"};
    }
    return {Ninf::Undetermined, {}};
  }
  return {Ninf::Satisfies, {}};
}

}  // namespace orbicurve
