#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbicurve/presentation.hpp"

namespace orbicurve {

/// Exact rational; GMP keeps results of arithmetic in lowest terms with a
/// positive denominator.
using Rational = mpq_class;

/// Formats as "p/q" with q >= 1, e.g. "-1/42", "0/1".
std::string to_string(const Rational& q);
/// Inverse of to_string. Accepts "p/q" and bare integers; normalizes.
Rational parse_rational(const std::string& s);

/// (g, r, m) naming the curve orbifold group G_{g,(r,m)}: genus g, r
/// punctures and cone points of multiplicities m, each >= 2.
struct Signature {
  int g = 0;
  int r = 0;
  std::vector<int> m;

  std::size_t n() const { return m.size(); }
  bool compact() const { return r == 0; }

  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;
};

std::string to_string(const Signature& s);

/// Sorts m non-decreasing. Throws MalformedSignature on g < 0, r < 0 or any
/// multiplicity < 2.
Signature canonicalize(Signature sig);
bool is_canonical(const Signature& sig);
/// Throws MalformedSignature unless the signature is canonical.
void require_canonical(const Signature& sig);

/// 2 - 2g - r - sum(1 - 1/m_i). Requires canonical input.
Rational euler_characteristic(const Signature& sig);
/// Same value for any ordering of m.
Rational euler_characteristic_unsorted(const Signature& sig);

enum class Geometry { Spherical, Euclidean, Hyperbolic };

std::string to_string(Geometry g);

/// Order of a group; empty means infinite.
using GroupOrder = std::optional<std::uint64_t>;

struct Kind {
  Geometry geometry = Geometry::Hyperbolic;
  GroupOrder order;

  bool finite() const { return order.has_value(); }
  friend bool operator==(const Kind&, const Kind&) = default;
};

Kind classify_kind(const Signature& sig);
GroupOrder finite_order(const Signature& sig);

/// True exactly for the finite cyclic members of the family:
/// (r = 0, g = 0, n <= 2) or (r >= 1, 2g + r - 1 = 0, n <= 1).
bool is_finite_cyclic(const Signature& sig);

/// Generators a1,b1,...,ag,bg,x1,...,xn,y1,...,yr; relators x_j^{m_j}
/// followed by prod[a_i,b_i] * (prod x_j * prod y_k)^-1. An empty long
/// relator is omitted.
FinitePresentation presentation_of(const Signature& sig);

enum class Ninf { Satisfies, Fails, Undetermined };

struct NinfStatus {
  Ninf status = Ninf::Undetermined;
  std::string witness;  // set when status is Fails
};

std::string to_string(Ninf n);

NinfStatus satisfies_ninf(const Signature& sig);

}  // namespace orbicurve
