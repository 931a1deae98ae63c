#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "orbicurve/abelian.hpp"
#include "orbicurve/cosets.hpp"
#include "orbicurve/presentation.hpp"
#include "orbicurve/report.hpp"
#include "orbicurve/signature.hpp"

namespace orbicurve {

/// Coset bound used when checking example facts.
inline constexpr std::size_t kExampleBound = 5000;

enum class FactKind { Order, AbelianizationMatches, QuotientOrder, QuotientPresentationOf };

/// A claim about the example group, or about its quotient by `extra`.
struct ExpectedFact {
  FactKind kind = FactKind::Order;
  std::vector<Word> extra;
  std::uint64_t order = 0;  // Order, QuotientOrder
  AbelianGroup abelian;     // AbelianizationMatches
  Signature target;         // QuotientPresentationOf
  std::string description;
};

struct NamedExample {
  std::string name;
  FinitePresentation presentation;
  std::vector<ExpectedFact> facts;
  /// What the fact list cannot certify, if anything.
  std::string limitation;
};

/// Parameters of the rational cuspidal family: degree d, with d > 3,
/// a >= b > 0 and a + b = d - 2.
struct CuspidalFamily {
  int d = 0;
  int a = 0;
  int b = 0;
  /// 2n + 1 = gcd(2a + 1, 2b + 1)
  int n() const;
};

/// Known names: quartic-b3p1, sextic-b4p1, quintic-237 and artal(d,a,b)
/// (also artal-d-a-b, or cuspidal in place of artal). Throws UnknownExample or BadParameters.
NamedExample example_presentation(std::string_view name);
NamedExample cuspidal_family_example(const CuspidalFamily& params);
std::vector<std::string> example_names();

/// Appends `extra` to the relators. Throws UnknownGenerator for words outside
/// the generator range.
FinitePresentation quotient_by_relators(const FinitePresentation& p, const std::vector<Word>& extra);

struct ExampleReport {
  std::string name;
  bool pass = false;
  std::vector<Check> facts;
  std::string limitation;
};

ExampleReport verify_example(std::string_view name, std::size_t bound = kExampleBound);
ExampleReport verify_example(const NamedExample& example, std::size_t bound = kExampleBound);

/// Images of x1, x2, x3 of presentation_of((0,0,(2,3,7))) in PSL(2,7) acting
/// on the 8 points of the projective line over F_7: x1 = z -> -1/z,
/// x2 = z -> -1/(z+1), x3 = (x1 x2)^-1. Point i in 0..6 is i, point 7 is
/// infinity.
PermutationImages psl27_triangle_fixture();

using Matrix2d = std::array<std::array<double, 2>, 2>;

inline constexpr double kTriangleTolerance = 1e-9;
inline constexpr double kTriangleRejectionMargin = 1e-6;

/// Rotations by 2 pi / m_i about the vertices of the hyperbolic triangle with
/// angles pi / m_i, as matrices in SL(2, R) acting on the upper half plane.
struct TriangleRep {
  std::array<int, 3> m{};
  std::array<Matrix2d, 3> generators{};
  double tolerance = kTriangleTolerance;
};

/// Throws NotHyperbolic unless 1/m1 + 1/m2 + 1/m3 < 1.
TriangleRep triangle_representation(int m1, int m2, int m3, double tolerance = kTriangleTolerance);

struct TriangleReport {
  bool pass = false;
  std::vector<Check> checks;
};

/// Projective checks: unit determinants, x_i^{m_i} = +-I within tolerance,
/// no smaller power within `rejection_margin` of +-I, and x1 x2 x3 = +-I.
TriangleReport check_triangle_representation(const TriangleRep& rep,
                                             double rejection_margin = kTriangleRejectionMargin);

Matrix2d mat_mul(const Matrix2d& a, const Matrix2d& b);
/// max |entry| distance to the nearer of I and -I.
double projective_distance_to_identity(const Matrix2d& a);

}  // namespace orbicurve
