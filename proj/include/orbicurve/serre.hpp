#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "orbicurve/signature.hpp"

namespace orbicurve {

enum class Realizability { Realizable, NotRealizable, OpenProblem };

enum class SerreRule {
  OpenCoprimeFreeProduct,
  FiniteCyclic,
  TwoTorus,
  EuclideanExcluded,
  SphericalExcluded,
  HyperbolicCorollary,
  HyperbolicTriangleOpenCell,
};

struct SerreVerdict {
  Realizability outcome = Realizability::NotRealizable;
  SerreRule rule = SerreRule::HyperbolicCorollary;
  /// Degree of the realizing (or candidate) curve, when one is determined.
  std::optional<std::uint64_t> degree;
  std::string justification;
};

std::string to_string(Realizability r);
std::string to_string(SerreRule r);

/// Whether G_sig is the fundamental group of a plane curve complement:
/// open groups F_r * Z_p * Z_q with gcd(p, q) = 1, finite cyclic groups and
/// Z^2 are; compact hyperbolic triangle groups (m_i, m_j, m_k) with
/// gcd(m_i, m_j) = 1 and gcd(m_i m_j, m_k) >= 6 for some labeling are open;
/// everything else is not.
SerreVerdict plane_curve_realizability(const Signature& sig);

}  // namespace orbicurve
