#include "orbicurve/serre.hpp"

#include <array>
#include <numeric>

namespace orbicurve {

std::string to_string(Realizability r) {
  switch (r) {
    case Realizability::Realizable: return "realizable";
    case Realizability::NotRealizable: return "not_realizable";
    case Realizability::OpenProblem: return "open";
  }
  return "?";
}

std::string to_string(SerreRule r) {
  switch (r) {
    case SerreRule::OpenCoprimeFreeProduct: return "open_coprime_free_product";
    case SerreRule::FiniteCyclic: return "finite_cyclic";
    case SerreRule::TwoTorus: return "two_torus";
    case SerreRule::EuclideanExcluded: return "euclidean_excluded";
    case SerreRule::SphericalExcluded: return "spherical_excluded";
    case SerreRule::HyperbolicCorollary: return "hyperbolic_corollary";
    case SerreRule::HyperbolicTriangleOpenCell: return "hyperbolic_triangle_open_cell";
  }
  return "?";
}

namespace {

// Candidate degree gcd(m_i m_j, m_k) over the three choices of distinguished
// entry k, requiring gcd(m_i, m_j) = 1 and degree >= 6.
std::optional<std::uint64_t> open_cell_degree(const std::vector<int>& m) {
  static constexpr std::array<std::array<int, 3>, 3> kLabelings{{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};
  for (const auto& [i, j, k] : kLabelings) {
    const std::uint64_t mi = static_cast<std::uint64_t>(m[i]);
    const std::uint64_t mj = static_cast<std::uint64_t>(m[j]);
    const std::uint64_t mk = static_cast<std::uint64_t>(m[k]);
    if (std::gcd(mi, mj) != 1) continue;
    const std::uint64_t d = std::gcd(mi * mj, mk);
    if (d >= 6) return d;
  }
  return std::nullopt;
}

}  // namespace

SerreVerdict plane_curve_realizability(const Signature& sig) {
  require_canonical(sig);
  SerreVerdict v;
  if (!sig.compact()) {
    v.rule = SerreRule::OpenCoprimeFreeProduct;
    const bool ok = sig.n() < 2 || (sig.n() == 2 && std::gcd(sig.m[0], sig.m[1]) == 1);
    v.outcome = ok ? Realizability::Realizable : Realizability::NotRealizable;
    v.justification = ok ? "free product F * Z_p * Z_q with gcd(p,q) = 1"
                         : "open group not of the form F * Z_p * Z_q with gcd(p,q) = 1";
    return v;
  }
  if (is_finite_cyclic(sig)) {
    v.outcome = Realizability::Realizable;
    v.rule = SerreRule::FiniteCyclic;
    v.degree = *finite_order(sig);
    v.justification = "complement of a smooth curve of degree equal to the group order";
    return v;
  }
  if (sig.g == 1 && sig.m.empty()) {
    v.outcome = Realizability::Realizable;
    v.rule = SerreRule::TwoTorus;
    v.justification = "Z^2: complement of three non-concurrent lines";
    return v;
  }
  const int s = sgn(euler_characteristic(sig));
  if (s > 0) {
    v.outcome = Realizability::NotRealizable;
    v.rule = SerreRule::SphericalExcluded;
    v.justification = "spherical non-cyclic group";
    return v;
  }
  if (s == 0) {
    v.outcome = Realizability::NotRealizable;
    v.rule = SerreRule::EuclideanExcluded;
    v.justification = "Euclidean group other than Z^2";
    return v;
  }
  if (sig.g == 0 && sig.n() == 3) {
    if (auto d = open_cell_degree(sig.m)) {
      v.outcome = Realizability::OpenProblem;
      v.rule = SerreRule::HyperbolicTriangleOpenCell;
      v.degree = *d;
      v.justification = "gcd(m_i,m_j) = 1 and gcd(m_i m_j, m_k) >= 6 for some labeling";
      return v;
    }
  }
  v.outcome = Realizability::NotRealizable;
  v.rule = SerreRule::HyperbolicCorollary;
  v.justification = "hyperbolic compact group outside the triangle open cell";
  return v;
}

}  // namespace orbicurve
