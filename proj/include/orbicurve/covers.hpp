#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "orbicurve/cosets.hpp"
#include "orbicurve/signature.hpp"

namespace orbicurve {

/// Torsion-free normal subgroup of index d. For a compact signature rho is
/// the genus of the covering curve (2 - 2 rho = d chi); for an open one it is
/// the rank of the free kernel (1 - rho = d chi).
struct CoverReport {
  std::uint64_t d = 1;
  std::uint64_t rho = 0;
  bool compact = true;

  friend bool operator==(const CoverReport&, const CoverReport&) = default;
};

/// Riemann-Hurwitz arithmetic for a torsion-free normal subgroup of index d.
/// Checks necessary conditions only. Throws LcmNotDividing when lcm(m) does
/// not divide d and NonIntegralRank when rho is not a non-negative integer.
CoverReport torsion_free_subgroup_rank(const Signature& sig, std::uint64_t d);

/// Kernel of the map sending each finite free factor Z/m_j faithfully into
/// Z/lcm(m) and the free factors to 0. Throws NotOpenGroup when r = 0.
CoverReport lcm_cover_for_free_product(const Signature& sig);

enum class KernelVerdict { TorsionFreeKernel, NotHomomorphism, TorsionInKernel, Exceeded };

struct KernelCheck {
  KernelVerdict verdict = KernelVerdict::NotHomomorphism;
  std::uint64_t index = 0;     // TorsionFreeKernel: order of the image group
  std::size_t cone_point = 0;  // TorsionInKernel: 1-based j whose x_j image is too small

  std::string tag() const;
};

/// Certifies that the permutation quotient given by `images` (one per
/// generator of presentation_of(sig)) has torsion-free kernel: relators must
/// map to the identity and each x_j must map to an element of order exactly
/// m_j. Throws UnsupportedKind for compact spherical signatures.
KernelCheck verify_torsion_free_kernel(const Signature& sig, const PermutationImages& images,
                                       std::size_t cap = kDefaultClosureCap);

}  // namespace orbicurve
