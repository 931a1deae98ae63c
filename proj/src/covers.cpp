#include "orbicurve/covers.hpp"

#include <numeric>

#include "orbicurve/errors.hpp"

namespace orbicurve {

std::string KernelCheck::tag() const {
  switch (verdict) {
    case KernelVerdict::TorsionFreeKernel: return "torsion_free_kernel";
    case KernelVerdict::NotHomomorphism: return "not_homomorphism";
    case KernelVerdict::TorsionInKernel: return "torsion_in_kernel";
    case KernelVerdict::Exceeded: return "exceeded";
  }
  return "?";
}

namespace {

std::uint64_t lcm_of(const std::vector<int>& m) {
  std::uint64_t l = 1;
  for (int mi : m) l = std::lcm(l, static_cast<std::uint64_t>(mi));
  return l;
}

}  // namespace

CoverReport torsion_free_subgroup_rank(const Signature& sig, std::uint64_t d) {
  require_canonical(sig);
  if (d < 1) throw NonIntegralRank("index must be >= 1");
  const std::uint64_t l = lcm_of(sig.m);
  if (d % l != 0) {
    throw LcmNotDividing("lcm(m) = " + std::to_string(l) + " does not divide d = " + std::to_string(d));
  }
  const Rational chi = euler_characteristic(sig);
  const Rational dchi = Rational(mpz_class(std::to_string(d))) * chi;
  // compact: rho = 1 - d chi / 2; open: rho = 1 - d chi
  Rational rho = sig.compact() ? Rational(Rational(1) - dchi / 2) : Rational(Rational(1) - dchi);
  rho.canonicalize();
  if (rho.get_den() != 1 || rho < 0) {
    throw NonIntegralRank("rho = " + to_string(rho) + " is not a non-negative integer at d = " +
                          std::to_string(d));
  }
  return {d, rho.get_num().get_ui(), sig.compact()};
}

CoverReport lcm_cover_for_free_product(const Signature& sig) {
  require_canonical(sig);
  if (sig.compact()) throw NotOpenGroup("the lcm construction needs r >= 1, got " + to_string(sig));
  return torsion_free_subgroup_rank(sig, lcm_of(sig.m));
}

KernelCheck verify_torsion_free_kernel(const Signature& sig, const PermutationImages& images,
                                       std::size_t cap) {
  require_canonical(sig);
  if (sig.compact() && sgn(euler_characteristic(sig)) > 0) {
    throw UnsupportedKind("torsion classification not available for spherical " + to_string(sig));
  }
  const FinitePresentation p = presentation_of(sig);
  KernelCheck out;
  if (!verify_homomorphism(p, images)) {
    out.verdict = KernelVerdict::NotHomomorphism;
    return out;
  }
  const std::size_t x0 = 2 * static_cast<std::size_t>(sig.g);
  for (std::size_t j = 0; j < sig.n(); ++j) {
    if (permutation_order(images.images[x0 + j]) != static_cast<std::uint64_t>(sig.m[j])) {
      out.verdict = KernelVerdict::TorsionInKernel;
      out.cone_point = j + 1;
      return out;
    }
  }
  auto order = permutation_group_order(images, cap);
  if (!order) {
    out.verdict = KernelVerdict::Exceeded;
    return out;
  }
  out.verdict = KernelVerdict::TorsionFreeKernel;
  out.index = *order;
  return out;
}

}  // namespace orbicurve
