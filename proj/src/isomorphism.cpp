#include "orbicurve/isomorphism.hpp"

namespace orbicurve {

std::string IsoVerdict::tag() const {
  switch (reason) {
    case IsoReason::BothTrivial: return "both_trivial";
    case IsoReason::FiniteCyclicEqualOrder: return "finite_cyclic_equal_order";
    case IsoReason::CompactTuplesEqual: return "compact_tuples_equal";
    case IsoReason::OpenInvariantsEqual: return "open_invariants_equal";
    case IsoReason::MixedCompactOpen: return "mixed_compact_open";
    case IsoReason::InvariantMismatch: return "invariant_mismatch:" + mismatch;
  }
  return "?";
}

namespace {

IsoVerdict mismatch(std::string what) {
  return {false, IsoReason::InvariantMismatch, std::move(what)};
}

}  // namespace

IsoVerdict decide_isomorphism(const Signature& a, const Signature& b) {
  require_canonical(a);
  require_canonical(b);

  if (is_finite_cyclic(a) && is_finite_cyclic(b)) {
    const auto oa = *finite_order(a);
    const auto ob = *finite_order(b);
    if (oa != ob) return mismatch("order");
    return {true, oa == 1 ? IsoReason::BothTrivial : IsoReason::FiniteCyclicEqualOrder, {}};
  }
  if (a.compact() != b.compact()) return {false, IsoReason::MixedCompactOpen, {}};
  if (a.compact()) {
    if (a.g != b.g) return mismatch("g");
    if (a.n() != b.n()) return mismatch("n");
    if (a.m != b.m) return mismatch("m");
    return {true, IsoReason::CompactTuplesEqual, {}};
  }
  if (2 * a.g + a.r != 2 * b.g + b.r) return mismatch("2g+r");
  if (a.n() != b.n()) return mismatch("n");
  if (a.m != b.m) return mismatch("m");
  return {true, IsoReason::OpenInvariantsEqual, {}};
}

}  // namespace orbicurve
