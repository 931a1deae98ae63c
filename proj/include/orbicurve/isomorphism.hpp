#pragma once

#include <string>

#include "orbicurve/signature.hpp"

namespace orbicurve {

enum class IsoReason {
  BothTrivial,
  FiniteCyclicEqualOrder,
  CompactTuplesEqual,
  OpenInvariantsEqual,
  MixedCompactOpen,
  InvariantMismatch,
};

struct IsoVerdict {
  bool isomorphic = false;
  IsoReason reason = IsoReason::InvariantMismatch;
  /// Name of the differing invariant for InvariantMismatch: "order", "g",
  /// "2g+r", "n" or "m".
  std::string mismatch;

  /// Machine-readable tag, e.g. "compact_tuples_equal" or
  /// "invariant_mismatch:m".
  std::string tag() const;
};

/// Decides G_{a} ~= G_{b}. Both signatures must be canonical.
IsoVerdict decide_isomorphism(const Signature& a, const Signature& b);

}  // namespace orbicurve
