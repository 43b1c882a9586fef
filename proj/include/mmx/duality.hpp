#pragma once

#include <set>
#include <string>

#include "mmx/module.hpp"

namespace mmx {

/// Which ring a computed module naturally lives over: Z, the p-adic
/// integers, or the completion of Z at finitely many primes (a finite
/// product of p-adic rings).
struct RingMarker {
  enum class Kind { Integers, Padic, Product };
  Kind kind = Kind::Integers;
  Integer prime;             // Padic only
  std::set<Integer> primes;  // Product only

  static RingMarker integers() { return {}; }
  static RingMarker padic(Integer p) { return {Kind::Padic, std::move(p), {}}; }
  static RingMarker product(std::set<Integer> ps) { return {Kind::Product, {}, std::move(ps)}; }

  friend bool operator==(const RingMarker& a, const RingMarker& b) {
    return a.kind == b.kind && a.prime == b.prime && a.primes == b.primes;
  }
};

std::string to_string(const RingMarker& r);

/// Marker for a functor value computed in `ctx`: Padic stays Padic; over Z,
/// adic blocks in the value force the product over their primes.
RingMarker result_ring(const RingContext& ctx, const CanonicalModule& value);

struct DualResult {
  CanonicalModule module;
  RingMarker ring;
};

/// Matlis dual. Over Z only torsion inputs are accepted; the value is a
/// module over the completion at the input's support.
DualResult dual(const RingContext& ctx, const CanonicalModule& m);

/// Dual over the completion at each prime separately, so adic blocks are
/// allowed (Zp <-> Pr). Free rank is rejected.
CanonicalModule dual_completed(const CanonicalModule& m);

struct BidualityReport {
  bool reflexive = false;          // the classification verdict
  bool bidual_isomorphic = false;  // M ~ M^vv, second dual over the completion
  bool ring_changed = false;       // first dual left the base ring
};

BidualityReport check_biduality(const RingContext& ctx, const CanonicalModule& m);

}  // namespace mmx
