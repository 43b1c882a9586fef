#pragma once

#include <cstdint>
#include <set>
#include <string>

#include "mmx/module.hpp"

namespace mmx {

/// Value of Supp / Ass / Att queries over Z or the p-adic integers.
/// `generic` marks the zero ideal; `full` marks the whole spectrum and
/// renders `maximals` informational.
struct SupportSet {
  bool full = false;
  bool generic = false;
  std::set<Integer> maximals;

  static SupportSet everything();
  bool empty() const { return !full && !generic && maximals.empty(); }
  bool contains_maximal(const Integer& p) const { return full || maximals.count(p) > 0; }

  friend bool operator==(const SupportSet&, const SupportSet&) = default;
};

SupportSet intersect(const SupportSet& a, const SupportSet& b);
SupportSet unite(const SupportSet& a, const SupportSet& b);
bool meets(const SupportSet& a, const SupportSet& b);

/// Non-negative integer or Infinite; sums and products saturate, with 0 * inf = 0.
class ExtNat {
 public:
  ExtNat() = default;
  ExtNat(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  static ExtNat infinite() {
    ExtNat n;
    n.infinite_ = true;
    return n;
  }

  bool is_infinite() const { return infinite_; }
  std::uint64_t value() const { return value_; }

  friend ExtNat operator+(ExtNat a, ExtNat b);
  friend ExtNat operator*(ExtNat a, ExtNat b);
  friend bool operator==(const ExtNat&, const ExtNat&) = default;
  friend bool operator<=(ExtNat a, ExtNat b);
  friend ExtNat min(ExtNat a, ExtNat b) { return a <= b ? a : b; }
  friend ExtNat max(ExtNat a, ExtNat b) { return a <= b ? b : a; }

  std::string to_string() const;

 private:
  std::uint64_t value_ = 0;
  bool infinite_ = false;
};

using PrimeSet = std::set<Integer>;

SupportSet support(const RingContext& ctx, const CanonicalModule& m);
SupportSet ass(const RingContext& ctx, const CanonicalModule& m);
/// Attached primes of an artinian module (C and Pr blocks only).
SupportSet att(const RingContext& ctx, const CanonicalModule& a);

/// Torsion functor for the ideal cut out by `primes`. An empty set is the
/// unit ideal and yields 0.
CanonicalModule gamma(const RingContext& ctx, const PrimeSet& primes, const CanonicalModule& m);
/// Localization of a torsion module at the complement of the union of `primes`.
CanonicalModule localize(const PrimeSet& primes, const CanonicalModule& t);
/// Base change to the completion of Z at the ideal cut out by `primes`.
CanonicalModule complete(const PrimeSet& primes, const CanonicalModule& m);

ExtNat length(const CanonicalModule& m);
/// Nonnegative generator of Ann(M); 1 for the zero module.
Integer annihilator(const CanonicalModule& m);

struct Classification {
  bool noetherian = false;
  bool artinian = false;
  bool minimax = false;
  bool matlis_reflexive = false;

  friend bool operator==(const Classification&, const Classification&) = default;
};

Classification classify(const RingContext& ctx, const CanonicalModule& m);

/// Least a with p^a M = p^(a+1) M.
Exponent truncation_exponent(const Integer& p, const CanonicalModule& m);

/// M / p^a M and (0 :_M p^a), used by the truncation algorithms.
CanonicalModule quotient_by_power(const Integer& p, Exponent a, const CanonicalModule& m);
CanonicalModule socle_of_power(const Integer& p, Exponent a, const CanonicalModule& m);

}  // namespace mmx
