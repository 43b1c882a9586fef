#include <doctest.h>

#include "mmx/error.hpp"
#include "mmx/structure.hpp"

using namespace mmx;

namespace {

const RingContext Zc = RingContext::integers();

CanonicalModule C(long p, Exponent e) { return CanonicalModule::cyclic(p, e); }
CanonicalModule Pr(long p) { return CanonicalModule::pruefer(p); }
CanonicalModule Zp(long p) { return CanonicalModule::adic(p); }
CanonicalModule Z(Count r = 1) { return CanonicalModule::free(r); }
CanonicalModule operator+(const CanonicalModule& a, const CanonicalModule& b) { return direct_sum(a, b); }

SupportSet maximals(std::set<Integer> ps, bool generic = false) {
  SupportSet s;
  s.generic = generic;
  s.maximals = std::move(ps);
  return s;
}

}  // namespace

TEST_CASE("support") {
  CHECK(support(Zc, Pr(2) + C(3, 1)) == maximals({2, 3}));
  CHECK(support(Zc, Z()).full);
  CHECK(support(Zc, Zp(5)).full);
  CHECK(support(Zc, CanonicalModule::zero()).empty());
}

TEST_CASE("associated primes") {
  CHECK(ass(Zc, Z() + C(2, 1)) == maximals({2}, true));
  CHECK(ass(Zc, Pr(3)) == maximals({3}));
  CHECK(ass(Zc, Zp(2)) == maximals({}, true));
}

TEST_CASE("attached primes") {
  CHECK(att(Zc, Pr(2)) == maximals({}, true));
  CHECK(att(Zc, C(2, 3)) == maximals({2}));
  CHECK(att(Zc, C(2, 1) + Pr(3)) == maximals({2}, true));
  CHECK_THROWS_AS(att(Zc, Z()), Error);
}

TEST_CASE("torsion functor") {
  CHECK(gamma(Zc, {2}, Z() + C(2, 2) + Pr(3)) == C(2, 2));
  CHECK(gamma(Zc, {5}, Zp(5)).is_zero());
  CHECK(gamma(Zc, {2, 3}, Pr(2) + Pr(3)) == Pr(2) + Pr(3));
  CHECK(gamma(Zc, {}, C(2, 1)).is_zero());
}

TEST_CASE("localization and completion") {
  CHECK(localize({2}, C(2, 1) + C(3, 1)) == C(2, 1));
  CHECK(localize({7}, C(2, 1)).is_zero());
  CHECK(localize({2, 3}, Pr(2) + Pr(3) + Pr(5)) == Pr(2) + Pr(3));
  CHECK(complete({2}, Z()) == Zp(2));
  CHECK(complete({2}, C(3, 1)).is_zero());
  CHECK(complete({2, 3}, Z() + Pr(2)) == Zp(2) + Zp(3) + Pr(2));
}

TEST_CASE("length and annihilator") {
  CHECK(length(C(2, 3) + C(3, 1)) == ExtNat(4));
  CHECK(length(Pr(2)).is_infinite());
  CHECK(length(CanonicalModule::zero()) == ExtNat(0));
  CHECK(annihilator(C(2, 3) + C(2, 1) + C(5, 2)) == 200);
  CHECK(annihilator(Pr(2)) == 0);
  CHECK(annihilator(CanonicalModule::zero()) == 1);
}

TEST_CASE("classification") {
  CHECK(classify(Zc, Z() + Pr(2)) == Classification{false, false, true, false});
  CHECK(classify(Zc, C(2, 3)) == Classification{true, true, true, true});
  CHECK(classify(RingContext::padic(2), Zp(2) + Pr(2)) == Classification{false, false, true, true});
  CHECK_THROWS_AS(classify(RingContext::padic(2), C(3, 1)), Error);
}

TEST_CASE("truncation exponent") {
  CHECK(truncation_exponent(2, C(2, 3) + Pr(2)) == 3);
  CHECK(truncation_exponent(3, C(2, 5)) == 0);
  CHECK(truncation_exponent(2, Pr(2)) == 0);
  CHECK(quotient_by_power(2, 1, C(2, 3) + Pr(2)) == C(2, 1));
  CHECK(socle_of_power(2, 2, Z() + C(2, 3) + Pr(2)) == C(2, 2) + C(2, 2));
}

TEST_CASE("extended naturals") {
  CHECK(ExtNat(2) + ExtNat::infinite() == ExtNat::infinite());
  CHECK(ExtNat(0) * ExtNat::infinite() == ExtNat(0));
  CHECK(ExtNat(3) <= ExtNat::infinite());
  CHECK_FALSE(ExtNat::infinite() <= ExtNat(3));
}
