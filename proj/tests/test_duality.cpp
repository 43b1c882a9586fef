#include <doctest.h>

#include "mmx/duality.hpp"
#include "mmx/error.hpp"
#include "mmx/structure.hpp"

using namespace mmx;

namespace {

const RingContext Zc = RingContext::integers();
const RingContext P2 = RingContext::padic(2);

CanonicalModule C(long p, Exponent e) { return CanonicalModule::cyclic(p, e); }
CanonicalModule Pr(long p) { return CanonicalModule::pruefer(p); }
CanonicalModule Zp(long p) { return CanonicalModule::adic(p); }
CanonicalModule operator+(const CanonicalModule& a, const CanonicalModule& b) { return direct_sum(a, b); }

}  // namespace

TEST_CASE("dual values") {
  CHECK(dual(Zc, C(2, 3)).module == C(2, 3));
  CHECK(dual(Zc, C(2, 3)).ring == RingMarker::product({2}));
  CHECK(dual(Zc, Pr(2)).module == Zp(2));
  CHECK(dual(P2, Zp(2)).module == Pr(2));
  CHECK(dual(P2, Zp(2)).ring == RingMarker::padic(2));
  CHECK(dual(Zc, CanonicalModule::zero()).module.is_zero());
}

TEST_CASE("dual rejects what it cannot represent") {
  for (const auto& m : {CanonicalModule::free(1), Zp(3)}) {
    try {
      dual(Zc, m);
      FAIL("expected NotRepresentable");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotRepresentable);
    }
  }
}

TEST_CASE("biduality") {
  const auto r = check_biduality(P2, Zp(2) + C(2, 1) + Pr(2));
  CHECK(r.reflexive);
  CHECK(r.bidual_isomorphic);

  const auto f = check_biduality(Zc, C(2, 1) + C(3, 1));
  CHECK(f.reflexive);
  CHECK(f.bidual_isomorphic);
  CHECK_FALSE(f.ring_changed);

  const auto pr = check_biduality(Zc, Pr(2));
  CHECK_FALSE(pr.reflexive);
  CHECK(pr.bidual_isomorphic);
  CHECK(pr.ring_changed);
}

TEST_CASE("dual_completed swaps divisible and adic blocks") {
  CHECK(dual_completed(Zp(2) + Pr(3) + C(5, 2)) == Pr(2) + Zp(3) + C(5, 2));
  CHECK_THROWS_AS(dual_completed(CanonicalModule::free(1)), Error);
}

TEST_CASE("ring marker") {
  CHECK(result_ring(Zc, C(2, 1)) == RingMarker::integers());
  CHECK(result_ring(Zc, Zp(2) + Zp(5)) == RingMarker::product({2, 5}));
  CHECK(result_ring(P2, C(2, 1)) == RingMarker::padic(2));
  CHECK(to_string(RingMarker::integers()) == "Z");
}
