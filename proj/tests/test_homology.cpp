#include <doctest.h>

#include <functional>

#include "mmx/error.hpp"
#include "mmx/homology.hpp"

using namespace mmx;

namespace {

const RingContext Zc = RingContext::integers();

CanonicalModule C(long p, Exponent e) { return CanonicalModule::cyclic(p, e); }
CanonicalModule Pr(long p) { return CanonicalModule::pruefer(p); }
CanonicalModule Zp(long p) { return CanonicalModule::adic(p); }
CanonicalModule Z(Count r = 1) { return CanonicalModule::free(r); }
CanonicalModule operator+(const CanonicalModule& a, const CanonicalModule& b) { return direct_sum(a, b); }
const CanonicalModule O;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::Unsupported;
}

}  // namespace

TEST_CASE("hom table") {
  CHECK(hom(Zc, Z(), C(3, 2) + Pr(5)).module == C(3, 2) + Pr(5));
  CHECK(hom(Zc, C(2, 2), C(2, 3)).module == C(2, 2));
  CHECK(hom(Zc, C(2, 3), Pr(2)).module == C(2, 3));
  CHECK(hom(Zc, C(2, 1), Z()).module == O);
  CHECK(hom(Zc, Pr(2), Z()).module == O);
  CHECK(hom(Zc, Pr(2), C(2, 4)).module == O);
  CHECK(hom(Zc, Pr(2), Zp(2)).module == O);
  CHECK(hom(Zc, C(2, 2), Zp(2)).module == O);
  CHECK(hom(Zc, Pr(2), Pr(2)).module == Zp(2));
  CHECK(hom(Zc, Pr(2), Pr(2)).ring == RingMarker::product({2}));
  CHECK(hom(Zc, Zp(2), C(2, 2) + Zp(2)).module == C(2, 2) + Zp(2));
  CHECK(hom(Zc, Zp(2), Z()).module == O);
  CHECK(hom(Zc, Zp(2), C(3, 1)).module == O);
  CHECK(code_of([] { hom(Zc, Zp(2), Pr(3)); }) == ErrorCode::NotRepresentable);
  CHECK(code_of([] { hom(Zc, Zp(2), Zp(3)); }) == ErrorCode::NotRepresentable);
  CHECK(hom(Zc, Pr(2) + C(2, 2), Z() + C(2, 3)).module == C(2, 2));
}

TEST_CASE("tensor table") {
  CHECK(tensor(Zc, Z(), Pr(3)).module == Pr(3));
  CHECK(tensor(Zc, C(2, 2), C(2, 3)).module == C(2, 2));
  CHECK(tensor(Zc, C(2, 2), Pr(2)).module == O);
  CHECK(tensor(Zc, Pr(2), Pr(2)).module == O);
  CHECK(tensor(Zc, Pr(2), Z()).module == Pr(2));
  CHECK(tensor(Zc, Zp(2), C(2, 3)).module == C(2, 3));
  CHECK(tensor(Zc, Zp(2), Z()).module == Zp(2));
  CHECK(tensor(Zc, Zp(2), C(3, 1)).module == O);
  CHECK(tensor(Zc, Zp(2), Pr(3)).module == O);
  CHECK(tensor(RingContext::padic(2), Zp(2), Zp(2)).module == Zp(2));
  CHECK(code_of([] { tensor(Zc, Zp(2), Zp(2)); }) == ErrorCode::NotRepresentable);
  CHECK(code_of([] { tensor(Zc, Zp(2), Zp(3)); }) == ErrorCode::NotRepresentable);
  CHECK(tensor(Zc, C(2, 2) + C(3, 1), C(2, 1) + C(3, 2)).module == C(2, 1) + C(3, 1));
}

TEST_CASE("ext table") {
  CHECK(ext(1, Zc, Z(), C(2, 1)).module == O);
  CHECK(ext(1, Zc, C(2, 2), Z()).module == C(2, 2));
  CHECK(ext(1, Zc, C(2, 2), C(2, 1)).module == C(2, 1));
  CHECK(ext(1, Zc, Z() + Zp(3), Pr(2)).module == O);
  CHECK(ext(1, Zc, C(2, 2), Zp(2)).module == C(2, 2));
  CHECK(ext(1, Zc, Pr(2), Z()).module == Zp(2));
  CHECK(ext(1, Zc, Pr(2), C(2, 3)).module == C(2, 3));
  CHECK(ext(1, Zc, Pr(2), Zp(2)).module == Zp(2));
  CHECK(ext(1, Zc, Zp(2), C(2, 3)).module == O);
  CHECK(code_of([] { ext(1, Zc, Zp(2), Z()); }) == ErrorCode::NotRepresentable);
  CHECK(ext(2, Zc, Pr(2), Z()).module == O);
  CHECK(ext(0, Zc, Pr(2), Pr(2)).module == Zp(2));
}

TEST_CASE("tor table") {
  CHECK(tor(1, Zc, Z(), Pr(2)).module == O);
  CHECK(tor(1, Zc, Zp(2), C(2, 1)).module == O);
  CHECK(tor(1, Zc, C(2, 2), C(2, 3)).module == C(2, 2));
  CHECK(tor(1, Zc, C(2, 2), Pr(2)).module == C(2, 2));
  CHECK(tor(1, Zc, Pr(2), Pr(2)).module == Pr(2));
  CHECK(tor(1, Zc, Pr(3), Pr(3) + C(3, 1)).module == Pr(3) + C(3, 1));
  CHECK(tor(1, Zc, C(2, 1), C(3, 1)).module == O);
}

TEST_CASE("hom through finite pieces") {
  const auto r = hom_theoremC(Pr(2) + C(2, 2), Z() + C(2, 3));
  CHECK(r.module == C(2, 2));
  CHECK(r.exponents.at(2) == 3);
  CHECK(hom_theoremC(Pr(2), Z()).module == O);
  CHECK(hom_theoremC(C(3, 1), C(3, 1)).module == C(3, 1));
}

TEST_CASE("truncated tensor path") {
  CHECK(tensor_truncated(Pr(2) + C(2, 1), C(2, 2)).module == C(2, 1));
  CHECK(tensor_truncated(Pr(2), Pr(2)).module == O);
  CHECK(tensor_truncated(C(2, 1), C(3, 1)).module == O);
}

TEST_CASE("ext through completions and duals") {
  CHECK(ext_via_completion(1, Pr(2), Z()).module == Zp(2));
  CHECK(ext_via_completion(0, C(2, 1) + C(3, 1), C(2, 2)).module == C(2, 1));
  CHECK(ext_via_completion(1, C(5, 2), Z()).module == C(5, 2));
  CHECK(ext_dual_swap(0, Pr(2), Pr(2)).module == Zp(2));
  CHECK(ext_dual_swap(1, Pr(2), C(2, 3)).module == C(2, 3));
  CHECK(ext_dual_swap(1, C(2, 2), C(2, 3)).module == C(2, 2));
  CHECK(ext_via_general_dual(1, Pr(2), Z()).module == Zp(2));
  CHECK(ext_via_general_dual(0, C(2, 1), Z() + C(2, 2)).module == C(2, 1));
  CHECK(ext_via_general_dual(1, C(2, 2), Pr(2)).module == O);
}

TEST_CASE("theta") {
  CHECK(theta_check(1, Zc, Pr(2), C(2, 2)).holds);
  CHECK(theta_check(1, Zc, Pr(2), C(2, 2)).tor == C(2, 2));
  CHECK(theta_check(0, Zc, C(2, 1), C(2, 3)).holds);
  CHECK(theta_check(1, Zc, Z(), C(3, 2) + C(5, 1)).holds);
}

TEST_CASE("bass and betti numbers") {
  CHECK(bass(0, Integer(2), Pr(2)) == 1);
  CHECK(bass(1, Integer(2), Z()) == 1);
  CHECK(betti(0, Integer(3), C(3, 2) + C(3, 1)) == 2);
  CHECK(bass(0, std::nullopt, Z(2) + Zp(3)) == 3);
  CHECK(code_of([] { bass(1, std::nullopt, Z()); }) == ErrorCode::InvalidIndex);
  CHECK(code_of([] { betti(0, Integer(4), Z()); }) == ErrorCode::NotPrime);
}

TEST_CASE("tensor length bound") {
  const auto a = tensor_length_bound(Pr(2) + C(2, 1), C(2, 2));
  CHECK(a.holds);
  CHECK(a.lhs == ExtNat(1));
  CHECK(a.chain.back() == ExtNat(1));
  CHECK(tensor_length_bound(Pr(2), Pr(2)).lhs == ExtNat(0));
  const auto c = tensor_length_bound(C(2, 2) + C(2, 2), C(2, 3));
  CHECK(c.holds);
  CHECK(c.lhs == ExtNat(4));
}

TEST_CASE("vanishing criteria") {
  const auto v = vanishing_tensor(Pr(2), C(2, 5) + Pr(2));
  CHECK(v.vanishes);
  CHECK(v.certificate.at(2) == "T=2T");
  CHECK_FALSE(vanishing_tensor(C(2, 1), C(2, 1)).vanishes);
  CHECK(vanishing_tensor(C(2, 1), C(3, 1)).vanishes);

  const auto h1 = hom_vanishing(Pr(2), C(2, 3));
  CHECK(h1.vanishes);
  CHECK(h1.agree);
  const auto h2 = hom_vanishing(C(2, 1), Pr(2));
  CHECK_FALSE(h2.vanishes);
  CHECK(h2.agree);
  const auto h3 = hom_vanishing(C(2, 1), Z());
  CHECK(h3.vanishes);
  CHECK(h3.agree);
}

TEST_CASE("associated primes of hom") {
  SupportSet two;
  two.maximals = {2};
  CHECK(ass_of_hom(Pr(2) + C(2, 2), C(2, 3)) == two);
  CHECK(ass_over_completion(hom(Zc, Pr(2) + C(2, 2), C(2, 3)).module) == two);
  SupportSet three;
  three.maximals = {3};
  CHECK(ass_of_hom(C(3, 1), Z() + C(3, 1)) == three);
}

TEST_CASE("path names round-trip") {
  for (auto p : {Path::Direct, Path::Completion, Path::DualSwap, Path::GeneralDual, Path::TheoremC,
                 Path::Truncated})
    CHECK(path_from_name(path_name(p)) == p);
  CHECK_FALSE(path_from_name("sideways").has_value());
}
