#include <doctest.h>

#include "mmx/error.hpp"
#include "mmx/homology.hpp"
#include "mmx/oracle.hpp"

using namespace mmx;

namespace {

CanonicalModule C(long p, Exponent e) { return CanonicalModule::cyclic(p, e); }
CanonicalModule Zp(long p) { return CanonicalModule::adic(p); }
CanonicalModule operator+(const CanonicalModule& a, const CanonicalModule& b) { return direct_sum(a, b); }
const CanonicalModule O;

Presentation cyclic(long n) { return {1, IntMatrix{{n}}}; }
Presentation free_rank(std::size_t r) { return {r, IntMatrix(r, 0)}; }

}  // namespace

TEST_CASE("structure of a presentation") {
  CHECK(fp_structure(cyclic(6)) == C(2, 1) + C(3, 1));
  CHECK(fp_structure({2, IntMatrix{{2, 4}, {6, 8}}}) == C(2, 1) + C(2, 2));
  CHECK(fp_structure(free_rank(2)) == CanonicalModule::free(2));
  CHECK(fp_structure(presentation_of(CanonicalModule::free(1) + C(5, 2))) ==
        CanonicalModule::free(1) + C(5, 2));
}

TEST_CASE("functors on presentations") {
  CHECK(fp_hom(cyclic(12), cyclic(18)) == C(2, 1) + C(3, 1));
  CHECK(fp_ext1(cyclic(8), free_rank(1)) == C(2, 3));
  CHECK(fp_tor1(cyclic(4), cyclic(6)) == C(2, 1));
  CHECK(fp_tensor(cyclic(12), cyclic(18)) == C(2, 1) + C(3, 1));
  CHECK(fp_hom(free_rank(2), cyclic(4)) == C(2, 2) + C(2, 2));
  CHECK(fp_hom(cyclic(4), free_rank(1)) == O);
  CHECK(fp_ext1(free_rank(1), cyclic(4)) == O);
  CHECK(fp_tor1(free_rank(1), cyclic(4)) == O);
}

TEST_CASE("scrambling keeps the cokernel") {
  const auto m = CanonicalModule::free(1) + C(2, 2) + C(2, 3) + C(3, 1);
  const auto p = presentation_of(m);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto s = scramble(p, seed);
    CHECK(fp_structure(s) == m);
    CHECK(fp_hom(s, cyclic(4)) == fp_hom(p, cyclic(4)));
  }
}

TEST_CASE("colimits along Pruefer stages") {
  const auto tor8 = pruefer_colimit(PrueferFunctor::Tor1, 2, cyclic(8));
  CHECK(tor8.value == C(2, 3));
  CHECK(tor8.first == tor8.second);
  CHECK(tor8.k == 4);
  CHECK(pruefer_colimit(PrueferFunctor::Tensor, 2, cyclic(8)).value == O);
  CHECK(pruefer_colimit(PrueferFunctor::Tor1, 2, cyclic(3)).value == O);
}

TEST_CASE("limits along Pruefer stages") {
  const auto fin = pruefer_limit_ext(2, cyclic(8));
  CHECK(fin.value == C(2, 3));
  CHECK(fin.regime == StageRegime::Stable);
  const auto z = pruefer_limit_ext(2, free_rank(1));
  CHECK(z.value == Zp(2));
  CHECK(z.regime == StageRegime::AdicLimit);
  CHECK(pruefer_limit_ext(2, cyclic(3)).value == O);
}

TEST_CASE("random instances") {
  const InstanceConfig cfg{5, 3, 3, {BlockKind::C}, true};
  const auto a = random_instance(0, cfg), b = random_instance(0, cfg);
  CHECK(a.module == b.module);
  REQUIRE(a.presentation.has_value());
  CHECK(a.presentation->relations == b.presentation->relations);
  CHECK(random_instance(1, cfg).module == random_instance(1, cfg).module);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto inst = random_instance(seed, cfg);
    CHECK(inst.module.only_kinds({BlockKind::C}));
    CHECK(inst.module.block_count() <= 3);
    CHECK(fp_structure(*inst.presentation) == inst.module);
  }
  const InstanceConfig divisible{7, 4, 2, {BlockKind::Pr}, false};
  const auto d = random_instance(3, divisible);
  CHECK_FALSE(d.presentation.has_value());
  CHECK_FALSE(d.module.is_zero());
}

TEST_CASE("primes and seeds") {
  CHECK(primes_up_to(10) == std::vector<Integer>{2, 3, 5, 7});
  CHECK(primes_up_to(1).empty());
  CHECK(mix_seed(1, 0) != mix_seed(1, 1));
  CHECK(mix_seed(5, 9) == mix_seed(5, 9));
}
