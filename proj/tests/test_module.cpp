#include <doctest.h>

#include "mmx/module.hpp"

using namespace mmx;

namespace {

LocalPart part(std::vector<Exponent> finite, Count divisible = 0, Count adic = 0) {
  return {std::move(finite), divisible, adic};
}

}  // namespace

TEST_CASE("normalize regroups blocks") {
  const std::vector<Block> bs = {Block::cyclic(2, 3), Block::free(), Block::cyclic(2, 1)};
  const auto m = normalize(bs);
  CHECK(m.free_rank() == 1);
  CHECK(m.locals().size() == 1);
  CHECK(*m.local(2) == part({1, 3}));

  CHECK(normalize(std::vector<Block>{}).is_zero());

  const auto pz = normalize(std::vector<Block>{Block::pruefer(5), Block::adic(5)});
  CHECK(*pz.local(5) == part({}, 1, 1));
}

TEST_CASE("direct sum") {
  const auto m = direct_sum(CanonicalModule::cyclic(2, 2), CanonicalModule::cyclic(2, 3));
  CHECK(*m.local(2) == part({2, 3}));
  CHECK(direct_sum(m, CanonicalModule::zero()) == m);

  const auto a = direct_sum(CanonicalModule::free(1), CanonicalModule::pruefer(3));
  const auto b = direct_sum(CanonicalModule::free(1), CanonicalModule::cyclic(3, 1));
  const auto s = direct_sum(a, b);
  CHECK(s.free_rank() == 2);
  CHECK(*s.local(3) == part({1}, 1));
}

TEST_CASE("isomorphism") {
  const auto c2 = CanonicalModule::cyclic(2, 1), c4 = CanonicalModule::cyclic(2, 2);
  CHECK(is_isomorphic(direct_sum(c2, c4), direct_sum(c4, c2)));
  CHECK_FALSE(is_isomorphic(c4, direct_sum(c2, c2)));
  CHECK_FALSE(is_isomorphic(CanonicalModule::pruefer(2), CanonicalModule::adic(2)));
}

TEST_CASE("admissible contexts") {
  const auto p2 = RingContext::padic(2);
  CHECK(admit(p2, direct_sum(CanonicalModule::cyclic(2, 3), CanonicalModule::pruefer(2))));
  CHECK_FALSE(admit(p2, CanonicalModule::free(1)));
  CHECK_FALSE(admit(p2, CanonicalModule::cyclic(3, 1)));
  CHECK(admit(RingContext::integers(), CanonicalModule::adic(7)));
}

TEST_CASE("cyclic of composite order splits") {
  const auto m = CanonicalModule::cyclic_of_order(12);
  CHECK(*m.local(2) == part({2}));
  CHECK(*m.local(3) == part({1}));
  CHECK(CanonicalModule::cyclic_of_order(1).is_zero());
  CHECK(CanonicalModule::cyclic_of_order(0) == CanonicalModule::free(1));
}

TEST_CASE("blocks and rendering") {
  auto m = CanonicalModule::free(2);
  m.add(Block::cyclic(2, 2));
  m.add(Block::pruefer(3));
  m.add(Block::adic(3), 2);
  CHECK(m.block_count() == 6);
  CHECK(to_string(m) == "Z^2 + Z/4 + Pr(3) + Zp(3)^2");
  CHECK(to_string(CanonicalModule::zero()) == "Z/1");
  CHECK(m.only_kinds({BlockKind::Z, BlockKind::C, BlockKind::Pr, BlockKind::Zp}));
  CHECK_FALSE(m.only_kinds({BlockKind::Z, BlockKind::C}));
  CHECK(m.has_adic());
  CHECK(m.has_divisible());
  CHECK_FALSE(m.is_torsion());
  CHECK(m.scaled(2).block_count() == 12);
}
