#include <doctest.h>

#include <random>

#include "mmx/arith.hpp"
#include "mmx/error.hpp"

using namespace mmx;

namespace {

void check_smith(const IntMatrix& a) {
  const auto s = smith_normal_form(a);
  CHECK(s.left * a * s.right == s.diagonal);
  CHECK(s.diagonal.is_diagonal());
  CHECK(abs(determinant(s.left)) == 1);
  CHECK(abs(determinant(s.right)) == 1);
  const std::size_t n = std::min(a.rows(), a.cols());
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(s.diagonal(i, i) >= 0);
    if (s.diagonal(i, i) != 0) ++nonzero;
    if (i + 1 < n && s.diagonal(i, i) != 0)
      CHECK(mpz_divisible_p(s.diagonal(i + 1, i + 1).get_mpz_t(), s.diagonal(i, i).get_mpz_t()));
    if (i + 1 < n && s.diagonal(i, i) == 0) CHECK(s.diagonal(i + 1, i + 1) == 0);
  }
  CHECK(nonzero == s.rank);
}

}  // namespace

TEST_CASE("factorize") {
  CHECK(factorize(12) == std::vector<PrimePower>{{2, 2}, {3, 1}});
  CHECK(factorize(1).empty());
  CHECK(factorize(-8) == std::vector<PrimePower>{{2, 3}});
  CHECK_THROWS_AS(factorize(0), Error);
  CHECK(factorize(Integer("1000000007") * 1000000007) == std::vector<PrimePower>{{Integer("1000000007"), 2}});
}

TEST_CASE("valuation") {
  CHECK(valuation(2, 40) == 3);
  CHECK(valuation(3, 40) == 0);
  CHECK(valuation(5, -25) == 2);
  CHECK_THROWS_AS(valuation(2, 0), Error);
}

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK_FALSE(is_prime(561));
  CHECK(is_prime(Integer("18446744073709551557")));
}

TEST_CASE("smith normal form: fixed matrices") {
  const IntMatrix a{{2, 4}, {6, 8}};
  const auto s = smith_normal_form(a);
  CHECK(s.diagonal == IntMatrix{{2, 0}, {0, 4}});
  check_smith(a);

  CHECK(smith_normal_form(IntMatrix::identity(3)).diagonal == IntMatrix::identity(3));
  CHECK(smith_normal_form(IntMatrix{{0}}).diagonal == IntMatrix{{0}});
  CHECK(smith_normal_form(IntMatrix{{0}}).rank == 0);

  check_smith(IntMatrix(0, 3));
  check_smith(IntMatrix(2, 0));
  check_smith(IntMatrix{{6, 0, 0}, {0, 10, 0}, {0, 0, 15}});
  CHECK(smith_normal_form(IntMatrix{{6, 0, 0}, {0, 10, 0}, {0, 0, 15}}).diagonal ==
        IntMatrix{{1, 0, 0}, {0, 30, 0}, {0, 0, 30}});
}

TEST_CASE("smith normal form: random matrices") {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + gen() % 5, c = 1 + gen() % 5;
    IntMatrix a(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a(i, j) = static_cast<long>(gen() % 41) - 20;
    check_smith(a);
  }
}

TEST_CASE("smith normal form: large entries stay exact") {
  IntMatrix a{{1, 0}, {0, 1}};
  a(0, 0) = Integer("340282366920938463463374607431768211456");  // 2^128
  a(1, 1) = Integer("79228162514264337593543950336");            // 2^96
  const auto s = smith_normal_form(a);
  CHECK(s.diagonal(0, 0) == Integer("79228162514264337593543950336"));
  CHECK(s.diagonal(1, 1) == Integer("340282366920938463463374607431768211456"));
  check_smith(a);
}

TEST_CASE("determinant") {
  CHECK(determinant(IntMatrix{{2, 4}, {6, 8}}) == -8);
  CHECK(determinant(IntMatrix::identity(4)) == 1);
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
}
