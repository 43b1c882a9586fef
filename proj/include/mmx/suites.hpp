#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mmx/json_io.hpp"

namespace mmx {

struct SuiteBounds {
  std::uint64_t max_prime = 7;
  Exponent max_exp = 4;
  std::size_t max_blocks = 3;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t cases = 0;
  std::uint64_t seed = 0;
  SuiteBounds bounds;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;  // hypotheses not met (NotRepresentable)
  std::uint64_t certificates = 0;
  std::uint64_t stabilization_failures = 0;
  std::optional<Json> first_failure;

  bool ok() const { return failed == 0 && stabilization_failures == 0; }
  Json to_json() const;
};

/// The registered property suites.
const std::vector<std::string_view>& suite_names();

/// Deterministic for fixed (name, cases, seed, bounds); `jobs` only changes
/// wall time. Throws UnknownSuite.
SuiteReport run_suite(std::string_view name, std::uint64_t cases, std::uint64_t seed,
                      const SuiteBounds& bounds = {}, unsigned jobs = 1);

/// Finer-grained check groups that the suites are assembled from; used where
/// one property family has to be run and timed on its own.
const std::vector<std::string_view>& group_names();
SuiteReport run_group(std::string_view name, std::uint64_t cases, std::uint64_t seed,
                      const SuiteBounds& bounds = {}, unsigned jobs = 1);

/// Every finite module over `primes` with exponents <= max_exp and at most
/// max_blocks blocks, the zero module included.
std::vector<CanonicalModule> finite_grid(const std::vector<Integer>& primes, Exponent max_exp,
                                         std::size_t max_blocks);

/// Engine tables against the presentation oracle on every ordered pair.
SuiteReport run_oracle_grid(const std::vector<CanonicalModule>& grid, unsigned jobs = 1);

/// Duality and classification checks on every module with at most
/// max_blocks blocks of all four kinds over `primes` (exponents <= max_exp).
SuiteReport run_duality_grid(const std::vector<Integer>& primes, Exponent max_exp,
                             std::size_t max_blocks);

}  // namespace mmx
