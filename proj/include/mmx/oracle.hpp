#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "mmx/arith.hpp"
#include "mmx/module.hpp"

namespace mmx {

/// coker(relations : Z^m -> Z^n) with n = generators.
struct Presentation {
  std::size_t generators = 0;
  IntMatrix relations;  // generators x m
};

/// Diagonal presentation of a finitely generated module (Z and C blocks only).
Presentation presentation_of(const CanonicalModule& m);

CanonicalModule fp_structure(const Presentation& p);

CanonicalModule fp_hom(const Presentation& a, const Presentation& b);
CanonicalModule fp_ext1(const Presentation& a, const Presentation& b);
CanonicalModule fp_tensor(const Presentation& a, const Presentation& b);
CanonicalModule fp_tor1(const Presentation& a, const Presentation& b);

enum class StageRegime { Stable, AdicLimit };

/// Two consecutive stages of a direct or inverse system together with the
/// value read off from them.
struct StageCertificate {
  CanonicalModule value;
  CanonicalModule first, second;
  Exponent k = 0;  // index of `first`
  StageRegime regime = StageRegime::Stable;
};

enum class PrueferFunctor { Tensor, Tor1 };

/// colim_k F(Z/p^k, B) along the inclusions Z/p^k -> Z/p^(k+1).
/// Throws StabilizationFailed when the two stages differ.
StageCertificate pruefer_colimit(PrueferFunctor f, const Integer& p, const Presentation& b);

/// lim_k Ext1(Z/p^k, B) along the projections.
StageCertificate pruefer_limit_ext(const Integer& p, const Presentation& b);

/// Random unimodular change of basis on both sides; the cokernel is unchanged.
Presentation scramble(const Presentation& p, std::uint64_t seed);

/// mt19937_64 output is fixed by the standard; reducing by modulo (instead of
/// a distribution object) keeps streams identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t next() { return gen_(); }
  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : gen_() % bound; }
  bool coin() { return (gen_() >> 11) & 1u; }

 private:
  std::mt19937_64 gen_;
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

struct InstanceConfig {
  std::uint64_t max_prime = 7;
  Exponent max_exp = 4;
  std::size_t max_blocks = 3;
  std::vector<BlockKind> allow_kinds = {BlockKind::C};
  bool allow_empty = true;
};

struct Instance {
  CanonicalModule module;
  std::optional<Presentation> presentation;  // scrambled; present when finitely generated
};

Instance random_instance(std::uint64_t seed, const InstanceConfig& cfg);

std::vector<Integer> primes_up_to(std::uint64_t bound);

}  // namespace mmx
