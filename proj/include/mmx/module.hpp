#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mmx/arith.hpp"

namespace mmx {

using Count = std::uint64_t;

/// Indecomposable summands: Z (free rank one), C(p,e) = Z/p^e,
/// Pr(p) = the Pruefer group E(Z/p), Zp(p) = the p-adic integers.
enum class BlockKind { Z, C, Pr, Zp };

struct Block {
  BlockKind kind = BlockKind::Z;
  Integer prime;          // unset for Z
  Exponent exponent = 0;  // set only for C

  static Block free() { return {}; }
  static Block cyclic(Integer p, Exponent e) { return {BlockKind::C, std::move(p), e}; }
  static Block pruefer(Integer p) { return {BlockKind::Pr, std::move(p), 0}; }
  static Block adic(Integer p) { return {BlockKind::Zp, std::move(p), 0}; }

  friend bool operator==(const Block& a, const Block& b) {
    return a.kind == b.kind && a.prime == b.prime && a.exponent == b.exponent;
  }
};

/// Everything a module carries at one prime.
struct LocalPart {
  std::vector<Exponent> finite;  // sorted non-decreasing
  Count divisible = 0;
  Count adic = 0;

  bool empty() const { return finite.empty() && divisible == 0 && adic == 0; }
  Exponent max_exponent() const { return finite.empty() ? 0 : finite.back(); }

  friend bool operator==(const LocalPart&, const LocalPart&) = default;
};

/// Isomorphism-class representative of a finite direct sum of blocks.
/// Structural equality coincides with isomorphism.
class CanonicalModule {
 public:
  CanonicalModule() = default;

  static CanonicalModule zero() { return {}; }
  static CanonicalModule free(Count rank);
  static CanonicalModule cyclic(const Integer& p, Exponent e);
  static CanonicalModule pruefer(const Integer& p);
  static CanonicalModule adic(const Integer& p);
  /// Z/n split into prime-power pieces; n = 0 gives Z.
  static CanonicalModule cyclic_of_order(const Integer& n);

  Count free_rank() const { return free_rank_; }
  const std::map<Integer, LocalPart>& locals() const { return locals_; }
  const LocalPart* local(const Integer& p) const;

  bool is_zero() const { return free_rank_ == 0 && locals_.empty(); }
  bool has_adic() const;
  bool has_divisible() const;
  bool is_torsion() const { return free_rank_ == 0 && !has_adic(); }
  bool only_kinds(std::initializer_list<BlockKind> kinds) const;
  std::vector<Integer> primes() const;

  void add(const Block& b, Count multiplicity = 1);
  void add_free(Count rank) { free_rank_ += rank; }
  void add_local(const Integer& p, const LocalPart& part, Count multiplicity = 1);

  /// Blocks with multiplicities in canonical order: Z, then per prime
  /// C (ascending exponent), Pr, Zp.
  std::vector<std::pair<Block, Count>> blocks() const;
  std::size_t block_count() const;

  CanonicalModule scaled(Count k) const;

  friend bool operator==(const CanonicalModule&, const CanonicalModule&) = default;

 private:
  Count free_rank_ = 0;
  std::map<Integer, LocalPart> locals_;
};

/// The base ring of a computation: Z, or the p-adic integers for one prime.
struct RingContext {
  enum class Kind { Integers, Padic };
  Kind kind = Kind::Integers;
  Integer prime;

  static RingContext integers() { return {}; }
  static RingContext padic(Integer p) { return {Kind::Padic, std::move(p)}; }
  bool is_padic() const { return kind == Kind::Padic; }

  friend bool operator==(const RingContext& a, const RingContext& b) {
    return a.kind == b.kind && (a.kind == Kind::Integers || a.prime == b.prime);
  }
};

CanonicalModule normalize(std::span<const Block> blocks);
CanonicalModule direct_sum(const CanonicalModule& m, const CanonicalModule& n);
bool is_isomorphic(const CanonicalModule& m, const CanonicalModule& n);
bool admit(const RingContext& ctx, const CanonicalModule& m);

/// Expression-language rendering, e.g. "Z^2 + Z/4 + Pr(3)"; the zero
/// module renders as "Z/1".
std::string to_string(const CanonicalModule& m);
std::string to_string(const Block& b);

}  // namespace mmx
