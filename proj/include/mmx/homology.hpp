#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mmx/duality.hpp"
#include "mmx/module.hpp"
#include "mmx/structure.hpp"

namespace mmx {

enum class Path { Direct, Completion, DualSwap, GeneralDual, TheoremC, Truncated };

std::string_view path_name(Path p);
std::optional<Path> path_from_name(std::string_view name);

struct HomologyResult {
  CanonicalModule module;
  RingMarker ring;
  Path path = Path::Direct;
  std::string note;
  // Per-prime truncation exponents used by the theoremC and truncated paths.
  std::map<Integer, Exponent> exponents;
};

HomologyResult hom(const RingContext& ctx, const CanonicalModule& m, const CanonicalModule& n);
HomologyResult tensor(const RingContext& ctx, const CanonicalModule& m, const CanonicalModule& n);
HomologyResult ext(std::uint64_t i, const RingContext& ctx, const CanonicalModule& m,
                   const CanonicalModule& n);
HomologyResult tor(std::uint64_t i, const RingContext& ctx, const CanonicalModule& m,
                   const CanonicalModule& n);

// Alternative paths; each must agree with the direct tables.

/// Hom(A, N) for A artinian, N noetherian, assembled from finite pieces
/// Hom(A / p^a A, (0 :_N p^a)).
HomologyResult hom_theoremC(const CanonicalModule& a, const CanonicalModule& n);
/// T (x) T' computed on the quotients by b^t for the shared primes.
HomologyResult tensor_truncated(const CanonicalModule& t, const CanonicalModule& t2);
/// Ext over Z as a sum of Ext over the p-adic integers of torsion and completion.
HomologyResult ext_via_completion(std::uint64_t i, const CanonicalModule& t,
                                  const CanonicalModule& l);
/// Ext(T, A) = Ext over the completion of (Gamma A)^v and (Gamma T)^v.
HomologyResult ext_dual_swap(std::uint64_t i, const CanonicalModule& t, const CanonicalModule& a);
/// Ext(T, M) through the dual of the completion of a mini-max M.
HomologyResult ext_via_general_dual(std::uint64_t i, const CanonicalModule& t,
                                    const CanonicalModule& m);

struct ThetaReport {
  bool holds = false;
  CanonicalModule ext_dual;  // Ext^i(M, B)^v
  CanonicalModule tor;       // Tor_i(M, B^v)
};

ThetaReport theta_check(std::uint64_t i, const RingContext& ctx, const CanonicalModule& m,
                        const CanonicalModule& b);

/// `p` empty means the generic point; only i = 0 is defined there.
Count bass(std::uint64_t i, const std::optional<Integer>& p, const CanonicalModule& m);
Count betti(std::uint64_t i, const std::optional<Integer>& p, const CanonicalModule& m);

struct LengthBoundReport {
  ExtNat lhs;
  std::vector<ExtNat> chain;  // the three successive upper bounds
  bool holds = false;
};

LengthBoundReport tensor_length_bound(const CanonicalModule& t, const CanonicalModule& t2);

struct VanishingReport {
  bool vanishes = false;
  std::map<Integer, std::string> certificate;  // e.g. "T=2T", "T'=2T'" or "none"
};

VanishingReport vanishing_tensor(const CanonicalModule& t, const CanonicalModule& t2);

struct HomVanishingReport {
  bool vanishes = false;
  std::vector<std::pair<std::string, bool>> equivalents;  // (i) .. (v)
  bool agree = false;
};

HomVanishingReport hom_vanishing(const CanonicalModule& a, const CanonicalModule& b);

/// Att(Gamma_b A) meet Supp((Gamma_b B)^v) over the completion, prime by prime.
SupportSet ass_of_hom(const CanonicalModule& a, const CanonicalModule& b);

/// Associated primes of a module regarded over the completion at its support:
/// each prime is read in its own p-adic context and the answers are united.
SupportSet ass_over_completion(const CanonicalModule& m);

}  // namespace mmx
