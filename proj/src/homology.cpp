#include "mmx/homology.hpp"

#include <algorithm>
#include <array>

#include "mmx/error.hpp"

namespace mmx {

std::string_view path_name(Path p) {
  switch (p) {
    case Path::Direct:
      return "direct";
    case Path::Completion:
      return "completion";
    case Path::DualSwap:
      return "dual_swap";
    case Path::GeneralDual:
      return "general_dual";
    case Path::TheoremC:
      return "theoremC";
    case Path::Truncated:
      return "truncated";
  }
  return "direct";
}

std::optional<Path> path_from_name(std::string_view name) {
  for (Path p : {Path::Direct, Path::Completion, Path::DualSwap, Path::GeneralDual,
                 Path::TheoremC, Path::Truncated})
    if (path_name(p) == name) return p;
  return std::nullopt;
}

namespace {

using K = BlockKind;
using Entry = std::optional<Block>;

enum class Functor { Hom, Tensor, Ext1, Tor1 };

constexpr std::array<const char*, 4> kFunctorNames = {"Hom", "Tensor", "Ext1", "Tor1"};

[[noreturn]] void not_representable(Functor f, const Block& x, const Block& y,
                                    const char* why) {
  throw Error(ErrorCode::NotRepresentable, std::string(kFunctorNames[static_cast<int>(f)]) +
                                               "(" + to_string(x) + ", " + to_string(y) +
                                               ") " + why);
}

bool same_prime(const Block& x, const Block& y) {
  return x.kind != K::Z && y.kind != K::Z && x.prime == y.prime;
}

Entry hom_entry(bool padic, const Block& x, const Block& y) {
  if (x.kind == K::Z) return y;
  const bool same = same_prime(x, y);
  switch (x.kind) {
    case K::C:
      if (!same || y.kind == K::Zp) return {};
      if (y.kind == K::C) return Block::cyclic(x.prime, std::min(x.exponent, y.exponent));
      return x;  // into Pr(p)
    case K::Pr:
      if (same && y.kind == K::Pr) return Block::adic(x.prime);
      return {};
    case K::Zp:
      if (y.kind == K::Z) return {};
      if (!same) {
        if (y.kind == K::C) return {};
        not_representable(Functor::Hom, x, y, "is not a split mini-max module");
      }
      if (y.kind == K::Pr && !padic)
        not_representable(Functor::Hom, x, y, "is only computed over the p-adic integers");
      return y;
    case K::Z:
      break;
  }
  return {};
}

Entry tensor_entry(bool padic, Block x, Block y) {
  if (static_cast<int>(x.kind) > static_cast<int>(y.kind)) std::swap(x, y);
  if (x.kind == K::Z) return y;
  const bool same = same_prime(x, y);
  switch (x.kind) {
    case K::C:
      if (!same || y.kind == K::Pr) return {};
      if (y.kind == K::C) return Block::cyclic(x.prime, std::min(x.exponent, y.exponent));
      return x;  // with Zp(p)
    case K::Pr:
      if (same && y.kind == K::Zp) return x;
      return {};
    case K::Zp:
      if (same && padic) return x;
      not_representable(Functor::Tensor, x, y, "leaves the block class over Z");
    case K::Z:
      break;
  }
  return {};
}

Entry ext_entry(const Block& x, const Block& y) {
  if (x.kind == K::Z || y.kind == K::Pr) return {};
  const bool same = same_prime(x, y);
  switch (x.kind) {
    case K::C:
      if (y.kind == K::Z) return x;
      if (!same) return {};
      if (y.kind == K::C) return Block::cyclic(x.prime, std::min(x.exponent, y.exponent));
      return x;  // Zp(p) / p^e
    case K::Pr:
      if (y.kind == K::Z) return Block::adic(x.prime);
      if (!same) return {};
      return y;
    case K::Zp:
      if (same) return {};
      not_representable(Functor::Ext1, x, y, "needs a p-local second argument");
    case K::Z:
      break;
  }
  return {};
}

Entry tor_entry(Block x, Block y) {
  if (static_cast<int>(x.kind) > static_cast<int>(y.kind)) std::swap(x, y);
  if (x.kind == K::Z || x.kind == K::Zp || y.kind == K::Zp) return {};
  if (!same_prime(x, y)) return {};
  if (x.kind == K::C) {
    if (y.kind == K::C) return Block::cyclic(x.prime, std::min(x.exponent, y.exponent));
    return x;  // with Pr(p)
  }
  return x;  // Pr, Pr
}

Entry entry(Functor f, bool padic, const Block& x, const Block& y) {
  switch (f) {
    case Functor::Hom:
      return hom_entry(padic, x, y);
    case Functor::Tensor:
      return tensor_entry(padic, x, y);
    case Functor::Ext1:
      return ext_entry(x, y);
    case Functor::Tor1:
      return tor_entry(x, y);
  }
  return {};
}

void require_admitted(const RingContext& ctx, const CanonicalModule& m) {
  if (!admit(ctx, m))
    throw Error(ErrorCode::InvalidRing, to_string(m) + " is not a module over Zp(" +
                                            ctx.prime.get_str() + ")");
}

HomologyResult apply(Functor f, const RingContext& ctx, const CanonicalModule& m,
                     const CanonicalModule& n) {
  require_admitted(ctx, m);
  require_admitted(ctx, n);
  HomologyResult r;
  if (meets(support(ctx, m), support(ctx, n))) {
    const auto bm = m.blocks();
    const auto bn = n.blocks();
    for (const auto& [x, cx] : bm)
      for (const auto& [y, cy] : bn)
        if (auto v = entry(f, ctx.is_padic(), x, y)) r.module.add(*v, cx * cy);
  }
  r.ring = result_ring(ctx, r.module);
  return r;
}

HomologyResult hereditary_zero(const RingContext& ctx, const CanonicalModule& m,
                               const CanonicalModule& n) {
  require_admitted(ctx, m);
  require_admitted(ctx, n);
  HomologyResult r;
  r.ring = result_ring(ctx, r.module);
  r.note = "hereditary base: degrees above 1 vanish";
  return r;
}

void require_torsion(const CanonicalModule& t) {
  if (!t.is_torsion()) throw Error(ErrorCode::NotTorsion, to_string(t) + " is not torsion");
}

void require_artinian(const CanonicalModule& a) {
  if (!a.only_kinds({K::C, K::Pr}))
    throw Error(ErrorCode::NotArtinian, to_string(a) + " is not artinian");
}

void require_no_adic(const CanonicalModule& m) {
  if (m.has_adic())
    throw Error(ErrorCode::NotRepresentable, to_string(m) + " has adic blocks");
}

std::set<Integer> shared_maximals(const CanonicalModule& m, const CanonicalModule& n) {
  const auto z = RingContext::integers();
  auto s = intersect(support(z, m), support(z, n));
  if (s.full) {
    // Both sides have full support; only primes present in either side can matter.
    std::set<Integer> all;
    for (const auto& p : m.primes()) all.insert(p);
    for (const auto& p : n.primes()) all.insert(p);
    return all;
  }
  return s.maximals;
}

CanonicalModule at_prime(const Integer& p, const CanonicalModule& m) {
  return gamma(RingContext::integers(), {p}, m);
}

HomologyResult finish(Path path, CanonicalModule value) {
  HomologyResult r;
  r.ring = result_ring(RingContext::integers(), value);
  r.module = std::move(value);
  r.path = path;
  return r;
}

}  // namespace

HomologyResult hom(const RingContext& ctx, const CanonicalModule& m, const CanonicalModule& n) {
  return apply(Functor::Hom, ctx, m, n);
}

HomologyResult tensor(const RingContext& ctx, const CanonicalModule& m,
                      const CanonicalModule& n) {
  return apply(Functor::Tensor, ctx, m, n);
}

HomologyResult ext(std::uint64_t i, const RingContext& ctx, const CanonicalModule& m,
                   const CanonicalModule& n) {
  if (i == 0) return hom(ctx, m, n);
  if (i >= 2) return hereditary_zero(ctx, m, n);
  return apply(Functor::Ext1, ctx, m, n);
}

HomologyResult tor(std::uint64_t i, const RingContext& ctx, const CanonicalModule& m,
                   const CanonicalModule& n) {
  if (i == 0) return tensor(ctx, m, n);
  if (i >= 2) return hereditary_zero(ctx, m, n);
  return apply(Functor::Tor1, ctx, m, n);
}

HomologyResult hom_theoremC(const CanonicalModule& a, const CanonicalModule& n) {
  require_artinian(a);
  if (!n.only_kinds({K::Z, K::C}))
    throw Error(ErrorCode::NotNoetherian, to_string(n) + " is not noetherian");
  const auto z = RingContext::integers();
  const auto g = intersect(support(z, a), ass(z, n)).maximals;
  CanonicalModule value;
  std::map<Integer, Exponent> alpha;
  for (const auto& p : g) {
    // Every map A -> N lands in the p-part of N, which p^a kills.
    const Exponent a_p = n.local(p)->max_exponent();
    alpha[p] = a_p;
    value = direct_sum(value, hom(z, quotient_by_power(p, a_p, a), socle_of_power(p, a_p, n)).module);
  }
  auto r = finish(Path::TheoremC, std::move(value));
  r.exponents = std::move(alpha);
  return r;
}

HomologyResult tensor_truncated(const CanonicalModule& t, const CanonicalModule& t2) {
  require_torsion(t);
  require_torsion(t2);
  const auto f = shared_maximals(t, t2);
  Exponent tt = 0;
  std::map<Integer, Exponent> alpha;
  for (const auto& p : f) {
    alpha[p] = truncation_exponent(p, t);
    tt = std::max(tt, alpha[p]);
  }
  CanonicalModule q, q2;
  for (const auto& p : f) {
    q = direct_sum(q, quotient_by_power(p, tt, t));
    q2 = direct_sum(q2, quotient_by_power(p, tt, t2));
  }
  auto r = finish(Path::Truncated, tensor(RingContext::integers(), q, q2).module);
  r.exponents = std::move(alpha);
  r.note = "t=" + std::to_string(tt);
  return r;
}

HomologyResult ext_via_completion(std::uint64_t i, const CanonicalModule& t,
                                  const CanonicalModule& l) {
  require_torsion(t);
  require_no_adic(l);
  CanonicalModule value;
  for (const auto& p : shared_maximals(t, l))
    value = direct_sum(value,
                       ext(i, RingContext::padic(p), at_prime(p, t), complete({p}, l)).module);
  return finish(Path::Completion, std::move(value));
}

HomologyResult ext_dual_swap(std::uint64_t i, const CanonicalModule& t, const CanonicalModule& a) {
  require_torsion(t);
  require_artinian(a);
  CanonicalModule value;
  for (const auto& p : shared_maximals(t, a)) {
    const auto ctx = RingContext::padic(p);
    value = direct_sum(value, ext(i, ctx, dual(ctx, at_prime(p, a)).module,
                                  dual(ctx, at_prime(p, t)).module)
                                  .module);
  }
  return finish(Path::DualSwap, std::move(value));
}

HomologyResult ext_via_general_dual(std::uint64_t i, const CanonicalModule& t,
                                    const CanonicalModule& m) {
  require_torsion(t);
  require_no_adic(m);
  CanonicalModule value;
  for (const auto& p : shared_maximals(t, m)) {
    const auto ctx = RingContext::padic(p);
    value = direct_sum(value, ext(i, ctx, dual(ctx, complete({p}, m)).module,
                                  dual(ctx, at_prime(p, t)).module)
                                  .module);
  }
  return finish(Path::GeneralDual, std::move(value));
}

ThetaReport theta_check(std::uint64_t i, const RingContext& ctx, const CanonicalModule& m,
                        const CanonicalModule& b) {
  const auto e = ext(i, ctx, m, b).module;
  ThetaReport r;
  r.ext_dual = ctx.is_padic() ? dual(ctx, e).module : dual_completed(e);
  r.tor = tor(i, ctx, m, dual(ctx, b).module).module;
  r.holds = is_isomorphic(r.ext_dual, r.tor);
  return r;
}

namespace {

Count generic_rank(const CanonicalModule& m) {
  Count n = m.free_rank();
  for (const auto& [p, part] : m.locals()) n += part.adic;
  return n;
}

Count residue_count(bool cohomological, std::uint64_t i, const std::optional<Integer>& p,
                    const CanonicalModule& m) {
  if (!p) {
    if (i != 0)
      throw Error(ErrorCode::InvalidIndex, "only degree 0 is defined at the generic point");
    return generic_rank(m);
  }
  if (!is_prime(*p)) throw Error(ErrorCode::NotPrime, p->get_str() + " is not prime");
  if (i >= 2) return 0;
  const auto z = RingContext::integers();
  const auto k = CanonicalModule::cyclic(*p, 1);
  const auto v = cohomological ? ext(i, z, k, m) : tor(i, z, k, m);
  return length(v.module).value();
}

ExtNat len_quotient(const Integer& p, Exponent a, const CanonicalModule& m) {
  return length(quotient_by_power(p, a, m));
}

}  // namespace

Count bass(std::uint64_t i, const std::optional<Integer>& p, const CanonicalModule& m) {
  return residue_count(true, i, p, m);
}

Count betti(std::uint64_t i, const std::optional<Integer>& p, const CanonicalModule& m) {
  return residue_count(false, i, p, m);
}

LengthBoundReport tensor_length_bound(const CanonicalModule& t, const CanonicalModule& t2) {
  require_torsion(t);
  require_torsion(t2);
  const auto f = shared_maximals(t, t2);
  LengthBoundReport r;
  r.lhs = length(tensor(RingContext::integers(), t, t2).module);

  ExtNat b1 = 0, widest = 0, lt = 0, lb = 0;
  Exponent tt = 0;
  for (const auto& p : f) tt = std::max(tt, truncation_exponent(p, t));
  for (const auto& p : f) {
    const Exponent a = truncation_exponent(p, t);
    const ExtNat top2 = len_quotient(p, 1, t2);
    b1 = b1 + min(len_quotient(p, a, t) * top2, len_quotient(p, 1, t) * len_quotient(p, a, t2));
    widest = max(widest, top2);
    lt = lt + len_quotient(p, tt, t);
    lb = lb + top2;
  }
  r.chain = {b1, lt * widest, lt * lb};
  r.holds = r.lhs <= r.chain[0] && r.chain[0] <= r.chain[1] && r.chain[1] <= r.chain[2];
  return r;
}

VanishingReport vanishing_tensor(const CanonicalModule& t, const CanonicalModule& t2) {
  require_torsion(t);
  require_torsion(t2);
  VanishingReport r;
  r.vanishes = true;
  for (const auto& p : shared_maximals(t, t2)) {
    const std::string ps = p.get_str();
    if (t.local(p)->finite.empty()) {
      r.certificate[p] = "T=" + ps + "T";
    } else if (t2.local(p)->finite.empty()) {
      r.certificate[p] = "T'=" + ps + "T'";
    } else {
      r.certificate[p] = "none";
      r.vanishes = false;
    }
  }
  return r;
}

HomVanishingReport hom_vanishing(const CanonicalModule& a, const CanonicalModule& b) {
  require_artinian(a);
  const auto z = RingContext::integers();
  const auto f = intersect(support(z, a), ass(z, b)).maximals;

  bool swapped = true, ass_meet = false, att_meet = false;
  for (const auto& p : f) {
    const auto ctx = RingContext::padic(p);
    const auto ga = at_prime(p, a);
    const auto da = dual(ctx, ga).module;
    const auto db = dual(ctx, at_prime(p, b)).module;
    if (!hom(ctx, db, da).module.is_zero()) swapped = false;
    const auto supp_db = support(ctx, db);
    if (meets(ass(ctx, da), supp_db)) ass_meet = true;
    if (meets(att(ctx, ga), supp_db)) att_meet = true;
  }

  HomVanishingReport r;
  r.vanishes = hom(z, a, b).module.is_zero();
  r.equivalents = {
      {"i", r.vanishes},
      {"ii", hom(z, gamma(z, f, a), gamma(z, f, b)).module.is_zero()},
      {"iii", swapped},
      {"iv", !ass_meet},
      {"v", !att_meet},
  };
  r.agree = std::all_of(r.equivalents.begin(), r.equivalents.end(),
                        [&](const auto& e) { return e.second == r.vanishes; });
  return r;
}

SupportSet ass_of_hom(const CanonicalModule& a, const CanonicalModule& b) {
  require_artinian(a);
  require_no_adic(b);
  const auto z = RingContext::integers();
  SupportSet out;
  for (const auto& p : intersect(support(z, a), ass(z, b)).maximals) {
    const auto ctx = RingContext::padic(p);
    const auto ga = at_prime(p, a);
    const auto db = dual(ctx, at_prime(p, b)).module;
    out = unite(out, intersect(att(ctx, ga), support(ctx, db)));
  }
  return out;
}

SupportSet ass_over_completion(const CanonicalModule& m) {
  SupportSet out;
  out.generic = m.free_rank() > 0;
  for (const auto& [p, part] : m.locals()) {
    CanonicalModule piece;
    piece.add_local(p, part);
    out = unite(out, ass(RingContext::padic(p), piece));
  }
  return out;
}

}  // namespace mmx
