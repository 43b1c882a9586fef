#include "mmx/structure.hpp"

#include <algorithm>

#include "mmx/error.hpp"

namespace mmx {

SupportSet SupportSet::everything() {
  SupportSet s;
  s.full = true;
  s.generic = true;
  return s;
}

SupportSet intersect(const SupportSet& a, const SupportSet& b) {
  if (a.full) return b;
  if (b.full) return a;
  SupportSet out;
  out.generic = a.generic && b.generic;
  std::set_intersection(a.maximals.begin(), a.maximals.end(), b.maximals.begin(),
                        b.maximals.end(), std::inserter(out.maximals, out.maximals.end()));
  return out;
}

SupportSet unite(const SupportSet& a, const SupportSet& b) {
  SupportSet out;
  out.full = a.full || b.full;
  out.generic = a.generic || b.generic;
  out.maximals = a.maximals;
  out.maximals.insert(b.maximals.begin(), b.maximals.end());
  return out;
}

bool meets(const SupportSet& a, const SupportSet& b) { return !intersect(a, b).empty(); }

ExtNat operator+(ExtNat a, ExtNat b) {
  if (a.infinite_ || b.infinite_) return ExtNat::infinite();
  return ExtNat(a.value_ + b.value_);
}

ExtNat operator*(ExtNat a, ExtNat b) {
  if ((!a.infinite_ && a.value_ == 0) || (!b.infinite_ && b.value_ == 0)) return ExtNat(0);
  if (a.infinite_ || b.infinite_) return ExtNat::infinite();
  return ExtNat(a.value_ * b.value_);
}

bool operator<=(ExtNat a, ExtNat b) {
  if (b.infinite_) return true;
  if (a.infinite_) return false;
  return a.value_ <= b.value_;
}

std::string ExtNat::to_string() const { return infinite_ ? "infinite" : std::to_string(value_); }

namespace {

void require_admitted(const RingContext& ctx, const CanonicalModule& m) {
  if (!admit(ctx, m))
    throw Error(ErrorCode::InvalidRing, to_string(m) + " is not a module over Zp(" +
                                            ctx.prime.get_str() + ")");
}

}  // namespace

SupportSet support(const RingContext& ctx, const CanonicalModule& m) {
  require_admitted(ctx, m);
  if (m.free_rank() > 0 || m.has_adic()) return SupportSet::everything();
  SupportSet s;
  for (const auto& [p, part] : m.locals()) s.maximals.insert(p);
  return s;
}

SupportSet ass(const RingContext& ctx, const CanonicalModule& m) {
  require_admitted(ctx, m);
  SupportSet s;
  s.generic = m.free_rank() > 0 || m.has_adic();
  for (const auto& [p, part] : m.locals())
    if (!part.finite.empty() || part.divisible > 0) s.maximals.insert(p);
  return s;
}

SupportSet att(const RingContext& ctx, const CanonicalModule& a) {
  require_admitted(ctx, a);
  if (!a.only_kinds({BlockKind::C, BlockKind::Pr}))
    throw Error(ErrorCode::NotArtinian, to_string(a) + " is not artinian");
  SupportSet s;
  for (const auto& [p, part] : a.locals()) {
    if (part.divisible > 0) s.generic = true;
    if (!part.finite.empty()) s.maximals.insert(p);
  }
  return s;
}

CanonicalModule gamma(const RingContext& ctx, const PrimeSet& primes, const CanonicalModule& m) {
  require_admitted(ctx, m);
  if (ctx.is_padic() && std::any_of(primes.begin(), primes.end(),
                                    [&](const Integer& p) { return p != ctx.prime; }))
    throw Error(ErrorCode::InvalidRing, "torsion over Zp(" + ctx.prime.get_str() +
                                            ") is taken only at its own maximal ideal");
  CanonicalModule out;
  for (const auto& [p, part] : m.locals()) {
    if (!primes.count(p)) continue;
    LocalPart kept{part.finite, part.divisible, 0};
    out.add_local(p, kept);
  }
  return out;
}

CanonicalModule localize(const PrimeSet& primes, const CanonicalModule& t) {
  if (!t.is_torsion())
    throw Error(ErrorCode::NotTorsion, to_string(t) + " is not torsion");
  CanonicalModule out;
  for (const auto& [p, part] : t.locals())
    if (primes.count(p)) out.add_local(p, part);
  return out;
}

CanonicalModule complete(const PrimeSet& primes, const CanonicalModule& m) {
  if (m.has_adic())
    throw Error(ErrorCode::NotRepresentable,
                "completion of an adic block at another prime leaves the block class");
  CanonicalModule out;
  for (const auto& p : primes) out.add(Block::adic(p), m.free_rank());
  for (const auto& [p, part] : m.locals())
    if (primes.count(p)) out.add_local(p, part);
  return out;
}

ExtNat length(const CanonicalModule& m) {
  if (m.free_rank() > 0) return ExtNat::infinite();
  std::uint64_t total = 0;
  for (const auto& [p, part] : m.locals()) {
    if (part.divisible > 0 || part.adic > 0) return ExtNat::infinite();
    for (Exponent e : part.finite) total += e;
  }
  return ExtNat(total);
}

Integer annihilator(const CanonicalModule& m) {
  if (m.free_rank() > 0) return 0;
  Integer out = 1;
  for (const auto& [p, part] : m.locals()) {
    if (part.divisible > 0 || part.adic > 0) return 0;
    out *= pow(p, part.max_exponent());
  }
  return out;
}

Classification classify(const RingContext& ctx, const CanonicalModule& m) {
  require_admitted(ctx, m);
  Classification c;
  if (ctx.is_padic()) {
    c.noetherian = !m.has_divisible();
    c.artinian = m.only_kinds({BlockKind::C, BlockKind::Pr});
    c.minimax = true;
    c.matlis_reflexive = c.minimax;
    return c;
  }
  c.noetherian = m.only_kinds({BlockKind::Z, BlockKind::C});
  c.artinian = m.only_kinds({BlockKind::C, BlockKind::Pr});
  c.minimax = !m.has_adic();
  // Over Z: mini-max with R/Ann semi-local complete means finite length.
  c.matlis_reflexive = c.minimax && annihilator(m) != 0;
  return c;
}

Exponent truncation_exponent(const Integer& p, const CanonicalModule& m) {
  if (m.free_rank() > 0)
    throw Error(ErrorCode::NotStabilizing, "powers of " + p.get_str() + " descend forever on Z");
  const LocalPart* part = m.local(p);
  if (!part) return 0;
  if (part->adic > 0)
    throw Error(ErrorCode::NotStabilizing,
                "powers of " + p.get_str() + " descend forever on Zp(" + p.get_str() + ")");
  return part->max_exponent();
}

CanonicalModule quotient_by_power(const Integer& p, Exponent a, const CanonicalModule& m) {
  CanonicalModule out;
  if (a == 0) return out;
  out.add(Block::cyclic(p, a), m.free_rank());
  if (const LocalPart* part = m.local(p)) {
    for (Exponent e : part->finite) out.add(Block::cyclic(p, std::min(e, a)));
    out.add(Block::cyclic(p, a), part->adic);
  }
  return out;
}

CanonicalModule socle_of_power(const Integer& p, Exponent a, const CanonicalModule& m) {
  CanonicalModule out;
  if (a == 0) return out;
  if (const LocalPart* part = m.local(p)) {
    for (Exponent e : part->finite) out.add(Block::cyclic(p, std::min(e, a)));
    out.add(Block::cyclic(p, a), part->divisible);
  }
  return out;
}

}  // namespace mmx
