#include "mmx/duality.hpp"

#include "mmx/error.hpp"
#include "mmx/structure.hpp"

namespace mmx {

std::string to_string(const RingMarker& r) {
  switch (r.kind) {
    case RingMarker::Kind::Integers:
      return "Z";
    case RingMarker::Kind::Padic:
      return "Zp(" + r.prime.get_str() + ")";
    case RingMarker::Kind::Product: {
      std::string s = "prod(";
      bool first = true;
      for (const auto& p : r.primes) {
        if (!first) s += ",";
        first = false;
        s += p.get_str();
      }
      return s + ")";
    }
  }
  return {};
}

RingMarker result_ring(const RingContext& ctx, const CanonicalModule& value) {
  if (ctx.is_padic()) return RingMarker::padic(ctx.prime);
  std::set<Integer> adic;
  for (const auto& [p, part] : value.locals())
    if (part.adic > 0) adic.insert(p);
  if (adic.empty()) return RingMarker::integers();
  return RingMarker::product(std::move(adic));
}

namespace {

LocalPart dual_part(const LocalPart& part) {
  return LocalPart{part.finite, part.adic, part.divisible};
}

}  // namespace

DualResult dual(const RingContext& ctx, const CanonicalModule& m) {
  if (!admit(ctx, m))
    throw Error(ErrorCode::InvalidRing, to_string(m) + " is not a module over Zp(" +
                                            ctx.prime.get_str() + ")");
  if (!ctx.is_padic()) {
    if (m.free_rank() > 0)
      throw Error(ErrorCode::NotRepresentable, "the dual of Z has infinite support");
    if (m.has_adic())
      throw Error(ErrorCode::NotRepresentable,
                  "the dual of an adic block over Z leaves the block class");
  }
  DualResult out;
  std::set<Integer> supp;
  for (const auto& [p, part] : m.locals()) {
    out.module.add_local(p, dual_part(part));
    supp.insert(p);
  }
  out.ring = ctx.is_padic() ? RingMarker::padic(ctx.prime) : RingMarker::product(std::move(supp));
  return out;
}

CanonicalModule dual_completed(const CanonicalModule& m) {
  if (m.free_rank() > 0)
    throw Error(ErrorCode::NotRepresentable, "the dual of Z has infinite support");
  CanonicalModule out;
  for (const auto& [p, part] : m.locals()) out.add_local(p, dual_part(part));
  return out;
}

BidualityReport check_biduality(const RingContext& ctx, const CanonicalModule& m) {
  DualResult first = dual(ctx, m);
  BidualityReport r;
  r.bidual_isomorphic = is_isomorphic(dual_completed(first.module), m);
  r.ring_changed = !ctx.is_padic() && m.has_divisible();
  r.reflexive = classify(ctx, m).matlis_reflexive;
  return r;
}

}  // namespace mmx
