#include "mmx/json_io.hpp"

#include "mmx/error.hpp"

namespace mmx {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroInput:
      return "ZeroInput";
    case ErrorCode::Unsupported:
      return "Unsupported";
    case ErrorCode::InvalidRing:
      return "InvalidRing";
    case ErrorCode::NotTorsion:
      return "NotTorsion";
    case ErrorCode::NotArtinian:
      return "NotArtinian";
    case ErrorCode::NotNoetherian:
      return "NotNoetherian";
    case ErrorCode::NotRepresentable:
      return "NotRepresentable";
    case ErrorCode::NotStabilizing:
      return "NotStabilizing";
    case ErrorCode::StabilizationFailed:
      return "StabilizationFailed";
    case ErrorCode::InvalidIndex:
      return "InvalidIndex";
    case ErrorCode::ParseError:
      return "ParseError";
    case ErrorCode::NotPrime:
      return "NotPrime";
    case ErrorCode::UnknownSuite:
      return "UnknownSuite";
  }
  return "Unsupported";
}

Json integer_json(const Integer& n) {
  if (n >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
    std::uint64_t v = 0;
    mpz_export(&v, nullptr, -1, sizeof v, 0, 0, n.get_mpz_t());
    return v;
  }
  return n.get_str();
}

Json to_json(const CanonicalModule& m) {
  Json locals = Json::object();
  for (const auto& [p, part] : m.locals())
    locals[p.get_str()] = {{"finite", part.finite}, {"div", part.divisible}, {"adic", part.adic}};
  return {{"free", m.free_rank()}, {"locals", std::move(locals)}};
}

Json to_json(const SupportSet& s) {
  Json maximals = Json::array();
  for (const auto& p : s.maximals) maximals.push_back(p.get_str());
  return {{"full", s.full}, {"generic", s.generic}, {"maximals", std::move(maximals)}};
}

Json to_json(const RingMarker& r) {
  switch (r.kind) {
    case RingMarker::Kind::Integers:
      return "Z";
    case RingMarker::Kind::Padic:
      return {{"padic", integer_json(r.prime)}};
    case RingMarker::Kind::Product: {
      Json ps = Json::array();
      for (const auto& p : r.primes) ps.push_back(integer_json(p));
      return {{"product", std::move(ps)}};
    }
  }
  return "Z";
}

Json to_json(const ExtNat& n) {
  if (n.is_infinite()) return "infinite";
  return n.value();
}

Json to_json(const Classification& c) {
  return {{"noetherian", c.noetherian},
          {"artinian", c.artinian},
          {"minimax", c.minimax},
          {"matlis_reflexive", c.matlis_reflexive}};
}

Json to_json(const HomologyResult& r) {
  Json j = {{"module", to_json(r.module)},
            {"ring", to_json(r.ring)},
            {"path", std::string(path_name(r.path))}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

std::string dump(const Json& j) { return j.dump(-1, ' ', false, Json::error_handler_t::replace); }

}  // namespace mmx
