#include "mmx/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <thread>

#include "mmx/duality.hpp"
#include "mmx/error.hpp"
#include "mmx/homology.hpp"
#include "mmx/oracle.hpp"
#include "mmx/structure.hpp"

namespace mmx {

Json SuiteReport::to_json() const {
  return {{"suite", suite},
          {"cases", cases},
          {"seed", seed},
          {"bounds",
           {{"max_prime", bounds.max_prime},
            {"max_exp", bounds.max_exp},
            {"max_blocks", bounds.max_blocks}}},
          {"passed", passed},
          {"failed", failed},
          {"skipped", skipped},
          {"certificates", certificates},
          {"stabilization_failures", stabilization_failures},
          {"first_failure", first_failure ? *first_failure : Json(nullptr)}};
}

namespace {

using K = BlockKind;

enum class Status { Pass, Skip, Fail };

struct Outcome {
  Status status = Status::Pass;
  std::uint64_t certificates = 0;
  std::uint64_t stabilization_failures = 0;
  Json failure;
};

class Case {
 public:
  Case(std::uint64_t index, std::uint64_t seed) : index_(index), seed_(seed), rng_(seed) {}

  std::uint64_t seed() const { return seed_; }
  Rng& rng() { return rng_; }

  void input(const std::string& name, const CanonicalModule& m) { inputs_[name] = to_string(m); }
  void begin(std::string_view group) {
    group_ = group;
    inputs_ = Json::object();
  }

  void check(bool cond, std::string_view name, Json detail = nullptr) {
    if (cond || out_.status == Status::Fail) {
      if (!cond) out_.status = Status::Fail;
      return;
    }
    out_.status = Status::Fail;
    out_.failure = {{"index", index_}, {"seed", seed_}, {"group", group_}, {"check", std::string(name)},
                    {"inputs", inputs_}, {"detail", std::move(detail)}};
  }

  void skip() {
    if (out_.status == Status::Pass) out_.status = Status::Skip;
  }
  void certificate() { ++out_.certificates; }
  void stabilization_failed(const Error& e) {
    ++out_.stabilization_failures;
    check(false, "stabilization", e.what());
  }

  Outcome outcome() const { return out_; }

 private:
  std::uint64_t index_, seed_;
  Rng rng_;
  std::string group_;
  Json inputs_ = Json::object();
  Outcome out_;
};

using CaseFn = std::function<void(Case&, const SuiteBounds&)>;

const RingContext kZ = RingContext::integers();

CanonicalModule draw(Rng& rng, const SuiteBounds& b, std::vector<BlockKind> kinds,
                     bool allow_empty = true) {
  InstanceConfig cfg{b.max_prime, b.max_exp, b.max_blocks, std::move(kinds), allow_empty};
  return random_instance(rng.next(), cfg).module;
}

Integer draw_prime(Rng& rng, const SuiteBounds& b) {
  const auto ps = primes_up_to(b.max_prime);
  if (ps.empty()) throw Error(ErrorCode::Unsupported, "no primes below the bound");
  return ps[rng.below(ps.size())];
}

// Same blocks, every prime replaced by p; free rank dropped.
CanonicalModule relabel(const CanonicalModule& m, const Integer& p) {
  CanonicalModule out;
  for (const auto& [q, part] : m.locals()) out.add_local(p, part);
  return out;
}

bool subset(const SupportSet& a, const SupportSet& b) {
  if (b.full) return true;
  if (a.full) return false;
  if (a.generic && !b.generic) return false;
  return std::includes(b.maximals.begin(), b.maximals.end(), a.maximals.begin(), a.maximals.end());
}

Json pair(const CanonicalModule& expected, const CanonicalModule& actual) {
  return {{"expected", to_string(expected)}, {"actual", to_string(actual)}};
}

void same(Case& c, std::string_view name, const CanonicalModule& expected,
          const CanonicalModule& actual) {
  c.check(expected == actual, name, pair(expected, actual));
}

void same(Case& c, std::string_view name, const HomologyResult& expected,
          const HomologyResult& actual) {
  c.check(expected.module == actual.module && expected.ring == actual.ring, name,
          {{"expected", to_json(expected)}, {"actual", to_json(actual)}});
}

// --- decomposition -------------------------------------------------------

void decomposition_case(Case& c, const SuiteBounds& b) {
  auto& rng = c.rng();
  const auto t = draw(rng, b, {K::C, K::Pr});
  const auto m = draw(rng, b, {K::Z, K::C, K::Pr, K::Zp});
  const auto x = draw(rng, b, {K::Z, K::C, K::Pr, K::Zp});
  c.input("T", t);
  c.input("M", m);
  c.input("X", x);

  std::vector<Block> flat;
  for (const auto& [blk, n] : m.blocks()) flat.insert(flat.end(), n, blk);
  for (std::size_t i = flat.size(); i > 1; --i) std::swap(flat[i - 1], flat[rng.below(i)]);
  const auto normalized = normalize(flat);
  same(c, "normalize order-insensitive", m, normalized);
  std::vector<Block> again;
  for (const auto& [blk, n] : normalized.blocks()) again.insert(again.end(), n, blk);
  same(c, "normalize idempotent", normalized, normalize(again));

  same(c, "direct_sum commutative", direct_sum(m, x), direct_sum(x, m));
  same(c, "direct_sum identity", m, direct_sum(m, CanonicalModule::zero()));
  same(c, "direct_sum associative", direct_sum(direct_sum(m, x), t), direct_sum(m, direct_sum(x, t)));
  c.check(is_isomorphic(m, m), "is_isomorphic reflexive");

  CanonicalModule pieces;
  for (const auto& p : t.primes()) pieces = direct_sum(pieces, gamma(kZ, {p}, t));
  same(c, "primary decomposition", t, pieces);

  PrimeSet f;
  for (const auto& p : primes_up_to(b.max_prime))
    if (rng.coin()) f.insert(p);
  same(c, "localize = gamma", gamma(kZ, f, t), localize(f, t));
  same(c, "complete = gamma", gamma(kZ, f, t), complete(f, t));

  c.check(subset(ass(kZ, m), support(kZ, m)), "ass within support");
  c.check(ass(kZ, t) == support(kZ, t), "torsion ass = support");
  SupportSet expected;
  for (const auto& p : support(kZ, t).maximals)
    if (f.count(p)) expected.maximals.insert(p);
  c.check(support(kZ, gamma(kZ, f, t)) == expected, "support of gamma");
  c.check(annihilator(t) == annihilator(dual(kZ, t).module), "annihilator under dual");

  const Integer p = draw_prime(rng, b);
  const Exponent a = truncation_exponent(p, t);
  c.check(length(quotient_by_power(p, a, t)) == length(quotient_by_power(p, a + 1, t)),
          "truncation exponent stabilizes");
  if (a > 0)
    c.check(!(length(quotient_by_power(p, a, t)) == length(quotient_by_power(p, a - 1, t))),
            "truncation exponent is least");
}

// --- duality -------------------------------------------------------------

void duality_case(Case& c, const SuiteBounds& b) {
  auto& rng = c.rng();
  const auto f = draw(rng, b, {K::C});
  c.input("F", f);
  const auto df = dual(kZ, f).module;
  same(c, "finite biduality", f, dual(kZ, df).module);
  c.check(length(df) == length(f), "dual preserves length");
  c.check(annihilator(df) == annihilator(f), "dual preserves annihilator");

  const Integer p = draw_prime(rng, b);
  const auto pctx = RingContext::padic(p);
  const auto lm = relabel(draw(rng, b, {K::C, K::Pr, K::Zp}), p);
  c.input("L", lm);
  const auto dl = dual(pctx, lm).module;
  same(c, "p-adic biduality", lm, dual(pctx, dl).module);
  const auto cl = classify(pctx, lm), cd = classify(pctx, dl);
  c.check(cd.noetherian == cl.artinian && cd.artinian == cl.noetherian,
          "dual swaps noetherian and artinian");
  c.check(annihilator(dl) == annihilator(lm), "p-adic dual preserves annihilator");
  const auto rl = check_biduality(pctx, lm);
  c.check(rl.reflexive && rl.bidual_isomorphic && !rl.ring_changed, "p-adic reflexive");

  const auto m = draw(rng, b, {K::Z, K::C, K::Pr, K::Zp});
  c.input("M", m);
  const auto cm = classify(kZ, m);
  c.check(cm.matlis_reflexive == !length(m).is_infinite(), "reflexive iff finite length");
  c.check(cm.matlis_reflexive == (cm.minimax && annihilator(m) != 0),
          "reflexive iff minimax with nonzero annihilator");

  const auto t = draw(rng, b, {K::C, K::Pr});
  c.input("T", t);
  const auto rt = check_biduality(kZ, t);
  c.check(rt.bidual_isomorphic, "torsion bidual through the completion");
  c.check(rt.reflexive == classify(kZ, t).matlis_reflexive, "biduality verdict");
  c.check(rt.ring_changed == t.has_divisible(), "ring change flagged");
}

// --- path agreement ------------------------------------------------------

struct PathInstance {
  CanonicalModule t, a, l;
};

// Shared by ext_paths and theorem_a so both see the same instances.
PathInstance path_instance(std::uint64_t case_seed, const SuiteBounds& b) {
  Rng rng(mix_seed(case_seed, 0x5041));
  PathInstance in;
  in.t = draw(rng, b, {K::C, K::Pr});
  in.a = draw(rng, b, {K::C, K::Pr});
  in.l = draw(rng, b, {K::Z, K::C, K::Pr});
  return in;
}

void ext_paths_case(Case& c, const SuiteBounds& b) {
  const auto in = path_instance(c.seed(), b);
  c.input("T", in.t);
  c.input("A", in.a);
  c.input("L", in.l);
  for (std::uint64_t i = 0; i <= 1; ++i) {
    const auto d = ext(i, kZ, in.t, in.a);
    same(c, "completion path", d, ext_via_completion(i, in.t, in.a));
    same(c, "dual swap path", d, ext_dual_swap(i, in.t, in.a));
    same(c, "general dual path", d, ext_via_general_dual(i, in.t, in.a));
    const auto dl = ext(i, kZ, in.t, in.l);
    same(c, "completion path (mini-max)", dl, ext_via_completion(i, in.t, in.l));
    same(c, "general dual path (mini-max)", dl, ext_via_general_dual(i, in.t, in.l));
  }
}

void theorem_c_case(Case& c, const SuiteBounds& b) {
  auto& rng = c.rng();
  const auto a = draw(rng, b, {K::C, K::Pr});
  const auto n = draw(rng, b, {K::Z, K::C});
  c.input("A", a);
  c.input("N", n);
  const auto hc = hom_theoremC(a, n);
  same(c, "theoremC = direct", hom(kZ, a, n), hc);
  c.check(!length(hc.module).is_infinite(), "theoremC finite length");
  Integer bound = 1;
  for (const auto& [p, alpha] : hc.exponents) bound *= pow(p, alpha);
  const Integer ann = annihilator(hc.module);
  c.check(ann != 0 && mpz_divisible_p(bound.get_mpz_t(), ann.get_mpz_t()),
          "theoremC annihilated by the truncation product",
          {{"bound", bound.get_str()}, {"annihilator", ann.get_str()}});
}

void truncation_case(Case& c, const SuiteBounds& b) {
  auto& rng = c.rng();
  const auto t = draw(rng, b, {K::C, K::Pr});
  const auto t2 = draw(rng, b, {K::C, K::Pr});
  c.input("T", t);
  c.input("T'", t2);
  same(c, "truncated tensor", tensor(kZ, t, t2), tensor_truncated(t, t2));
}

// --- oracle --------------------------------------------------------------

Instance draw_presented(Rng& rng, const SuiteBounds& b) {
  InstanceConfig cfg{b.max_prime, b.max_exp, b.max_blocks, {K::Z, K::C}, true};
  return random_instance(rng.next(), cfg);
}

void oracle_random_case(Case& c, const SuiteBounds& b) {
  auto& rng = c.rng();
  const auto ia = draw_presented(rng, b);
  const auto ib = draw_presented(rng, b);
  const auto& a = ia.module;
  const auto& bm = ib.module;
  c.input("A", a);
  c.input("B", bm);
  const auto& pa = *ia.presentation;
  const auto& pb = *ib.presentation;
  same(c, "presentation structure", a, fp_structure(pa));
  const auto h = fp_hom(pa, pb), e = fp_ext1(pa, pb), t = fp_tensor(pa, pb), r = fp_tor1(pa, pb);
  same(c, "oracle hom", h, hom(kZ, a, bm).module);
  same(c, "oracle ext1", e, ext(1, kZ, a, bm).module);
  same(c, "oracle tensor", t, tensor(kZ, a, bm).module);
  same(c, "oracle tor1", r, tor(1, kZ, a, bm).module);

  const auto pa2 = scramble(pa, rng.next()), pb2 = scramble(pb, rng.next());
  same(c, "hom presentation-invariant", h, fp_hom(pa2, pb2));
  same(c, "ext1 presentation-invariant", e, fp_ext1(pa2, pb2));
  same(c, "tensor presentation-invariant", t, fp_tensor(pa2, pb2));
  same(c, "tor1 presentation-invariant", r, fp_tor1(pa2, pb2));

  if (a.is_torsion() && bm.is_torsion())
    c.check(length(h) == length(fp_hom(pb, pa)), "hom length symmetric on finite modules");

  // Split exact sequence 0 -> A -> A + B -> B -> 0 against a third module.
  const auto n = draw_presented(rng, b);
  const auto pab = presentation_of(direct_sum(a, bm));
  same(c, "hom additive", fp_hom(pab, *n.presentation),
       direct_sum(fp_hom(pa, *n.presentation), fp_hom(pb, *n.presentation)));
  same(c, "ext1 additive", fp_ext1(pab, *n.presentation),
       direct_sum(fp_ext1(pa, *n.presentation), fp_ext1(pb, *n.presentation)));
}

void pruefer_case(Case& c, const SuiteBounds& b) {
  auto& rng = c.rng();
  const Integer p = draw_prime(rng, b);
  const auto ib = draw_presented(rng, b);
  const auto& bm = ib.module;
  const auto pr = CanonicalModule::pruefer(p);
  c.input("Pr", pr);
  c.input("B", bm);
  try {
    const auto tor_cert = pruefer_colimit(PrueferFunctor::Tor1, p, *ib.presentation);
    c.certificate();
    same(c, "tor1 colimit", tor(1, kZ, pr, bm).module, tor_cert.value);
    same(c, "tor1 colimit = p-torsion", gamma(kZ, {p}, bm), tor_cert.value);
    if (bm.is_torsion()) {
      const auto tensor_cert = pruefer_colimit(PrueferFunctor::Tensor, p, *ib.presentation);
      c.certificate();
      same(c, "tensor colimit", tensor(kZ, pr, bm).module, tensor_cert.value);
    }
    const auto ext_cert = pruefer_limit_ext(p, *ib.presentation);
    c.certificate();
    same(c, "ext1 limit", ext(1, kZ, pr, bm).module, ext_cert.value);
    c.check((ext_cert.regime == StageRegime::AdicLimit) == (bm.free_rank() > 0),
            "limit regime recognized");
  } catch (const Error& e) {
    if (e.code() != ErrorCode::StabilizationFailed) throw;
    c.stabilization_failed(e);
  }
}

// --- Ext/Tor postconditions ----------------------------------------------

void theorem_a_case(Case& c, const SuiteBounds& b) {
  auto& rng = c.rng();
  const auto in = path_instance(c.seed(), b);
  c.input("T", in.t);
  c.input("A", in.a);
  c.input("L", in.l);
  for (const auto* art : {&in.t, &in.a}) {
    for (std::uint64_t i = 0; i <= 1; ++i) {
      const auto e = ext(i, kZ, *art, in.l).module;
      c.check(!e.has_divisible() && e.free_rank() == 0, "ext noetherian over the completion",
              to_string(e));
      const auto t = tor(i, kZ, *art, in.l).module;
      c.check(t.only_kinds({K::C, K::Pr}), "tor artinian and torsion", to_string(t));
    }
  }

  const Integer p = draw_prime(rng, b);
  const auto pctx = RingContext::padic(p);
  const auto m1 = relabel(draw(rng, b, {K::C, K::Pr, K::Zp}), p);
  const auto m2 = relabel(draw(rng, b, {K::C, K::Pr, K::Zp}), p);
  c.input("M1", m1);
  c.input("M2", m2);
  const auto f1 = draw(rng, b, {K::C});
  const auto f2 = draw(rng, b, {K::C});
  c.input("F1", f1);
  c.input("F2", f2);
  for (std::uint64_t i = 0; i <= 1; ++i) {
    c.check(classify(pctx, ext(i, pctx, m1, m2).module).matlis_reflexive, "p-adic ext reflexive");
    c.check(classify(pctx, tor(i, pctx, m1, m2).module).matlis_reflexive, "p-adic tor reflexive");
    c.check(!length(ext(i, kZ, f1, f2).module).is_infinite(), "finite ext finite length");
    c.check(!length(tor(i, kZ, f1, f2).module).is_infinite(), "finite tor finite length");
  }
  c.check(!length(tensor(kZ, in.t, in.a).module).is_infinite(), "artinian tensor finite length");

  const auto x = draw(rng, b, {K::Z, K::C, K::Pr});
  const auto x2 = draw(rng, b, {K::Z, K::C, K::Pr});
  const auto y = draw(rng, b, {K::Z, K::C, K::Pr, K::Zp});
  const auto y2 = draw(rng, b, {K::Z, K::C, K::Pr, K::Zp});
  c.input("X", x);
  c.input("X2", x2);
  c.input("Y", y);
  c.input("Y2", y2);
  for (std::uint64_t i = 0; i <= 1; ++i) {
    same(c, "ext additive in the first slot", ext(i, kZ, direct_sum(x, x2), y).module,
         direct_sum(ext(i, kZ, x, y).module, ext(i, kZ, x2, y).module));
    same(c, "ext additive in the second slot", ext(i, kZ, x, direct_sum(y, y2)).module,
         direct_sum(ext(i, kZ, x, y).module, ext(i, kZ, x, y2).module));
    same(c, "tor additive in the first slot", tor(i, kZ, direct_sum(x, x2), y).module,
         direct_sum(tor(i, kZ, x, y).module, tor(i, kZ, x2, y).module));
    same(c, "tor additive in the second slot", tor(i, kZ, x, direct_sum(y, y2)).module,
         direct_sum(tor(i, kZ, x, y).module, tor(i, kZ, x, y2).module));
    same(c, "tor symmetric", tor(i, kZ, x, x2).module, tor(i, kZ, x2, x).module);
  }
  same(c, "tor with a Pruefer group", gamma(kZ, {p}, x),
       tor(1, kZ, CanonicalModule::pruefer(p), x).module);
}

void theta_case(Case& c, const SuiteBounds& b) {
  auto& rng = c.rng();
  CanonicalModule m, bm;
  if (rng.coin()) {
    m = draw(rng, b, {K::C, K::Pr});
    bm = draw(rng, b, {K::C, K::Pr});
  } else {
    m = draw(rng, b, {K::Z, K::C, K::Pr});
    bm = draw(rng, b, {K::C});
  }
  const Integer p = draw_prime(rng, b);
  const auto pctx = RingContext::padic(p);
  const auto pm = relabel(draw(rng, b, {K::C, K::Pr, K::Zp}), p);
  const auto pb = relabel(draw(rng, b, {K::C, K::Pr, K::Zp}), p);
  c.input("M", m);
  c.input("B", bm);
  c.input("M_p", pm);
  c.input("B_p", pb);
  for (std::uint64_t i = 0; i <= 1; ++i) {
    const auto rz = theta_check(i, kZ, m, bm);
    c.check(rz.holds, "theta over Z", pair(rz.ext_dual, rz.tor));
    const auto rp = theta_check(i, pctx, pm, pb);
    c.check(rp.holds, "theta over the p-adic integers", pair(rp.ext_dual, rp.tor));
  }
}

Json bound_json(const LengthBoundReport& r) {
  Json chain = Json::array();
  for (const auto& v : r.chain) chain.push_back(to_json(v));
  return {{"lhs", to_json(r.lhs)}, {"chain", chain}};
}

void lengths_case(Case& c, const SuiteBounds& b) {
  auto& rng = c.rng();
  const auto t = draw(rng, b, {K::C, K::Pr});
  const auto t2 = draw(rng, b, {K::C, K::Pr});
  c.input("T", t);
  c.input("T'", t2);
  const auto r = tensor_length_bound(t, t2);
  c.check(r.holds, "tensor length chain", bound_json(r));
  const auto r2 = tensor_length_bound(t2, t);
  c.check(r2.holds, "tensor length chain (swapped)", bound_json(r2));
  c.check(!r.lhs.is_infinite(), "artinian tensor finite length");
}

void vanishing_case(Case& c, const SuiteBounds& b) {
  auto& rng = c.rng();
  const auto t = draw(rng, b, {K::C, K::Pr});
  const auto t2 = draw(rng, b, {K::C, K::Pr});
  const auto a = draw(rng, b, {K::C, K::Pr});
  const auto bm = draw(rng, b, {K::Z, K::C, K::Pr, K::Zp});
  c.input("T", t);
  c.input("T'", t2);
  c.input("A", a);
  c.input("B", bm);
  c.check(vanishing_tensor(t, t2).vanishes == tensor(kZ, t, t2).module.is_zero(),
          "vanishing criterion for tensor");
  const auto hv = hom_vanishing(a, bm);
  Json eq = Json::object();
  for (const auto& [name, v] : hv.equivalents) eq[name] = v;
  c.check(hv.agree, "hom vanishing equivalents agree", eq);
  c.check(hv.vanishes == hom(kZ, a, bm).module.is_zero(), "hom vanishing verdict");
}

void ass_att_case(Case& c, const SuiteBounds& b) {
  auto& rng = c.rng();
  const auto a = draw(rng, b, {K::C, K::Pr});
  const auto bm = draw(rng, b, {K::Z, K::C, K::Pr});
  c.input("A", a);
  c.input("B", bm);
  const auto lhs = ass_of_hom(a, bm);
  const auto rhs = ass_over_completion(hom(kZ, a, bm).module);
  c.check(lhs == rhs, "ass of hom", {{"formula", to_json(lhs)}, {"direct", to_json(rhs)}});
  c.check(att(kZ, a) == ass(kZ, dual(kZ, a).module), "att = ass of the dual");
}

const std::map<std::string_view, CaseFn>& groups() {
  static const std::map<std::string_view, CaseFn> g = {
      {"decomposition", decomposition_case}, {"duality", duality_case},
      {"ext_paths", ext_paths_case},         {"theorem_c", theorem_c_case},
      {"truncation", truncation_case},       {"oracle_random", oracle_random_case},
      {"pruefer", pruefer_case},             {"theorem_a", theorem_a_case},
      {"theta", theta_case},                 {"lengths", lengths_case},
      {"vanishing", vanishing_case},         {"ass_att", ass_att_case},
  };
  return g;
}

const std::vector<std::pair<std::string_view, std::vector<std::string_view>>>& suites() {
  static const std::vector<std::pair<std::string_view, std::vector<std::string_view>>> s = {
      {"decomposition", {"decomposition"}},
      {"duality", {"duality"}},
      {"path_agreement", {"ext_paths", "theorem_c", "truncation"}},
      {"oracle_diff", {"oracle_random", "pruefer"}},
      {"theorem_a", {"theorem_a"}},
      {"theta", {"theta"}},
      {"lengths", {"lengths"}},
      {"vanishing", {"vanishing"}},
      {"ass_att", {"ass_att"}},
  };
  return s;
}

using Member = std::pair<std::string_view, const CaseFn*>;

Outcome run_case(const std::vector<Member>& fns, std::uint64_t index, std::uint64_t seed,
                 const SuiteBounds& b) {
  Case c(index, mix_seed(seed, index));
  for (const auto& [group, fn] : fns) {
    c.begin(group);
    try {
      (*fn)(c, b);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NotRepresentable)
        c.skip();
      else if (e.code() == ErrorCode::StabilizationFailed)
        c.stabilization_failed(e);
      else
        c.check(false, "unexpected error",
                {{"error", std::string(error_name(e.code()))}, {"detail", e.what()}});
    }
  }
  return c.outcome();
}

template <typename Work>
void parallel_for(std::uint64_t n, unsigned jobs, Work work) {
  jobs = std::max(1u, jobs);
  if (jobs == 1 || n < 2) {
    for (std::uint64_t i = 0; i < n; ++i) work(i);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t)
    pool.emplace_back([&, t] {
      for (std::uint64_t i = t; i < n; i += jobs) work(i);
    });
  for (auto& th : pool) th.join();
}

void tally(SuiteReport& r, const std::vector<Outcome>& outs) {
  for (const auto& o : outs) {
    switch (o.status) {
      case Status::Pass:
        ++r.passed;
        break;
      case Status::Skip:
        ++r.skipped;
        break;
      case Status::Fail:
        ++r.failed;
        if (!r.first_failure) r.first_failure = o.failure;
        break;
    }
    r.certificates += o.certificates;
    r.stabilization_failures += o.stabilization_failures;
  }
}

SuiteReport run_fns(std::string_view name, const std::vector<Member>& fns,
                    std::uint64_t cases, std::uint64_t seed, const SuiteBounds& b, unsigned jobs) {
  SuiteReport r;
  r.suite = std::string(name);
  r.cases = cases;
  r.seed = seed;
  r.bounds = b;
  std::vector<Outcome> outs(cases);
  parallel_for(cases, jobs, [&](std::uint64_t i) { outs[i] = run_case(fns, i, seed, b); });
  tally(r, outs);
  return r;
}

}  // namespace

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names = [] {
    std::vector<std::string_view> v;
    for (const auto& [n, g] : suites()) v.push_back(n);
    return v;
  }();
  return names;
}

const std::vector<std::string_view>& group_names() {
  static const std::vector<std::string_view> names = [] {
    std::vector<std::string_view> v;
    for (const auto& [n, g] : groups()) v.push_back(n);
    return v;
  }();
  return names;
}

SuiteReport run_suite(std::string_view name, std::uint64_t cases, std::uint64_t seed,
                      const SuiteBounds& bounds, unsigned jobs) {
  for (const auto& [n, members] : suites()) {
    if (n != name) continue;
    std::vector<Member> fns;
    for (const auto& g : members) fns.emplace_back(g, &groups().at(g));
    return run_fns(name, fns, cases, seed, bounds, jobs);
  }
  throw Error(ErrorCode::UnknownSuite, "unknown suite '" + std::string(name) + "'");
}

SuiteReport run_group(std::string_view name, std::uint64_t cases, std::uint64_t seed,
                      const SuiteBounds& bounds, unsigned jobs) {
  const auto it = groups().find(name);
  if (it == groups().end())
    throw Error(ErrorCode::UnknownSuite, "unknown check group '" + std::string(name) + "'");
  return run_fns(name, {{it->first, &it->second}}, cases, seed, bounds, jobs);
}

std::vector<CanonicalModule> finite_grid(const std::vector<Integer>& primes, Exponent max_exp,
                                         std::size_t max_blocks) {
  std::vector<Block> kinds;
  for (const auto& p : primes)
    for (Exponent e = 1; e <= max_exp; ++e) kinds.push_back(Block::cyclic(p, e));
  std::vector<CanonicalModule> out;
  std::function<void(std::size_t, std::size_t, CanonicalModule)> grow =
      [&](std::size_t from, std::size_t left, CanonicalModule m) {
        out.push_back(m);
        if (left == 0) return;
        for (std::size_t k = from; k < kinds.size(); ++k) {
          CanonicalModule next = m;
          next.add(kinds[k]);
          grow(k, left - 1, std::move(next));
        }
      };
  grow(0, max_blocks, CanonicalModule::zero());
  return out;
}

SuiteReport run_oracle_grid(const std::vector<CanonicalModule>& grid, unsigned jobs) {
  SuiteReport r;
  r.suite = "oracle_grid";
  const std::uint64_t n = grid.size();
  r.cases = n * n;
  std::vector<Presentation> pres;
  for (const auto& m : grid) pres.push_back(presentation_of(m));
  std::vector<Outcome> outs(r.cases);
  parallel_for(r.cases, jobs, [&](std::uint64_t idx) {
    const auto& a = grid[idx / n];
    const auto& b = grid[idx % n];
    const auto& pa = pres[idx / n];
    const auto& pb = pres[idx % n];
    Case c(idx, 0);
    c.begin("oracle_grid");
    c.input("A", a);
    c.input("B", b);
    same(c, "oracle hom", fp_hom(pa, pb), hom(kZ, a, b).module);
    same(c, "oracle ext1", fp_ext1(pa, pb), ext(1, kZ, a, b).module);
    same(c, "oracle tensor", fp_tensor(pa, pb), tensor(kZ, a, b).module);
    same(c, "oracle tor1", fp_tor1(pa, pb), tor(1, kZ, a, b).module);
    outs[idx] = c.outcome();
  });
  tally(r, outs);
  return r;
}

SuiteReport run_duality_grid(const std::vector<Integer>& primes, Exponent max_exp,
                             std::size_t max_blocks) {
  std::vector<Block> kinds = {Block::free()};
  for (const auto& p : primes) {
    for (Exponent e = 1; e <= max_exp; ++e) kinds.push_back(Block::cyclic(p, e));
    kinds.push_back(Block::pruefer(p));
    kinds.push_back(Block::adic(p));
  }
  std::vector<CanonicalModule> grid;
  std::function<void(std::size_t, std::size_t, CanonicalModule)> grow =
      [&](std::size_t from, std::size_t left, CanonicalModule m) {
        grid.push_back(m);
        if (left == 0) return;
        for (std::size_t k = from; k < kinds.size(); ++k) {
          CanonicalModule next = m;
          next.add(kinds[k]);
          grow(k, left - 1, std::move(next));
        }
      };
  grow(0, max_blocks, CanonicalModule::zero());

  SuiteReport r;
  r.suite = "duality_grid";
  r.cases = grid.size();
  std::vector<Outcome> outs;
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    const auto& m = grid[idx];
    Case c(idx, 0);
    c.begin("duality_grid");
    c.input("M", m);
    try {
      const auto cl = classify(kZ, m);
      c.check(cl.matlis_reflexive == !length(m).is_infinite(), "reflexive iff finite length");
      c.check(cl.matlis_reflexive == (cl.minimax && annihilator(m) != 0),
              "reflexive iff minimax with nonzero annihilator");
      if (m.is_torsion()) {
        const auto d = dual(kZ, m).module;
        c.check(annihilator(d) == annihilator(m), "dual preserves annihilator");
        const auto rep = check_biduality(kZ, m);
        c.check(rep.bidual_isomorphic, "bidual through the completion");
        c.check(rep.reflexive == cl.matlis_reflexive, "biduality verdict");
        if (m.only_kinds({K::C})) same(c, "finite biduality", m, dual(kZ, d).module);
      }
      for (const auto& p : primes) {
        const auto pctx = RingContext::padic(p);
        const auto lm = relabel(m, p);
        const auto d = dual(pctx, lm).module;
        same(c, "p-adic biduality", lm, dual(pctx, d).module);
        const auto a = classify(pctx, lm), bcl = classify(pctx, d);
        c.check(a.noetherian == bcl.artinian && a.artinian == bcl.noetherian,
                "dual swaps noetherian and artinian");
        c.check(annihilator(d) == annihilator(lm), "p-adic dual preserves annihilator");
        c.check(a.matlis_reflexive && check_biduality(pctx, lm).bidual_isomorphic,
                "p-adic modules are reflexive");
      }
    } catch (const Error& e) {
      c.check(false, "unexpected error",
              {{"error", std::string(error_name(e.code()))}, {"detail", e.what()}});
    }
    outs.push_back(c.outcome());
  }
  tally(r, outs);
  return r;
}

}  // namespace mmx
