#include "mmx/oracle.hpp"

#include <algorithm>

#include "mmx/error.hpp"

namespace mmx {

namespace {

IntMatrix hcat(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

IntMatrix kron(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

IntMatrix negated(IntMatrix m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
  return m;
}

IntMatrix first_rows(const IntMatrix& m, std::size_t k) {
  IntMatrix out(k, m.cols());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

// A basis of the column span: the relations of the same module, but with an
// injective matrix, so 0 -> Z^r -> Z^n -> A -> 0 is a resolution.
IntMatrix injective_relations(const IntMatrix& r) {
  const auto s = smith_normal_form(r);
  const IntMatrix rv = r * s.right;
  IntMatrix out(r.rows(), s.rank);
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < s.rank; ++j) out(i, j) = rv(i, j);
  return out;
}

// Columns spanning the kernel of g.
IntMatrix kernel(const IntMatrix& g) {
  const auto s = smith_normal_form(g);
  IntMatrix out(g.cols(), g.cols() - s.rank);
  for (std::size_t i = 0; i < g.cols(); ++i)
    for (std::size_t j = s.rank; j < g.cols(); ++j) out(i, j - s.rank) = s.right(i, j);
  return out;
}

// span(s) / span(t) for column sets with span(t) inside span(s). With
// U s V = D, span(s) has basis d_i U^-1 e_i and a vector q in it has
// coordinates (U q)_i / d_i.
CanonicalModule subquotient(const IntMatrix& s, const IntMatrix& t) {
  const auto snf = smith_normal_form(s);
  const IntMatrix ut = snf.left * t;
  IntMatrix coords(snf.rank, t.cols());
  for (std::size_t i = 0; i < snf.rank; ++i)
    for (std::size_t j = 0; j < t.cols(); ++j)
      mpz_divexact(coords(i, j).get_mpz_t(), ut(i, j).get_mpz_t(),
                   snf.diagonal(i, i).get_mpz_t());
  return fp_structure({snf.rank, coords});
}

Presentation cyclic_presentation(const Integer& order) {
  IntMatrix r(1, 1);
  r(0, 0) = order;
  return {1, r};
}

}  // namespace

Presentation presentation_of(const CanonicalModule& m) {
  if (!m.only_kinds({BlockKind::Z, BlockKind::C}))
    throw Error(ErrorCode::NotNoetherian, to_string(m) + " has no finite presentation");
  std::vector<Integer> diag(m.free_rank(), Integer(0));
  for (const auto& [p, part] : m.locals())
    for (Exponent e : part.finite) diag.push_back(pow(p, e));
  return {diag.size(), IntMatrix::diagonal(diag, diag.size(), diag.size())};
}

CanonicalModule fp_structure(const Presentation& p) {
  CanonicalModule m;
  if (p.relations.cols() == 0) {
    m.add_free(p.generators);
    return m;
  }
  const auto s = smith_normal_form(p.relations);
  m.add_free(p.generators - s.rank);
  for (std::size_t i = 0; i < s.rank; ++i) {
    const Integer& d = s.diagonal(i, i);
    if (d == 1) continue;
    for (const auto& pp : factorize(d)) m.add(Block::cyclic(pp.prime, pp.exponent));
  }
  return m;
}

// Elements of A^n are stored block by block: coordinate i * gens + k is
// generator k of the i-th copy.

CanonicalModule fp_hom(const Presentation& a, const Presentation& b) {
  const std::size_t n = a.generators, nb = b.generators;
  const IntMatrix r = injective_relations(a.relations);
  const std::size_t rk = r.cols();
  // Hom(A, B) = ker(B^n -> B^r), phi |-> phi o r.
  const IntMatrix map = kron(r.transpose(), IntMatrix::identity(nb));
  const IntMatrix target = kron(IntMatrix::identity(rk), b.relations);
  const IntMatrix lifts = first_rows(kernel(hcat(map, negated(target))), n * nb);
  return subquotient(lifts, kron(IntMatrix::identity(n), b.relations));
}

CanonicalModule fp_ext1(const Presentation& a, const Presentation& b) {
  const std::size_t nb = b.generators;
  const IntMatrix r = injective_relations(a.relations);
  const std::size_t rk = r.cols();
  const IntMatrix map = kron(r.transpose(), IntMatrix::identity(nb));
  return fp_structure({rk * nb, hcat(map, kron(IntMatrix::identity(rk), b.relations))});
}

CanonicalModule fp_tensor(const Presentation& a, const Presentation& b) {
  const std::size_t n = a.generators, nb = b.generators;
  return fp_structure({n * nb, hcat(kron(a.relations, IntMatrix::identity(nb)),
                                    kron(IntMatrix::identity(n), b.relations))});
}

CanonicalModule fp_tor1(const Presentation& a, const Presentation& b) {
  const std::size_t n = a.generators, nb = b.generators;
  const IntMatrix r = injective_relations(a.relations);
  const std::size_t rk = r.cols();
  // Tor1(A, B) = ker(B^r -> B^n) induced by r.
  const IntMatrix map = kron(r, IntMatrix::identity(nb));
  const IntMatrix target = kron(IntMatrix::identity(n), b.relations);
  const IntMatrix lifts = first_rows(kernel(hcat(map, negated(target))), rk * nb);
  return subquotient(lifts, kron(IntMatrix::identity(rk), b.relations));
}

namespace {

Exponent exponent_at(const Integer& p, const Presentation& b) {
  const auto s = fp_structure(b);
  const LocalPart* part = s.local(p);
  return part ? part->max_exponent() : 0;
}

[[noreturn]] void stages_differ(const StageCertificate& c) {
  throw Error(ErrorCode::StabilizationFailed,
              "stages " + std::to_string(c.k) + " and " + std::to_string(c.k + 1) +
                  " differ: " + to_string(c.first) + " vs " + to_string(c.second));
}

}  // namespace

StageCertificate pruefer_colimit(PrueferFunctor f, const Integer& p, const Presentation& b) {
  StageCertificate c;
  c.k = exponent_at(p, b) + 1;
  auto stage = [&](Exponent k) {
    const auto zk = cyclic_presentation(pow(p, k));
    return f == PrueferFunctor::Tor1 ? fp_tor1(zk, b) : fp_tensor(zk, b);
  };
  c.first = stage(c.k);
  c.second = stage(c.k + 1);
  if (c.first != c.second) stages_differ(c);
  if (f == PrueferFunctor::Tor1) {
    // The transitions are the inclusions B[p^k] -> B[p^(k+1)]: injective
    // between isomorphic finite groups, hence onto.
    c.value = c.first;
    return c;
  }
  // Tensor transitions are b |-> p b on B / p^k B. The colimit is the image of
  // a long enough composite, here p^k : B / p^k B -> B / p^(2k) B.
  const std::size_t nb = b.generators;
  const Integer top = pow(p, 2 * c.k);
  IntMatrix scaled_top = IntMatrix::identity(nb);
  for (std::size_t i = 0; i < nb; ++i) scaled_top(i, i) = top;
  const IntMatrix rels = hcat(b.relations, scaled_top);
  IntMatrix moved = IntMatrix::identity(nb);
  for (std::size_t i = 0; i < nb; ++i) moved(i, i) = pow(p, c.k);
  c.value = subquotient(hcat(moved, rels), rels);
  return c;
}

StageCertificate pruefer_limit_ext(const Integer& p, const Presentation& b) {
  StageCertificate c;
  c.k = exponent_at(p, b) + 1;
  c.first = fp_ext1(cyclic_presentation(pow(p, c.k)), b);
  c.second = fp_ext1(cyclic_presentation(pow(p, c.k + 1)), b);
  if (c.first == c.second) {
    // Surjective transitions between isomorphic finite groups are bijective.
    c.value = c.first;
    return c;
  }
  // A free summand contributes Z/p^k at stage k; torsion at p is already
  // stable. Recognize exactly that shape and name the limit.
  const LocalPart* grown = c.second.local(p);
  if (!grown) stages_differ(c);
  const auto r = static_cast<Count>(std::count(grown->finite.begin(), grown->finite.end(), c.k + 1));
  if (r == 0) stages_differ(c);
  LocalPart rest = *grown;
  rest.finite.erase(std::remove(rest.finite.begin(), rest.finite.end(), c.k + 1),
                    rest.finite.end());
  CanonicalModule expected_first, limit;
  expected_first.add_local(p, rest);
  expected_first.add(Block::cyclic(p, c.k), r);
  if (expected_first != c.first) stages_differ(c);
  limit.add_local(p, rest);
  limit.add(Block::adic(p), r);
  c.value = limit;
  c.regime = StageRegime::AdicLimit;
  return c;
}

Presentation scramble(const Presentation& p, std::uint64_t seed) {
  Rng rng(seed);
  auto unimodular = [&](std::size_t n) {
    IntMatrix u = IntMatrix::identity(n);
    if (n == 0) return u;
    for (std::size_t step = 0; step < 3 * n; ++step) {
      const std::size_t i = rng.below(n), j = rng.below(n);
      switch (rng.below(4)) {
        case 0:
          u.swap_rows(i, j);
          break;
        case 1:
          u.negate_row(i);
          break;
        default:
          if (i != j) {
            const long f = static_cast<long>(rng.below(5)) - 2;
            u.add_row_multiple(i, j, f == 0 ? 1 : f);
          }
      }
    }
    return u;
  };
  const IntMatrix left = unimodular(p.generators);
  const IntMatrix right = unimodular(p.relations.cols());
  return {p.generators, left * p.relations * right};
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::vector<Integer> primes_up_to(std::uint64_t bound) {
  std::vector<Integer> out;
  for (std::uint64_t n = 2; n <= bound; ++n) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= n && prime; ++d) prime = n % d != 0;
    if (prime) out.emplace_back(static_cast<unsigned long>(n));
  }
  return out;
}

Instance random_instance(std::uint64_t seed, const InstanceConfig& cfg) {
  const auto primes = primes_up_to(cfg.max_prime);
  if (primes.empty() || cfg.max_exp == 0 || cfg.allow_kinds.empty())
    throw Error(ErrorCode::Unsupported, "instance bounds must be positive");
  Rng rng(seed);
  const std::size_t count =
      cfg.allow_empty ? rng.below(cfg.max_blocks + 1) : 1 + rng.below(cfg.max_blocks);
  Instance inst;
  for (std::size_t i = 0; i < count; ++i) {
    const BlockKind kind = cfg.allow_kinds[rng.below(cfg.allow_kinds.size())];
    const Integer& p = primes[rng.below(primes.size())];
    const Exponent e = 1 + rng.below(cfg.max_exp);
    switch (kind) {
      case BlockKind::Z:
        inst.module.add(Block::free());
        break;
      case BlockKind::C:
        inst.module.add(Block::cyclic(p, e));
        break;
      case BlockKind::Pr:
        inst.module.add(Block::pruefer(p));
        break;
      case BlockKind::Zp:
        inst.module.add(Block::adic(p));
        break;
    }
  }
  if (inst.module.only_kinds({BlockKind::Z, BlockKind::C}))
    inst.presentation = scramble(presentation_of(inst.module), rng.next());
  return inst;
}

}  // namespace mmx
