#include "mmx/module.hpp"

#include <algorithm>
#include <sstream>

namespace mmx {

CanonicalModule CanonicalModule::free(Count rank) {
  CanonicalModule m;
  m.free_rank_ = rank;
  return m;
}

CanonicalModule CanonicalModule::cyclic(const Integer& p, Exponent e) {
  CanonicalModule m;
  m.add(Block::cyclic(p, e));
  return m;
}

CanonicalModule CanonicalModule::pruefer(const Integer& p) {
  CanonicalModule m;
  m.add(Block::pruefer(p));
  return m;
}

CanonicalModule CanonicalModule::adic(const Integer& p) {
  CanonicalModule m;
  m.add(Block::adic(p));
  return m;
}

CanonicalModule CanonicalModule::cyclic_of_order(const Integer& n) {
  if (n == 0) return free(1);
  CanonicalModule m;
  for (const auto& pp : factorize(n)) m.add(Block::cyclic(pp.prime, pp.exponent));
  return m;
}

const LocalPart* CanonicalModule::local(const Integer& p) const {
  auto it = locals_.find(p);
  return it == locals_.end() ? nullptr : &it->second;
}

bool CanonicalModule::has_adic() const {
  return std::any_of(locals_.begin(), locals_.end(),
                     [](const auto& kv) { return kv.second.adic > 0; });
}

bool CanonicalModule::has_divisible() const {
  return std::any_of(locals_.begin(), locals_.end(),
                     [](const auto& kv) { return kv.second.divisible > 0; });
}

bool CanonicalModule::only_kinds(std::initializer_list<BlockKind> kinds) const {
  auto allowed = [&](BlockKind k) { return std::find(kinds.begin(), kinds.end(), k) != kinds.end(); };
  if (free_rank_ > 0 && !allowed(BlockKind::Z)) return false;
  for (const auto& [p, part] : locals_) {
    if (!part.finite.empty() && !allowed(BlockKind::C)) return false;
    if (part.divisible > 0 && !allowed(BlockKind::Pr)) return false;
    if (part.adic > 0 && !allowed(BlockKind::Zp)) return false;
  }
  return true;
}

std::vector<Integer> CanonicalModule::primes() const {
  std::vector<Integer> out;
  out.reserve(locals_.size());
  for (const auto& kv : locals_) out.push_back(kv.first);
  return out;
}

void CanonicalModule::add(const Block& b, Count multiplicity) {
  if (multiplicity == 0) return;
  switch (b.kind) {
    case BlockKind::Z:
      free_rank_ += multiplicity;
      return;
    case BlockKind::C: {
      if (b.exponent == 0) return;
      auto& fin = locals_[b.prime].finite;
      auto pos = std::upper_bound(fin.begin(), fin.end(), b.exponent);
      fin.insert(pos, multiplicity, b.exponent);
      return;
    }
    case BlockKind::Pr:
      locals_[b.prime].divisible += multiplicity;
      return;
    case BlockKind::Zp:
      locals_[b.prime].adic += multiplicity;
      return;
  }
}

void CanonicalModule::add_local(const Integer& p, const LocalPart& part, Count multiplicity) {
  if (multiplicity == 0 || part.empty()) return;
  LocalPart& mine = locals_[p];
  std::vector<Exponent> merged;
  merged.reserve(mine.finite.size() + part.finite.size() * multiplicity);
  merged = mine.finite;
  for (Count k = 0; k < multiplicity; ++k)
    merged.insert(merged.end(), part.finite.begin(), part.finite.end());
  std::sort(merged.begin(), merged.end());
  mine.finite = std::move(merged);
  mine.divisible += part.divisible * multiplicity;
  mine.adic += part.adic * multiplicity;
}

std::vector<std::pair<Block, Count>> CanonicalModule::blocks() const {
  std::vector<std::pair<Block, Count>> out;
  if (free_rank_ > 0) out.emplace_back(Block::free(), free_rank_);
  for (const auto& [p, part] : locals_) {
    for (std::size_t i = 0; i < part.finite.size();) {
      std::size_t j = i;
      while (j < part.finite.size() && part.finite[j] == part.finite[i]) ++j;
      out.emplace_back(Block::cyclic(p, part.finite[i]), j - i);
      i = j;
    }
    if (part.divisible > 0) out.emplace_back(Block::pruefer(p), part.divisible);
    if (part.adic > 0) out.emplace_back(Block::adic(p), part.adic);
  }
  return out;
}

std::size_t CanonicalModule::block_count() const {
  std::size_t n = free_rank_;
  for (const auto& [p, part] : locals_) n += part.finite.size() + part.divisible + part.adic;
  return n;
}

CanonicalModule CanonicalModule::scaled(Count k) const {
  CanonicalModule out;
  if (k == 0) return out;
  out.free_rank_ = free_rank_ * k;
  for (const auto& [p, part] : locals_) out.add_local(p, part, k);
  return out;
}

CanonicalModule normalize(std::span<const Block> blocks) {
  CanonicalModule m;
  for (const auto& b : blocks) m.add(b);
  return m;
}

CanonicalModule direct_sum(const CanonicalModule& m, const CanonicalModule& n) {
  CanonicalModule out = m;
  out.add_free(n.free_rank());
  for (const auto& [p, part] : n.locals()) out.add_local(p, part);
  return out;
}

bool is_isomorphic(const CanonicalModule& m, const CanonicalModule& n) { return m == n; }

bool admit(const RingContext& ctx, const CanonicalModule& m) {
  if (!ctx.is_padic()) return true;
  if (m.free_rank() > 0) return false;
  return std::all_of(m.locals().begin(), m.locals().end(),
                     [&](const auto& kv) { return kv.first == ctx.prime; });
}

std::string to_string(const Block& b) {
  switch (b.kind) {
    case BlockKind::Z:
      return "Z";
    case BlockKind::C:
      return "Z/" + pow(b.prime, b.exponent).get_str();
    case BlockKind::Pr:
      return "Pr(" + b.prime.get_str() + ")";
    case BlockKind::Zp:
      return "Zp(" + b.prime.get_str() + ")";
  }
  return {};
}

std::string to_string(const CanonicalModule& m) {
  if (m.is_zero()) return "Z/1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, count] : m.blocks()) {
    if (!first) os << " + ";
    first = false;
    os << to_string(b);
    if (count > 1) os << '^' << count;
  }
  return os.str();
}

}  // namespace mmx
