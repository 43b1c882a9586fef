#include "mmx/expr.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "mmx/duality.hpp"
#include "mmx/error.hpp"
#include "mmx/structure.hpp"

namespace mmx {

namespace {

constexpr std::size_t kMaxDepth = 64;
constexpr std::size_t kMaxDigits = 80;
constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

struct OpSpec {
  std::string_view name;
  std::size_t min_params, max_params;
  std::size_t modules;
};

constexpr std::array<OpSpec, 21> kOps = {{
    {"hom", 0, 0, 2},      {"tensor", 0, 0, 2},   {"ext", 1, 1, 2},
    {"tor", 1, 1, 2},      {"dual", 0, 0, 1},     {"gamma", 1, kUnbounded, 1},
    {"localize", 1, kUnbounded, 1}, {"complete", 1, kUnbounded, 1},
    {"supp", 0, 0, 1},     {"ass", 0, 0, 1},      {"att", 0, 0, 1},
    {"len", 0, 0, 1},      {"ann", 0, 0, 1},      {"classify", 0, 0, 1},
    {"reflexive", 0, 0, 1}, {"bass", 2, 2, 1},    {"betti", 2, 2, 1},
    {"theta", 1, 1, 2},    {"bound", 0, 0, 2},    {"vanish", 0, 0, 2},
    {"homc", 0, 0, 2},
}};

const OpSpec* find_op(std::string_view name) {
  for (const auto& op : kOps)
    if (op.name == name) return &op;
  return nullptr;
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

Integer checked_prime(const Integer& p, std::size_t position) {
  if (!is_prime(p))
    throw Error(ErrorCode::NotPrime,
                p.get_str() + " at position " + std::to_string(position) + " is not prime");
  return p;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Command command() {
    Command c;
    skip_ws();
    const std::size_t start = pos();
    while (i_ < s_.size() && s_[i_] >= 'a' && s_[i_] <= 'z') ++i_;
    if (pos() == start) fail("expected an operation name", start);
    c.op = std::string(s_.substr(start - 1, pos() - start));
    const OpSpec* spec = find_op(c.op);
    if (!spec) fail("unknown operation '" + c.op + "'", start);

    for (skip_ws(); s_.substr(i_, 2) == "--"; skip_ws()) flag(c);

    for (skip_ws(); i_ < s_.size() && is_digit(s_[i_]); skip_ws()) {
      if (c.params.size() == spec->max_params) fail("unexpected parameter", pos());
      c.params.push_back(nat());
    }
    if (c.params.size() < spec->min_params)
      fail(c.op + " expects " + std::to_string(spec->min_params) + " parameter(s)", pos());

    while (!at_end()) {
      if (c.exprs.size() == spec->modules) fail("unexpected input", pos());
      c.exprs.push_back(module());
    }
    if (c.exprs.size() < spec->modules)
      fail(c.op + " expects " + std::to_string(spec->modules) + " module(s)", pos());
    for (const auto& e : c.exprs) c.operands.push_back(evaluate(e));
    return c;
  }

  ModuleExpr whole_module() {
    ModuleExpr m = module();
    if (!at_end()) fail("unexpected input", pos());
    return m;
  }

 private:
  std::size_t pos() const { return i_ + 1; }
  char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
  void skip_ws() {
    while (i_ < s_.size() && is_space(s_[i_])) ++i_;
  }
  bool at_end() {
    skip_ws();
    return i_ >= s_.size();
  }

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw ParseError(at, msg + " at position " + std::to_string(at));
  }

  void expect(char c) {
    skip_ws();
    if (i_ >= s_.size() || s_[i_] != c) fail(std::string("expected '") + c + "'", pos());
    ++i_;
  }

  Integer nat() {
    skip_ws();
    const std::size_t start = i_;
    while (i_ < s_.size() && is_digit(s_[i_])) ++i_;
    if (i_ == start) fail("expected a number", start + 1);
    if (i_ - start > kMaxDigits)
      throw Error(ErrorCode::Unsupported, "numeral at position " + std::to_string(start + 1) +
                                              " is too long");
    return Integer(std::string(s_.substr(start, i_ - start)));
  }

  Integer positive() {
    skip_ws();
    const std::size_t start = pos();
    Integer n = nat();
    if (n == 0) fail("numerals in module expressions must be positive", start);
    return n;
  }

  Integer prime_arg() {
    skip_ws();
    const std::size_t start = pos();
    return checked_prime(positive(), start);
  }

  void flag(Command& c) {
    const std::size_t start = pos();
    std::size_t end = i_;
    while (end < s_.size() && !is_space(s_[end])) ++end;
    const std::string_view word = s_.substr(i_, end - i_);
    i_ = end;
    if (word == "--ring=Z") {
      c.ctx = RingContext::integers();
    } else if (word.substr(0, 9) == "--ring=p:") {
      const std::string_view digits = word.substr(9);
      if (digits.empty() || digits.size() > kMaxDigits ||
          !std::all_of(digits.begin(), digits.end(), is_digit))
        fail("expected a prime after --ring=p:", start + 9);
      c.ctx = RingContext::padic(checked_prime(Integer(std::string(digits)), start + 9));
    } else if (word.substr(0, 7) == "--path=") {
      c.path = path_from_name(word.substr(7));
      if (!c.path) fail("unknown path '" + std::string(word.substr(7)) + "'", start + 7);
    } else {
      fail("unknown flag '" + std::string(word) + "'", start);
    }
  }

  ModuleExpr module() {
    ModuleExpr first = term();
    skip_ws();
    if (peek() != '+') return first;
    ModuleExpr sum;
    sum.kind = ModuleExpr::Kind::Sum;
    sum.position = first.position;
    sum.children.push_back(std::move(first));
    while (skip_ws(), peek() == '+') {
      ++i_;
      sum.children.push_back(term());
    }
    return sum;
  }

  ModuleExpr term() {
    ModuleExpr a = atom();
    skip_ws();
    if (peek() != '^') return a;
    ++i_;
    ModuleExpr power;
    power.kind = ModuleExpr::Kind::Power;
    power.position = a.position;
    power.value = positive();
    if (power.value > kMaxBlocks)
      throw Error(ErrorCode::Unsupported, "repetition beyond " + std::to_string(kMaxBlocks) +
                                              " blocks");
    power.children.push_back(std::move(a));
    return power;
  }

  ModuleExpr atom() {
    skip_ws();
    ModuleExpr e;
    e.position = pos();
    const char c = peek();
    if (c == '(') {
      if (++depth_ > kMaxDepth) throw Error(ErrorCode::Unsupported, "nesting too deep");
      ++i_;
      ModuleExpr inner = module();
      expect(')');
      --depth_;
      return inner;
    }
    if (c == 'Z') {
      ++i_;
      if (peek() == 'p') {
        ++i_;
        expect('(');
        e.kind = ModuleExpr::Kind::Adic;
        e.value = prime_arg();
        expect(')');
        return e;
      }
      skip_ws();
      if (peek() == '/') {
        ++i_;
        e.kind = ModuleExpr::Kind::Cyclic;
        e.value = positive();
        return e;
      }
      e.kind = ModuleExpr::Kind::Free;
      return e;
    }
    if (c == 'P') {
      ++i_;
      if (peek() != 'r') fail("expected 'Pr('", pos());
      ++i_;
      expect('(');
      e.kind = ModuleExpr::Kind::Pruefer;
      e.value = prime_arg();
      expect(')');
      return e;
    }
    fail("expected a module", e.position);
  }

  std::string_view s_;
  std::size_t i_ = 0;
  std::size_t depth_ = 0;
};

void check_size(const CanonicalModule& m) {
  if (m.block_count() > kMaxBlocks)
    throw Error(ErrorCode::Unsupported, "module exceeds " + std::to_string(kMaxBlocks) + " blocks");
}

std::string expr_string(const ModuleExpr& e) {
  switch (e.kind) {
    case ModuleExpr::Kind::Free:
      return "Z";
    case ModuleExpr::Kind::Cyclic:
      return "Z/" + e.value.get_str();
    case ModuleExpr::Kind::Pruefer:
      return "Pr(" + e.value.get_str() + ")";
    case ModuleExpr::Kind::Adic:
      return "Zp(" + e.value.get_str() + ")";
    case ModuleExpr::Kind::Power:
      return "(" + expr_string(e.children.front()) + ")^" + e.value.get_str();
    case ModuleExpr::Kind::Sum: {
      std::string s;
      for (const auto& c : e.children) s += (s.empty() ? "" : " + ") + expr_string(c);
      return s;
    }
  }
  return {};
}

}  // namespace

CanonicalModule evaluate(const ModuleExpr& e) {
  CanonicalModule m;
  switch (e.kind) {
    case ModuleExpr::Kind::Free:
      return CanonicalModule::free(1);
    case ModuleExpr::Kind::Cyclic:
      return CanonicalModule::cyclic_of_order(e.value);
    case ModuleExpr::Kind::Pruefer:
      return CanonicalModule::pruefer(e.value);
    case ModuleExpr::Kind::Adic:
      return CanonicalModule::adic(e.value);
    case ModuleExpr::Kind::Sum:
      for (const auto& c : e.children) {
        m = direct_sum(m, evaluate(c));
        check_size(m);
      }
      return m;
    case ModuleExpr::Kind::Power: {
      const CanonicalModule base = evaluate(e.children.front());
      const Count k = e.value.get_ui();
      if (base.block_count() * k > kMaxBlocks)
        throw Error(ErrorCode::Unsupported,
                    "module exceeds " + std::to_string(kMaxBlocks) + " blocks");
      return base.scaled(k);
    }
  }
  return m;
}

Command parse(std::string_view text) { return Parser(text).command(); }

CanonicalModule parse_module(std::string_view text) {
  return evaluate(Parser(text).whole_module());
}

std::string to_string(const Command& c) {
  std::string s = c.op;
  if (c.ctx.is_padic()) s += " --ring=p:" + c.ctx.prime.get_str();
  if (c.path) s += " --path=" + std::string(path_name(*c.path));
  for (const auto& p : c.params) s += " " + p.get_str();
  for (const auto& e : c.exprs) s += " (" + expr_string(e) + ")";
  return s;
}

namespace {

Json error_json(ErrorCode code, const std::string& detail) {
  return {{"ok", false}, {"error", std::string(error_name(code))}, {"detail", detail}};
}

Json ok(Json result) { return {{"ok", true}, {"result", std::move(result)}}; }

Json ok(const HomologyResult& r) {
  Json j = ok(to_json(r.module));
  j["ring"] = to_json(r.ring);
  j["path"] = std::string(path_name(r.path));
  if (!r.note.empty()) j["note"] = r.note;
  if (!r.exponents.empty()) {
    Json ex = Json::object();
    for (const auto& [p, a] : r.exponents) ex[p.get_str()] = a;
    j["exponents"] = std::move(ex);
  }
  return j;
}

std::uint64_t small(const Integer& v) {
  if (mpz_sizeinbase(v.get_mpz_t(), 2) > 63)
    throw Error(ErrorCode::Unsupported, v.get_str() + " is too large for a degree");
  return v.get_ui();
}

void require_integers(const Command& c) {
  if (c.ctx.is_padic())
    throw Error(ErrorCode::InvalidRing, c.op + " is defined over Z only");
}

PrimeSet prime_params(const Command& c) {
  PrimeSet s;
  for (const auto& p : c.params) s.insert(checked_prime(p, 0));
  return s;
}

HomologyResult run_functor(const Command& c, std::uint64_t i, bool cohomological) {
  const auto& a = c.operands[0];
  const auto& b = c.operands[1];
  const Path path = c.path.value_or(Path::Direct);
  if (path == Path::Direct)
    return cohomological ? ext(i, c.ctx, a, b) : tor(i, c.ctx, a, b);
  require_integers(c);
  if (cohomological) {
    switch (path) {
      case Path::Completion:
        return ext_via_completion(i, a, b);
      case Path::DualSwap:
        return ext_dual_swap(i, a, b);
      case Path::GeneralDual:
        return ext_via_general_dual(i, a, b);
      case Path::TheoremC:
        if (i == 0) return hom_theoremC(a, b);
        break;
      default:
        break;
    }
  } else if (path == Path::Truncated && i == 0) {
    return tensor_truncated(a, b);
  }
  throw Error(ErrorCode::Unsupported,
              "path " + std::string(path_name(path)) + " is not available for " + c.op);
}

Json dispatch(const Command& c) {
  const auto& ops = c.operands;
  const std::string& op = c.op;
  if (op == "hom") return ok(run_functor(c, 0, true));
  if (op == "tensor") return ok(run_functor(c, 0, false));
  if (op == "ext") return ok(run_functor(c, small(c.params[0]), true));
  if (op == "tor") return ok(run_functor(c, small(c.params[0]), false));
  if (op == "homc") {
    require_integers(c);
    return ok(hom_theoremC(ops[0], ops[1]));
  }
  if (op == "dual") {
    const auto d = dual(c.ctx, ops[0]);
    Json j = ok(to_json(d.module));
    j["ring"] = to_json(d.ring);
    return j;
  }
  if (op == "gamma") return ok(to_json(gamma(c.ctx, prime_params(c), ops[0])));
  if (op == "localize") {
    require_integers(c);
    return ok(to_json(localize(prime_params(c), ops[0])));
  }
  if (op == "complete") {
    require_integers(c);
    const auto s = prime_params(c);
    Json j = ok(to_json(complete(s, ops[0])));
    j["ring"] = to_json(RingMarker::product(s));
    return j;
  }
  if (op == "supp") return ok(to_json(support(c.ctx, ops[0])));
  if (op == "ass") return ok(to_json(ass(c.ctx, ops[0])));
  if (op == "att") return ok(to_json(att(c.ctx, ops[0])));
  if (op == "len") return ok(to_json(length(ops[0])));
  if (op == "ann") return ok(integer_json(annihilator(ops[0])));
  if (op == "classify") return ok(to_json(classify(c.ctx, ops[0])));
  if (op == "reflexive") {
    const auto r = check_biduality(c.ctx, ops[0]);
    return ok(Json{{"reflexive", r.reflexive},
                   {"bidual_isomorphic", r.bidual_isomorphic},
                   {"ring_changed", r.ring_changed}});
  }
  if (op == "bass" || op == "betti") {
    require_integers(c);
    const std::uint64_t i = small(c.params[0]);
    std::optional<Integer> p;
    if (c.params[1] != 0) p = c.params[1];
    return ok(op == "bass" ? bass(i, p, ops[0]) : betti(i, p, ops[0]));
  }
  if (op == "theta") {
    const auto r = theta_check(small(c.params[0]), c.ctx, ops[0], ops[1]);
    return ok(Json{{"holds", r.holds}, {"ext_dual", to_json(r.ext_dual)}, {"tor", to_json(r.tor)}});
  }
  if (op == "bound") {
    require_integers(c);
    const auto r = tensor_length_bound(ops[0], ops[1]);
    Json chain = Json::array();
    for (const auto& b : r.chain) chain.push_back(to_json(b));
    return ok(Json{{"lhs", to_json(r.lhs)},
                   {"chain", chain},
                   {"bound", to_json(r.chain.front())},
                   {"holds", r.holds}});
  }
  if (op == "vanish") {
    require_integers(c);
    const auto r = vanishing_tensor(ops[0], ops[1]);
    Json cert = Json::object();
    for (const auto& [p, w] : r.certificate) cert[p.get_str()] = w;
    return ok(Json{{"vanishes", r.vanishes}, {"certificate", cert}});
  }
  throw Error(ErrorCode::Unsupported, "no evaluator for " + op);
}

}  // namespace

Json eval(const Command& c) {
  try {
    return dispatch(c);
  } catch (const Error& e) {
    return error_json(e.code(), e.what());
  }
}

Json eval_text(std::string_view text) {
  try {
    return eval(parse(text));
  } catch (const ParseError& e) {
    Json j = error_json(e.code(), e.what());
    j["position"] = e.position();
    return j;
  } catch (const Error& e) {
    return error_json(e.code(), e.what());
  } catch (const std::exception& e) {
    return error_json(ErrorCode::Unsupported, e.what());
  }
}

}  // namespace mmx
