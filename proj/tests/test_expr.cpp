#include <doctest.h>

#include "mmx/error.hpp"
#include "mmx/expr.hpp"

using namespace mmx;

namespace {

CanonicalModule C(long p, Exponent e) { return CanonicalModule::cyclic(p, e); }
CanonicalModule Pr(long p) { return CanonicalModule::pruefer(p); }
CanonicalModule operator+(const CanonicalModule& a, const CanonicalModule& b) { return direct_sum(a, b); }

std::size_t parse_error_position(std::string_view text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  return 0;
}

ErrorCode error_of(std::string_view text) {
  try {
    parse(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("parsed: " << text);
  return ErrorCode::Unsupported;
}

}  // namespace

TEST_CASE("command grammar") {
  const auto c = parse("ext 1 Pr(2)+Z/4 Z/8");
  CHECK(c.op == "ext");
  CHECK(c.params == std::vector<Integer>{1});
  REQUIRE(c.operands.size() == 2);
  CHECK(c.operands[0] == Pr(2) + C(2, 2));
  CHECK(c.operands[1] == C(2, 3));

  const auto t = parse("tensor Z/12 Z/18");
  CHECK(t.operands[0] == C(2, 2) + C(3, 1));
  CHECK(t.operands[1] == C(2, 1) + C(3, 2));

  CHECK(parse("  hom   Z/4+ Z ^2  (Z/2 + Pr(3))^3 ").operands[1].block_count() == 6);
  const auto r = parse("dual --ring=p:2 Zp(2)");
  CHECK(r.ctx == RingContext::padic(2));
  CHECK(parse("ext --path=completion 1 Pr(2) Z").path == Path::Completion);
}

TEST_CASE("parse errors carry positions") {
  CHECK(parse_error_position("hom Pr(2") == 9);
  CHECK(parse_error_position("") == 1);
  CHECK(parse_error_position("frobnicate Z") == 1);
  CHECK(parse_error_position("hom Z") == 6);
  CHECK(parse_error_position("hom Z Z Z") == 9);
  CHECK(parse_error_position("dual Z/0") == 8);
  CHECK(error_of("dual Pr(4)") == ErrorCode::NotPrime);
  CHECK(error_of("dual Zp(1)") == ErrorCode::NotPrime);
  CHECK(error_of("dual --ring=p:6 Z/2") == ErrorCode::NotPrime);
  CHECK(error_of("dual Z^100000") == ErrorCode::Unsupported);
}

TEST_CASE("printing round-trips") {
  for (const char* text :
       {"ext 1 Pr(2)+Z/4 Z/8", "tensor Z/12 Z/18", "gamma 2 3 Z+Z/6+Pr(5)", "bass 1 2 Z^2+Zp(2)",
        "theta --ring=p:3 0 Zp(3) Pr(3)", "ext --path=dual_swap 1 Pr(2) Z/8"}) {
    const auto c = parse(text);
    const auto again = parse(to_string(c));
    CHECK(again.op == c.op);
    CHECK(again.ctx == c.ctx);
    CHECK(again.path == c.path);
    CHECK(again.params == c.params);
    CHECK(again.operands == c.operands);
  }
  for (const auto& m : {C(2, 2) + Pr(3), CanonicalModule::zero(), CanonicalModule::free(3) + C(5, 1) + C(5, 1),
                        CanonicalModule::adic(7) + Pr(7)})
    CHECK(parse_module(to_string(m)) == m);
}

TEST_CASE("evaluation documents") {
  const auto h = eval_text("hom Pr(2) Pr(2)");
  CHECK(h["ok"] == true);
  CHECK(h["result"]["locals"]["2"]["adic"] == 1);
  CHECK(h["ring"] == Json{{"product", {2}}});

  const auto d = eval_text("dual Z");
  CHECK(d["ok"] == false);
  CHECK(d["error"] == "NotRepresentable");

  CHECK(eval_text("len (Pr(2)+Z/1)")["result"] == "infinite");
  CHECK(eval_text("len Z/8+Z/3")["result"] == 4);
  const auto p = eval_text("hom Pr(2");
  CHECK(p["error"] == "ParseError");
  CHECK(p["position"] == 9);
  CHECK(eval_text("bass 0 0 Z^2")["result"] == 2);
  CHECK(eval_text("ann Z/8+Z/3")["result"] == 24);
  CHECK(eval_text("classify --ring=p:2 Z")["error"] == "InvalidRing");
  CHECK(dump(eval_text("tensor Pr(2) Pr(2)")) ==
        R"({"ok":true,"result":{"free":0,"locals":{}},"ring":"Z","path":"direct"})");
}

TEST_CASE("arbitrary bytes never escape as exceptions") {
  const std::string weird[] = {std::string("\0\xff\xfe", 3), "((((((((((", "Z/99999999999999999999999999",
                               "ext 18446744073709551616 Z Z", "hom Z/2^", "gamma Z", "\xc3\x28"};
  for (const auto& w : weird) {
    const auto j = eval_text(w);
    CHECK(j.contains("ok"));
    CHECK_NOTHROW(dump(j));
  }
}
