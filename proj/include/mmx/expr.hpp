#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mmx/homology.hpp"
#include "mmx/json_io.hpp"
#include "mmx/module.hpp"

namespace mmx {

struct ModuleExpr {
  enum class Kind { Free, Cyclic, Pruefer, Adic, Sum, Power };
  Kind kind = Kind::Free;
  Integer value;       // n for Z/n, p for Pr/Zp, k for ^k
  std::size_t position = 0;  // 1-based start in the source text
  std::vector<ModuleExpr> children;
};

struct Command {
  std::string op;
  RingContext ctx;
  std::optional<Path> path;
  std::vector<Integer> params;
  std::vector<ModuleExpr> exprs;
  std::vector<CanonicalModule> operands;  // exprs evaluated and normalized
};

/// Inputs that would expand past this many blocks are refused (Unsupported).
inline constexpr std::size_t kMaxBlocks = 512;

Command parse(std::string_view text);
CanonicalModule parse_module(std::string_view text);
CanonicalModule evaluate(const ModuleExpr& e);

std::string to_string(const Command& c);

/// Runs a parsed command. Library errors come back in-band as
/// {"ok": false, "error": <name>, "detail": ...}.
Json eval(const Command& c);
/// parse + eval; never throws.
Json eval_text(std::string_view text);

}  // namespace mmx
