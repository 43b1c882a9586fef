#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mmx/error.hpp"
#include "mmx/expr.hpp"
#include "mmx/suites.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kViolation = 2;

// --seed wins, then MMX_SEED, then 0.
std::optional<std::uint64_t> resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return flag;
  const char* env = std::getenv("MMX_SEED");
  if (env == nullptr || *env == '\0') return 0;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(env, &used, 10);
    if (used != std::string(env).size()) return std::nullopt;
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

int run_eval(const std::string& text) {
  std::cout << mmx::dump(mmx::eval_text(text)) << '\n';
  // In-band library errors are results; only input that fails to parse is a usage error.
  try {
    mmx::parse(text);
  } catch (const std::exception&) {
    return kUsage;
  }
  return kOk;
}

int run_check(const std::string& suite, std::uint64_t cases, const std::optional<std::uint64_t>& seed_flag,
              const mmx::SuiteBounds& bounds, unsigned jobs) {
  const auto seed = resolve_seed(seed_flag);
  if (!seed) {
    std::cerr << "mmx: MMX_SEED is not a non-negative integer\n";
    return kUsage;
  }
  try {
    const auto report = mmx::run_suite(suite, cases, *seed, bounds, jobs);
    std::cout << mmx::dump(report.to_json()) << '\n';
    return report.ok() ? kOk : kViolation;
  } catch (const mmx::Error& e) {
    mmx::Json err = {{"ok", false}, {"error", std::string(mmx::error_name(e.code()))}, {"detail", e.what()}};
    std::cout << mmx::dump(err) << '\n';
    return e.code() == mmx::ErrorCode::UnknownSuite ? kUsage : kViolation;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact module computations over Z and the p-adic integers"};
  app.require_subcommand(1);

  std::string text;
  auto* eval = app.add_subcommand("eval", "Evaluate one command and print JSON");
  eval->add_option("command", text, "e.g. \"ext 1 Pr(2)+Z/4 Z/8\"")->required();

  std::string suite;
  std::uint64_t cases = 100;
  std::optional<std::uint64_t> seed;
  mmx::SuiteBounds bounds;
  unsigned jobs = 1;

  auto* check = app.add_subcommand("check", "Run a seeded property suite");
  check->add_option("--suite", suite, "Suite name")->required();
  auto* diff = app.add_subcommand("oracle-diff", "Engine against the presentation oracle");
  for (auto* sub : {check, diff}) {
    sub->add_option("--cases", cases, "Number of instances")->capture_default_str();
    sub->add_option("--seed", seed, "Seed (default: MMX_SEED, else 0)");
    sub->add_option("--max-prime", bounds.max_prime)->capture_default_str()->check(CLI::Range(2, 1000000));
    sub->add_option("--max-exp", bounds.max_exp)->capture_default_str()->check(CLI::Range(1, 64));
    sub->add_option("--max-blocks", bounds.max_blocks)->capture_default_str()->check(CLI::Range(1, 64));
    sub->add_option("--jobs", jobs, "Worker threads")->capture_default_str()->check(CLI::Range(1, 256));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (*eval) return run_eval(text);
  if (*check) return run_check(suite, cases, seed, bounds, jobs);
  return run_check("oracle_diff", cases, seed, bounds, jobs);
}
