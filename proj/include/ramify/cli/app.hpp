#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ramify {

enum ExitCode : int { kExitOk = 0, kExitInternal = 1, kExitPrecondition = 2, kExitPrecision = 3, kExitParse = 4 };

struct RunConfig {
  std::string command;
  std::uint64_t p = 2;
  unsigned n = 1;
  std::optional<std::uint64_t> k;
  std::optional<std::string> y;        // integer
  std::optional<std::string> ydigits;  // "d0,d1,...;tail"
  std::optional<std::string> coeffs;   // local polynomial "c0;c1;..."
  std::optional<std::string> z;        // element of K for expc and sq
  std::string modulus;
  std::uint64_t beta = 1;
  std::uint64_t j = 0;
  std::string perm;
  std::string mode = "inverse";
  std::int64_t prec = 64;
  unsigned deg = 8;
  unsigned depth = 3;
  std::string format = "json";
  std::string out;
  std::uint64_t budget = std::uint64_t{1} << 24;
};

const std::vector<std::string>& subcommands();

/// Runs one subcommand. The artifact goes to config.out when set, else to
/// `out`; diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and runs.
/// RAMIFY_BUDGET overrides the default budget when --budget is absent.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ramify
