#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace evenh {

// Exit codes: cap exceedance is reported distinctly from mathematical
// failure so scripts can tell "raise the cap" from "the input is wrong".
inline constexpr int kExitOk = 0;
inline constexpr int kExitMath = 1;   // contract violation, failed check
inline constexpr int kExitUsage = 2;  // parse/validation/usage error
inline constexpr int kExitLimit = 3;  // resource cap exceeded

struct RunConfig {
  std::string subcommand;
  std::string input;          // path, inline text (contains ';' or '='), or
                              // "-" for stdin
  std::string format = "text";  // "text" | "json-lines"
  std::uint64_t seed = 20240801;
  int max_cosets = 100000;
  std::optional<int> max_order;  // unset: construction cap 64, bar cap 16
  int max_k = 12;
  std::string group = "artin";  // "artin" | "coxeter"
  std::string file;             // relator-product file for `class`
  std::string construct;        // oracle-h2 group spec
  std::string dump_table;       // optional table fixture output path
};

// Dispatches a subcommand; returns an exit code and writes records to out
// (one JSON object per line when format is json-lines) and diagnostics to
// err.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace evenh
