#ifndef BSIMPLEX_TOOLS_CLI_HPP_
#define BSIMPLEX_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace bsimplex::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

// Environment variable that relocates relative --out paths.
inline constexpr const char* kOutDirEnv = "BSIMPLEX_OUT_DIR";

// args excludes the program name. CSV goes to `out` unless --out is given;
// diagnostics and summaries go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bsimplex::cli

#endif  // BSIMPLEX_TOOLS_CLI_HPP_
