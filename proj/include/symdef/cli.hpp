#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "symdef/cover_ideal.hpp"

namespace symdef::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kMismatch = 2,
  kResourceCap = 3,
  kInputError = 4,
};

struct Range {
  std::int64_t lo = 1;
  std::int64_t hi = 1;
};

/// Parses "5" or "2..8".
Range parse_range(const std::string& text);

enum class OutputFormat { Json, Tsv, Pretty };

struct RunConfig {
  std::string command;
  std::string theorem;  // verify only
  std::string graph_file;
  std::string family;
  std::optional<Range> m_range;
  std::optional<Range> n_range;
  std::string method = "brute";
  unsigned period = 2;
  ResourceCaps caps;
  OutputFormat format = OutputFormat::Json;
  std::uint64_t seed = 0x5eed;
  std::string exps;  // classify2: optional single cover as comma-separated exponents
  bool timing = false;
};

/// Runs one invocation; args excludes the program name. Reports go to out,
/// diagnostics to err. Returns an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symdef::cli
