#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "weightvar/groebner.hpp"
#include "weightvar/kirwan.hpp"

namespace weightvar {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitValidation = 2,
  kExitBudget = 3,
  kExitInternal = 4,
};

struct RunConfig {
  enum class Mode { Flag, Grassmannian, Schubert, Restrict, Expand };

  Mode mode = Mode::Flag;
  ReductionInput input;  // flag and grassmannian modes

  // schubert / restrict / expand
  int n = 0;
  std::string w, tau, class_text;
  bool all_tau = false, all_w = false;

  MonomialOrder order = MonomialOrder::Grevlex;
  bool prune_kernel = false;
  bool chern = false;
  bool emit_certificates = false;
  bool skip_regularity = false;
  std::optional<std::string> json_path;
  std::size_t budget = 0;  // 0: WEIGHTVAR_BUDGET or the built-in default
};

/// Either a config, or an exit code with the text to print (help or a usage
/// error naming the offending flag).
struct ParseResult {
  std::optional<RunConfig> config;
  int exit_code = kExitOk;
  std::string message;
};

ParseResult parse_args(int argc, const char* const* argv);

/// Runs the configured computation, writing the report to `out` and
/// diagnostics to `err`. Returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args followed by run.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace weightvar
