#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace sysgraph::cli {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kPropertyFails = 1, kInvalidInput = 2 };

/// Worker count: the --threads value if given, else SYSGRAPH_THREADS, else 1.
unsigned resolve_threads(std::optional<unsigned> flag);

/// Entry point for `sysgraph <subcommand> ...`. Reports go to `out`,
/// diagnostics and timing to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sysgraph::cli
