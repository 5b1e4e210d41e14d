#pragma once

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

#include "linmatch/report.hpp"

namespace linmatch::cli {

/// Run one subcommand end to end: parse, execute, write the report in the
/// requested format. Returns the process exit code: 0 when a verdict was
/// produced (including negative verdicts), 2 for bad arguments, 3 when a
/// bound was exceeded, 4 for internal invariant violations.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Execute a parsed command and return its report without writing it.
/// Throws Error on failure; test hook and building block of run().
Report run_report(const std::vector<std::string>& args);

/// Re-check every verdict and witness embedded in a serialized report by
/// rebuilding the objects through the library. False on any mismatch.
bool reverify_report(const nlohmann::json& report);

}  // namespace linmatch::cli
