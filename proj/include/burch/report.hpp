#pragma once

#include <string>

#include "burch/jobspec.hpp"

namespace burch {

constexpr int kSchemaVersion = 1;

enum ExitCode { kExitOk = 0, kExitBoundViolation = 1, kExitInput = 2, kExitResource = 3, kExitInternal = 4 };

struct RunResult {
  Json report;
  int exitCode = kExitOk;
};

/// Runs job.command. Errors become report fields: input errors give exit 2,
/// cap exhaustion a partial report with exit 3.
RunResult runJob(const JobSpec& job);

/// Runs every entry of a corpus index (a JSON file listing jobs and their
/// expected exit codes) and compares each report, without its timing field,
/// against the golden file next to the job. With writeGolden the golden
/// files are (re)written instead.
RunResult runCorpus(const std::string& indexPath, int threads, bool writeGolden = false);

/// Report without the timing field, for comparisons.
Json withoutTiming(Json report);

/// Plain-text tables for a terminal.
std::string renderText(const Json& report);

}  // namespace burch
