#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace arcstab {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kLibraryVersion = "arcstab 1.0.0";

struct RunOptions {
  /// Override the document's step budget and seed.
  std::optional<std::uint64_t> budget;
  std::optional<std::uint64_t> seed;
  /// Adds wall-clock time to reports, which makes them non-reproducible.
  bool timing = false;
};

/// Runs one job document. Throws InputError, ParseError or BudgetExceeded.
Json run_job(const Json& doc, const RunOptions& opts = {});

struct JobOutcome {
  int exit_code = 0;
  Json report;
};

/// Like run_job, but maps failures to exit codes 2 (input) and 3 (budget)
/// with an error report.
JobOutcome run_job_checked(const Json& doc, const RunOptions& opts = {});
/// Parses the text first; malformed JSON is an input error.
JobOutcome run_job_text(const std::string& text, const RunOptions& opts = {});

struct CorpusEntry {
  std::string file;
  std::string id;
  std::string criterion;
  bool pass = false;
  std::string detail;
};

struct CorpusSummary {
  std::vector<CorpusEntry> entries;
  std::map<std::string, bool> criteria;
  /// 0 when every criterion passes, 1 otherwise, 2 for an unusable corpus.
  int exit_code = 0;
};

/// Runs every *.json file of the directory in name order. Each file holds
/// {"id", "criterion", "job", "expect"}, where "expect" maps JSON pointers
/// into the report to the expected values.
CorpusSummary run_corpus(const std::filesystem::path& dir, const RunOptions& opts = {});
std::string format_summary(const CorpusSummary& summary);

}  // namespace arcstab
