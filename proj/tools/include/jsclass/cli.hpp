#pragma once

/// @file cli.hpp
/// @brief Command layer behind the `jsclass` executable, kept in a library so
/// tests can drive it without spawning processes.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>

#include "jsclass/diagnostics.hpp"
#include "jsclass/loader.hpp"
#include "jsclass/reports.hpp"

namespace jsclass::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kAnalysisError = 2,
  kIoError = 3,
};

enum class Artifact { Model, Uml, Distmap, Metrics };

std::string_view artifact_name(Artifact a) noexcept;
std::optional<Artifact> artifact_from_name(std::string_view s) noexcept;

/// File name written under the output directory, e.g. "classes.dot".
std::string_view artifact_file(Artifact a) noexcept;

struct RunConfig {
  std::filesystem::path root;
  InputMode input_mode = InputMode::Auto;
  std::filesystem::path output_dir = "jsclass-out";
  std::set<Artifact> emit = {Artifact::Model, Artifact::Uml, Artifact::Distmap, Artifact::Metrics};
  DistMapSpec distmap;
  /// Exit with kAnalysisError when any error diagnostic was recorded.
  bool fail_on_error_diagnostics = false;
  std::optional<std::string> name;
  bool default_excludes = true;
  std::uintmax_t max_file_bytes = 5u * 1024u * 1024u;
  unsigned threads = 0;
};

struct ReportConfig {
  std::filesystem::path model_path;
  Artifact artifact = Artifact::Metrics;
  DistMapSpec distmap;
  TableFormat format = TableFormat::Csv;
  /// Empty writes to the output stream.
  std::filesystem::path output;
};

/// Threshold for diagnostics echoed to stderr, from JSCLASS_LOG
/// (error, warn, info, debug). Defaults to error.
Severity log_threshold();

/// Writes `content` to a sibling temp file and renames it over `path`.
/// Throws Error(io_error).
void write_atomic(const std::filesystem::path& path, const std::string& content);

int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_report(const ReportConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11 and dispatches.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jsclass::cli
