#pragma once

/// @file loader.hpp
/// @brief Builds a Program from a directory of `.js` sources and/or ESTree
/// JSON documents.

#include <cstdint>
#include <filesystem>

#include "jsclass/ast.hpp"
#include "jsclass/estree.hpp"
#include "jsclass/parser.hpp"

namespace jsclass {

enum class InputMode { Js, EstreeJson, Auto };

std::string_view input_mode_name(InputMode m) noexcept;
std::optional<InputMode> input_mode_from_name(std::string_view s) noexcept;

struct LoadOptions {
  InputMode mode = InputMode::EstreeJson;
  /// Skip `node_modules` and hidden directories.
  bool default_excludes = true;
  /// Files larger than this are skipped; 0 disables the limit.
  std::uintmax_t max_file_bytes = 5u * 1024u * 1024u;
  ParseOptions parse;
  /// Worker threads for per-file loading; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

struct LoadResult {
  Program program;
  IngestReport report;
};

/// Recursively loads every matching file under `root`. Paths in the program
/// are relative to `root` with forward slashes and sorted. A file that fails
/// to load becomes an error diagnostic and is left out.
///
/// Throws Error(bad_root) when root is not a readable directory and
/// Error(empty_input) when no file could be loaded.
LoadResult ingest_tree(const std::filesystem::path& root, const LoadOptions& options = {});

/// Reads a whole file. Throws Error(io_error).
std::string read_file(const std::filesystem::path& path);

}  // namespace jsclass
