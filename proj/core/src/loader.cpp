#include "jsclass/loader.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>
#include <vector>

namespace jsclass {

namespace fs = std::filesystem;

namespace {

enum class FileType { Js, Json };

struct Job {
  fs::path full;
  std::string rel;
  FileType type;
};

struct Outcome {
  std::optional<SourceFile> file;
  IngestReport report;
};

bool excluded_dir(const fs::path& p) {
  const auto name = p.filename().string();
  return name == "node_modules" || (name.size() > 1 && name[0] == '.');
}

std::optional<FileType> classify(const fs::path& p, InputMode mode) {
  const auto ext = p.extension().string();
  const bool js = ext == ".js";
  const bool json = ext == ".json";
  switch (mode) {
    case InputMode::Js:
      return js ? std::optional(FileType::Js) : std::nullopt;
    case InputMode::EstreeJson:
      return json ? std::optional(FileType::Json) : std::nullopt;
    case InputMode::Auto:
      if (js) return FileType::Js;
      if (json) return FileType::Json;
      return std::nullopt;
  }
  return std::nullopt;
}

Outcome load_one(const Job& job, const ParseOptions& parse_options) {
  Outcome out;
  try {
    const auto text = read_file(job.full);
    if (job.type == FileType::Json) {
      out.file = ingest_estree_json(text, job.rel, &out.report);
    } else {
      out.file = parse_source(text, job.rel, parse_options, &out.report.diagnostics);
      out.report.files_loaded = 1;
      out.report.nodes_loaded = node_count(*out.file->root);
      walk_pruned(*out.file->root, [&](const AstNode& n) {
        if (n.is(NodeKind::Opaque)) ++out.report.opaque_nodes;
        return true;
      });
    }
  } catch (const Error& e) {
    out.file.reset();
    out.report.diagnostics.push_back(Diagnostic{Severity::Error, e.code(), job.rel + ": " + e.what(), e.span()});
  }
  return out;
}

}  // namespace

std::string_view input_mode_name(InputMode m) noexcept {
  switch (m) {
    case InputMode::Js: return "js";
    case InputMode::EstreeJson: return "estree-json";
    case InputMode::Auto: return "auto";
  }
  return "auto";
}

std::optional<InputMode> input_mode_from_name(std::string_view s) noexcept {
  for (auto m : {InputMode::Js, InputMode::EstreeJson, InputMode::Auto}) {
    if (input_mode_name(m) == s) return m;
  }
  return std::nullopt;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(DiagCode::IoError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(DiagCode::IoError, "read failed: " + path.string());
  return std::move(ss).str();
}

LoadResult ingest_tree(const fs::path& root, const LoadOptions& options) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw Error(DiagCode::BadRoot, root.string() + " is not a readable directory");
  }

  LoadResult result;
  std::vector<Job> jobs;
  fs::recursive_directory_iterator it(root, fs::directory_options::skip_permission_denied, ec);
  if (ec) throw Error(DiagCode::BadRoot, root.string() + ": " + ec.message());
  for (; it != fs::recursive_directory_iterator(); it.increment(ec)) {
    if (ec) {
      result.report.diagnostics.push_back(
          Diagnostic{Severity::Warning, DiagCode::IoError, "directory walk: " + ec.message(), std::nullopt});
      ec.clear();
      continue;
    }
    const auto& entry = *it;
    if (entry.is_directory(ec)) {
      if (options.default_excludes && excluded_dir(entry.path())) it.disable_recursion_pending();
      continue;
    }
    if (!entry.is_regular_file(ec)) continue;
    const auto type = classify(entry.path(), options.mode);
    if (!type) continue;
    const auto rel = fs::relative(entry.path(), root, ec).generic_string();
    if (options.max_file_bytes > 0 && entry.file_size(ec) > options.max_file_bytes) {
      result.report.diagnostics.push_back(Diagnostic{Severity::Warning, DiagCode::IoError,
                                                     rel + ": larger than the file size limit, skipped",
                                                     std::nullopt});
      continue;
    }
    jobs.push_back(Job{entry.path(), rel, *type});
  }
  std::sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) { return a.rel < b.rel; });

  // Workers fill fixed slots; the merge below runs in path order.
  std::vector<Outcome> outcomes(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) outcomes[i] = load_one(jobs[i], options.parse);
  };
  unsigned threads = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, jobs.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (auto& o : outcomes) {
    // Jobs are path-sorted, so a file's final id is its position here.
    const auto id = static_cast<FileId>(result.program.files.size());
    for (auto& d : o.report.diagnostics) {
      if (!d.span) continue;
      if (o.file) {
        d.span->file_id = id;
      } else {
        d.span.reset();
      }
    }
    result.report.merge(o.report);
    if (o.file) result.program.files.push_back(std::move(*o.file));
  }
  if (result.program.files.empty()) {
    throw Error(DiagCode::EmptyInput, "no ingestible " +
                                          std::string(options.mode == InputMode::Js           ? ".js"
                                                      : options.mode == InputMode::EstreeJson ? ".json"
                                                                                              : ".js/.json") +
                                          " files under " + root.string());
  }
  result.program.finalize();
  return result;
}

}  // namespace jsclass
