#include "jsclass/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <system_error>
#include <vector>

#include "jsclass/detector.hpp"
#include "jsclass/metrics.hpp"

namespace jsclass::cli {

namespace fs = std::filesystem;

namespace {

constexpr Artifact kAllArtifacts[] = {Artifact::Model, Artifact::Uml, Artifact::Distmap, Artifact::Metrics};

std::string span_text(const Program& program, const SourceSpan& s) {
  std::string where = s.file_id < program.files.size() ? program.files[s.file_id].path : "?";
  if (s.is_known()) where += ":" + std::to_string(s.start_line) + ":" + std::to_string(s.start_col);
  return where;
}

void echo_diagnostics(const Diagnostics& diags, const Program* program, std::ostream& err) {
  const Severity threshold = log_threshold();
  for (const auto& d : diags) {
    if (d.severity < threshold) continue;
    err << severity_name(d.severity) << " [" << code_name(d.code) << "]";
    if (d.span && program != nullptr) err << " " << span_text(*program, *d.span);
    err << ": " << d.message << "\n";
  }
}

std::string render(Artifact a, const OOModel& model, const MetricsReport& metrics, const DistMapSpec& spec,
                   TableFormat format, const std::optional<std::string>& name) {
  switch (a) {
    case Artifact::Model:
      return emit_model_json(model, metrics, name);
    case Artifact::Uml:
      return emit_uml_dot(model, metrics);
    case Artifact::Distmap:
      return emit_distribution_map(model, metrics, spec);
    case Artifact::Metrics:
      return emit_metrics_table(metrics, format);
  }
  return {};
}

}  // namespace

std::string_view artifact_name(Artifact a) noexcept {
  switch (a) {
    case Artifact::Model: return "model";
    case Artifact::Uml: return "uml";
    case Artifact::Distmap: return "distmap";
    case Artifact::Metrics: return "metrics";
  }
  return "model";
}

std::optional<Artifact> artifact_from_name(std::string_view s) noexcept {
  for (auto a : kAllArtifacts) {
    if (artifact_name(a) == s) return a;
  }
  return std::nullopt;
}

std::string_view artifact_file(Artifact a) noexcept {
  switch (a) {
    case Artifact::Model: return "model.json";
    case Artifact::Uml: return "classes.dot";
    case Artifact::Distmap: return "distmap.svg";
    case Artifact::Metrics: return "metrics.csv";
  }
  return "model.json";
}

Severity log_threshold() {
  const char* v = std::getenv("JSCLASS_LOG");
  if (v == nullptr) return Severity::Error;
  const std::string_view s(v);
  if (s == "warn" || s == "warning") return Severity::Warning;
  if (s == "info" || s == "debug") return Severity::Info;
  return Severity::Error;
}

void write_atomic(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(DiagCode::IoError, "cannot write " + tmp.string());
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.flush();
    if (!f) throw Error(DiagCode::IoError, "write failed: " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(DiagCode::IoError, "cannot rename onto " + path.string());
  }
}

int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.emit.empty()) {
    err << "error: nothing to emit\n";
    return kUsage;
  }
  try {
    config.distmap.validate();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  LoadOptions options;
  options.mode = config.input_mode;
  options.default_excludes = config.default_excludes;
  options.max_file_bytes = config.max_file_bytes;
  options.threads = config.threads;

  LoadResult loaded;
  try {
    loaded = ingest_tree(config.root, options);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == DiagCode::IoError ? kIoError : kUsage;
  }

  OOModel model = build_model(loaded.program);
  model.diagnostics.insert(model.diagnostics.begin(), loaded.report.diagnostics.begin(),
                           loaded.report.diagnostics.end());
  const MetricsReport metrics = compute_metrics(model, loaded.program);
  echo_diagnostics(model.diagnostics, &loaded.program, err);

  try {
    std::error_code ec;
    fs::create_directories(config.output_dir, ec);
    if (ec) throw Error(DiagCode::IoError, "cannot create " + config.output_dir.string() + ": " + ec.message());
    for (auto a : config.emit) {
      write_atomic(config.output_dir / artifact_file(a),
                   render(a, model, metrics, config.distmap, TableFormat::Csv, config.name));
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  }

  const auto errors = count_severity(model.diagnostics, Severity::Error);
  const auto warnings = count_severity(model.diagnostics, Severity::Warning);
  out << "files: " << loaded.program.files.size() << ", LOC: " << metrics.total_loc
      << ", physical lines: " << metrics.total_raw_lines << "\n";
  out << "classes: " << model.classes.size() << ", inheritance edges: " << model.edges.size() << "\n";
  out << "methods: " << metrics.total_methods << ", attributes: " << metrics.total_attributes << "\n";
  out << "diagnostics: " << errors << " errors, " << warnings << " warnings\n";
  out << "output: " << config.output_dir.generic_string() << "\n";

  if (config.fail_on_error_diagnostics && errors > 0) return kAnalysisError;
  return kOk;
}

int cmd_report(const ReportConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.distmap.validate();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  std::string text;
  try {
    text = read_file(config.model_path);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  }
  StoredModel stored;
  try {
    stored = parse_model_json(text);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == DiagCode::SchemaMismatch ? kAnalysisError : kUsage;
  }
  const std::string rendered =
      render(config.artifact, stored.model, stored.metrics, config.distmap, config.format, stored.name);
  if (config.output.empty()) {
    out << rendered;
    return kOk;
  }
  try {
    write_atomic(config.output, rendered);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  }
  return kOk;
}

namespace {

struct DistFlags {
  std::string metric = "nom";
  std::optional<std::size_t> min;
  std::optional<std::size_t> max;
  std::string color = "blue";
  std::string base_color = "gray";
  std::size_t columns = 8;

  void attach(CLI::App& app, bool short_aliases) {
    const std::string p = short_aliases ? "--metric,--distmap-metric" : "--distmap-metric";
    app.add_option(p, metric, "Metric coloured in the distribution map: nom, noa, children, dit")
        ->capture_default_str();
    app.add_option(short_aliases ? "--min,--distmap-min" : "--distmap-min", min, "Lower bound of the highlight range");
    app.add_option(short_aliases ? "--max,--distmap-max" : "--distmap-max", max, "Upper bound of the highlight range");
    app.add_option(short_aliases ? "--highlight,--distmap-color" : "--distmap-color", color,
                   "Fill for highlighted classes")
        ->capture_default_str();
    app.add_option("--distmap-base-color", base_color, "Fill for other classes")->capture_default_str();
    app.add_option("--distmap-columns", columns, "Class squares per package row")->capture_default_str();
  }

  DistMapSpec spec() const {
    DistMapSpec s;
    s.metric = parse_metric(metric);
    s.min = min;
    s.max = max;
    s.highlight_color = color;
    s.base_color = base_color;
    s.columns = columns;
    return s;
  }
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Detects emulated classes in ES5 code and reports on them", "jsclass"};
  app.require_subcommand(1);

  RunConfig rc;
  std::string mode = "auto";
  std::string emit = "model,uml,distmap,metrics";
  std::string output_dir = "jsclass-out";
  std::string root;
  std::string name;
  bool no_excludes = false;
  DistFlags analyze_dist;

  auto* analyze = app.add_subcommand("analyze", "Analyze a directory of .js or ESTree .json files");
  analyze->add_option("root", root, "Source tree")->required();
  analyze->add_option("--mode", mode, "Input kind: js, estree-json or auto")
      ->check(CLI::IsMember({"js", "estree-json", "auto"}))
      ->capture_default_str();
  analyze->add_option("--out", output_dir, "Output directory")->capture_default_str();
  analyze->add_option("--emit", emit, "Comma-separated artifacts: model, uml, distmap, metrics")
      ->capture_default_str();
  analyze->add_flag("--strict", rc.fail_on_error_diagnostics, "Exit with status 2 on error diagnostics");
  analyze->add_option("--name", name, "System name stored in the model");
  analyze->add_option("--max-file-bytes", rc.max_file_bytes, "Skip larger files (0 = no limit)")
      ->capture_default_str();
  analyze->add_flag("--no-default-excludes", no_excludes, "Also descend into node_modules and hidden directories");
  analyze->add_option("--threads", rc.threads, "Loader threads (0 = hardware concurrency)");
  analyze_dist.attach(*analyze, false);

  ReportConfig rp;
  std::string model_path;
  std::string artifact;
  std::string format = "csv";
  std::string report_out;
  DistFlags report_dist;
  auto* report = app.add_subcommand("report", "Re-emit one artifact from a stored model.json");
  report->add_option("model", model_path, "model.json written by analyze")->required();
  report->add_option("artifact", artifact, "uml, distmap, metrics or model")
      ->required()
      ->check(CLI::IsMember({"uml", "distmap", "metrics", "model"}));
  report->add_option("--format", format, "Metrics table format: text or csv")
      ->check(CLI::IsMember({"text", "csv"}))
      ->capture_default_str();
  report->add_option("-o,--output", report_out, "Write to a file instead of stdout");
  report_dist.attach(*report, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (analyze->parsed()) {
      rc.root = root;
      rc.input_mode = *input_mode_from_name(mode);
      rc.output_dir = output_dir;
      rc.emit.clear();
      for (const auto& item : split_list(emit)) {
        auto a = artifact_from_name(item);
        if (!a) {
          err << "error: unknown artifact '" << item << "'\n";
          return kUsage;
        }
        rc.emit.insert(*a);
      }
      if (!name.empty()) rc.name = name;
      rc.default_excludes = !no_excludes;
      rc.distmap = analyze_dist.spec();
      return cmd_analyze(rc, out, err);
    }
    rp.model_path = model_path;
    rp.artifact = *artifact_from_name(artifact);
    rp.format = format == "text" ? TableFormat::Text : TableFormat::Csv;
    rp.output = report_out;
    rp.distmap = report_dist.spec();
    return cmd_report(rp, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace jsclass::cli
