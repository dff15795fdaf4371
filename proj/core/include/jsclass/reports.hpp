#pragma once

/// @file reports.hpp
/// @brief Artifact emitters: UML class diagram (DOT), distribution map (SVG),
/// model export (JSON) and metrics tables (text/CSV). All output is
/// deterministic for a given model.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "jsclass/detector.hpp"
#include "jsclass/metrics.hpp"

namespace jsclass {

inline constexpr int kModelSchemaVersion = 1;

enum class DistMetric { Nom, Noa, Children, Dit };

std::string_view metric_name(DistMetric m) noexcept;

/// Throws Error(bad_metric) for names other than nom, noa, children, dit.
DistMetric parse_metric(std::string_view name);

struct DistMapSpec {
  DistMetric metric = DistMetric::Nom;
  std::optional<std::size_t> min;
  std::optional<std::size_t> max;
  std::string highlight_color = "blue";
  std::string base_color = "gray";
  /// Class squares per row inside a package rectangle.
  std::size_t columns = 8;

  /// Throws Error(bad_range) or Error(bad_color).
  void validate() const;

  /// Missing bounds are open: value in [min, max].
  [[nodiscard]] bool highlights(std::size_t value) const noexcept;
};

std::size_t metric_value(const ClassMetrics& m, DistMetric metric) noexcept;

/// Graphviz digraph with one record node per class (name | attributes |
/// methods) and child -> parent edges drawn with hollow arrowheads.
std::string emit_uml_dot(const OOModel& model, const MetricsReport& metrics);

/// Standalone SVG: one rectangle per package, one square per class,
/// highlighted when the chosen metric lies in the spec's range.
std::string emit_distribution_map(const OOModel& model, const MetricsReport& metrics, const DistMapSpec& spec);

/// Canonical JSON export (schema version 1).
std::string emit_model_json(const OOModel& model, const MetricsReport& metrics,
                            const std::optional<std::string>& name = std::nullopt);

enum class TableFormat { Text, Csv };

/// Per-class rows sorted by name followed by a SYSTEM row. In the SYSTEM row
/// the package column holds "noc=<N>;loc=<LOC>", nom/noa hold totals,
/// children holds the edge count and dit the maximum depth.
std::string emit_metrics_table(const MetricsReport& metrics, TableFormat format);

struct StoredModel {
  std::optional<std::string> name;
  OOModel model;
  MetricsReport metrics;
};

/// Reads a document written by emit_model_json.
/// Throws Error(bad_model) or Error(schema_mismatch).
StoredModel parse_model_json(std::string_view text);

}  // namespace jsclass
