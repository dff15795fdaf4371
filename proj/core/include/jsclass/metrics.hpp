#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "jsclass/ast.hpp"
#include "jsclass/detector.hpp"

namespace jsclass {

struct ClassMetrics {
  std::string class_name;
  std::string package;
  std::size_t nom = 0;
  std::size_t noa = 0;
  std::size_t children_count = 0;
  /// Edges from the class up to its root; a root class has dit 0.
  std::size_t dit = 0;

  friend bool operator==(const ClassMetrics&, const ClassMetrics&) = default;
};

struct PackageMetrics {
  std::size_t classes = 0;
  std::size_t methods = 0;
  std::size_t attributes = 0;
  std::size_t loc = 0;
  std::size_t raw_lines = 0;

  friend bool operator==(const PackageMetrics&, const PackageMetrics&) = default;
};

struct MetricsReport {
  std::size_t noc = 0;
  std::size_t total_methods = 0;
  std::size_t total_attributes = 0;
  std::size_t total_loc = 0;
  std::size_t total_raw_lines = 0;
  /// Sorted by class name.
  std::vector<ClassMetrics> per_class;
  std::map<std::string, PackageMetrics> per_package;

  friend bool operator==(const MetricsReport&, const MetricsReport&) = default;

  [[nodiscard]] const ClassMetrics* find(const std::string& name) const;
};

MetricsReport compute_metrics(const OOModel& model, const Program& program);

/// Same report from a model alone, with line counts supplied per package.
/// Used when re-emitting artifacts from a stored model.
MetricsReport compute_metrics(const OOModel& model, const std::map<std::string, PackageMetrics>& line_counts);

}  // namespace jsclass
