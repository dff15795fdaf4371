#include "jsclass/metrics.hpp"

#include <algorithm>

namespace jsclass {

namespace {

std::size_t depth_of(const OOModel& model, const ClassEntity& c) {
  std::size_t depth = 0;
  const ClassEntity* cur = &c;
  // The hierarchy is acyclic, so a chain never exceeds the class count.
  while (cur->superclass && depth <= model.classes.size()) {
    auto it = model.classes.find(*cur->superclass);
    if (it == model.classes.end()) break;
    cur = &it->second;
    ++depth;
  }
  return depth;
}

}  // namespace

const ClassMetrics* MetricsReport::find(const std::string& name) const {
  auto it = std::lower_bound(per_class.begin(), per_class.end(), name,
                             [](const ClassMetrics& m, const std::string& n) { return m.class_name < n; });
  return it != per_class.end() && it->class_name == name ? &*it : nullptr;
}

MetricsReport compute_metrics(const OOModel& model, const std::map<std::string, PackageMetrics>& line_counts) {
  MetricsReport report;
  for (const auto& [path, counts] : line_counts) {
    auto& pkg = report.per_package[path];
    pkg.loc = counts.loc;
    pkg.raw_lines = counts.raw_lines;
    report.total_loc += counts.loc;
    report.total_raw_lines += counts.raw_lines;
  }
  for (const auto& [path, names] : model.packages) report.per_package[path];

  report.per_class.reserve(model.classes.size());
  for (const auto& [name, c] : model.classes) {
    ClassMetrics m;
    m.class_name = name;
    m.package = c.file;
    m.nom = c.methods.size();
    m.noa = c.attributes.size();
    m.children_count = c.children.size();
    m.dit = depth_of(model, c);
    report.total_methods += m.nom;
    report.total_attributes += m.noa;
    auto& pkg = report.per_package[c.file];
    ++pkg.classes;
    pkg.methods += m.nom;
    pkg.attributes += m.noa;
    report.per_class.push_back(std::move(m));
  }
  report.noc = report.per_class.size();
  return report;
}

MetricsReport compute_metrics(const OOModel& model, const Program& program) {
  std::map<std::string, PackageMetrics> counts;
  for (const auto& f : program.files) {
    auto& pkg = counts[f.path];
    pkg.loc = f.loc;
    pkg.raw_lines = f.raw_line_count;
  }
  return compute_metrics(model, counts);
}

}  // namespace jsclass
