#include "jsclass/reports.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace jsclass {

namespace {

using Json = nlohmann::json;

bool is_hex_color(std::string_view c) {
  return c.size() == 7 && c[0] == '#' &&
         std::all_of(c.begin() + 1, c.end(), [](char ch) { return std::isxdigit(static_cast<unsigned char>(ch)); });
}

// SVG 1.1 color keywords, sorted.
constexpr std::string_view kNamedColors[] = {
    "aliceblue", "antiquewhite", "aqua", "aquamarine", "azure", "beige", "bisque", "black", "blanchedalmond",
    "blue", "blueviolet", "brown", "burlywood", "cadetblue", "chartreuse", "chocolate", "coral",
    "cornflowerblue", "cornsilk", "crimson", "cyan", "darkblue", "darkcyan", "darkgoldenrod", "darkgray",
    "darkgreen", "darkgrey", "darkkhaki", "darkmagenta", "darkolivegreen", "darkorange", "darkorchid",
    "darkred", "darksalmon", "darkseagreen", "darkslateblue", "darkslategray", "darkslategrey",
    "darkturquoise", "darkviolet", "deeppink", "deepskyblue", "dimgray", "dimgrey", "dodgerblue", "firebrick",
    "floralwhite", "forestgreen", "fuchsia", "gainsboro", "ghostwhite", "gold", "goldenrod", "gray", "green",
    "greenyellow", "grey", "honeydew", "hotpink", "indianred", "indigo", "ivory", "khaki", "lavender",
    "lavenderblush", "lawngreen", "lemonchiffon", "lightblue", "lightcoral", "lightcyan",
    "lightgoldenrodyellow", "lightgray", "lightgreen", "lightgrey", "lightpink", "lightsalmon",
    "lightseagreen", "lightskyblue", "lightslategray", "lightslategrey", "lightsteelblue", "lightyellow",
    "lime", "limegreen", "linen", "magenta", "maroon", "mediumaquamarine", "mediumblue", "mediumorchid",
    "mediumpurple", "mediumseagreen", "mediumslateblue", "mediumspringgreen", "mediumturquoise",
    "mediumvioletred", "midnightblue", "mintcream", "mistyrose", "moccasin", "navajowhite", "navy", "oldlace",
    "olive", "olivedrab", "orange", "orangered", "orchid", "palegoldenrod", "palegreen", "paleturquoise",
    "palevioletred", "papayawhip", "peachpuff", "peru", "pink", "plum", "powderblue", "purple", "red",
    "rosybrown", "royalblue", "saddlebrown", "salmon", "sandybrown", "seagreen", "seashell", "sienna",
    "silver", "skyblue", "slateblue", "slategray", "slategrey", "snow", "springgreen", "steelblue", "tan",
    "teal", "thistle", "tomato", "turquoise", "violet", "wheat", "white", "whitesmoke", "yellow",
    "yellowgreen",
};

bool is_named_color(std::string_view c) {
  return std::binary_search(std::begin(kNamedColors), std::end(kNamedColors), c);
}

std::string xml_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default:
        out += static_cast<unsigned char>(c) < 0x20 ? ' ' : c;
    }
  }
  return out;
}

std::string dot_quoted(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += static_cast<unsigned char>(c) < 0x20 ? ' ' : c;
  }
  return out + "\"";
}

/// Escapes the characters that are structural inside record labels.
std::string record_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '{' || c == '}' || c == '|' || c == '<' || c == '>' || c == '"' || c == '\\' || c == ' ') {
      out += '\\';
    }
    out += static_cast<unsigned char>(c) < 0x20 ? '?' : c;
  }
  return out;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Json span_json(const SourceSpan& s) {
  return Json::array({s.file_id, s.start_line, s.start_col, s.end_line, s.end_col});
}

SourceSpan span_from(const Json& j) {
  if (!j.is_array() || j.size() != 5) throw Error(DiagCode::BadModel, "span must be a 5-element array");
  return SourceSpan{j[0].get<FileId>(), j[1].get<std::uint32_t>(), j[2].get<std::uint32_t>(),
                    j[3].get<std::uint32_t>(), j[4].get<std::uint32_t>()};
}

Json members_json(const MemberSet& set) {
  Json arr = Json::array();
  for (const auto& [name, m] : set) {
    arr.push_back({{"name", name}, {"origin", member_origin_name(m.origin)}, {"span", span_json(m.span)}});
  }
  return arr;
}

MemberSet members_from(const Json& arr, MemberKind kind) {
  MemberSet set;
  for (const auto& j : arr) {
    Member m;
    m.name = j.at("name").get<std::string>();
    m.kind = kind;
    auto origin = member_origin_from_name(j.at("origin").get<std::string>());
    if (!origin) throw Error(DiagCode::BadModel, "unknown member origin");
    m.origin = *origin;
    m.span = span_from(j.at("span"));
    set.emplace(m.name, std::move(m));
  }
  return set;
}

std::size_t max_dit(const MetricsReport& metrics) {
  std::size_t d = 0;
  for (const auto& m : metrics.per_class) d = std::max(d, m.dit);
  return d;
}

std::size_t total_children(const MetricsReport& metrics) {
  std::size_t n = 0;
  for (const auto& m : metrics.per_class) n += m.children_count;
  return n;
}

}  // namespace

std::string_view metric_name(DistMetric m) noexcept {
  switch (m) {
    case DistMetric::Nom: return "nom";
    case DistMetric::Noa: return "noa";
    case DistMetric::Children: return "children";
    case DistMetric::Dit: return "dit";
  }
  return "nom";
}

DistMetric parse_metric(std::string_view name) {
  for (auto m : {DistMetric::Nom, DistMetric::Noa, DistMetric::Children, DistMetric::Dit}) {
    if (metric_name(m) == name) return m;
  }
  throw Error(DiagCode::BadMetric, "unknown metric '" + std::string(name) + "' (expected nom, noa, children or dit)");
}

void DistMapSpec::validate() const {
  if (min && max && *min > *max) {
    throw Error(DiagCode::BadRange,
                "min " + std::to_string(*min) + " is greater than max " + std::to_string(*max));
  }
  for (const auto* c : {&highlight_color, &base_color}) {
    if (!is_hex_color(*c) && !is_named_color(*c)) {
      throw Error(DiagCode::BadColor, "'" + *c + "' is neither an SVG color name nor #rrggbb");
    }
  }
  if (columns == 0) throw Error(DiagCode::BadRange, "grid needs at least one column");
}

bool DistMapSpec::highlights(std::size_t value) const noexcept {
  return (!min || value >= *min) && (!max || value <= *max);
}

std::size_t metric_value(const ClassMetrics& m, DistMetric metric) noexcept {
  switch (metric) {
    case DistMetric::Nom: return m.nom;
    case DistMetric::Noa: return m.noa;
    case DistMetric::Children: return m.children_count;
    case DistMetric::Dit: return m.dit;
  }
  return 0;
}

std::string emit_uml_dot(const OOModel& model, const MetricsReport& metrics) {
  (void)metrics;
  std::ostringstream out;
  out << "digraph classes {\n"
      << "  rankdir=BT;\n"
      << "  node [shape=record, fontname=\"Helvetica\", fontsize=10];\n"
      << "  edge [arrowhead=empty];\n";
  for (const auto& [name, c] : model.classes) {
    out << "  " << dot_quoted(name) << " [label=\"{" << record_escape(name) << "|";
    for (const auto& [attr, m] : c.attributes) out << record_escape(attr) << "\\l";
    out << "|";
    for (const auto& [method, m] : c.methods) out << record_escape(method) << "()\\l";
    out << "}\"];\n";
  }
  for (const auto& e : model.edges) {
    out << "  " << dot_quoted(e.subclass) << " -> " << dot_quoted(e.superclass) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string emit_distribution_map(const OOModel& model, const MetricsReport& metrics, const DistMapSpec& spec) {
  spec.validate();

  constexpr std::size_t kSquare = 12;
  constexpr std::size_t kGap = 3;
  constexpr std::size_t kPad = 8;
  constexpr std::size_t kLabel = 16;
  constexpr std::size_t kCharWidth = 7;
  constexpr std::size_t kCanvas = 960;

  struct Box {
    std::string path;
    const std::vector<std::string>* classes;
    std::size_t x, y, w, h;
  };
  std::vector<Box> boxes;
  std::size_t x = kPad, y = kPad, row_h = 0, width = 2 * kPad, height = 2 * kPad;
  for (const auto& [path, classes] : model.packages) {
    const std::size_t n = classes.size();
    const std::size_t cols = std::max<std::size_t>(1, std::min(n, spec.columns));
    const std::size_t rows = (n + spec.columns - 1) / spec.columns;
    const std::size_t grid_w = cols * (kSquare + kGap) - kGap;
    const std::size_t w = std::max(2 * kPad + grid_w, 2 * kPad + kCharWidth * path.size());
    const std::size_t h = kLabel + 2 * kPad + (rows == 0 ? 0 : rows * (kSquare + kGap) - kGap);
    if (x > kPad && x + w > kCanvas) {
      x = kPad;
      y += row_h + kPad;
      row_h = 0;
    }
    boxes.push_back(Box{path, &classes, x, y, w, h});
    width = std::max(width, x + w + kPad);
    height = std::max(height, y + h + kPad);
    row_h = std::max(row_h, h);
    x += w + kPad;
  }

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
      << "\">\n";
  out << "  <title>" << xml_escape(std::string("distribution map: ") + std::string(metric_name(spec.metric)) + " in [" +
                                   (spec.min ? std::to_string(*spec.min) : "-") + ", " +
                                   (spec.max ? std::to_string(*spec.max) : "-") + "]")
      << "</title>\n";
  for (const auto& b : boxes) {
    out << "  <g class=\"package\">\n"
        << "    <rect class=\"package\" x=\"" << b.x << "\" y=\"" << b.y << "\" width=\"" << b.w << "\" height=\""
        << b.h << "\" fill=\"white\" stroke=\"black\"/>\n"
        << "    <text x=\"" << b.x + kPad << "\" y=\"" << b.y + kLabel - 2
        << "\" font-family=\"Helvetica\" font-size=\"11\">" << xml_escape(b.path) << "</text>\n";
    for (std::size_t i = 0; i < b.classes->size(); ++i) {
      const std::string& name = (*b.classes)[i];
      const ClassMetrics* m = metrics.find(name);
      const std::size_t value = m == nullptr ? 0 : metric_value(*m, spec.metric);
      const bool hit = spec.highlights(value);
      const std::size_t sx = b.x + kPad + (i % spec.columns) * (kSquare + kGap);
      const std::size_t sy = b.y + kLabel + kPad + (i / spec.columns) * (kSquare + kGap);
      out << "    <rect class=\"" << (hit ? "class highlighted" : "class") << "\" x=\"" << sx << "\" y=\"" << sy
          << "\" width=\"" << kSquare << "\" height=\"" << kSquare << "\" fill=\""
          << xml_escape(hit ? spec.highlight_color : spec.base_color) << "\"><title>" << xml_escape(name) << " ("
          << metric_name(spec.metric) << "=" << value << ")</title></rect>\n";
    }
    out << "  </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string emit_model_json(const OOModel& model, const MetricsReport& metrics, const std::optional<std::string>& name) {
  Json doc;
  doc["schema_version"] = kModelSchemaVersion;
  if (name) doc["name"] = *name;
  doc["noc"] = metrics.noc;

  Json classes = Json::array();
  for (const auto& [cname, c] : model.classes) {
    const ClassMetrics* m = metrics.find(cname);
    Json jc;
    jc["name"] = cname;
    jc["package"] = c.file;
    jc["span"] = span_json(c.span);
    jc["superclass"] = c.superclass ? Json(*c.superclass) : Json(nullptr);
    jc["subclasses"] = Json(std::vector<std::string>(c.children.begin(), c.children.end()));
    jc["attributes"] = members_json(c.attributes);
    jc["methods"] = members_json(c.methods);
    jc["nom"] = m ? m->nom : 0;
    jc["noa"] = m ? m->noa : 0;
    jc["children"] = m ? m->children_count : 0;
    jc["dit"] = m ? m->dit : 0;
    classes.push_back(std::move(jc));
  }
  doc["classes"] = std::move(classes);

  Json edges = Json::array();
  for (const auto& e : model.edges) {
    edges.push_back({{"subclass", e.subclass},
                     {"superclass", e.superclass},
                     {"pattern", pattern_name(e.pattern)},
                     {"span", span_json(e.span)}});
  }
  doc["edges"] = std::move(edges);

  Json packages = Json::array();
  for (const auto& [path, names] : model.packages) {
    auto it = metrics.per_package.find(path);
    const PackageMetrics pm = it == metrics.per_package.end() ? PackageMetrics{} : it->second;
    packages.push_back({{"path", path}, {"loc", pm.loc}, {"raw_lines", pm.raw_lines}, {"classes", names}});
  }
  doc["packages"] = std::move(packages);

  Json diags = Json::array();
  for (const auto& d : model.diagnostics) {
    diags.push_back({{"severity", severity_name(d.severity)},
                     {"code", code_name(d.code)},
                     {"message", d.message},
                     {"span", d.span ? span_json(*d.span) : Json(nullptr)}});
  }
  doc["diagnostics"] = std::move(diags);
  return doc.dump(2) + "\n";
}

StoredModel parse_model_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(DiagCode::BadModel, e.what());
  }
  if (!doc.is_object() || !doc.contains("schema_version")) {
    throw Error(DiagCode::BadModel, "not a model document (no schema_version)");
  }
  if (!doc["schema_version"].is_number_integer() || doc["schema_version"].get<int>() != kModelSchemaVersion) {
    throw Error(DiagCode::SchemaMismatch, "model schema version " + doc["schema_version"].dump() +
                                              " is not supported (expected " + std::to_string(kModelSchemaVersion) +
                                              ")");
  }

  StoredModel stored;
  try {
    if (doc.contains("name")) stored.name = doc["name"].get<std::string>();
    OOModel& model = stored.model;
    for (const auto& jc : doc.at("classes")) {
      ClassEntity c;
      c.name = jc.at("name").get<std::string>();
      c.file = jc.at("package").get<std::string>();
      c.span = span_from(jc.at("span"));
      if (!jc.at("superclass").is_null()) c.superclass = jc["superclass"].get<std::string>();
      for (const auto& s : jc.at("subclasses")) c.children.insert(s.get<std::string>());
      c.attributes = members_from(jc.at("attributes"), MemberKind::Attribute);
      c.methods = members_from(jc.at("methods"), MemberKind::Method);
      model.classes.emplace(c.name, std::move(c));
    }
    for (const auto& je : doc.at("edges")) {
      InheritanceEdge e;
      e.subclass = je.at("subclass").get<std::string>();
      e.superclass = je.at("superclass").get<std::string>();
      auto p = pattern_from_name(je.at("pattern").get<std::string>());
      if (!p) throw Error(DiagCode::BadModel, "unknown inheritance pattern");
      e.pattern = *p;
      e.span = span_from(je.at("span"));
      model.edges.push_back(std::move(e));
    }
    std::map<std::string, PackageMetrics> counts;
    for (const auto& jp : doc.at("packages")) {
      const auto path = jp.at("path").get<std::string>();
      auto& names = model.packages[path];
      for (const auto& n : jp.at("classes")) names.push_back(n.get<std::string>());
      counts[path].loc = jp.at("loc").get<std::size_t>();
      counts[path].raw_lines = jp.at("raw_lines").get<std::size_t>();
    }
    for (const auto& jd : doc.at("diagnostics")) {
      Diagnostic d;
      auto sev = severity_from_name(jd.at("severity").get<std::string>());
      auto code = code_from_name(jd.at("code").get<std::string>());
      if (!sev || !code) throw Error(DiagCode::BadModel, "unknown diagnostic severity or code");
      d.severity = *sev;
      d.code = *code;
      d.message = jd.at("message").get<std::string>();
      if (!jd.at("span").is_null()) d.span = span_from(jd["span"]);
      model.diagnostics.push_back(std::move(d));
    }
    for (const auto& [cname, c] : model.classes) {
      if (c.superclass && !model.classes.contains(*c.superclass)) {
        throw Error(DiagCode::BadModel, cname + " names an unknown superclass");
      }
    }
    stored.metrics = compute_metrics(model, counts);
  } catch (const Json::exception& e) {
    throw Error(DiagCode::BadModel, e.what());
  }
  return stored;
}

std::string emit_metrics_table(const MetricsReport& metrics, TableFormat format) {
  struct Row {
    std::string cls, pkg, nom, noa, children, dit;
  };
  std::vector<Row> rows;
  rows.push_back({"class", "package", "nom", "noa", "children", "dit"});
  for (const auto& m : metrics.per_class) {
    rows.push_back({m.class_name, m.package, std::to_string(m.nom), std::to_string(m.noa),
                    std::to_string(m.children_count), std::to_string(m.dit)});
  }
  rows.push_back({"SYSTEM", "noc=" + std::to_string(metrics.noc) + ";loc=" + std::to_string(metrics.total_loc),
                  std::to_string(metrics.total_methods), std::to_string(metrics.total_attributes),
                  std::to_string(total_children(metrics)), std::to_string(max_dit(metrics))});

  std::ostringstream out;
  if (format == TableFormat::Csv) {
    for (const auto& r : rows) {
      out << csv_field(r.cls) << ',' << csv_field(r.pkg) << ',' << r.nom << ',' << r.noa << ',' << r.children << ','
          << r.dit << "\n";
    }
    return out.str();
  }

  std::size_t w[6] = {0, 0, 0, 0, 0, 0};
  for (const auto& r : rows) {
    w[0] = std::max(w[0], r.cls.size());
    w[1] = std::max(w[1], r.pkg.size());
    w[2] = std::max(w[2], r.nom.size());
    w[3] = std::max(w[3], r.noa.size());
    w[4] = std::max(w[4], r.children.size());
    w[5] = std::max(w[5], r.dit.size());
  }
  auto line = [&](const Row& r) {
    out << std::left << std::setw(static_cast<int>(w[0])) << r.cls << "  " << std::setw(static_cast<int>(w[1]))
        << r.pkg << std::right;
    out << "  " << std::setw(static_cast<int>(w[2])) << r.nom << "  " << std::setw(static_cast<int>(w[3])) << r.noa
        << "  " << std::setw(static_cast<int>(w[4])) << r.children << "  " << std::setw(static_cast<int>(w[5]))
        << r.dit << "\n";
  };
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i + 1 == rows.size()) {
      out << std::string(w[0] + w[1] + w[2] + w[3] + w[4] + w[5] + 10, '-') << "\n";
    }
    line(rows[i]);
  }
  return out.str();
}

}  // namespace jsclass
