#pragma once

// Flat report model shared by the CLI and the acceptance runner, with table,
// JSON and CSV renderers. Numbers are stored at full double precision; only
// the table view rounds them.

#include <charconv>
#include <cstddef>
#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

namespace qgames {

using ReportValue = std::variant<double, bool, std::string>;

struct ReportRow {
  std::string section;
  std::string key;
  ReportValue value;
};

struct Report {
  std::string title;
  std::vector<ReportRow> rows;
  /// False when a check in the report failed; the CLI maps this to exit 1.
  bool ok = true;

  void add(std::string section, std::string key, ReportValue value) {
    rows.push_back({std::move(section), std::move(key), std::move(value)});
  }

  /// Records a check and folds it into `ok`.
  void check(std::string section, std::string key, bool passed) {
    ok = ok && passed;
    add(std::move(section), std::move(key), passed);
  }

  const ReportValue* find(std::string_view section, std::string_view key) const {
    for (const ReportRow& r : rows) {
      if (r.section == section && r.key == key) return &r.value;
    }
    return nullptr;
  }
};

enum class OutputFormat { kTable, kJson, kCsv };

inline OutputFormat parse_output_format(std::string_view s) {
  if (s == "table") return OutputFormat::kTable;
  if (s == "json") return OutputFormat::kJson;
  if (s == "csv") return OutputFormat::kCsv;
  throw std::invalid_argument("unknown format '" + std::string(s) + "' (expected table, json or csv)");
}

/// Shortest decimal text that reads back to the same double.
inline std::string exact_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline std::string display_value(const ReportValue& v) {
  if (const double* d = std::get_if<double>(&v)) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.7g", *d);
    return buf;
  }
  if (const bool* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  return std::get<std::string>(v);
}

inline std::string exact_value(const ReportValue& v) {
  if (const double* d = std::get_if<double>(&v)) return exact_number(*d);
  return display_value(v);
}

/// {"report": title, "ok": bool, "<section>": {"<key>": value, ...}, ...} with
/// sections in first-appearance order.
inline nlohmann::ordered_json to_json(const Report& report) {
  nlohmann::ordered_json doc;
  doc["report"] = report.title;
  doc["ok"] = report.ok;
  for (const ReportRow& r : report.rows) {
    nlohmann::ordered_json& section = doc[r.section];
    std::visit([&](const auto& v) { section[r.key] = v; }, r.value);
  }
  return doc;
}

/// Inverse of to_json, for round-trip checks.
inline Report report_from_json(const nlohmann::ordered_json& doc) {
  Report report;
  report.title = doc.at("report").get<std::string>();
  report.ok = doc.at("ok").get<bool>();
  for (const auto& [section, body] : doc.items()) {
    if (section == "report" || section == "ok") continue;
    for (const auto& [key, v] : body.items()) {
      if (v.is_boolean()) {
        report.add(section, key, v.get<bool>());
      } else if (v.is_number()) {
        report.add(section, key, v.get<double>());
      } else {
        report.add(section, key, v.get<std::string>());
      }
    }
  }
  return report;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

inline void render_table(std::ostream& os, const Report& report) {
  std::size_t key_width = 0;
  for (const ReportRow& r : report.rows) key_width = std::max(key_width, r.key.size());
  os << report.title << '\n';
  std::string current;
  for (const ReportRow& r : report.rows) {
    if (r.section != current) {
      current = r.section;
      os << "\n[" << current << "]\n";
    }
    os << "  " << std::left << std::setw(int(key_width)) << r.key << "  " << display_value(r.value) << '\n';
  }
  os << "\nstatus: " << (report.ok ? "ok" : "FAILED") << '\n';
}

inline void render_csv(std::ostream& os, const Report& report) {
  os << "section,key,value\n";
  for (const ReportRow& r : report.rows) {
    os << csv_field(r.section) << ',' << csv_field(r.key) << ',' << csv_field(exact_value(r.value)) << '\n';
  }
}

inline void render(std::ostream& os, const Report& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::kTable: render_table(os, report); break;
    case OutputFormat::kJson: os << to_json(report).dump(2) << '\n'; break;
    case OutputFormat::kCsv: render_csv(os, report); break;
  }
}

}  // namespace qgames
