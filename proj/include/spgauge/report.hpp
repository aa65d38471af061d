#pragma once

// Tabular reports shared by every CLI command, with exact JSON, CSV and
// Markdown renderings. Every value is a string; numbers are exact decimals
// and rationals are "p/q".

#include <spgauge/error.hpp>

#include <json.hpp>

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spgauge {

using Record = std::vector<std::pair<std::string, std::string>>;

struct Report {
  std::string command;
  Record parameters;
  std::vector<Record> rows;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  std::string_view status() const { return ok() ? "ok" : "failed"; }

  friend bool operator==(const Report&, const Report&) = default;
};

enum class Format { json, csv, markdown };

inline Format parse_format(std::string_view s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "markdown") return Format::markdown;
  throw Error(ErrorCode::BadQuery, "unknown format '" + std::string(s) + "'");
}

inline nlohmann::ordered_json to_json(const Report& r) {
  using nlohmann::ordered_json;
  auto record = [](const Record& rec) {
    ordered_json o = ordered_json::object();
    for (const auto& [k, v] : rec) o[k] = v;
    return o;
  };
  ordered_json rows = ordered_json::array();
  for (const auto& row : r.rows) rows.push_back(record(row));
  return {{"command", r.command},
          {"parameters", record(r.parameters)},
          {"rows", std::move(rows)},
          {"status", r.status()},
          {"failures", r.failures}};
}

inline Report report_from_json(const nlohmann::ordered_json& j) {
  auto record = [](const nlohmann::ordered_json& o) {
    Record rec;
    for (const auto& [k, v] : o.items()) rec.emplace_back(k, v.get<std::string>());
    return rec;
  };
  Report r;
  r.command = j.at("command").get<std::string>();
  r.parameters = record(j.at("parameters"));
  for (const auto& row : j.at("rows")) r.rows.push_back(record(row));
  r.failures = j.at("failures").get<std::vector<std::string>>();
  if (j.at("status").get<std::string>() != r.status())
    throw Error(ErrorCode::ParseError, "status field inconsistent with failures");
  return r;
}

namespace detail {

/// Field names in order of first appearance across all rows.
inline std::vector<std::string> columns(const Report& r) {
  std::vector<std::string> cols;
  for (const auto& row : r.rows)
    for (const auto& [k, v] : row)
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
  return cols;
}

inline const std::string* field(const Record& rec, const std::string& key) {
  for (const auto& [k, v] : rec)
    if (k == key) return &v;
  return nullptr;
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

inline std::string to_csv(const Report& r) {
  const auto cols = detail::columns(r);
  std::string out;
  for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + detail::csv_escape(cols[i]);
  out += "\n";
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      const std::string* v = detail::field(row, cols[i]);
      out += (i ? "," : "") + (v ? detail::csv_escape(*v) : std::string());
    }
    out += "\n";
  }
  return out;
}

inline std::string to_markdown(const Report& r) {
  std::string out = "## " + r.command + "\n\n";
  if (!r.parameters.empty()) {
    for (const auto& [k, v] : r.parameters) out += "- " + k + ": " + v + "\n";
    out += "\n";
  }
  const auto cols = detail::columns(r);
  if (!cols.empty()) {
    out += "|";
    for (const auto& c : cols) out += " " + c + " |";
    out += "\n|";
    for (std::size_t i = 0; i < cols.size(); ++i) out += "---|";
    out += "\n";
    for (const auto& row : r.rows) {
      out += "|";
      for (const auto& c : cols) {
        const std::string* v = detail::field(row, c);
        out += " " + (v ? *v : std::string()) + " |";
      }
      out += "\n";
    }
    out += "\n";
  }
  out += "status: " + std::string(r.status()) + "\n";
  for (const auto& f : r.failures) out += "- FAILED: " + f + "\n";
  return out;
}

inline std::string render(const Report& r, Format f) {
  switch (f) {
    case Format::json: return to_json(r).dump(2) + "\n";
    case Format::csv: return to_csv(r);
    case Format::markdown: return to_markdown(r);
  }
  return {};
}

}  // namespace spgauge
