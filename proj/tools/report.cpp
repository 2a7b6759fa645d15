// Copyright 2026 The qetlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "report.hpp"

#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace qetcli {

namespace {

std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.10g", value);
  return buffer;
}

// RFC 4180: quote cells containing commas, quotes, or line breaks.
std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n\r") == std::string::npos) return cell;
  std::string quoted = "\"";
  for (const char c : cell) {
    if (c == '"') quoted += "\"\"";
    else quoted += c;
  }
  quoted += "\"";
  return quoted;
}

std::string join_warnings(const std::vector<std::string>& warnings) {
  std::string joined;
  for (std::size_t i = 0; i < warnings.size(); ++i) {
    if (i > 0) joined += "; ";
    joined += warnings[i];
  }
  return joined;
}

}  // namespace

void Report::add_number(const std::string& name, double value) {
  Field field;
  field.name = name;
  field.kind = Kind::Number;
  field.number = value;
  fields_.push_back(std::move(field));
}

void Report::add_integer(const std::string& name, unsigned long long value) {
  Field field;
  field.name = name;
  field.kind = Kind::Integer;
  field.integer = value;
  fields_.push_back(std::move(field));
}

void Report::add_text(const std::string& name, const std::string& value) {
  Field field;
  field.name = name;
  field.kind = Kind::Text;
  field.text = value;
  fields_.push_back(std::move(field));
}

void Report::add_boolean(const std::string& name, bool value) {
  Field field;
  field.name = name;
  field.kind = Kind::Boolean;
  field.boolean = value;
  fields_.push_back(std::move(field));
}

void Report::add_nullable(const std::string& name,
                          const std::optional<bool>& value) {
  if (value.has_value()) {
    add_boolean(name, *value);
    return;
  }
  Field field;
  field.name = name;
  field.kind = Kind::Null;
  fields_.push_back(std::move(field));
}

void Report::add_warning(const std::string& text) {
  warnings_.push_back(text);
}

void Report::set_columns(const std::vector<std::string>& names) {
  columns_ = names;
}

void Report::add_row(const std::vector<double>& row) {
  if (row.size() != columns_.size()) {
    throw std::invalid_argument("row width does not match column count");
  }
  rows_.push_back(row);
}

std::string Report::to_csv() const {
  std::string out = "# schema_version=1\n";

  if (!columns_.empty()) {
    // Tabular: pinned column header; warnings as comment lines.
    for (const std::string& warning : warnings_) {
      out += "# warning: " + warning + "\n";
    }
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      if (i > 0) out += ",";
      out += csv_escape(columns_[i]);
    }
    out += "\n";
    for (const std::vector<double>& row : rows_) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i > 0) out += ",";
        out += format_number(row[i]);
      }
      out += "\n";
    }
    return out;
  }

  // Scalar: one header row, one value row, warnings as the last cell.
  for (const Field& field : fields_) {
    out += csv_escape(field.name) + ",";
  }
  out += "warnings\n";
  for (const Field& field : fields_) {
    switch (field.kind) {
      case Kind::Number: out += format_number(field.number); break;
      case Kind::Integer: out += std::to_string(field.integer); break;
      case Kind::Text: out += csv_escape(field.text); break;
      case Kind::Boolean: out += field.boolean ? "true" : "false"; break;
      case Kind::Null: break;
    }
    out += ",";
  }
  out += csv_escape(join_warnings(warnings_));
  out += "\n";
  return out;
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["schema_version"] = "1";
  for (const Field& field : fields_) {
    switch (field.kind) {
      case Kind::Number: j[field.name] = field.number; break;
      case Kind::Integer: j[field.name] = field.integer; break;
      case Kind::Text: j[field.name] = field.text; break;
      case Kind::Boolean: j[field.name] = field.boolean; break;
      case Kind::Null: j[field.name] = nullptr; break;
    }
  }
  if (!columns_.empty()) {
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      nlohmann::ordered_json column = nlohmann::ordered_json::array();
      for (const std::vector<double>& row : rows_) column.push_back(row[c]);
      j[columns_[c]] = std::move(column);
    }
  }
  j["warnings"] = warnings_;
  return j.dump(2) + "\n";
}

}  // namespace qetcli
