// Copyright 2026 The qetlab Authors
// SPDX-License-Identifier: Apache-2.0
//
// Deterministic CSV/JSON report assembly for the qetlab CLI.
//
// Scalar reports (certify, run, circuit) are a flat ordered field list;
// tabular reports (sweep, zeno) are named columns plus rows. CSV output
// always starts with "# schema_version=1"; numbers are printed with 10
// significant digits; text cells follow RFC 4180 quoting. JSON output is
// a flat ordered object with schema_version "1", tabular columns as
// arrays, and a warnings array. Identical inputs give identical bytes.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qetcli {

class Report {
 public:
  void add_number(const std::string& name, double value);
  void add_integer(const std::string& name, unsigned long long value);
  void add_text(const std::string& name, const std::string& value);
  void add_boolean(const std::string& name, bool value);
  // Optional boolean: empty CSV cell / JSON null when absent.
  void add_nullable(const std::string& name, const std::optional<bool>& value);
  void add_warning(const std::string& text);

  // Switches the report to tabular form.
  void set_columns(const std::vector<std::string>& names);
  void add_row(const std::vector<double>& row);

  std::string to_csv() const;
  std::string to_json() const;

 private:
  enum class Kind { Number, Integer, Text, Boolean, Null };
  struct Field {
    std::string name;
    Kind kind = Kind::Text;
    double number = 0.0;
    unsigned long long integer = 0;
    std::string text;
    bool boolean = false;
  };

  std::vector<Field> fields_;
  std::vector<std::string> columns_;
  std::vector<std::vector<double>> rows_;
  std::vector<std::string> warnings_;
};

}  // namespace qetcli
