// Copyright 2026 The randbasis Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Minimal RFC 4180 CSV writer and reader. Doubles are written in the
// shortest form that parses back to the same value; NaN becomes an empty
// field.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace randbasis::experiments {

std::string format_double(double v);
std::string format_optional(std::optional<double> v);

// Inverse of format_double; an empty field reads as NaN.
double parse_double_field(const std::string& field);

class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);

  CsvWriter& add(const std::string& field);
  CsvWriter& add(double v);
  CsvWriter& add(std::size_t v);
  CsvWriter& add_optional(std::optional<double> v);
  // Throws when the row width differs from the header.
  void end_row();

  std::size_t rows() const { return rows_; }
  const std::string& text() const { return text_; }
  // Throws std::runtime_error when the file cannot be written.
  void save(const std::filesystem::path& path) const;

 private:
  void append_field(const std::string& field);

  std::size_t width_;
  std::size_t pending_ = 0;
  std::size_t rows_ = 0;
  std::string text_;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Index of `name` in the header; throws if absent.
  std::size_t column(const std::string& name) const;
};

CsvTable parse_csv(const std::string& text);
CsvTable read_csv(const std::filesystem::path& path);

}  // namespace randbasis::experiments
