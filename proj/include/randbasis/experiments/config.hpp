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

// Flat, typed key/value configuration for the experiment commands.
//
// Text format: one "key = value" per line, '#' starts a comment, blank lines
// are ignored. Lists are comma separated. Every key must appear in the
// command's schema; anything else is an error.

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace randbasis::experiments {

enum class ValueType {
  kInt,         // nonnegative integer
  kUInt64,
  kDouble,
  kOptDouble,   // double or "none"
  kString,
  kIntList,     // possibly empty
  kDoubleList,  // possibly empty
};

struct KeySpec {
  std::string key;
  ValueType type;
  std::string default_value;
  std::string doc;
  // Allowed values for kString; empty means free text.
  std::vector<std::string> choices = {};
};

// The commands known to the CLI, in help order.
const std::vector<std::string>& command_names();

// Schema of `command`; throws std::invalid_argument for an unknown command.
const std::vector<KeySpec>& schema_for(const std::string& command);

class Config {
 public:
  // Starts from the schema defaults.
  explicit Config(std::string command);

  const std::string& command() const { return command_; }

  // Throws std::invalid_argument for an unknown key or a value that does not
  // parse as the key's type.
  void set(const std::string& key, const std::string& value);
  // "key=value" form used by --set.
  void set_assignment(std::string_view assignment);

  void load_text(std::string_view text, const std::string& origin);
  // A *.json path is read as a run manifest: its command must match and its
  // config object replaces the defaults. Anything else is the text format.
  void load_file(const std::filesystem::path& path);

  std::uint64_t get_u64(const std::string& key) const;
  std::size_t get_size(const std::string& key) const;
  double get_double(const std::string& key) const;
  std::optional<double> get_opt_double(const std::string& key) const;
  const std::string& get_string(const std::string& key) const;
  std::vector<std::size_t> get_size_list(const std::string& key) const;
  std::vector<double> get_double_list(const std::string& key) const;

  const std::map<std::string, std::string>& values() const { return values_; }
  nlohmann::json to_json() const;

 private:
  const KeySpec& spec(const std::string& key) const;
  const std::string& raw(const std::string& key, ValueType type) const;

  std::string command_;
  std::map<std::string, std::string> values_;
};

// Text of the schema for --help style output.
std::string describe_schema(const std::string& command);

}  // namespace randbasis::experiments
