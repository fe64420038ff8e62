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

#include "randbasis/experiments/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace randbasis::experiments {
namespace {

using VT = ValueType;

std::vector<KeySpec> common(const std::string& trials) {
  return {
      {"seed", VT::kUInt64, "0", "base seed; trial i uses seed + i"},
      {"trials", VT::kInt, trials, "number of independent trials"},
      {"workers", VT::kInt, "1", "worker threads (does not change results)"},
  };
}

std::vector<KeySpec> with(std::vector<KeySpec> base,
                          const std::vector<KeySpec>& extra) {
  base.insert(base.end(), extra.begin(), extra.end());
  return base;
}

const std::vector<KeySpec> kTargetKeys = {
    {"grid_size", VT::kInt, "1000", "midpoint grid points on [0, 1]"},
    {"target", VT::kString, "three-bump", "function to approximate",
     {"three-bump", "constant"}},
};

const std::map<std::string, std::vector<KeySpec>>& schemas() {
  static const std::map<std::string, std::vector<KeySpec>> s = {
      {"greedy",
       with(with(common("100"), kTargetKeys),
            {
                {"n_steps", VT::kInt, "100", "greedy steps per trial"},
                {"m_prime", VT::kDouble, "1.5", "M' in the error bound"},
                {"m_dprime", VT::kDouble, "2", "M'' in the step size"},
                {"sel_eps", VT::kDouble, "1e-6", "relaxed selection threshold"},
                {"w_lo", VT::kDouble, "0", "lower end of the w range"},
                {"w_hi", VT::kDouble, "200", "upper end of the w range"},
                {"b_lo", VT::kDouble, "-100", "lower end of the b range"},
                {"b_hi", VT::kDouble, "0", "upper end of the b range"},
                {"max_draws", VT::kUInt64, "100000",
                 "candidate draws before a step is declared stalled"},
                {"rule", VT::kString, "epsilon-first", "selection rule",
                 {"epsilon-first", "jones", "epsilon"}},
            })},
      {"random",
       with(with(common("100"), kTargetKeys),
            {
                {"n_steps", VT::kInt, "100", "basis elements per trial"},
                {"family", VT::kString, "gaussian", "basis family",
                 {"gaussian", "indicator"}},
                {"w_lo", VT::kDouble, "0", "gaussian w range, low"},
                {"w_hi", VT::kDouble, "200", "gaussian w range, high"},
                {"b_lo", VT::kDouble, "-200", "gaussian b range, low"},
                {"b_hi", VT::kDouble, "200", "gaussian b range, high"},
                {"a_lo", VT::kDouble, "0", "indicator centre range, low"},
                {"a_hi", VT::kDouble, "1", "indicator centre range, high"},
                {"sigma_lo", VT::kDouble, "0", "indicator width range, low"},
                {"sigma_hi", VT::kDouble, "1", "indicator width range, high"},
                {"cond_limit", VT::kOptDouble, "none",
                 "discard elements whose fit exceeds this condition number"},
                {"rel_tol", VT::kDouble, "1e-12",
                 "singular values below rel_tol * max are truncated"},
            })},
      {"const-blowup",
       with(common("20"),
            {
                {"grid_size", VT::kInt, "1000", "midpoint grid points"},
                {"n_steps", VT::kInt, "500", "indicator elements per trial"},
                {"a_lo", VT::kDouble, "0", "indicator centre range, low"},
                {"a_hi", VT::kDouble, "1", "indicator centre range, high"},
                {"sigma_lo", VT::kDouble, "0", "indicator width range, low"},
                {"sigma_hi", VT::kDouble, "1", "indicator width range, high"},
                {"cond_limit", VT::kOptDouble, "none",
                 "discard elements whose fit exceeds this condition number"},
                {"rel_tol", VT::kDouble, "1e-12", "SVD truncation tolerance"},
                {"snapshots", VT::kIntList, "5,50,500",
                 "steps at which the residual function is written"},
            })},
      {"bounds",
       {
           {"n", VT::kIntList, "1000", "dimensions"},
           {"eps", VT::kDoubleList, "0.1", "|cos| tolerances"},
           {"theta", VT::kDoubleList, "0.1", "failure probabilities"},
       }},
      {"chains",
       with(common("20"),
            {
                {"dims", VT::kIntList, "400,800,1600", "dimensions"},
                {"tol_fraction", VT::kDouble, "0.037",
                 "band half-width as a fraction of pi/2"},
                {"theta", VT::kDouble, "0.1",
                 "failure probability of the bound overlay"},
                {"max_length", VT::kInt, "1000000", "chain length cap"},
            })},
      {"angles",
       with(common("1"),
            {
                {"n", VT::kInt, "1920", "dimension"},
                {"count", VT::kInt, "10000", "vectors per histogram"},
                {"bins", VT::kInt, "91", "histogram bins over [0, pi]"},
                {"cos_threshold", VT::kDouble, "0.1",
                 "reported fraction uses |cos| <= this"},
            })},
  };
  return s;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  if (trim(s).empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}

template <typename T>
bool parse_number(const std::string& s, T& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && first != last;
}

bool valid_double(const std::string& s) {
  double v = 0.0;
  return parse_number(s, v) && std::isfinite(v);
}

bool valid_uint(const std::string& s) {
  std::uint64_t v = 0;
  return parse_number(s, v);
}

bool valid_value(const KeySpec& spec, const std::string& value) {
  switch (spec.type) {
    case VT::kInt:
    case VT::kUInt64:
      return valid_uint(value);
    case VT::kDouble:
      return valid_double(value);
    case VT::kOptDouble:
      return value == "none" || valid_double(value);
    case VT::kString:
      return spec.choices.empty() ||
             std::find(spec.choices.begin(), spec.choices.end(), value) !=
                 spec.choices.end();
    case VT::kIntList: {
      const auto items = split_list(value);
      return std::all_of(items.begin(), items.end(), valid_uint);
    }
    case VT::kDoubleList: {
      const auto items = split_list(value);
      return std::all_of(items.begin(), items.end(), valid_double);
    }
  }
  return false;
}

const char* type_name(ValueType t) {
  switch (t) {
    case VT::kInt:
      return "int";
    case VT::kUInt64:
      return "u64";
    case VT::kDouble:
      return "double";
    case VT::kOptDouble:
      return "double|none";
    case VT::kString:
      return "string";
    case VT::kIntList:
      return "int list";
    case VT::kDoubleList:
      return "double list";
  }
  return "?";
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "greedy", "random", "const-blowup", "bounds", "chains", "angles"};
  return names;
}

const std::vector<KeySpec>& schema_for(const std::string& command) {
  const auto it = schemas().find(command);
  if (it == schemas().end()) {
    throw std::invalid_argument("unknown command '" + command + "'");
  }
  return it->second;
}

Config::Config(std::string command) : command_(std::move(command)) {
  for (const KeySpec& s : schema_for(command_)) {
    values_[s.key] = s.default_value;
  }
}

const KeySpec& Config::spec(const std::string& key) const {
  for (const KeySpec& s : schema_for(command_)) {
    if (s.key == key) return s;
  }
  throw std::invalid_argument("unknown key '" + key + "' for command " +
                              command_);
}

void Config::set(const std::string& key, const std::string& value) {
  const KeySpec& s = spec(key);
  const std::string v = trim(value);
  if (!valid_value(s, v)) {
    std::string msg = "invalid value '" + v + "' for " + key + " (expected " +
                      type_name(s.type);
    if (!s.choices.empty()) {
      msg += ":";
      for (const auto& c : s.choices) msg += " " + c;
    }
    throw std::invalid_argument(msg + ")");
  }
  values_[key] = v;
}

void Config::set_assignment(std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) {
    throw std::invalid_argument("expected key=value, got '" +
                                std::string(assignment) + "'");
  }
  set(trim(assignment.substr(0, eq)), std::string(assignment.substr(eq + 1)));
}

void Config::load_text(std::string_view text, const std::string& origin) {
  std::stringstream ss{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    try {
      set_assignment(line);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(origin + ":" + std::to_string(lineno) +
                                  ": " + e.what());
    }
  }
}

void Config::load_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot read config file " + path.string());
  }
  std::stringstream buf;
  buf << in.rdbuf();
  if (path.extension() != ".json") {
    load_text(buf.str(), path.string());
    return;
  }
  nlohmann::json manifest;
  try {
    manifest = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
  if (!manifest.contains("command") || !manifest.contains("config")) {
    throw std::invalid_argument(path.string() +
                                ": manifest lacks command or config");
  }
  if (manifest["command"].get<std::string>() != command_) {
    throw std::invalid_argument(path.string() + ": manifest is for command " +
                                manifest["command"].get<std::string>());
  }
  for (const auto& [key, value] : manifest["config"].items()) {
    set(key, value.get<std::string>());
  }
}

const std::string& Config::raw(const std::string& key, ValueType type) const {
  const KeySpec& s = spec(key);
  if (s.type != type) {
    throw std::logic_error("config key " + key + " read with the wrong type");
  }
  return values_.at(key);
}

std::uint64_t Config::get_u64(const std::string& key) const {
  std::uint64_t v = 0;
  parse_number(raw(key, VT::kUInt64), v);
  return v;
}

std::size_t Config::get_size(const std::string& key) const {
  std::size_t v = 0;
  parse_number(raw(key, VT::kInt), v);
  return v;
}

double Config::get_double(const std::string& key) const {
  double v = 0.0;
  parse_number(raw(key, VT::kDouble), v);
  return v;
}

std::optional<double> Config::get_opt_double(const std::string& key) const {
  const std::string& s = raw(key, VT::kOptDouble);
  if (s == "none") return std::nullopt;
  double v = 0.0;
  parse_number(s, v);
  return v;
}

const std::string& Config::get_string(const std::string& key) const {
  return raw(key, VT::kString);
}

std::vector<std::size_t> Config::get_size_list(const std::string& key) const {
  std::vector<std::size_t> out;
  for (const auto& item : split_list(raw(key, VT::kIntList))) {
    std::size_t v = 0;
    parse_number(item, v);
    out.push_back(v);
  }
  return out;
}

std::vector<double> Config::get_double_list(const std::string& key) const {
  std::vector<double> out;
  for (const auto& item : split_list(raw(key, VT::kDoubleList))) {
    double v = 0.0;
    parse_number(item, v);
    out.push_back(v);
  }
  return out;
}

nlohmann::json Config::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : values_) j[k] = v;
  return j;
}

std::string describe_schema(const std::string& command) {
  std::ostringstream os;
  for (const KeySpec& s : schema_for(command)) {
    os << "  " << s.key << " (" << type_name(s.type) << ", default "
       << (s.default_value.empty() ? "<empty>" : s.default_value) << ")  "
       << s.doc << "\n";
  }
  return os.str();
}

}  // namespace randbasis::experiments
