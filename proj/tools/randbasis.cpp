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

// randbasis: runs the approximation and concentration experiments.
//
//   randbasis greedy --trials 100 --out out/greedy
//   randbasis chains --config chains.cfg --workers 4
//   randbasis random --config out/random/manifest.json --out replay
//
// Flags given on the command line override the config file; --set key=value
// overrides any schema key.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "randbasis/experiments/commands.hpp"
#include "randbasis/experiments/config.hpp"

namespace ex = randbasis::experiments;

namespace {

void apply_flag(ex::Config& cfg, const std::string& key,
                const std::optional<std::string>& value) {
  if (!value) return;
  for (const ex::KeySpec& s : ex::schema_for(cfg.command())) {
    if (s.key == key) {
      cfg.set(key, *value);
      return;
    }
  }
  throw std::invalid_argument("--" + key + " does not apply to " +
                              cfg.command());
}

template <typename T>
std::optional<std::string> as_text(const std::optional<T>& v) {
  if (!v) return std::nullopt;
  return std::to_string(*v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Greedy and random-basis approximation experiments"};
  app.set_version_flag("--version", ex::kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<std::string> config_path;
  std::string out_dir = "out";
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> workers;
  std::vector<std::string> sets;
  bool describe = false;

  app.add_option("--config", config_path,
                 "key = value config file, or a manifest.json to replay");
  app.add_option("--out", out_dir, "output directory")
      ->capture_default_str();
  app.add_option("--seed", seed, "base seed (trial i uses seed + i)");
  app.add_option("--trials", trials, "number of trials");
  app.add_option("--workers", workers, "worker threads");
  app.add_option("--set", sets, "override a config key, key=value");
  app.add_flag("--describe", describe,
               "print the config schema of the subcommand and exit");

  for (const std::string& name : ex::command_names()) {
    app.add_subcommand(name, "run the " + name + " experiment");
  }

  CLI11_PARSE(app, argc, argv);

  const std::string command = app.get_subcommands().front()->get_name();
  if (describe) {
    std::cout << command << " keys:\n" << ex::describe_schema(command);
    return 0;
  }
  try {
    ex::Config cfg(command);
    if (config_path) cfg.load_file(*config_path);
    apply_flag(cfg, "seed", as_text(seed));
    apply_flag(cfg, "trials", as_text(trials));
    apply_flag(cfg, "workers", as_text(workers));
    for (const std::string& s : sets) cfg.set_assignment(s);
    ex::run_experiment(cfg, out_dir, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "randbasis " << command << ": " << e.what() << "\n";
    return 1;
  }
  return 0;
}
