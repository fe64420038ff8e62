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

#include "randbasis/experiments/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <numbers>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "randbasis/chains.hpp"
#include "randbasis/concentration.hpp"
#include "randbasis/experiments/stats.hpp"
#include "randbasis/experiments/svg.hpp"
#include "randbasis/greedy.hpp"
#include "randbasis/random_basis.hpp"

namespace randbasis::experiments {
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::vector<std::string> kTraceHeader = {
    "step", "raw_sq", "normalized", "bound_sq", "alpha", "cond", "basis_size"};

const std::vector<std::string> kBoxHeader = {
    "count",      "median",     "q1",   "q3",  "whisker_lo",
    "whisker_hi", "mean",       "max",  "n_outliers"};

void add_box(CsvWriter& w, const BoxStats& b) {
  w.add(b.count)
      .add(b.median)
      .add(b.q1)
      .add(b.q3)
      .add(b.whisker_lo)
      .add(b.whisker_hi)
      .add(b.mean)
      .add(b.max)
      .add(b.outliers.size());
}

std::vector<std::string> concat(std::vector<std::string> a,
                                const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Per-trial bookkeeping shared by every command.
struct TrialRecord {
  std::uint64_t seed = 0;
  bool ok = false;
  std::string error;
  json extra = json::object();
};

json trial_json(std::size_t index, const TrialRecord& r) {
  json j = {{"index", index},
            {"seed", r.seed},
            {"status", r.ok ? "ok" : "error"}};
  if (!r.ok) j["error"] = r.error;
  for (const auto& [k, v] : r.extra.items()) j[k] = v;
  return j;
}

// Runs fn for every trial index, catching per-trial failures.
void run_trials(std::vector<TrialRecord>& records, std::size_t workers,
                const std::function<void(std::size_t, TrialRecord&)>& fn) {
  parallel_for(records.size(), workers, [&](std::size_t i) {
    try {
      fn(i, records[i]);
      records[i].ok = true;
    } catch (const std::exception& e) {
      records[i].ok = false;
      records[i].error = e.what();
    }
  });
}

GridFunction make_target(const Config& cfg) {
  const std::size_t m = cfg.get_size("grid_size");
  if (cfg.get_string("target") == "constant") {
    return GridFunction::constant(m, 1.0);
  }
  return make_grid_function(three_bump, m);
}

void write_trace(const fs::path& path, const ErrorTrace& t) {
  CsvWriter w(kTraceHeader);
  for (std::size_t s = 1; s < t.steps(); ++s) {
    w.add(s).add(t.raw_sq[s]).add(t.normalized[s]);
    w.add(s < t.bound_sq.size() ? format_double(t.bound_sq[s]) : "");
    w.add(s < t.alphas.size() ? format_double(t.alphas[s]) : "");
    w.add(s < t.cond.size() ? format_double(t.cond[s]) : "");
    w.add(t.basis_size[s]);
    w.end_row();
  }
  w.save(path);
}

std::vector<double> tail_from_step_one(const std::vector<double>& v) {
  if (v.size() <= 1) return {};
  return std::vector<double>(v.begin() + 1, v.end());
}

void write_json(const fs::path& path, const json& j) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << "\n";
}

json base_manifest(const Config& cfg) {
  return {{"tool", "randbasis"},
          {"version", kVersion},
          {"command", cfg.command()},
          {"config", cfg.to_json()}};
}

// Box plot of normalized error against step, thinned to about 25 boxes,
// with the median of every step and an optional bound curve.
PlotSpec convergence_plot(const std::string& title,
                          const std::vector<std::vector<double>>& series,
                          const std::vector<double>& bound) {
  PlotSpec p;
  p.title = title;
  p.x_label = "step N";
  p.y_label = "normalized squared error";
  p.log_y = true;
  std::size_t steps = 0;
  for (const auto& s : series) steps = std::max(steps, s.size());
  const std::size_t stride = std::max<std::size_t>(1, steps / 25);
  LineSeries median{"median", {}, {}, "#1f77b4"};
  for (std::size_t s = 0; s < steps; ++s) {
    std::vector<double> col;
    for (const auto& t : series) {
      if (s < t.size()) col.push_back(t[s]);
    }
    const BoxStats b = box_stats(col);
    median.x.push_back(static_cast<double>(s + 1));
    median.y.push_back(b.median);
    if ((s + 1) % stride == 0 || s == 0) {
      p.boxes.x.push_back(static_cast<double>(s + 1));
      p.boxes.boxes.push_back(b);
    }
  }
  p.boxes.width = 0.6 * static_cast<double>(stride);
  p.lines.push_back(median);
  if (!bound.empty()) {
    LineSeries bl{"bound", {}, bound, "#d62728", true};
    for (std::size_t s = 0; s < bound.size(); ++s) {
      bl.x.push_back(static_cast<double>(s + 1));
    }
    p.lines.push_back(bl);
  }
  return p;
}

struct TraceCommandResult {
  std::vector<std::vector<double>> normalized;
  std::vector<double> bound;
};

void finish_trace_command(const fs::path& out,
                          const std::vector<TrialRecord>& records,
                          const TraceCommandResult& res,
                          const std::string& title, json& manifest) {
  std::vector<std::vector<double>> ok;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (records[i].ok) ok.push_back(res.normalized[i]);
  }
  step_summary(ok, res.bound).save(out / "summary.csv");
  save_svg(out / "convergence.svg", convergence_plot(title, ok, res.bound));
  manifest["trials"] = json::array();
  for (std::size_t i = 0; i < records.size(); ++i) {
    manifest["trials"].push_back(trial_json(i, records[i]));
    if (records[i].ok) {
      manifest["trials"].back()["file"] = numbered_file("trace", i, ".csv");
    }
  }
}

json cmd_greedy(const Config& cfg, const fs::path& out) {
  GreedyConfig g;
  g.m_prime = cfg.get_double("m_prime");
  g.m_dprime = cfg.get_double("m_dprime");
  g.sel_eps = cfg.get_double("sel_eps");
  g.w_range = {cfg.get_double("w_lo"), cfg.get_double("w_hi")};
  g.b_range = {cfg.get_double("b_lo"), cfg.get_double("b_hi")};
  g.max_draws = cfg.get_u64("max_draws");
  g.grid_size = cfg.get_size("grid_size");
  g.rule = parse_selection_rule(cfg.get_string("rule"));
  g.validate();
  const GridFunction target = make_target(cfg);
  const std::size_t n_steps = cfg.get_size("n_steps");
  const std::uint64_t seed = cfg.get_u64("seed");

  std::vector<TrialRecord> records(cfg.get_size("trials"));
  TraceCommandResult res;
  res.normalized.resize(records.size());
  run_trials(records, cfg.get_size("workers"),
             [&](std::size_t i, TrialRecord& rec) {
               rec.seed = seed + i;
               GreedyConfig gi = g;
               gi.seed = rec.seed;
               const GreedyRun run = run_greedy(target, n_steps, gi);
               write_trace(out / numbered_file("trace", i, ".csv"), run.trace);
               res.normalized[i] = tail_from_step_one(run.trace.normalized);
               rec.extra["stalled"] = run.stalled;
               if (run.stalled) rec.extra["stall_step"] = run.stall_step;
               rec.extra["total_draws"] = run.total_draws;
             });

  const double e0_sq = l2_norm_sq(target);
  for (std::size_t n = 1; n <= n_steps; ++n) {
    res.bound.push_back(greedy_bound_sq(n, e0_sq, g.m_prime) / e0_sq);
  }
  json manifest = base_manifest(cfg);
  finish_trace_command(out, records, res, "Greedy approximation",
                       manifest);
  return manifest;
}

RandomBasisConfig random_config(const Config& cfg, Family family) {
  RandomBasisConfig r;
  r.family = family;
  if (family == Family::kGaussian) {
    r.w_range = {cfg.get_double("w_lo"), cfg.get_double("w_hi")};
    r.b_range = {cfg.get_double("b_lo"), cfg.get_double("b_hi")};
  }
  r.a_range = {cfg.get_double("a_lo"), cfg.get_double("a_hi")};
  r.sigma_range = {cfg.get_double("sigma_lo"), cfg.get_double("sigma_hi")};
  r.n_steps = cfg.get_size("n_steps");
  r.grid_size = cfg.get_size("grid_size");
  r.cond_limit = cfg.get_opt_double("cond_limit");
  r.rel_tol = cfg.get_double("rel_tol");
  r.validate();
  return r;
}

std::size_t count_discarded(const std::vector<bool>& d) {
  return static_cast<std::size_t>(std::count(d.begin(), d.end(), true));
}

json cmd_random(const Config& cfg, const fs::path& out) {
  const RandomBasisConfig r =
      random_config(cfg, parse_family(cfg.get_string("family")));
  const GridFunction target = make_target(cfg);
  const std::uint64_t seed = cfg.get_u64("seed");

  std::vector<TrialRecord> records(cfg.get_size("trials"));
  TraceCommandResult res;
  res.normalized.resize(records.size());
  run_trials(records, cfg.get_size("workers"),
             [&](std::size_t i, TrialRecord& rec) {
               rec.seed = seed + i;
               RandomBasisConfig ri = r;
               ri.seed = rec.seed;
               const RandomBasisRun run = run_random_basis(target, ri);
               write_trace(out / numbered_file("trace", i, ".csv"), run.trace);
               res.normalized[i] = tail_from_step_one(run.trace.normalized);
               rec.extra["discarded"] = count_discarded(run.discarded);
             });
  json manifest = base_manifest(cfg);
  finish_trace_command(out, records, res, "Random basis approximation",
                       manifest);
  return manifest;
}

json cmd_const_blowup(const Config& cfg, const fs::path& out) {
  const RandomBasisConfig r = random_config(cfg, Family::kIndicator);
  const std::vector<std::size_t> snapshots = cfg.get_size_list("snapshots");
  const std::uint64_t seed = cfg.get_u64("seed");
  const std::size_t m = r.grid_size;

  std::vector<TrialRecord> records(cfg.get_size("trials"));
  TraceCommandResult res;
  res.normalized.resize(records.size());
  std::vector<std::vector<ResidualSnapshot>> kept(records.size());
  run_trials(records, cfg.get_size("workers"),
             [&](std::size_t i, TrialRecord& rec) {
               rec.seed = seed + i;
               RandomBasisConfig ri = r;
               ri.seed = rec.seed;
               BlowupRun b = run_constant_blowup(ri, snapshots);
               write_trace(out / numbered_file("trace", i, ".csv"),
                           b.run.trace);
               res.normalized[i] = tail_from_step_one(b.run.trace.normalized);
               rec.extra["discarded"] = count_discarded(b.run.discarded);
               json snaps = json::array();
               for (const ResidualSnapshot& s : b.snapshots) {
                 char name[64];
                 std::snprintf(name, sizeof name, "residual_%03zu_step_%zu.csv",
                               i, s.step);
                 CsvWriter w({"x", "residual"});
                 double max_abs = 0.0;
                 for (std::size_t k = 0; k < m; ++k) {
                   w.add(GridFunction::node(k, m)).add(s.residual[k]);
                   w.end_row();
                   max_abs = std::max(max_abs, std::abs(s.residual[k]));
                 }
                 w.save(out / name);
                 snaps.push_back({{"step", s.step},
                                  {"file", name},
                                  {"sign_changes",
                                   count_sign_changes(s.residual)},
                                  {"max_abs", max_abs}});
               }
               rec.extra["snapshots"] = snaps;
               kept[i] = std::move(b.snapshots);
             });
  json manifest = base_manifest(cfg);
  finish_trace_command(out, records, res,
                       "Indicator approximation of a constant", manifest);

  for (std::size_t i = 0; i < records.size(); ++i) {
    if (!records[i].ok || kept[i].empty()) continue;
    PlotSpec p;
    p.title = "Residual 1 - f_N, trial " + std::to_string(i);
    p.x_label = "x";
    p.y_label = "residual";
    const char* colors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                            "#9467bd"};
    for (std::size_t j = 0; j < kept[i].size(); ++j) {
      LineSeries s{"N = " + std::to_string(kept[i][j].step), {}, {},
                   colors[j % 5]};
      for (std::size_t k = 0; k < m; ++k) {
        s.x.push_back(GridFunction::node(k, m));
        s.y.push_back(kept[i][j].residual[k]);
      }
      p.lines.push_back(std::move(s));
    }
    save_svg(out / "residuals.svg", p);
    break;
  }
  return manifest;
}

json cmd_bounds(const Config& cfg, const fs::path& out) {
  CsvWriter w({"n", "eps", "theta", "conservative", "refined",
               "log_conservative", "log_refined", "p_at_conservative",
               "p_lower_at_conservative"});
  for (std::size_t n : cfg.get_size_list("n")) {
    for (double eps : cfg.get_double_list("eps")) {
      for (double theta : cfg.get_double_list("theta")) {
        const BoundQuery q{n, eps, theta};
        q.validate();
        const double cons = quasiortho_bound_conservative(q);
        w.add(n).add(eps).add(theta).add(cons);
        w.add(quasiortho_bound_refined(q));
        w.add(log_quasiortho_bound_conservative(q));
        w.add(log_quasiortho_bound_refined(q));
        // P(eps, N) at N = floor(conservative), when the product is defined.
        std::optional<double> p;
        std::optional<double> lower;
        if (std::isfinite(cons) && cons < 1e7) {
          const auto count = static_cast<std::size_t>(std::floor(cons));
          try {
            p = pairwise_orthogonality_probability(n, eps, count);
            lower = pairwise_orthogonality_lower_bound(n, eps, count);
          } catch (const std::domain_error&) {
          }
        }
        w.add_optional(p).add_optional(lower);
        w.end_row();
      }
    }
  }
  w.save(out / "bounds.csv");
  json manifest = base_manifest(cfg);
  manifest["rows"] = w.rows();
  return manifest;
}

json cmd_chains(const Config& cfg, const fs::path& out) {
  const std::vector<std::size_t> dims = cfg.get_size_list("dims");
  const double tol = cfg.get_double("tol_fraction") * std::numbers::pi / 2.0;
  if (!(tol > 0.0 && tol < std::numbers::pi / 2.0)) {
    throw std::invalid_argument("tol_fraction must lie in (0, 1)");
  }
  for (std::size_t n : dims) {
    if (n < 1) throw std::invalid_argument("dims must be >= 1");
  }
  const double eps = std::sin(tol);
  const double theta = cfg.get_double("theta");
  const std::size_t trials = cfg.get_size("trials");
  const std::size_t max_length = cfg.get_size("max_length");
  const std::uint64_t seed = cfg.get_u64("seed");

  std::vector<TrialRecord> records(dims.size() * trials);
  std::vector<ChainResult> chains(records.size());
  run_trials(records, cfg.get_size("workers"),
             [&](std::size_t idx, TrialRecord& rec) {
               const std::size_t n = dims[idx / trials];
               rec.seed = seed + idx % trials;
               Rng rng(rec.seed, n);
               chains[idx] = grow_chain(n, tol, rng, max_length);
               rec.extra["n"] = n;
               rec.extra["length"] = chains[idx].length;
               rec.extra["capped"] = chains[idx].capped;
             });

  CsvWriter raw({"n", "trial", "seed", "length", "capped"});
  CsvWriter summary(concat(concat({"n"}, kBoxHeader),
                           {"capped", "eps", "theta", "bound_conservative",
                            "bound_refined"}));
  PlotSpec p;
  p.title = "Quasi-orthogonal chain length";
  p.x_label = "dimension n";
  p.y_label = "chain length";
  p.boxes.show_mean = true;
  for (std::size_t j = 0; j < dims.size(); ++j) {
    std::vector<double> lengths;
    std::size_t capped = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      const std::size_t idx = j * trials + t;
      if (!records[idx].ok) continue;
      raw.add(dims[j]).add(t).add(std::to_string(records[idx].seed));
      raw.add(chains[idx].length).add(chains[idx].capped ? "1" : "0");
      raw.end_row();
      lengths.push_back(static_cast<double>(chains[idx].length));
      if (chains[idx].capped) ++capped;
    }
    const BoxStats b = box_stats(lengths);
    const BoundQuery q{dims[j], eps, theta};
    summary.add(dims[j]);
    add_box(summary, b);
    summary.add(capped).add(eps).add(theta);
    summary.add(quasiortho_bound_conservative(q));
    summary.add(quasiortho_bound_refined(q));
    summary.end_row();
    p.boxes.x.push_back(static_cast<double>(dims[j]));
    p.boxes.boxes.push_back(b);
  }
  raw.save(out / "chains.csv");
  summary.save(out / "summary.csv");

  if (!dims.empty()) {
    const auto [lo, hi] = std::minmax_element(dims.begin(), dims.end());
    double gap = static_cast<double>(*hi - *lo);
    std::vector<std::size_t> sorted(dims);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t j = 1; j < sorted.size(); ++j) {
      if (sorted[j] > sorted[j - 1]) {
        gap = std::min(gap, static_cast<double>(sorted[j] - sorted[j - 1]));
      }
    }
    p.boxes.width = gap > 0 ? 0.4 * gap : 10.0;
    LineSeries cons{"conservative bound", {}, {}, "#d62728", true};
    LineSeries refined{"refined bound", {}, {}, "#9467bd", true};
    for (int s = 0; s <= 100; ++s) {
      const double n = static_cast<double>(*lo) +
                       (static_cast<double>(*hi - *lo)) * s / 100.0;
      const BoundQuery q{static_cast<std::size_t>(std::lround(n)), eps, theta};
      cons.x.push_back(n);
      cons.y.push_back(quasiortho_bound_conservative(q));
      refined.x.push_back(n);
      refined.y.push_back(quasiortho_bound_refined(q));
    }
    p.lines = {cons, refined};
  }
  save_svg(out / "chains.svg", p);

  json manifest = base_manifest(cfg);
  manifest["trials"] = json::array();
  for (std::size_t i = 0; i < records.size(); ++i) {
    manifest["trials"].push_back(trial_json(i, records[i]));
  }
  return manifest;
}

json cmd_angles(const Config& cfg, const fs::path& out) {
  const std::size_t n = cfg.get_size("n");
  const std::size_t count = cfg.get_size("count");
  const std::size_t bins = cfg.get_size("bins");
  const double threshold = cfg.get_double("cos_threshold");
  const std::uint64_t seed = cfg.get_u64("seed");
  std::vector<TrialRecord> records(cfg.get_size("trials"));
  std::vector<AngleHistogram> hists(records.size());
  run_trials(records, cfg.get_size("workers"),
             [&](std::size_t i, TrialRecord& rec) {
               rec.seed = seed + i;
               Rng rng(rec.seed);
               hists[i] = angle_histogram(n, count, bins, rng);
               CsvWriter w({"bin", "lo", "hi", "count"});
               for (std::size_t b = 0; b < bins; ++b) {
                 w.add(b).add(hists[i].bin_lo(b)).add(hists[i].bin_lo(b + 1));
                 w.add(hists[i].counts[b]);
                 w.end_row();
               }
               w.save(out / numbered_file("hist", i, ".csv"));
             });

  CsvWriter summary({"trial", "seed", "n", "count", "fraction_abs_cos_le",
                     "cos_threshold", "mode_lo", "mode_hi", "mean_angle"});
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (!records[i].ok) continue;
    const AngleHistogram& h = hists[i];
    const auto mode = static_cast<std::size_t>(
        std::max_element(h.counts.begin(), h.counts.end()) - h.counts.begin());
    double sum = 0.0;
    for (double a : h.angles) sum += a;
    summary.add(i).add(std::to_string(records[i].seed)).add(n).add(h.total());
    summary.add(h.fraction_abs_cos_at_most(threshold)).add(threshold);
    summary.add(h.bin_lo(mode)).add(h.bin_lo(mode + 1));
    summary.add(sum / static_cast<double>(h.angles.size()));
    summary.end_row();
  }
  summary.save(out / "summary.csv");

  for (std::size_t i = 0; i < records.size(); ++i) {
    if (!records[i].ok) continue;
    PlotSpec p;
    p.title = "Angles to a reference vector, n = " + std::to_string(n);
    p.x_label = "angle (rad)";
    p.y_label = "count";
    for (std::size_t b = 0; b < bins; ++b) {
      p.bars.push_back({hists[i].bin_lo(b), hists[i].bin_lo(b + 1),
                        static_cast<double>(hists[i].counts[b])});
    }
    p.x_markers.push_back(std::numbers::pi / 2.0);
    save_svg(out / "angles.svg", p);
    break;
  }

  json manifest = base_manifest(cfg);
  manifest["trials"] = json::array();
  for (std::size_t i = 0; i < records.size(); ++i) {
    manifest["trials"].push_back(trial_json(i, records[i]));
    if (records[i].ok) {
      manifest["trials"].back()["file"] = numbered_file("hist", i, ".csv");
    }
  }
  return manifest;
}

}  // namespace

void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t)>& fn) {
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(count, 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::string numbered_file(const std::string& prefix, std::size_t index,
                          const std::string& extension) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%03zu", index);
  return prefix + "_" + buf + extension;
}

CsvWriter step_summary(const std::vector<std::vector<double>>& series,
                       const std::vector<double>& bound) {
  CsvWriter w(concat(concat({"step"}, kBoxHeader), {"bound"}));
  std::size_t steps = bound.size();
  for (const auto& s : series) steps = std::max(steps, s.size());
  for (std::size_t s = 0; s < steps; ++s) {
    std::vector<double> col;
    for (const auto& t : series) {
      if (s < t.size()) col.push_back(t[s]);
    }
    w.add(s + 1);
    add_box(w, box_stats(col));
    w.add(s < bound.size() ? format_double(bound[s]) : "");
    w.end_row();
  }
  return w;
}

json run_experiment(const Config& config, const fs::path& out_dir,
                    std::ostream& log) {
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec || !fs::is_directory(out_dir)) {
    throw std::runtime_error("cannot create output directory " +
                             out_dir.string() +
                             (ec ? ": " + ec.message() : ""));
  }
  const std::string& c = config.command();
  json manifest;
  if (c == "greedy") {
    manifest = cmd_greedy(config, out_dir);
  } else if (c == "random") {
    manifest = cmd_random(config, out_dir);
  } else if (c == "const-blowup") {
    manifest = cmd_const_blowup(config, out_dir);
  } else if (c == "bounds") {
    manifest = cmd_bounds(config, out_dir);
  } else if (c == "chains") {
    manifest = cmd_chains(config, out_dir);
  } else if (c == "angles") {
    manifest = cmd_angles(config, out_dir);
  } else {
    throw std::invalid_argument("unknown command '" + c + "'");
  }
  write_json(out_dir / "manifest.json", manifest);

  std::size_t failed = 0;
  if (manifest.contains("trials")) {
    for (const auto& t : manifest["trials"]) {
      if (t["status"] != "ok") ++failed;
    }
    log << c << ": " << manifest["trials"].size() - failed << " of "
        << manifest["trials"].size() << " trials ok";
  } else {
    log << c << ": done";
  }
  log << ", output in " << out_dir.string() << "\n";
  return manifest;
}

}  // namespace randbasis::experiments
