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

// Acceptance runner. Each criterion prints one line:
//   PASS AC<n>: <measurements> (<seconds> s)
// and the process exits non-zero when it fails.
//
//   randbasis_acceptance --criterion 4
//   randbasis_acceptance              # all of them, in order

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oracles/oracles.hpp"
#include "randbasis/chains.hpp"
#include "randbasis/concentration.hpp"
#include "randbasis/experiments/stats.hpp"
#include "randbasis/greedy.hpp"
#include "randbasis/grid_function.hpp"
#include "randbasis/least_squares.hpp"
#include "randbasis/philox.hpp"
#include "randbasis/random_basis.hpp"

namespace fs = std::filesystem;
using namespace randbasis;
using oracle::Big;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double median(std::vector<double> v) { return experiments::quantile(v, 0.5); }

double iqr(const std::vector<double>& v) {
  return experiments::quantile(v, 0.75) - experiments::quantile(v, 0.25);
}

std::vector<double> greedy_final_errors(std::size_t seeds,
                                        std::size_t n_steps, bool* bound_ok,
                                        double* worst_gap) {
  const auto target = make_grid_function(three_bump, 1000);
  std::vector<double> finals;
  for (std::uint64_t seed = 0; seed < seeds; ++seed) {
    GreedyConfig cfg;
    cfg.seed = seed;
    const GreedyRun run = run_greedy(target, n_steps, cfg);
    const ErrorTrace& t = run.trace;
    for (std::size_t n = 1; n < t.steps(); ++n) {
      const double gap = t.raw_sq[n] - t.bound_sq[n];
      if (worst_gap) *worst_gap = std::max(*worst_gap, gap);
      if (bound_ok && gap > 1e-10) *bound_ok = false;
    }
    finals.push_back(t.normalized.back());
  }
  return finals;
}

Outcome ac1() {
  bool ok = true;
  double worst = -INFINITY;
  greedy_final_errors(100, 100, &ok, &worst);
  return {ok, fmt("100 greedy runs, max(e_N^2 - bound) = %.3e (limit 1e-10)",
                  worst)};
}

RandomBasisRun random_run(std::uint64_t seed, std::size_t steps) {
  RandomBasisConfig cfg;
  cfg.seed = seed;
  cfg.n_steps = steps;
  return run_random_basis(make_grid_function(three_bump, 1000), cfg);
}

Outcome ac2() {
  const auto greedy = greedy_final_errors(100, 100, nullptr, nullptr);
  std::vector<double> random;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    random.push_back(random_run(seed, 100).trace.normalized.back());
  }
  const double g = iqr(greedy), r = iqr(random);
  return {r > g, fmt("IQR(e_100): random %.4g, greedy %.4g", r, g)};
}

Outcome ac3() {
  double worst = -INFINITY;
  std::size_t runs = 0;
  auto scan = [&](const RandomBasisRun& run) {
    const auto& e = run.trace.normalized;
    for (std::size_t n = 2; n < e.size(); ++n) {
      worst = std::max(worst, e[n] - e[n - 1]);
    }
    ++runs;
  };
  for (std::uint64_t seed = 0; seed < 100; ++seed) scan(random_run(seed, 100));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RandomBasisConfig cfg;
    cfg.family = Family::kIndicator;
    cfg.seed = seed;
    cfg.n_steps = 200;
    scan(run_random_basis(GridFunction::constant(1000, 1.0), cfg));
  }
  return {worst <= 1e-10,
          fmt("%zu runs, max increase of e_N = %.3e (slack 1e-10)", runs,
              worst)};
}

Outcome ac4() {
  std::vector<double> early, late;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RandomBasisConfig cfg;
    cfg.family = Family::kIndicator;
    cfg.seed = seed;
    cfg.n_steps = 500;
    const auto run = run_random_basis(GridFunction::constant(1000, 1.0), cfg);
    const auto& e = run.trace.normalized;
    early.push_back(e[1] - e[100]);
    late.push_back(e[100] - e[500]);
  }
  const double a = median(early), b = median(late);
  return {a > b, fmt("median(e_1 - e_100) = %.4g, median(e_100 - e_500) = %.4g",
                     a, b)};
}

Outcome ac5() {
  std::size_t checked = 0, strict = 0;
  for (int i = 0; i < 100; ++i) {
    const auto n = static_cast<std::size_t>(
        std::lround(1.0 + 9999.0 * i / 99.0));
    for (int j = 0; j < 100; ++j) {
      const double x = (j + 0.5) / 100.0;
      // 1 - a > 1 - b  <=>  log a < log b; both sides in double and in
      // 50-digit arithmetic.
      const double le = shell_fraction_exact_log_complement(n, x);
      const double lb = shell_fraction_lower_bound_log_complement(n, x);
      const Big bx(x);
      const Big big_e = Big(n) * boost::multiprecision::log1p(-bx);
      const Big big_b = -Big(n) * bx;
      ++checked;
      if (le < lb && big_e < big_b &&
          shell_fraction_exact(n, x) >= shell_fraction_lower_bound(n, x)) {
        ++strict;
      }
    }
  }
  return {strict == checked,
          fmt("%zu of %zu grid points strictly ordered", strict, checked)};
}

Outcome ac6() {
  Rng rng(6);
  std::size_t ok = 0;
  const std::size_t total = 10000;
  for (std::size_t i = 0; i < total; ++i) {
    double x = 0.0;
    while (!(x > 0.0 && x < 1.0)) x = rng.uniform01();
    try {
      if (exp_inequality_check(x).strictly_ordered()) ++ok;
    } catch (const std::exception&) {
    }
  }
  return {ok == total, fmt("%zu of %zu samples strictly ordered", ok, total)};
}

Outcome ac7() {
  constexpr double kPi = std::numbers::pi;
  double worst = 0.0;
  for (std::size_t n = 3; n <= 10000; ++n) {
    const double nd = static_cast<double>(n);
    for (double r : {0.5, 1.0, 2.0}) {
      const double v = ball_volume_log(n, r);
      const double two_step =
          std::log(2.0 * kPi * r * r / nd) + ball_volume_log(n - 2, r);
      const double one_step = std::log(r * std::sqrt(kPi)) +
                              log_gamma((nd + 1.0) / 2.0) -
                              log_gamma(nd / 2.0 + 1.0) +
                              ball_volume_log(n - 1, r);
      worst = std::max({worst, std::abs(v - two_step), std::abs(v - one_step)});
    }
  }
  Rng rng(7);
  std::size_t within = 0;
  for (int i = 0; i < 100; ++i) {
    if (stirling_gamma_with_bound(rng.uniform(1.0, 1000.0)).within_bound()) {
      ++within;
    }
  }
  return {worst <= 1e-10 && within == 100,
          fmt("max recurrence gap %.3e (limit 1e-10), Stirling bound held at "
              "%zu of 100 x",
              worst, within)};
}

Outcome ac8() {
  const BoundQuery q{1000, 0.1, 0.1};
  const double cons = quasiortho_bound_conservative(q);
  const double ref = quasiortho_bound_refined(q);
  const Big e("0.1"), t("0.1"), n(1000);
  const Big l = -boost::multiprecision::log1p(-t);
  const Big big_cons = exp(e * e * n / 4) * sqrt(l);
  const Big big_ref = sqrt(l * l / 4 + 2 * l * exp(n * e * e / 2)) - l / 2;
  const double d_cons = std::abs(cons - static_cast<double>(big_cons));
  const double d_ref = std::abs(ref - static_cast<double>(big_ref));

  double worst_slope = 0.0;
  for (std::size_t n1 : {100000u, 1000000u, 10000000u}) {
    const std::size_t n2 = 2 * n1;
    const double dn = static_cast<double>(n2 - n1);
    for (auto f : {log_quasiortho_bound_conservative,
                   log_quasiortho_bound_refined}) {
      const double slope =
          (f({n2, 0.1, 0.1}) - f({n1, 0.1, 0.1})) / dn;
      worst_slope = std::max(worst_slope, std::abs(slope - 0.01 / 4));
    }
  }
  const bool pass = std::abs(cons - 3.954) <= 1e-3 &&
                    std::abs(ref - 5.540) <= 1e-3 && d_cons <= 1e-12 &&
                    d_ref <= 1e-12 && worst_slope <= 1e-6;
  return {pass, fmt("conservative %.6f, refined %.6f, oracle gaps %.1e/%.1e, "
                    "max slope error %.2e",
                    cons, ref, d_cons, d_ref, worst_slope)};
}

Outcome ac9() {
  const double tol = 0.037 * std::numbers::pi / 2.0;
  const double eps = std::sin(tol);
  std::vector<double> medians;
  bool above = true;
  std::string detail = fmt("eps %.4f;", eps);
  for (std::size_t n : {400u, 800u, 1600u}) {
    std::vector<double> lengths;
    for (std::uint64_t i = 0; i < 20; ++i) {
      Rng rng(i, n);
      lengths.push_back(static_cast<double>(grow_chain(n, tol, rng).length));
    }
    const double med = median(lengths);
    const double bound = quasiortho_bound_conservative({n, eps, 0.1});
    above = above && med > bound;
    medians.push_back(med);
    detail += fmt(" n=%zu median %.1f bound %.3f;", n, med, bound);
  }
  const bool monotone = std::is_sorted(medians.begin(), medians.end());
  detail += monotone ? " monotone" : " not monotone";
  return {above && monotone, detail};
}

Outcome ac10() {
  Rng rng(0);
  const AngleHistogram h = angle_histogram(1920, 10000, 91, rng);
  const double frac = h.fraction_abs_cos_at_most(0.1);
  return {frac >= 0.999, fmt("fraction with |cos| <= 0.1: %.5f", frac)};
}

Outcome ac11() {
  Rng rng(11);
  std::size_t done = 0, drawn = 0;
  double worst_coeff = 0.0, worst_res = 0.0;
  while (done < 200) {
    ++drawn;
    const auto m = static_cast<std::size_t>(16 + rng.next_u64() % 49);
    const auto k = static_cast<std::size_t>(1 + rng.next_u64() % 8);
    std::vector<BasisElement> basis;
    for (std::size_t j = 0; j < k; ++j) {
      if (rng.uniform01() < 0.5) {
        basis.push_back(
            Gaussian{rng.uniform(0.0, 20.0), rng.uniform(-20.0, 0.0)});
      } else {
        basis.push_back(Indicator(rng.uniform01(), rng.uniform01()));
      }
    }
    std::vector<double> t(m);
    for (double& v : t) v = rng.normal();
    const ApproxModel fit = least_squares_fit(basis, GridFunction(t));
    if (!(fit.cond && *fit.cond <= 1e8)) continue;

    std::vector<std::vector<double>> cols;
    for (const auto& e : basis) {
      const GridFunction g = eval_basis(e, m);
      cols.emplace_back(g.values().begin(), g.values().end());
    }
    const auto big = oracle::normal_equations(cols, t);
    double err = 0.0, norm = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      const double ref = static_cast<double>(big.coeffs[j]);
      err += (fit.coeffs[j] - ref) * (fit.coeffs[j] - ref);
      norm += ref * ref;
    }
    const double rc = norm > 0.0 ? std::sqrt(err / norm) : std::sqrt(err);
    const double ref_res = static_cast<double>(big.residual_sq);
    const double rr = std::abs(fit.residual_sq - ref_res) / ref_res;
    worst_coeff = std::max(worst_coeff, rc);
    worst_res = std::max(worst_res, rr);
    ++done;
  }
  return {worst_coeff <= 1e-8 && worst_res <= 1e-8,
          fmt("%zu instances (%zu drawn), max relative error coeffs %.2e, "
              "residual %.2e",
              done, drawn, worst_coeff, worst_res)};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(RANDBASIS_CLI) + " " + args +
                          " > /dev/null 2>&1";
  return std::system(cmd.c_str());
}

Outcome ac12() {
  const fs::path root = fs::temp_directory_path() / "randbasis_ac12";
  fs::remove_all(root);
  const std::vector<std::pair<std::string, std::string>> experiments = {
      {"greedy", "--trials 6 --set n_steps=30 --set grid_size=300"},
      {"random", "--trials 6 --set n_steps=40 --set grid_size=300"},
      {"const-blowup",
       "--trials 4 --set n_steps=60 --set grid_size=300 --set snapshots=5,60"},
      {"bounds", ""},
      {"chains", "--trials 6 --set dims=100,200"},
      {"angles", "--trials 3 --set count=2000"},
  };
  std::size_t compared = 0;
  std::vector<std::string> bad;
  for (const auto& [command, extra] : experiments) {
    const fs::path first = root / command / "first";
    const std::string seeded =
        command == "bounds" ? "" : " --seed 17 --workers 1";
    if (run_cli(command + seeded + " " + extra + " --out " + first.string()) !=
        0) {
      bad.push_back(command + " (run failed)");
      continue;
    }
    for (int workers : {1, 2, 4}) {
      const fs::path replay = root / command / ("w" + std::to_string(workers));
      const std::string worker_flag =
          command == "bounds" ? "" : " --workers " + std::to_string(workers);
      if (run_cli(command + " --config " + (first / "manifest.json").string() +
                  worker_flag + " --out " + replay.string()) != 0) {
        bad.push_back(command + " (replay failed)");
        continue;
      }
      for (const auto& entry : fs::directory_iterator(first)) {
        if (entry.path().extension() != ".csv") continue;
        const fs::path other = replay / entry.path().filename();
        ++compared;
        if (!fs::exists(other) || slurp(entry.path()) != slurp(other)) {
          bad.push_back(command + "/" + entry.path().filename().string());
        }
      }
    }
  }
  std::string detail = fmt("%zu CSV files compared", compared);
  for (const auto& b : bad) detail += ", mismatch " + b;
  return {bad.empty() && compared > 0, detail};
}

const std::vector<std::function<Outcome()>> kCriteria = {
    ac1, ac2, ac3, ac4, ac5, ac6, ac7, ac8, ac9, ac10, ac11, ac12};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"randbasis acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion (1-12)")
      ->check(CLI::Range(1, static_cast<int>(kCriteria.size())));
  CLI11_PARSE(app, argc, argv);

  bool all_pass = true;
  for (std::size_t i = 0; i < kCriteria.size(); ++i) {
    if (only != 0 && static_cast<int>(i + 1) != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = kCriteria[i]();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    std::printf("%s AC%zu: %s (%.1f s)\n", out.pass ? "PASS" : "FAIL", i + 1,
                out.detail.c_str(), secs);
    std::fflush(stdout);
    all_pass = all_pass && out.pass;
  }
  return all_pass ? 0 : 1;
}
