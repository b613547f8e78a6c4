// Copyright 2026 The coheq Authors
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

#include "coheq_cli/commands.hpp"

#include <coheq/errors.hpp>
#include <coheq/tolerances.hpp>
#include <coheq/verify.hpp>
#include <filesystem>
#include <iostream>
#include <nlohmann/json.hpp>
#include <random>

#include "coheq_cli/config.hpp"
#include "coheq_cli/figures.hpp"
#include "coheq_cli/io.hpp"
#include "coheq_cli/record.hpp"
#include "coheq_cli/run.hpp"
#include "coheq_cli/schema.hpp"

namespace coheq::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kDefaultDensity = 1000;
constexpr int kOracleSamples = 16;

// Reports an error on stderr and, when a directory is known, in error.json.
int fail(std::ostream& err, const fs::path& dir, int code, const std::string& name,
         const std::string& message, const json& extra = json::object()) {
  json j = {{"error", name}, {"message", message}, {"exit_code", code}};
  for (const auto& [k, v] : extra.items()) j[k] = v;
  err << j.dump() << "\n";
  if (!dir.empty()) {
    try {
      write_json(dir / "error.json", j);
    } catch (const std::exception&) {
      // The stderr copy is enough when the directory itself is the problem.
    }
  }
  return code;
}

void clear_error(const fs::path& dir) {
  std::error_code ec;
  fs::remove(dir / "error.json", ec);
}

fs::path output_dir(const CommandOptions& opts, const std::string& fallback) {
  return opts.out.empty() ? fs::path(fallback) : fs::path(opts.out);
}

// Compares the reduced P_e formula with the full-H formula at random
// frequencies. The seed only drives this check.
json oracle_check(const ChannelModel& ch, const EqualizerDesign& d, std::uint64_t seed,
                  bool& ok) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> expo(-3.0, 3.0);
  std::bernoulli_distribution sign(0.5);
  double worst = 0.0;
  bool pass = true;
  const double tol = tolerances().oracle_agreement;
  for (int i = 0; i < kOracleSamples; ++i) {
    const double w = (sign(rng) ? -1.0 : 1.0) * std::pow(10.0, expo(rng));
    const double a = error_psd(ch, d.h11, w);
    const double b = error_psd_oracle(ch, d.h11, d.h12, w);
    const double diff = std::abs(a - b);
    worst = std::max(worst, diff);
    if (!(diff <= tol * (1.0 + std::abs(b)))) pass = false;
  }
  ok = pass;
  return {{"samples", kOracleSamples}, {"seed", seed}, {"max_abs_diff", worst}, {"passed", pass}};
}

}  // namespace

int cmd_design(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  ExperimentConfig cfg;
  try {
    cfg = load_config(opts.config);
  } catch (const UsageError& e) {
    return fail(err, opts.out.empty() ? fs::path() : fs::path(opts.out), kExitUsage,
                "InvalidConfig", e.what());
  }
  const fs::path dir = output_dir(opts, cfg.output_dir);
  RunOptions ro;
  ro.grid_density = opts.grid_density.value_or(kDefaultDensity);
  ro.theta = opts.theta;
  DesignRun run;
  try {
    run = run_design(cfg, ro);
  } catch (const UsageError& e) {
    return fail(err, dir, kExitUsage, "InvalidConfig", e.what());
  } catch (const Error& e) {
    return fail(err, dir, kExitSynthesis, std::string(e.name()), e.what());
  }
  try {
    write_json(dir / "design.json", design_record(run));
    write_csv(dir / "psd.csv", psd_table(run));
    write_csv(dir / "bode.csv", bode_table(run));
    if (auto sweep = sweep_table(run)) write_csv(dir / "sweep.csv", *sweep);
  } catch (const Error& e) {
    return fail(err, dir, kExitSynthesis, std::string(e.name()), e.what());
  }
  const bool passed = run.passed();
  out << json{{"passed", passed},
              {"designs", run.designs.size()},
              {"interpolants", run.interpolants.size()},
              {"output_dir", dir.string()}}
             .dump()
      << "\n";
  if (!passed) {
    return fail(err, dir, kExitVerification, "VerificationFailed",
                "one or more designs failed verification", {{"failures", run.failures()}});
  }
  clear_error(dir);
  return kExitOk;
}

int cmd_verify(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  const fs::path dir = opts.out.empty() ? fs::path() : fs::path(opts.out);
  json rec;
  ExperimentConfig cfg;
  try {
    rec = parse_json_file(opts.record);
    const auto issues = validate(design_record_schema(), rec);
    if (!issues.empty()) {
      throw UsageError("record does not match the schema: " + issues.front().path + ": " +
                       issues.front().message);
    }
    cfg = parse_config(rec.at("config"));
  } catch (const UsageError& e) {
    return fail(err, dir, kExitUsage, "InvalidRecord", e.what());
  }

  const int density =
      opts.grid_density.value_or(rec.value("verification_grid_density", kDefaultDensity));
  json report = {{"record", opts.record}, {"grid_density", density}};
  json designs = json::array();
  json interps = json::array();
  bool all_ok = true;
  std::vector<std::string> failures;
  try {
    const auto& ds = rec.at("designs");
    for (std::size_t i = 0; i < ds.size(); ++i) {
      const ChannelModel ch =
          make_channel(cfg.channel, intensities_from_json(ds[i], cfg.intensities));
      const EqualizerDesign d = design_from_json(ds[i]);
      const VerificationReport r = verify_design(ch, d, verification_grid(ch, density));
      bool oracle_ok = true;
      json j = report_to_json(r);
      j["oracle_check"] = oracle_check(ch, d, opts.seed + i, oracle_ok);
      j["passed"] = r.passed && oracle_ok;
      for (const auto& f : r.failures) failures.push_back("designs[" + std::to_string(i) + "]: " + f);
      if (!oracle_ok) failures.push_back("designs[" + std::to_string(i) + "]: oracle");
      all_ok = all_ok && r.passed && oracle_ok;
      designs.push_back(j);
    }
    const auto& hs = rec.at("interpolants");
    for (std::size_t i = 0; i < hs.size(); ++i) {
      const ChannelModel ch =
          make_channel(cfg.channel, intensities_from_json(hs[i], cfg.intensities));
      const Interpolant h = interpolant_from_json(hs[i]);
      const auto& b = hs[i].at("gamma_sq_bound");
      const double bound = b.is_number() ? b.get<double>() : std::nan("");
      const VerificationReport r = verify_interpolant(ch, h, bound, verification_grid(ch, density));
      for (const auto& f : r.failures) {
        failures.push_back("interpolants[" + std::to_string(i) + "]: " + f);
      }
      all_ok = all_ok && r.passed;
      interps.push_back(report_to_json(r));
    }
  } catch (const UsageError& e) {
    return fail(err, dir, kExitUsage, "InvalidRecord", e.what());
  } catch (const json::exception& e) {
    return fail(err, dir, kExitUsage, "InvalidRecord", e.what());
  } catch (const Error& e) {
    return fail(err, dir, kExitSynthesis, std::string(e.name()), e.what());
  }
  report["designs"] = designs;
  report["interpolants"] = interps;
  report["failures"] = failures;
  report["passed"] = all_ok;
  out << report.dump(2) << "\n";
  if (!dir.empty()) write_json(dir / "verification.json", report);
  if (!all_ok) {
    return fail(err, dir, kExitVerification, "VerificationFailed",
                "the record failed verification", {{"failures", failures}});
  }
  if (!dir.empty()) clear_error(dir);
  return kExitOk;
}

int cmd_figures(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  FigureInputs in = FigureInputs::defaults();
  std::vector<std::string> names = figure_names();
  fs::path dir = output_dir(opts, "figures");
  if (!opts.config.empty()) {
    try {
      const ExperimentConfig cfg = load_config(opts.config);
      in = FigureInputs::from_config(cfg);
      if (!cfg.figures.empty()) names = cfg.figures;
      if (opts.out.empty()) dir = cfg.output_dir;
    } catch (const UsageError& e) {
      return fail(err, output_dir(opts, ""), kExitUsage, "InvalidConfig", e.what());
    } catch (const Error& e) {
      return fail(err, dir, kExitSynthesis, std::string(e.name()), e.what());
    }
  }
  if (!opts.figures.empty()) names = opts.figures;
  if (opts.theta) in.thetas = {*opts.theta};
  json written = json::array();
  try {
    for (const auto& name : names) {
      const fs::path file = dir / (name + ".csv");
      write_csv(file, make_figure(name, in));
      written.push_back(file.string());
    }
  } catch (const UsageError& e) {
    return fail(err, dir, kExitUsage, "InvalidArgument", e.what());
  } catch (const Error& e) {
    return fail(err, dir, kExitSynthesis, std::string(e.name()), e.what());
  }
  out << json{{"figures", written}}.dump() << "\n";
  clear_error(dir);
  return kExitOk;
}

}  // namespace coheq::cli
