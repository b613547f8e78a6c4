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

#include "coheq_cli/run.hpp"

#include <cmath>
#include <coheq/errors.hpp>
#include <coheq/nevpick.hpp>
#include <coheq/norms.hpp>
#include <coheq/synthesis.hpp>
#include <coheq/tolerances.hpp>
#include <coheq/verify.hpp>
#include <limits>
#include <set>

namespace coheq::cli {

using nlohmann::json;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Default distance above the optimum for jspectral runs on static channels.
constexpr double kStaticJspectralGap = 1e-3;

std::vector<double> thetas_for(const DesignRun& run) {
  if (run.options.theta) return {*run.options.theta};
  return run.config.thetas;
}

void add_design(DesignRun& run, const ChannelModel& ch, EqualizerDesign d) {
  const FrequencyGrid grid = verification_grid(ch, run.options.grid_density);
  VerificationReport rep = verify_design(ch, d, grid);
  run.designs.push_back({std::move(d), ch.intensities(), std::move(rep)});
}

void closed_form(DesignRun& run, const ChannelModel& ch) {
  const ExperimentConfig& cfg = run.config;
  if (ch.kind() == ChannelKind::Static) {
    add_design(run, ch, static_optimal(ch));
    return;
  }
  const std::vector<double> thetas = thetas_for(run);
  if (cfg.gamma_sq) {
    const std::vector<double> ts = thetas.empty() ? std::vector{-1.0 + cfg.theta_offset} : thetas;
    for (double th : ts) add_design(run, ch, cavity_suboptimal(ch, *cfg.gamma_sq, th));
    return;
  }
  if (thetas.empty()) {
    add_design(run, ch, cavity_gamma_search(ch, cfg.theta_offset).design);
    return;
  }
  for (double th : thetas) add_design(run, ch, cavity_gamma_search(ch, 1.0 + th).design);
}

void jspectral(DesignRun& run, const ChannelModel& ch) {
  const ExperimentConfig& cfg = run.config;
  const bool is_static = ch.kind() == ChannelKind::Static;
  double gamma_sq = 0.0;
  if (cfg.gamma_sq) {
    gamma_sq = *cfg.gamma_sq;
  } else if (is_static) {
    gamma_sq = *static_optimal(ch).attained_cost + kStaticJspectralGap;
  } else {
    gamma_sq = cavity_gamma_search(ch, cfg.theta_offset).gamma_sq;
  }
  std::vector<double> thetas = thetas_for(run);
  if (thetas.empty()) thetas = {is_static ? 0.0 : -1.0 + cfg.theta_offset};
  for (double th : thetas) {
    EqualizerDesign d = jspectral_design(ch, gamma_sq, RationalFunction(th));
    d.parameters["theta"] = th;
    add_design(run, ch, std::move(d));
  }
}

void sdp_nevpick(DesignRun& run, const ChannelModel& ch) {
  const ExperimentConfig& cfg = run.config;
  std::vector<double> thetas = thetas_for(run);
  if (thetas.empty()) thetas = {-0.95, 0.0, 0.95};
  NevpickDesign nd = sdp_nevpick_design(ch, node_grid(cfg), thetas, cfg.tau);
  const FrequencyGrid grid = verification_grid(ch, run.options.grid_density);
  const double margin = tolerances().bound_margin;
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    if (nd.completed[i]) {
      add_design(run, ch, std::move(*nd.completed[i]));
      continue;
    }
    // Interpolant-only: the bound is a posteriori, from the dense search.
    const double bound = nd.dense_sup_psd[i] * (1.0 + margin) + margin;
    VerificationReport rep = verify_interpolant(ch, nd.interpolants[i], bound, grid);
    run.interpolants.push_back({nd.interpolants[i], ch.intensities(), bound, std::move(rep)});
  }
  run.grid = std::move(nd.grid);
  run.pick = std::move(nd.pick);
}

void synthesize(DesignRun& run, const ChannelModel& ch) {
  const std::string& m = run.config.method;
  if (m == "closed_form") {
    closed_form(run, ch);
  } else if (m == "jspectral") {
    jspectral(run, ch);
  } else {
    sdp_nevpick(run, ch);
  }
}

bool many_thetas(const DesignRun& run) {
  std::set<double> seen;
  for (const auto& d : run.designs) seen.insert(design_theta(d.design));
  for (const auto& h : run.interpolants) seen.insert(h.interpolant.theta().gain().real());
  return seen.size() > 1 || run.config.theta_sweep;
}

double phase(cplx z) { return std::arg(z); }

}  // namespace

bool DesignRun::passed() const {
  for (const auto& d : designs) {
    if (!d.report.passed) return false;
  }
  for (const auto& h : interpolants) {
    if (!h.report.passed) return false;
  }
  return !designs.empty() || !interpolants.empty();
}

std::vector<std::string> DesignRun::failures() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < designs.size(); ++i) {
    for (const auto& f : designs[i].report.failures) {
      out.push_back("designs[" + std::to_string(i) + "]: " + f);
    }
  }
  for (std::size_t i = 0; i < interpolants.size(); ++i) {
    for (const auto& f : interpolants[i].report.failures) {
      out.push_back("interpolants[" + std::to_string(i) + "]: " + f);
    }
  }
  return out;
}

double design_theta(const EqualizerDesign& d) {
  auto it = d.parameters.find("theta");
  return it == d.parameters.end() ? kNaN : it->second;
}

DesignRun run_design(const ExperimentConfig& cfg, const RunOptions& opts) {
  DesignRun run;
  run.config = cfg;
  run.options = opts;
  if (cfg.sweep) {
    if (cfg.method == "sdp_nevpick") {
      throw UsageError("sweeps are supported for closed_form and jspectral only");
    }
    for (double sw : cfg.sweep->values) {
      FieldIntensities fi = cfg.intensities;
      fi.sigma_w_sq = sw;
      synthesize(run, make_channel(cfg.channel, fi));
    }
  } else {
    synthesize(run, make_channel(cfg));
  }
  return run;
}

FrequencyGrid plot_grid(const ChannelModel& ch) {
  return FrequencyGrid::log_symmetric(1e-3, 1e3, 200, true).merged(ch.special_frequencies());
}

double sup_unequalized_psd(const ChannelModel& ch) {
  return sup_real_on_axis(error_psd_rational(ch, RationalFunction(1.0))).value;
}

json design_record(const DesignRun& run) {
  json rec;
  rec["format"] = kRecordFormat;
  rec["config"] = run.config.raw;
  rec["tolerance_profile"] = tolerances().profile;
  rec["verification_grid_density"] = run.options.grid_density;
  if (run.options.theta) rec["theta_override"] = *run.options.theta;
  json designs = json::array();
  for (const auto& d : run.designs) designs.push_back(design_to_json(d));
  rec["designs"] = designs;
  json interps = json::array();
  for (const auto& h : run.interpolants) interps.push_back(interpolant_to_json(h));
  rec["interpolants"] = interps;
  if (run.grid) {
    const GridSolution& g = *run.grid;
    json values = json::array();
    for (const cplx& v : g.h11_values) values.push_back(complex_to_json(v));
    json boundary = json::array();
    for (bool b : g.on_boundary) boundary.push_back(b);
    rec["grid_solution"] = {{"omegas", g.omegas.points()},
                            {"h11_values", values},
                            {"per_freq_cost", g.per_freq_cost},
                            {"on_boundary", boundary},
                            {"gamma_tilde_sq", g.gamma_tilde_sq},
                            {"trivial", g.trivial},
                            {"degenerate_nodes", g.degenerate_nodes}};
    rec["gamma_tilde_sq"] = g.gamma_tilde_sq;
  }
  if (run.pick) {
    rec["pick"] = {{"tau", run.pick->tau},
                   {"min_eigenvalue", run.pick->min_eigenvalue},
                   {"positive_definite", run.pick->positive_definite},
                   {"nodes", run.pick->nodes.size()}};
  }
  rec["passed"] = run.passed();
  return rec;
}

CsvTable psd_table(const DesignRun& run) {
  const bool sweep = run.config.sweep.has_value();
  const bool thetas = many_thetas(run);
  std::vector<std::string> head;
  if (sweep) head.push_back("sigma_w_sq");
  if (thetas) head.push_back("theta");
  for (const char* c : {"omega", "P_e", "P_y_minus_u", "gamma_sq"}) head.emplace_back(c);
  CsvTable t(head);
  const auto emit = [&](const ChannelModel& ch, double theta, double bound, auto&& h_at) {
    for (double w : plot_grid(ch)) {
      std::vector<double> row;
      if (sweep) row.push_back(ch.sigma_w_sq());
      if (thetas) row.push_back(theta);
      row.push_back(w);
      row.push_back(error_psd_value(ch, h_at(w), w));
      row.push_back(unequalized_psd(ch, w));
      row.push_back(bound);
      t.add_row(row);
    }
  };
  for (const auto& d : run.designs) {
    const ChannelModel ch = make_channel(run.config.channel, d.intensities);
    emit(ch, design_theta(d.design), d.design.gamma_sq_bound,
         [&](double w) { return d.design.h11.on_axis(w); });
  }
  for (const auto& h : run.interpolants) {
    const ChannelModel ch = make_channel(run.config.channel, h.intensities);
    emit(ch, h.interpolant.theta().gain().real(), h.gamma_sq_bound,
         [&](double w) { return h.interpolant.on_axis(w); });
  }
  return t;
}

CsvTable bode_table(const DesignRun& run) {
  const bool sweep = run.config.sweep.has_value();
  const bool thetas = many_thetas(run);
  std::vector<std::string> head;
  if (sweep) head.push_back("sigma_w_sq");
  if (thetas) head.push_back("theta");
  head.push_back("omega");
  for (const char* b : {"h11", "h12", "h21", "h22"}) {
    head.push_back(std::string("mag_") + b);
    head.push_back(std::string("phase_") + b);
  }
  CsvTable t(head);
  for (const auto& d : run.designs) {
    const ChannelModel ch = make_channel(run.config.channel, d.intensities);
    const TransferMatrix h = d.design.h();
    for (double w : plot_grid(ch)) {
      std::vector<double> row;
      if (sweep) row.push_back(ch.sigma_w_sq());
      if (thetas) row.push_back(design_theta(d.design));
      row.push_back(w);
      const Eigen::MatrixXcd v = h.on_axis(w);
      for (const cplx z : {v(0, 0), v(0, 1), v(1, 0), v(1, 1)}) {
        row.push_back(std::abs(z));
        row.push_back(phase(z));
      }
      t.add_row(row);
    }
  }
  // Interpolant-only designs have no explicit completion: H11 columns only.
  for (const auto& h : run.interpolants) {
    const ChannelModel ch = make_channel(run.config.channel, h.intensities);
    for (double w : plot_grid(ch)) {
      std::vector<double> row;
      if (sweep) row.push_back(ch.sigma_w_sq());
      if (thetas) row.push_back(h.interpolant.theta().gain().real());
      row.push_back(w);
      const cplx z = h.interpolant.on_axis(w);
      row.push_back(std::abs(z));
      row.push_back(phase(z));
      for (int i = 0; i < 6; ++i) row.push_back(kNaN);
      t.add_row(row);
    }
  }
  return t;
}

std::optional<CsvTable> sweep_table(const DesignRun& run) {
  if (!run.config.sweep) return std::nullopt;
  CsvTable t({"sigma_w_sq", "theta", "sup_P_y_minus_u", "sup_P_e", "gamma_sq_bound",
              "max_abs_h11", "threshold_sigma_w_sq", "passed"});
  for (const auto& d : run.designs) {
    const ChannelModel ch = make_channel(run.config.channel, d.intensities);
    const VerificationReport& r = d.report;
    const double sup_pe = r.analytic_max_psd ? std::max(*r.analytic_max_psd, r.max_psd) : r.max_psd;
    const double abs_h = r.analytic_max_abs_h11 ? std::max(*r.analytic_max_abs_h11, r.max_abs_h11)
                                                : r.max_abs_h11;
    const double thr = ch.kind() == ChannelKind::Static ? static_threshold(ch) : kNaN;
    t.add_row({ch.sigma_w_sq(), design_theta(d.design), sup_unequalized_psd(ch), sup_pe,
               d.design.gamma_sq_bound, abs_h, thr, r.passed ? 1.0 : 0.0});
  }
  return t;
}

}  // namespace coheq::cli
