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

#include "coheq_cli/figures.hpp"

#include <cmath>
#include <coheq/nevpick.hpp>
#include <coheq/sdp.hpp>
#include <coheq/synthesis.hpp>
#include <coheq/tolerances.hpp>
#include <limits>

#include "coheq_cli/run.hpp"

namespace coheq::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

ChannelModel channel(const ChannelSpec& spec, double su, double sw) {
  return make_channel(spec, FieldIntensities{su, sw});
}

FrequencyGrid psd_grid(const ChannelModel& ch, const NevpickDesign& nd) {
  const std::vector<double>& w = nd.grid.omegas.points();
  return FrequencyGrid::log_symmetric(1e-3, 1e4, 350, true)
      .merged(w)
      .merged(node_neighbourhoods(w, nd.pick.tau))
      .merged(ch.special_frequencies());
}

}  // namespace

FigureInputs FigureInputs::defaults() {
  FigureInputs in;
  in.static_channel.type = "static";
  in.static_channel.k = std::sqrt(0.7);
  in.static_channel.m = std::sqrt(0.3);
  in.static_sweep = logspace(0.05, 8.0, 40);
  in.cavity_channel.type = "cavity";
  in.cavity_channel.cavity_k = 0.4;
  in.cavity_channel.kappa = 5.0;
  in.cavity_channel.omega_c = 10.0;
  in.cavity_sweep = logspace(0.15, 4.0, 40);
  in.theta_offset = tolerances().theta_offset;
  in.tau = tolerances().tau0;
  in.nodes = paper_grid();
  return in;
}

FigureInputs FigureInputs::from_config(const ExperimentConfig& cfg) {
  FigureInputs in = defaults();
  const bool is_static = cfg.channel.type == "static";
  if (is_static) {
    in.static_channel = cfg.channel;
    in.static_sigma_u_sq = cfg.intensities.sigma_u_sq;
    if (cfg.sweep) in.static_sweep = cfg.sweep->values;
  } else {
    in.cavity_channel = cfg.channel;
    in.cavity_sigma_u_sq = cfg.intensities.sigma_u_sq;
    if (cfg.sweep) in.cavity_sweep = cfg.sweep->values;
  }
  if (!cfg.thetas.empty()) in.thetas = cfg.thetas;
  in.theta_offset = cfg.theta_offset;
  in.tau = cfg.tau;
  in.nodes = node_grid(cfg);
  return in;
}

const std::vector<std::string>& figure_names() {
  static const std::vector<std::string> names{"fig_compare", "fig_h11", "cav_subopt",
                                              "cav_bode",    "psds",    "ratio"};
  return names;
}

CsvTable fig_compare(const FigureInputs& in) {
  CsvTable t({"sigma_w_sq", "P_y_minus_u", "P_e_optimal", "sdp_value", "threshold_sigma_w_sq"});
  const FrequencyGrid one({0.0});
  for (double sw : in.static_sweep) {
    const ChannelModel ch = channel(in.static_channel, in.static_sigma_u_sq, sw);
    const EqualizerDesign d = static_optimal(ch);
    t.add_row({sw, unequalized_psd(ch, 0.0), *d.attained_cost, grid_solve(ch, one).gamma_tilde_sq,
               static_threshold(ch)});
  }
  return t;
}

CsvTable fig_h11(const FigureInputs& in) {
  CsvTable t({"sigma_w_sq", "abs_h11_theory", "abs_h11_sdp"});
  for (double sw : in.static_sweep) {
    const ChannelModel ch = channel(in.static_channel, in.static_sigma_u_sq, sw);
    const EqualizerDesign d = static_optimal(ch);
    t.add_row({sw, std::abs(d.h11.gain()), std::abs(per_frequency_optimum(ch, 0.0).h11)});
  }
  return t;
}

CsvTable cav_subopt(const FigureInputs& in) {
  CsvTable t({"sigma_w_sq", "sup_P_y_minus_u", "gamma_sq_bound"});
  for (double sw : in.cavity_sweep) {
    const ChannelModel ch = channel(in.cavity_channel, in.cavity_sigma_u_sq, sw);
    const GammaSearchResult r = cavity_gamma_search(ch, in.theta_offset);
    t.add_row({sw, sup_unequalized_psd(ch), r.gamma_sq});
  }
  return t;
}

CsvTable cav_bode(const FigureInputs& in) {
  std::vector<std::string> head{"omega", "mag_h11", "mag_db_h11", "phase_h11"};
  for (const char* b : {"h12", "h21", "h22"}) {
    head.push_back(std::string("mag_") + b);
    head.push_back(std::string("phase_") + b);
  }
  CsvTable t(head);
  const ChannelModel ch = channel(in.cavity_channel, in.cavity_sigma_u_sq, in.bode_sigma_w_sq);
  const EqualizerDesign d = cavity_gamma_search(ch, in.theta_offset).design;
  const TransferMatrix h = d.h();
  const FrequencyGrid grid =
      FrequencyGrid::log_symmetric(1e-2, 1e3, 300, true).merged(ch.special_frequencies());
  for (double w : grid) {
    const Eigen::MatrixXcd v = h.on_axis(w);
    const double m11 = std::abs(v(0, 0));
    std::vector<double> row{w, m11, 20.0 * std::log10(m11), std::arg(v(0, 0))};
    for (const cplx z : {v(0, 1), v(1, 0), v(1, 1)}) {
      row.push_back(std::abs(z));
      row.push_back(std::arg(z));
    }
    t.add_row(row);
  }
  return t;
}

CsvTable psds(const FigureInputs& in) {
  CsvTable t({"sigma_w_sq", "theta", "omega", "P_e_normalized", "P_y_minus_u_normalized",
              "gamma_tilde_sq"});
  for (double sw : in.psd_sigma_w_sq) {
    const ChannelModel ch = channel(in.cavity_channel, in.cavity_sigma_u_sq, sw);
    const NevpickDesign nd = sdp_nevpick_design(ch, in.nodes, in.thetas, in.tau);
    const double g = nd.grid.gamma_tilde_sq;
    const FrequencyGrid grid = psd_grid(ch, nd);
    for (std::size_t i = 0; i < nd.thetas.size(); ++i) {
      for (double w : grid) {
        const cplx h = nd.interpolants[i].on_axis(w);
        t.add_row({sw, nd.thetas[i], w, error_psd_value(ch, h, w) / g,
                   unequalized_psd(ch, w) / g, g});
      }
    }
  }
  return t;
}

CsvTable ratio(const FigureInputs& in) {
  CsvTable t({"sigma_w_sq", "theta", "omega", "mag_h11", "phase_h11", "is_node", "node_mag",
              "node_phase"});
  for (double sw : in.psd_sigma_w_sq) {
    const ChannelModel ch = channel(in.cavity_channel, in.cavity_sigma_u_sq, sw);
    const NevpickDesign nd = sdp_nevpick_design(ch, in.nodes, in.thetas, in.tau);
    const FrequencyGrid grid = psd_grid(ch, nd);
    const std::vector<double>& nodes = nd.grid.omegas.points();
    for (std::size_t i = 0; i < nd.thetas.size(); ++i) {
      std::size_t next = 0;
      for (double w : grid) {
        const cplx h = nd.interpolants[i].on_axis(w);
        double is_node = 0.0, node_mag = kNaN, node_phase = kNaN;
        if (next < nodes.size() && nodes[next] == w) {
          is_node = 1.0;
          node_mag = std::abs(nd.shrunk_values[next]);
          node_phase = std::arg(nd.shrunk_values[next]);
          ++next;
        }
        t.add_row({sw, nd.thetas[i], w, std::abs(h), std::arg(h), is_node, node_mag, node_phase});
      }
    }
  }
  return t;
}

CsvTable make_figure(const std::string& name, const FigureInputs& in) {
  if (name == "fig_compare") return fig_compare(in);
  if (name == "fig_h11") return fig_h11(in);
  if (name == "cav_subopt") return cav_subopt(in);
  if (name == "cav_bode") return cav_bode(in);
  if (name == "psds") return psds(in);
  if (name == "ratio") return ratio(in);
  throw UsageError("unknown figure '" + name + "'");
}

}  // namespace coheq::cli
