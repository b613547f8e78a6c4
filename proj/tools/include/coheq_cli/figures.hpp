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

#pragma once

#include <coheq/frequency_grid.hpp>
#include <optional>
#include <string>
#include <vector>

#include "coheq_cli/config.hpp"
#include "coheq_cli/io.hpp"

namespace coheq::cli {

// Inputs behind the figure tables. The defaults are the reference beam
// splitter and cavity scenarios; sigma_u^2 = 0.1 is assumed for both.
struct FigureInputs {
  ChannelSpec static_channel;
  double static_sigma_u_sq = 0.1;
  std::vector<double> static_sweep;  // sigma_w^2 values
  ChannelSpec cavity_channel;
  double cavity_sigma_u_sq = 0.1;
  std::vector<double> cavity_sweep;
  double bode_sigma_w_sq = 0.2;
  std::vector<double> psd_sigma_w_sq{0.2, 4.0};
  std::vector<double> thetas{-0.95, 0.0, 0.95};
  double theta_offset = 0.0;
  double tau = 0.0;
  FrequencyGrid nodes;

  static FigureInputs defaults();
  // Defaults with the config's channel, sigma_u^2, sweep, theta, tau and
  // grid substituted for the matching figures.
  static FigureInputs from_config(const ExperimentConfig& cfg);
};

const std::vector<std::string>& figure_names();

// sigma_w_sq, P_y_minus_u, P_e_optimal, sdp_value, threshold_sigma_w_sq
CsvTable fig_compare(const FigureInputs& in);
// sigma_w_sq, abs_h11_theory, abs_h11_sdp
CsvTable fig_h11(const FigureInputs& in);
// sigma_w_sq, sup_P_y_minus_u, gamma_sq_bound
CsvTable cav_subopt(const FigureInputs& in);
// omega, mag_h11, mag_db_h11, phase_h11, mag_h12, phase_h12, ...
CsvTable cav_bode(const FigureInputs& in);
// sigma_w_sq, theta, omega, P_e_normalized, P_y_minus_u_normalized, gamma_tilde_sq
CsvTable psds(const FigureInputs& in);
// sigma_w_sq, theta, omega, mag_h11, phase_h11, is_node, node_mag, node_phase
CsvTable ratio(const FigureInputs& in);

CsvTable make_figure(const std::string& name, const FigureInputs& in);

}  // namespace coheq::cli
