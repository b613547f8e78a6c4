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

#include <coheq/sdp.hpp>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "coheq_cli/config.hpp"
#include "coheq_cli/io.hpp"
#include "coheq_cli/record.hpp"

namespace coheq::cli {

struct RunOptions {
  int grid_density = 1000;        // verification points per side
  std::optional<double> theta;    // overrides the config's theta
};

// Everything cmd_design computes before anything is written.
struct DesignRun {
  ExperimentConfig config;
  RunOptions options;
  std::vector<DesignEntry> designs;
  std::vector<InterpolantEntry> interpolants;
  std::optional<GridSolution> grid;
  std::optional<PickProblem> pick;

  bool passed() const;
  // "<entry>: <failure>" for each failed check.
  std::vector<std::string> failures() const;
};

DesignRun run_design(const ExperimentConfig& cfg, const RunOptions& opts);

// Theta recorded for a design, NaN when the method has none.
double design_theta(const EqualizerDesign& d);

// Grid used for the curves in psd.csv and bode.csv.
FrequencyGrid plot_grid(const ChannelModel& ch);

// sup over the axis of the unequalized P_{y-u}.
double sup_unequalized_psd(const ChannelModel& ch);

nlohmann::json design_record(const DesignRun& run);
CsvTable psd_table(const DesignRun& run);
CsvTable bode_table(const DesignRun& run);
// One row per design or interpolant; present for sigma_w_sq sweeps.
std::optional<CsvTable> sweep_table(const DesignRun& run);

}  // namespace coheq::cli
