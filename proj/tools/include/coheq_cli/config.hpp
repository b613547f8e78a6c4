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

#include <coheq/channel.hpp>
#include <coheq/frequency_grid.hpp>
#include <nlohmann/json.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace coheq::cli {

// Bad input the user can fix: unreadable files, malformed JSON, schema
// violations. Maps to exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ChannelSpec {
  std::string type;  // "static" or "cavity"
  // static
  cplx k;
  cplx m;
  double phi = 0.0;
  // cavity
  double cavity_k = 0.0;
  double kappa = 0.0;
  double omega_c = 0.0;
};

struct SweepSpec {
  std::string parameter = "sigma_w_sq";
  std::vector<double> values;
};

struct ExperimentConfig {
  ChannelSpec channel;
  FieldIntensities intensities;
  std::string method = "closed_form";
  std::vector<double> thetas;  // empty: the method's default
  bool theta_sweep = false;
  double theta_offset = 0.0;
  std::optional<double> gamma_sq;
  std::string grid_preset = "paper21";
  std::vector<double> grid_omegas;  // used when grid_preset is empty
  double tau = 0.0;
  std::string output_dir = "out";
  std::optional<SweepSpec> sweep;
  std::vector<std::string> figures;
  nlohmann::json raw;  // the validated input, echoed into records
};

// Validates against the experiment schema, then extracts the fields.
ExperimentConfig parse_config(const nlohmann::json& doc);
ExperimentConfig load_config(const std::string& path);

nlohmann::json parse_json_file(const std::string& path);

// Parses "sweep:[a, b, c]".
std::vector<double> parse_theta_sweep(const std::string& text);

ChannelModel make_channel(const ChannelSpec& spec, FieldIntensities intensities);
ChannelModel make_channel(const ExperimentConfig& cfg);

// Interpolation nodes for sdp_nevpick.
FrequencyGrid node_grid(const ExperimentConfig& cfg);

}  // namespace coheq::cli
