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

#include "coheq_cli/config.hpp"

#include <coheq/errors.hpp>
#include <coheq/sdp.hpp>
#include <coheq/tolerances.hpp>
#include <cmath>
#include <fstream>
#include <sstream>

#include "coheq_cli/schema.hpp"

namespace coheq::cli {

using nlohmann::json;

namespace {

cplx complex_field(const json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  return {v.at(0).get<double>(), v.at(1).get<double>()};
}

std::vector<double> sweep_values(const json& s) {
  if (s.contains("values")) return s.at("values").get<std::vector<double>>();
  if (!(s.contains("from") && s.contains("to") && s.contains("count"))) {
    throw UsageError("sweep needs either values or from/to/count");
  }
  const double lo = s.at("from").get<double>();
  const double hi = s.at("to").get<double>();
  const int n = s.at("count").get<int>();
  const std::string spacing = s.value("spacing", "log");
  if (spacing == "log") {
    if (!(lo > 0.0 && hi > 0.0)) throw UsageError("log sweep needs positive end points");
    return logspace(lo, hi, n);
  }
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
  }
  return out;
}

}  // namespace

std::vector<double> parse_theta_sweep(const std::string& text) {
  const std::string prefix = "sweep:";
  if (text.rfind(prefix, 0) != 0) throw UsageError("theta string must look like sweep:[...]");
  json arr;
  try {
    arr = json::parse(text.substr(prefix.size()));
  } catch (const json::exception& e) {
    throw UsageError("cannot parse theta sweep '" + text + "': " + e.what());
  }
  if (!arr.is_array() || arr.empty()) throw UsageError("theta sweep must be a non-empty list");
  std::vector<double> out;
  for (const auto& v : arr) {
    if (!v.is_number()) throw UsageError("theta sweep entries must be numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw UsageError("malformed JSON in " + path + ": " + e.what());
  }
}

ExperimentConfig parse_config(const json& doc) {
  const auto issues = validate(experiment_config_schema(), doc);
  if (!issues.empty()) {
    std::string msg = "config does not match the schema:";
    for (const auto& i : issues) msg += "\n  " + i.path + ": " + i.message;
    throw UsageError(msg);
  }
  const auto& tol = tolerances();
  ExperimentConfig c;
  c.raw = doc;
  c.theta_offset = tol.theta_offset;
  c.tau = tol.tau0;

  const json& ch = doc.at("channel");
  c.channel.type = ch.at("type").get<std::string>();
  if (c.channel.type == "static") {
    if (ch.contains("eta")) {
      const double eta = ch.at("eta").get<double>();
      c.channel.k = std::sqrt(eta);
      c.channel.m = std::sqrt(1.0 - eta);
    } else {
      c.channel.k = complex_field(ch.at("k"));
      c.channel.m = complex_field(ch.at("m"));
    }
    c.channel.phi = ch.value("phi", 0.0);
  } else {
    c.channel.cavity_k = ch.at("k").get<double>();
    c.channel.kappa = ch.at("kappa").get<double>();
    c.channel.omega_c = ch.at("omega_c").get<double>();
  }
  c.intensities.sigma_u_sq = doc.at("intensities").at("sigma_u_sq").get<double>();
  c.intensities.sigma_w_sq = doc.at("intensities").at("sigma_w_sq").get<double>();
  c.method = doc.value("method", "closed_form");

  if (doc.contains("theta")) {
    const json& th = doc.at("theta");
    if (th.is_number()) {
      c.thetas = {th.get<double>()};
    } else {
      c.thetas = parse_theta_sweep(th.get<std::string>());
      c.theta_sweep = true;
    }
  }
  if (doc.contains("theta_offset")) c.theta_offset = doc.at("theta_offset").get<double>();
  if (doc.contains("gamma_sq")) c.gamma_sq = doc.at("gamma_sq").get<double>();
  if (doc.contains("grid")) {
    const json& g = doc.at("grid");
    if (g.contains("preset")) {
      c.grid_preset = g.at("preset").get<std::string>();
    } else {
      c.grid_preset.clear();
      c.grid_omegas = g.at("omegas").get<std::vector<double>>();
    }
  }
  if (doc.contains("tau")) c.tau = doc.at("tau").get<double>();
  if (doc.contains("output_dir")) c.output_dir = doc.at("output_dir").get<std::string>();
  if (doc.contains("sweep")) {
    SweepSpec s;
    s.parameter = doc.at("sweep").at("parameter").get<std::string>();
    s.values = sweep_values(doc.at("sweep"));
    c.sweep = std::move(s);
  }
  if (doc.contains("figures")) c.figures = doc.at("figures").get<std::vector<std::string>>();
  return c;
}

ExperimentConfig load_config(const std::string& path) { return parse_config(parse_json_file(path)); }

ChannelModel make_channel(const ChannelSpec& spec, FieldIntensities intensities) {
  if (spec.type == "static") return new_static_channel(spec.k, spec.m, spec.phi, intensities);
  return new_cavity_channel(spec.cavity_k, spec.kappa, spec.omega_c, intensities);
}

ChannelModel make_channel(const ExperimentConfig& cfg) {
  return make_channel(cfg.channel, cfg.intensities);
}

FrequencyGrid node_grid(const ExperimentConfig& cfg) {
  if (!cfg.grid_preset.empty()) return paper_grid();
  FrequencyGrid g(cfg.grid_omegas);
  if (g.size() != cfg.grid_omegas.size()) {
    throw Error(ErrorCode::DuplicateNodes, "grid omegas contain repeated frequencies");
  }
  return g;
}

}  // namespace coheq::cli
