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

#include "coheq_cli/record.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>

#include "coheq_cli/config.hpp"

namespace coheq::cli {

using nlohmann::json;

std::string exact_string(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json complex_to_json(cplx z) { return json::array({exact_string(z.real()), exact_string(z.imag())}); }

namespace {

double component(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (!v.is_string()) throw UsageError("complex component must be a number or a string");
  const std::string s = v.get<std::string>();
  char* end = nullptr;
  const double out = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') throw UsageError("bad number '" + s + "'");
  return out;
}

std::vector<cplx> complex_list(const json& arr) {
  std::vector<cplx> out;
  for (const auto& z : arr) out.push_back(complex_from_json(z));
  return out;
}

json complex_array(const std::vector<cplx>& v) {
  json out = json::array();
  for (const cplx& z : v) out.push_back(complex_to_json(z));
  return out;
}

bool same_coeffs(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > 1e-12 * (std::abs(a[i]) + std::abs(b[i]))) return false;
  }
  return true;
}

}  // namespace

cplx complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw UsageError("complex value must be a [re, im] pair");
  return {component(j[0]), component(j[1])};
}

json rational_to_json(const RationalFunction& f) {
  return {{"num_coeffs", complex_array(f.num().coeffs())},
          {"den_coeffs", complex_array(f.den().coeffs())},
          {"zeros", complex_array(f.zeros())},
          {"poles", complex_array(f.poles())},
          {"gain", complex_to_json(f.gain())}};
}

RationalFunction rational_from_json(const json& j) {
  const std::vector<cplx> num = complex_list(j.at("num_coeffs"));
  const std::vector<cplx> den = complex_list(j.at("den_coeffs"));
  if (j.contains("zeros") && j.contains("poles") && j.contains("gain")) {
    RationalFunction f = RationalFunction::from_zpk(complex_list(j.at("zeros")),
                                                    complex_list(j.at("poles")),
                                                    complex_from_json(j.at("gain")));
    if (!same_coeffs(f.num().coeffs(), Polynomial(num).coeffs()) ||
        !same_coeffs(f.den().coeffs(), Polynomial(den).coeffs())) {
      std::cerr << "warning: coefficients disagree with zeros/poles/gain; "
                   "using zeros/poles/gain\n";
    }
    return f;
  }
  if (den.empty()) throw UsageError("den_coeffs must not be empty");
  return RationalFunction(Polynomial(num), Polynomial(den));
}

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json report_to_json(const VerificationReport& r) {
  json j = {
      {"passed", r.passed},
      {"failures", r.failures},
      {"paraunitarity_evaluated", r.paraunitarity_evaluated},
      {"paraunitarity_residual_max", number_or_null(r.paraunitarity_residual_max)},
      {"contraction_margin", number_or_null(r.contraction_margin)},
      {"psd_bound_margin", number_or_null(r.psd_bound_margin)},
      {"max_psd", number_or_null(r.max_psd)},
      {"max_abs_h11", number_or_null(r.max_abs_h11)},
      {"gamma_sq_bound", number_or_null(r.gamma_sq_bound)},
      {"h3_rank_constant", r.h3_rank_constant},
      {"blocks_stable", r.blocks_stable},
      {"analytic_margin", number_or_null(r.analytic_margin)},
      {"grid_points", r.grid_used.size()},
  };
  j["analytic_max_abs_h11"] =
      r.analytic_max_abs_h11 ? number_or_null(*r.analytic_max_abs_h11) : json(nullptr);
  j["analytic_max_psd"] = r.analytic_max_psd ? number_or_null(*r.analytic_max_psd) : json(nullptr);
  return j;
}

json design_to_json(const DesignEntry& e) {
  const EqualizerDesign& d = e.design;
  json j;
  j["method"] = d.method;
  j["sigma_u_sq"] = e.intensities.sigma_u_sq;
  j["sigma_w_sq"] = e.intensities.sigma_w_sq;
  j["gamma_sq_bound"] = number_or_null(d.gamma_sq_bound);
  j["attained_cost"] = d.attained_cost ? number_or_null(*d.attained_cost) : json(nullptr);
  j["blocks"] = {{"h11", rational_to_json(d.h11)},
                 {"h12", rational_to_json(d.h12)},
                 {"h21", rational_to_json(d.h21)},
                 {"h22", rational_to_json(d.h22)}};
  j["theta"] = rational_to_json(d.theta);
  j["u_allpass"] = rational_to_json(d.u_allpass);
  json params = json::object();
  for (const auto& [k, v] : d.parameters) params[k] = number_or_null(v);
  j["parameters"] = params;
  json real = json::object();
  if (d.cavity) {
    const CavityRealization& c = *d.cavity;
    real["cavity"] = {{"a", c.a},       {"c", c.c},       {"eta1", c.eta1}, {"xi1", c.xi1},
                      {"eta2", c.eta2}, {"xi2", c.xi2},   {"hc_pole", c.hc_pole}};
  }
  if (d.static_bs) real["beam_splitter"] = {{"transmittance", d.static_bs->equalizer_transmittance}};
  j["realization"] = real;
  j["verification"] = report_to_json(e.report);
  return j;
}

EqualizerDesign design_from_json(const json& j) {
  EqualizerDesign d;
  d.method = j.at("method").get<std::string>();
  const json& b = j.at("blocks");
  d.h11 = rational_from_json(b.at("h11"));
  d.h12 = rational_from_json(b.at("h12"));
  d.h21 = rational_from_json(b.at("h21"));
  d.h22 = rational_from_json(b.at("h22"));
  const json& g = j.at("gamma_sq_bound");
  d.gamma_sq_bound = g.is_number() ? g.get<double>() : std::nan("");
  if (j.contains("attained_cost") && j.at("attained_cost").is_number()) {
    d.attained_cost = j.at("attained_cost").get<double>();
  }
  if (j.contains("theta")) d.theta = rational_from_json(j.at("theta"));
  if (j.contains("u_allpass")) d.u_allpass = rational_from_json(j.at("u_allpass"));
  if (j.contains("parameters")) {
    for (const auto& [k, v] : j.at("parameters").items()) {
      d.parameters[k] = v.is_number() ? v.get<double>() : std::nan("");
    }
  }
  return d;
}

FieldIntensities intensities_from_json(const json& entry, const FieldIntensities& fallback) {
  FieldIntensities out = fallback;
  if (entry.contains("sigma_u_sq")) out.sigma_u_sq = entry.at("sigma_u_sq").get<double>();
  if (entry.contains("sigma_w_sq")) out.sigma_w_sq = entry.at("sigma_w_sq").get<double>();
  return out;
}

json interpolant_to_json(const InterpolantEntry& e) {
  const Interpolant& h = e.interpolant;
  json omegas = json::array();
  for (const cplx& s : h.coefficients().nodes()) omegas.push_back(s.imag());
  return {{"sigma_u_sq", e.intensities.sigma_u_sq},
          {"sigma_w_sq", e.intensities.sigma_w_sq},
          {"theta", h.theta().gain().real()},
          {"tau", h.tau()},
          {"omegas", omegas},
          {"values", complex_array(h.coefficients().values())},
          {"gamma_sq_bound", number_or_null(e.gamma_sq_bound)},
          {"verification", report_to_json(e.report)}};
}

Interpolant interpolant_from_json(const json& j) {
  const std::vector<double> omegas = j.at("omegas").get<std::vector<double>>();
  const std::vector<cplx> values = complex_list(j.at("values"));
  const PickProblem p = build_pick_on_axis(omegas, values, j.at("tau").get<double>());
  return interpolant(p, RationalFunction(j.at("theta").get<double>()));
}

}  // namespace coheq::cli
