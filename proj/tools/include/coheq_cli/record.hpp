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

#include <coheq/nevpick.hpp>
#include <coheq/synthesis.hpp>
#include <coheq/verify.hpp>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>

namespace coheq::cli {

// Record layout identifier written to "format".
inline constexpr const char* kRecordFormat = "coheq.design/1";

// Decimal string with 17 significant digits; round-trips any double.
std::string exact_string(double v);

nlohmann::json complex_to_json(cplx z);
cplx complex_from_json(const nlohmann::json& j);

// {num_coeffs, den_coeffs, zeros, poles, gain}. The zero/pole/gain triple is
// the authoritative form when reading; the coefficients are kept for
// consumers that want polynomials and are used when the triple is absent.
nlohmann::json rational_to_json(const RationalFunction& f);
RationalFunction rational_from_json(const nlohmann::json& j);

// Non-finite values become null.
nlohmann::json number_or_null(double v);

nlohmann::json report_to_json(const VerificationReport& r);

struct DesignEntry {
  EqualizerDesign design;
  FieldIntensities intensities;
  VerificationReport report;
};

struct InterpolantEntry {
  Interpolant interpolant;
  FieldIntensities intensities;
  double gamma_sq_bound = 0.0;
  VerificationReport report;
};

nlohmann::json design_to_json(const DesignEntry& e);
EqualizerDesign design_from_json(const nlohmann::json& j);
FieldIntensities intensities_from_json(const nlohmann::json& entry,
                                       const FieldIntensities& fallback);

nlohmann::json interpolant_to_json(const InterpolantEntry& e);
// Rebuilds the interpolant by re-solving the stored Pick problem.
Interpolant interpolant_from_json(const nlohmann::json& j);

}  // namespace coheq::cli
