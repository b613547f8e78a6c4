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

#include <optional>
#include <string>
#include <vector>

#include "coheq/channel.hpp"
#include "coheq/frequency_grid.hpp"
#include "coheq/nevpick.hpp"
#include "coheq/synthesis.hpp"

namespace coheq {

struct VerificationReport {
  // NaN when the design carries no full H (interpolant-only records).
  double paraunitarity_residual_max = 0.0;
  bool paraunitarity_evaluated = true;
  double contraction_margin = 0.0;   // 1 - max |H11|
  double psd_bound_margin = 0.0;     // gamma^2 - max P_e
  double max_psd = 0.0;
  double max_abs_h11 = 0.0;
  double gamma_sq_bound = 0.0;
  bool h3_rank_constant = true;
  bool blocks_stable = true;
  double analytic_margin = 0.0;      // smallest analytic margin of the blocks
  // Exact axis suprema from derivative roots, for explicit rational designs.
  std::optional<double> analytic_max_abs_h11;
  std::optional<double> analytic_max_psd;
  FrequencyGrid grid_used;
  std::vector<std::string> failures;
  bool passed = false;
};

// 1000 log-spaced points per side over [1e-4, 1e3], plus 0 and the channel's
// special frequencies (+-Omega for a cavity).
FrequencyGrid verification_grid(const ChannelModel& ch, int n_per_side = 1000);

VerificationReport verify_design(const ChannelModel& ch, const EqualizerDesign& design,
                                 const FrequencyGrid& grid);
VerificationReport verify_design(const ChannelModel& ch, const EqualizerDesign& design);

// Checks an interpolant that has no completed H: contraction and the PSD
// bound on the grid plus node neighbourhoods; paraunitarity not evaluated.
VerificationReport verify_interpolant(const ChannelModel& ch, const Interpolant& h,
                                      double gamma_sq_bound, const FrequencyGrid& grid);

struct ThresholdCertificate {
  double theta = 0.0;
  double min_eig_over_grid = 0.0;
  // Static channels: whether the closed-form criterion gives the same answer.
  std::optional<bool> closed_form_agrees;
};

// Searches theta in (0, 1e4] (log scan, then golden-section refinement of
// the concave min-eigenvalue function) for the S-procedure LMI at every grid
// frequency. Returns nothing when the best min eigenvalue is negative.
std::optional<ThresholdCertificate> certify_threshold(const ChannelModel& ch, double gamma_sq,
                                                      const FrequencyGrid& grid);

// Best min eigenvalue over theta and the theta attaining it (always returned).
ThresholdCertificate best_threshold_multiplier(const ChannelModel& ch, double gamma_sq,
                                               const FrequencyGrid& grid);

// (1 - |h|^2) + theta (P_e(iw, h) - gamma^2); nonnegative for every h when
// theta certifies the LMI at w.
double s_procedure_value(const ChannelModel& ch, double theta, double gamma_sq, cplx h,
                         double omega);

}  // namespace coheq
