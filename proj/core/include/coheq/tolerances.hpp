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

#include <string>
#include <string_view>

namespace coheq {

// Numerical tolerances used across the library, collected in one place so
// that a run can be audited or tightened without touching algorithm code.
struct Tolerances {
  std::string profile = "default";

  // rational
  double pole_hit = 1e-13;          // relative size of |den(s)| treated as a pole
  double root_cancel = 1e-9;        // num/den roots closer than this cancel
  double coeff_cancel = 1e-12;      // relative coefficient zeroing after add/sub
  int max_degree = 16;

  // channel
  double unitary = 1e-12;           // |k|^2 + |m|^2 = 1
  double channel_paraunitary = 1e-9;

  // spectral
  double factor_residual = 1e-9;    // relative |M|^2 - x on the check grid
  double negative_psd = 1e-12;      // x(iw) below -this is not factorable

  // synthesis
  double contraction_check = 1e-10;
  double rank_high = 1e-10;         // (H3): |X2| above this counts as full rank
  double rank_low = 1e-12;          // (H3): |X2| below this counts as zero
  double gamma_bisect = 1e-8;
  double gamma_margin = 1e-6;
  double theta_offset = 2e-4;       // cavity Theta = -1 + offset
  double epsilon_limit = 1.0 - 1e-6;
  double bound_margin = 1e-9;       // reported bound above an attained optimum

  // sdp / nevpick
  double node_shrink = 1.0 - 1e-6;
  double pick_min_eig = 1e-12;      // relative to 1/(2 tau)
  double tau0 = 1e-3;
  int tau_halvings = 60;

  // verify
  double design_paraunitary = 1e-8;
  double contraction_margin = -1e-9;
  double oracle_agreement = 1e-10;

  static Tolerances defaults();
  static Tolerances strict();
  // "default" or "strict"; throws InvalidArgument otherwise.
  static Tolerances named(std::string_view name);
};

// Active profile. Chosen once from COHEQ_TOLERANCE_PROFILE (unset means
// "default"), then fixed for the lifetime of the process.
const Tolerances& tolerances();

}  // namespace coheq
