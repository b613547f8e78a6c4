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

#include <map>
#include <optional>
#include <string>

#include "coheq/channel.hpp"
#include "coheq/frequency_grid.hpp"
#include "coheq/rational.hpp"
#include "coheq/spectral.hpp"
#include "coheq/transfer_matrix.hpp"

namespace coheq {

// Beam-splitter amplitudes and internal cavity pole of the realization
// H = B2 diag(Hc, 1) B1 with Hc = (s - c kappa + i W)/(s + c kappa + i W).
struct CavityRealization {
  double a = 0.0;
  double c = 0.0;
  double eta1 = 0.0;
  double xi1 = 0.0;
  double eta2 = 0.0;
  double xi2 = 0.0;
  double hc_pole = 0.0;  // c * kappa
};

struct StaticRealization {
  double equalizer_transmittance = 0.0;
};

// A complete passive filter H = [[h11, h12], [h21, h22]].
struct EqualizerDesign {
  std::string method;
  RationalFunction h11;
  RationalFunction h12;
  RationalFunction h21;
  RationalFunction h22;
  // Guaranteed bound on sup_w P_e. NaN until a synthesis routine sets it.
  double gamma_sq_bound;
  // Value of sup_w P_e attained by the design when it is known exactly.
  std::optional<double> attained_cost;
  RationalFunction theta;
  std::optional<AuxiliaryFactorization> aux;
  RationalFunction u_allpass;
  std::optional<CavityRealization> cavity;
  std::optional<StaticRealization> static_bs;
  // Scalar metadata (Theta offset, a, c, beta, ...), ordered for determinism.
  std::map<std::string, double> parameters;

  EqualizerDesign();
  TransferMatrix h() const { return TransferMatrix::from_2x2(h11, h12, h21, h22); }
};

struct SuboptimalParameterization {
  RationalFunction theta;
  RationalFunction s1;  // -Upsilon3
  RationalFunction s2;  // Upsilon1 - Upsilon2 Theta
  RationalFunction h11; // s2^-1 s1 M^-1
};

// Every feasible H11 at level gamma^2 for a stable Theta with |Theta| < 1:
// H11 = -Upsilon3 (Upsilon1 - Upsilon2 Theta)^-1 M^-1. Throws ThetaUnstable,
// ThetaNotContractive, or ThetaOutOfInterval if the result is unstable.
SuboptimalParameterization parameterize_h11(const AuxiliaryFactorization& aux,
                                            const RationalFunction& theta);

// 500 log-spaced points per side over [1e-4, 1e3], plus 0 and the channel's
// special frequencies.
FrequencyGrid synthesis_grid(const ChannelModel& ch);
FrequencyGrid synthesis_grid();

// |h11(iw)| <= 1 + Tolerances::contraction_check on the grid.
bool check_contraction(const RationalFunction& h11, const FrequencyGrid& grid);

// Completes a stable contraction h11 into a paraunitary H. h12 is the
// spectral factor of 1 - h11 h11^H; h21 and h22 carry an all-pass U that
// cancels the unstable poles of h11^H h12 / h12^H. An inner h11 gives
// diag(h11, 1) and h11 = 0 gives the swap. Throws UnstableInput,
// NotContractive or RankDropOnAxis.
EqualizerDesign complete_equalizer(const RationalFunction& h11, const FrequencyGrid& grid);
EqualizerDesign complete_equalizer(const RationalFunction& h11);

// A = (1 + su) |k|, psi = |k|^2 su + |m|^2 sw.
double static_psi(const ChannelModel& ch);
// Optimal static design; throws DegenerateChannel if psi = 0 and k = 0.
EqualizerDesign static_optimal(const ChannelModel& ch);
// Intensity sw above which the contraction constraint is inactive.
double static_threshold(const ChannelModel& ch);
// su + 2 - (1 + su)^2 |k|^2 / psi, the optimum without the contraction constraint.
double static_unconstrained_bound(const ChannelModel& ch);
// Theta = epsilon k / |k|; drives the parameterized H11 to the constrained optimum.
cplx static_limit_theta(const ChannelModel& ch, double epsilon);

// S-procedure multiplier theta > 0 with
//   [[theta Psi - 1, -theta (1 + su) conj(g11)], [., theta R + 1]] >= 0
// (R = su + 2 - gamma^2). Closed form for static channels; a log-spaced theta
// scan over the synthesis grid otherwise.
std::optional<double> threshold_lmi_feasible(const ChannelModel& ch, double gamma_sq);

// J-spectral factorization, parameterization with Theta, then completion.
EqualizerDesign jspectral_design(const ChannelModel& ch, double gamma_sq,
                                 const RationalFunction& theta);

// Admissible constant Theta for the cavity at gamma^2: (-1, upper).
struct ThetaInterval {
  double lower = -1.0;
  double upper = 0.0;
};
ThetaInterval cavity_theta_interval(const ChannelModel& ch, double gamma_sq);

// Guaranteed-cost cavity equalizer H11 = a (s + kappa + iW)/(s + c kappa + iW).
EqualizerDesign cavity_suboptimal(const ChannelModel& ch, double gamma_sq, double theta_const);

// h11, h12, h21, h22 of the cavity equalizer in closed form.
TransferMatrix cavity_closed_form_filter(double a, double c, double kappa, double omega_c);

struct GammaSearchResult {
  double gamma_sq = 0.0;
  EqualizerDesign design;
  bool trivial = false;
};
// Smallest gamma^2 with beta > 1, beta + alpha > Upsilon3 / mu and
// Theta = -1 + offset admissible, plus Tolerances::gamma_margin.
GammaSearchResult cavity_gamma_search(const ChannelModel& ch);
GammaSearchResult cavity_gamma_search(const ChannelModel& ch, double theta_offset);

CavityRealization cavity_realization(double a, double c, double kappa);
CavityRealization cavity_realization(const EqualizerDesign& design);
// B2 diag(Hc, 1) B1.
TransferMatrix cavity_realization_matrix(const CavityRealization& r, double kappa,
                                         double omega_c);
// Throws BranchMismatch when the constraint |H11| <= 1 is active.
StaticRealization static_realization(const ChannelModel& ch);

// The trivial filter H11 = 0 (swap) with bound su + 2.
EqualizerDesign trivial_design(const ChannelModel& ch);

}  // namespace coheq
