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

#include <cmath>
#include <limits>
#include <string>

#include "coheq/errors.hpp"
#include "coheq/norms.hpp"
#include "coheq/synthesis.hpp"
#include "coheq/tolerances.hpp"

namespace coheq {

EqualizerDesign::EqualizerDesign()
    : gamma_sq_bound(std::numeric_limits<double>::quiet_NaN()), theta(0.0), u_allpass(1.0) {}

FrequencyGrid synthesis_grid() { return FrequencyGrid::log_symmetric(1e-4, 1e3, 500, true); }

FrequencyGrid synthesis_grid(const ChannelModel& ch) {
  return synthesis_grid().merged(ch.special_frequencies());
}

bool check_contraction(const RationalFunction& h11, const FrequencyGrid& grid) {
  const double lim = 1.0 + tolerances().contraction_check;
  for (double w : grid) {
    if (!(std::abs(h11.on_axis(w)) <= lim)) return false;
  }
  return true;
}

SuboptimalParameterization parameterize_h11(const AuxiliaryFactorization& aux,
                                            const RationalFunction& theta) {
  if (!theta.is_stable() || !(theta.analytic_margin() > 0.0)) {
    throw Error(ErrorCode::ThetaUnstable, "Theta must be stable with a positive margin");
  }
  const double tn = hinf_norm(theta);
  if (!(tn < 1.0)) {
    throw Error(ErrorCode::ThetaNotContractive,
                "||Theta||_inf = " + std::to_string(tn) + " is not below 1");
  }
  SuboptimalParameterization p;
  p.theta = theta;
  p.s1 = RationalFunction(-aux.upsilon3);
  p.s2 = aux.upsilon1 - aux.upsilon2 * theta;
  if (p.s2.is_zero()) throw Error(ErrorCode::SingularMatrix, "Upsilon1 - Upsilon2 Theta = 0");
  p.h11 = p.s2.inverse() * p.s1 * aux.m_factor.inverse();
  if (!p.h11.is_stable() || !(p.h11.analytic_margin() > 0.0)) {
    throw Error(ErrorCode::ThetaOutOfInterval,
                "Theta gives an unstable H11; it lies outside the admissible set");
  }
  return p;
}

EqualizerDesign trivial_design(const ChannelModel& ch) {
  EqualizerDesign d;
  d.method = "trivial";
  d.h11 = 0.0;
  d.h12 = 1.0;
  d.h21 = 1.0;
  d.h22 = 0.0;
  d.gamma_sq_bound = ch.sigma_u_sq() + 2.0 + tolerances().bound_margin;
  d.attained_cost = ch.sigma_u_sq() + 2.0;
  return d;
}

EqualizerDesign complete_equalizer(const RationalFunction& h11, const FrequencyGrid& grid) {
  const auto& tol = tolerances();
  EqualizerDesign d;
  d.method = "completion";
  if (h11.is_zero()) {
    d.h11 = 0.0;
    d.h12 = 1.0;
    d.h21 = 1.0;
    d.h22 = 0.0;
    return d;
  }
  if (!h11.is_stable() || !h11.is_proper()) {
    throw Error(ErrorCode::UnstableInput, "H11 must be stable and proper");
  }
  if (!check_contraction(h11, grid)) {
    throw Error(ErrorCode::NotContractive, "|H11(iw)| exceeds 1 on the grid");
  }

  // Normal rank of X2 = 1 - |H11|^2 on the axis.
  bool any_high = false;
  bool any_low = false;
  bool any_mid = false;
  for (double w : grid) {
    const double x2 = 1.0 - std::norm(h11.on_axis(w));
    if (x2 > tol.rank_high) {
      any_high = true;
    } else if (x2 < tol.rank_low) {
      any_low = true;
    } else {
      any_mid = true;
    }
  }
  const RationalFunction x1 = RationalFunction(1.0) - h11 * h11.para_conjugate();
  if (x1.is_zero() || (!any_high && !any_mid)) {
    // Inner H11: no noise port is needed.
    d.h11 = h11;
    d.h12 = 0.0;
    d.h21 = 0.0;
    d.h22 = 1.0;
    return d;
  }
  if (any_mid || (any_high && any_low)) {
    throw Error(ErrorCode::RankDropOnAxis,
                "1 - |H11(iw)|^2 vanishes somewhere on the axis without vanishing identically");
  }

  const RationalFunction h12 = spectral_factor(x1);
  const RationalFunction h21t = h12;
  const RationalFunction f = h21t.para_conjugate().inverse() * h11.para_conjugate() * h12;
  std::vector<cplx> uz;
  std::vector<cplx> up;
  for (const cplx& p : f.poles()) {
    if (p.real() >= 0.0) {
      uz.push_back(p);
      up.push_back(-std::conj(p));
    }
  }
  const RationalFunction u = RationalFunction::from_zpk(uz, up, 1.0);
  d.h11 = h11;
  d.h12 = h12;
  d.h21 = u * h21t;
  d.h22 = -(u * f);
  d.u_allpass = u;
  if (!d.h().is_stable()) {
    throw Error(ErrorCode::UnstableInput, "completion produced an unstable block");
  }
  return d;
}

EqualizerDesign complete_equalizer(const RationalFunction& h11) {
  return complete_equalizer(h11, synthesis_grid());
}

EqualizerDesign jspectral_design(const ChannelModel& ch, double gamma_sq,
                                 const RationalFunction& theta) {
  const AuxiliaryFactorization aux = j_spectral_factor(ch, gamma_sq);
  const SuboptimalParameterization p = parameterize_h11(aux, theta);
  EqualizerDesign d = complete_equalizer(p.h11, synthesis_grid(ch));
  d.method = "jspectral";
  d.gamma_sq_bound = gamma_sq;
  d.theta = theta;
  d.aux = aux;
  return d;
}

}  // namespace coheq
