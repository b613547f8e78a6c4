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

#include <Eigen/Dense>

#include "coheq/channel.hpp"
#include "coheq/frequency_grid.hpp"
#include "coheq/rational.hpp"

namespace coheq {

// Spectral factor M of a scalar para-Hermitian x with x(iw) >= 0: M M^H = x,
// zeros and poles of M in the closed left half-plane, real positive gain.
// Roots are paired by reflection (z, -conj z), so any rational of this kind
// is accepted, not only the biquadratic family of the examples. Zeros on the
// axis must come with even multiplicity. Throws NotFactorable otherwise.
RationalFunction spectral_factor(const RationalFunction& x);

// Max over the check grid of |M(iw)|^2 - x(iw), relative to 1 + |x(iw)|.
double spectral_factor_residual(const RationalFunction& m, const RationalFunction& x,
                                const FrequencyGrid& grid);

// Factorization data for one value of gamma^2. Upsilon4 is identically zero.
struct AuxiliaryFactorization {
  double gamma_sq = 0.0;
  RationalFunction psi;
  RationalFunction m_factor;
  RationalFunction q;
  RationalFunction upsilon1;
  RationalFunction upsilon2;
  double upsilon3 = 0.0;
  RationalFunction upsilon4;
  // Largest violation of the three factorization identities on the check grid.
  double identity_residual = 0.0;
  // Smallest analytic margin among M, M^-1, Upsilon1, Upsilon1^-1, Upsilon2^-1.
  double margin = 0.0;
};

// Closed-form J-spectral factorization for the static and cavity channels.
// Throws GammaTooLarge if gamma^2 >= su + 2, GammaTooSmall if the Upsilon4 = 0
// factorization does not exist at this gamma, DegenerateChannel if Psi = 0.
AuxiliaryFactorization j_spectral_factor(const ChannelModel& ch, double gamma_sq);

// The same factorization computed without closed forms:
// Upsilon1 = Q / Upsilon3 and Upsilon2 = spectral_factor(Q Q^H / R - 1).
AuxiliaryFactorization j_spectral_factor_generic(const ChannelModel& ch, double gamma_sq);

// Upsilon(s) = [[U1, U2], [U3, U4]] and Phi(s) = [[1, Q], [Q^H, R]].
Eigen::Matrix2cd upsilon_at(const AuxiliaryFactorization& aux, cplx s);
Eigen::Matrix2cd phi_at(const AuxiliaryFactorization& aux, cplx s);
// max_w |Upsilon J Upsilon^H - Phi| on the grid.
double j_factor_residual(const AuxiliaryFactorization& aux, const FrequencyGrid& grid);

struct CavityDesignConstants {
  double rho = 0.0;
  double rho_hat = 0.0;
  double delta = 0.0;
  double delta_hat = 0.0;
  double beta = 0.0;
  double alpha = 0.0;
  double nu = 0.0;
  double mu = 0.0;
  double upsilon3 = 0.0;
  RationalFunction n1;  // beta (s + delta_hat kappa + i W)
  RationalFunction n2;  // alpha (s + i W) + nu kappa
};

// Throws ParameterOutOfRange unless sw > su > 0 on a cavity channel,
// GammaTooLarge if gamma^2 >= su + 2 and BetaNotAdmissible if beta <= 1.
CavityDesignConstants cavity_constants(const ChannelModel& ch, double gamma_sq);

// Constants that do not depend on gamma (beta, alpha, nu left at zero).
CavityDesignConstants cavity_constants_base(const ChannelModel& ch);

// 200 log-spaced points per side over [1e-3, 1e3] plus 0.
FrequencyGrid spectral_check_grid();

}  // namespace coheq
