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
#include <variant>

#include "coheq/frequency_grid.hpp"
#include "coheq/rational.hpp"
#include "coheq/transfer_matrix.hpp"

namespace coheq {

// Thermal intensities of the channel input field (u) and of the channel
// environment (w). Both scalar: the analytic paths are single-mode.
struct FieldIntensities {
  double sigma_u_sq = 0.0;
  double sigma_w_sq = 0.0;
};

// Static two-port: G = [[k, m], [-e^{i phi} conj(m), e^{i phi} conj(k)]].
struct StaticChannelParams {
  cplx k;
  cplx m;
  double phi = 0.0;
};

// Optical cavity sandwiched between beam splitters of amplitude k.
struct CavityChannelParams {
  double k = 0.0;
  double kappa = 0.0;
  double omega_c = 0.0;
};

enum class ChannelKind { Static, Cavity };

// Passive single-mode channel with environment port. Immutable.
class ChannelModel {
 public:
  ChannelModel(RationalFunction g11, RationalFunction g12, RationalFunction g21,
               RationalFunction g22, FieldIntensities intensities,
               std::variant<StaticChannelParams, CavityChannelParams> params);

  const RationalFunction& g11() const { return g11_; }
  const RationalFunction& g12() const { return g12_; }
  const RationalFunction& g21() const { return g21_; }
  const RationalFunction& g22() const { return g22_; }
  TransferMatrix g() const { return TransferMatrix::from_2x2(g11_, g12_, g21_, g22_); }

  const FieldIntensities& intensities() const { return intensities_; }
  double sigma_u_sq() const { return intensities_.sigma_u_sq; }
  double sigma_w_sq() const { return intensities_.sigma_w_sq; }

  ChannelKind kind() const;
  const StaticChannelParams& static_params() const;
  const CavityChannelParams& cavity_params() const;
  // Frequencies that verification grids should always contain (the
  // resonance -omega_c for a cavity).
  std::vector<double> special_frequencies() const;

 private:
  RationalFunction g11_, g12_, g21_, g22_;
  FieldIntensities intensities_;
  std::variant<StaticChannelParams, CavityChannelParams> params_;
};

// Throws NotUnitary unless |k|^2 + |m|^2 = 1 within Tolerances::unitary.
ChannelModel new_static_channel(cplx k, cplx m, double phi, FieldIntensities intensities);
// Throws ParameterOutOfRange unless 0 < k^2 < 1/2 and kappa > 0.
ChannelModel new_cavity_channel(double k, double kappa, double omega_c,
                                FieldIntensities intensities);

// The cavity's internal transfer function (s - kappa + i W)/(s + kappa + i W).
RationalFunction cavity_gc(double kappa, double omega_c);

// max_w max(|G G^dag - I|, |G^dag G - I|) entrywise.
double paraunitarity_residual(const TransferMatrix& g, const FrequencyGrid& grid);

// Psi = g11 su g11^H + g12 sw g12^H.
RationalFunction psi(const ChannelModel& ch);

// Error power spectral density for a filter whose first row satisfies
// |H11|^2 + |H12|^2 = 1:
//   P_e = |H11|^2 Psi - 2 (1 + su) Re[H11 G11] + su + 2.
double error_psd(const ChannelModel& ch, const RationalFunction& h11, double omega);
double error_psd_value(const ChannelModel& ch, cplx h11, double omega);
// The same functional as a para-Hermitian rational function of s.
RationalFunction error_psd_rational(const ChannelModel& ch, const RationalFunction& h11);

// Noise intensity of the combined field, 6x6 block-diagonal; the filter
// environment is vacuum.
struct ErrorModel {
  ErrorModel(ChannelModel channel);
  ChannelModel channel;
  Eigen::Matrix<double, 6, 6> f_v;
};

// Direct evaluation E F E^dag with E = [H11 G11 - 1, H11 G12, H12]; does not
// assume any relation between H11 and H12.
double error_psd_oracle(const ChannelModel& ch, const RationalFunction& h11,
                        const RationalFunction& h12, double omega);
double error_psd_oracle_value(const ErrorModel& em, cplx g11, cplx g12, cplx h11, cplx h12);

// Error of the unequalized channel output (H11 = 1, H12 = 0).
double unequalized_psd(const ChannelModel& ch, double omega);

// Grid used to assert channel paraunitarity on construction.
FrequencyGrid channel_check_grid();

}  // namespace coheq
