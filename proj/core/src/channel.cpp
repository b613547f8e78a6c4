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

#include "coheq/channel.hpp"

#include <cmath>
#include <string>

#include "coheq/errors.hpp"
#include "coheq/tolerances.hpp"

namespace coheq {

namespace {

void check_intensities(const FieldIntensities& f) {
  if (!(f.sigma_u_sq >= 0.0) || !(f.sigma_w_sq >= 0.0) || !std::isfinite(f.sigma_u_sq) ||
      !std::isfinite(f.sigma_w_sq)) {
    throw Error(ErrorCode::ParameterOutOfRange, "field intensities must be finite and >= 0");
  }
}

}  // namespace

ChannelModel::ChannelModel(RationalFunction g11, RationalFunction g12, RationalFunction g21,
                           RationalFunction g22, FieldIntensities intensities,
                           std::variant<StaticChannelParams, CavityChannelParams> params)
    : g11_(std::move(g11)),
      g12_(std::move(g12)),
      g21_(std::move(g21)),
      g22_(std::move(g22)),
      intensities_(intensities),
      params_(params) {
  check_intensities(intensities_);
  const TransferMatrix gm = g();
  if (!gm.is_stable()) throw Error(ErrorCode::UnstableInput, "channel blocks must be stable");
  const double res = paraunitarity_residual(gm, channel_check_grid());
  if (!(res < tolerances().channel_paraunitary)) {
    throw Error(ErrorCode::NotUnitary,
                "channel is not paraunitary, residual " + std::to_string(res));
  }
}

ChannelKind ChannelModel::kind() const {
  return std::holds_alternative<StaticChannelParams>(params_) ? ChannelKind::Static
                                                              : ChannelKind::Cavity;
}

const StaticChannelParams& ChannelModel::static_params() const {
  if (kind() != ChannelKind::Static) {
    throw Error(ErrorCode::InvalidArgument, "channel is not static");
  }
  return std::get<StaticChannelParams>(params_);
}

const CavityChannelParams& ChannelModel::cavity_params() const {
  if (kind() != ChannelKind::Cavity) {
    throw Error(ErrorCode::InvalidArgument, "channel is not a cavity");
  }
  return std::get<CavityChannelParams>(params_);
}

std::vector<double> ChannelModel::special_frequencies() const {
  if (kind() == ChannelKind::Cavity) {
    const double w = cavity_params().omega_c;
    return {-w, w};
  }
  return {};
}

FrequencyGrid channel_check_grid() { return FrequencyGrid::log_symmetric(1e-3, 1e3, 100, false); }

ChannelModel new_static_channel(cplx k, cplx m, double phi, FieldIntensities intensities) {
  const double norm = std::norm(k) + std::norm(m);
  if (!(std::abs(norm - 1.0) <= tolerances().unitary)) {
    throw Error(ErrorCode::NotUnitary,
                "|k|^2 + |m|^2 = " + std::to_string(norm) + ", expected 1");
  }
  const cplx e = std::polar(1.0, phi);
  return ChannelModel(k, m, -e * std::conj(m), e * std::conj(k), intensities,
                      StaticChannelParams{k, m, phi});
}

RationalFunction cavity_gc(double kappa, double omega_c) {
  return RationalFunction::first_order(cplx(kappa, -omega_c), cplx(-kappa, -omega_c));
}

ChannelModel new_cavity_channel(double k, double kappa, double omega_c,
                                FieldIntensities intensities) {
  const double k2 = k * k;
  if (!(k2 > 0.0 && k2 < 0.5)) {
    throw Error(ErrorCode::ParameterOutOfRange,
                "cavity channel needs 0 < k^2 < 1/2, got k^2 = " + std::to_string(k2));
  }
  if (!(kappa > 0.0) || !std::isfinite(kappa) || !std::isfinite(omega_c)) {
    throw Error(ErrorCode::ParameterOutOfRange, "cavity channel needs kappa > 0");
  }
  const RationalFunction gc = cavity_gc(kappa, omega_c);
  const double kc = std::sqrt(1.0 - k2);
  const RationalFunction g11 = gc * k2 - RationalFunction(1.0 - k2);
  const RationalFunction g12 = (gc + RationalFunction(1.0)) * (k * kc);
  const RationalFunction g22 = RationalFunction(k2) - gc * (1.0 - k2);
  return ChannelModel(g11, g12, -g12, g22, intensities,
                      CavityChannelParams{k, kappa, omega_c});
}

double paraunitarity_residual(const TransferMatrix& g, const FrequencyGrid& grid) {
  double worst = 0.0;
  for (double w : grid) {
    const Eigen::MatrixXcd m = g.on_axis(w);
    const Eigen::MatrixXcd a = m * m.adjoint() - Eigen::MatrixXcd::Identity(m.rows(), m.rows());
    const Eigen::MatrixXcd b = m.adjoint() * m - Eigen::MatrixXcd::Identity(m.cols(), m.cols());
    worst = std::max({worst, a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff()});
  }
  return worst;
}

RationalFunction psi(const ChannelModel& ch) {
  return ch.g11() * ch.sigma_u_sq() * ch.g11().para_conjugate() +
         ch.g12() * ch.sigma_w_sq() * ch.g12().para_conjugate();
}

double error_psd_value(const ChannelModel& ch, cplx h11, double omega) {
  const cplx g11 = ch.g11().on_axis(omega);
  const cplx g12 = ch.g12().on_axis(omega);
  const double su = ch.sigma_u_sq();
  const double ps = std::norm(g11) * su + std::norm(g12) * ch.sigma_w_sq();
  return std::norm(h11) * ps - 2.0 * (1.0 + su) * (h11 * g11).real() + su + 2.0;
}

double error_psd(const ChannelModel& ch, const RationalFunction& h11, double omega) {
  return error_psd_value(ch, h11.on_axis(omega), omega);
}

RationalFunction error_psd_rational(const ChannelModel& ch, const RationalFunction& h11) {
  const double su = ch.sigma_u_sq();
  const RationalFunction hg = h11 * ch.g11();
  return h11 * psi(ch) * h11.para_conjugate() - (hg + hg.para_conjugate()) * (1.0 + su) +
         RationalFunction(su + 2.0);
}

ErrorModel::ErrorModel(ChannelModel ch) : channel(std::move(ch)) {
  f_v.setZero();
  f_v(0, 0) = 1.0 + channel.sigma_u_sq();
  f_v(1, 1) = 1.0 + channel.sigma_w_sq();
  f_v(2, 2) = 1.0;
  f_v(3, 3) = channel.sigma_u_sq();
  f_v(4, 4) = channel.sigma_w_sq();
  f_v(5, 5) = 0.0;
}

double error_psd_oracle_value(const ErrorModel& em, cplx g11, cplx g12, cplx h11, cplx h12) {
  Eigen::RowVector3cd e;
  e << h11 * g11 - 1.0, h11 * g12, h12;
  const Eigen::Matrix3cd f = em.f_v.topLeftCorner<3, 3>().cast<cplx>();
  return (e * f * e.adjoint())(0, 0).real();
}

double error_psd_oracle(const ChannelModel& ch, const RationalFunction& h11,
                        const RationalFunction& h12, double omega) {
  const ErrorModel em(ch);
  return error_psd_oracle_value(em, ch.g11().on_axis(omega), ch.g12().on_axis(omega),
                                h11.on_axis(omega), h12.on_axis(omega));
}

double unequalized_psd(const ChannelModel& ch, double omega) {
  return error_psd_oracle(ch, RationalFunction(1.0), RationalFunction(0.0), omega);
}

}  // namespace coheq
