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

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <string>

#include "coheq/errors.hpp"
#include "coheq/synthesis.hpp"
#include "coheq/tolerances.hpp"

namespace coheq {

namespace {

constexpr double kThetaMax = 1e4;

double lmi_min_eig(double theta, double psi_w, cplx g11, double su, double r) {
  Eigen::Matrix2cd m;
  m << theta * psi_w - 1.0, -theta * (1.0 + su) * std::conj(g11),
      -theta * (1.0 + su) * g11, theta * r + 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

}  // namespace

double static_psi(const ChannelModel& ch) {
  const auto& p = ch.static_params();
  return std::norm(p.k) * ch.sigma_u_sq() + std::norm(p.m) * ch.sigma_w_sq();
}

double static_unconstrained_bound(const ChannelModel& ch) {
  const double ps = static_psi(ch);
  const double a = (1.0 + ch.sigma_u_sq()) * std::abs(ch.static_params().k);
  if (!(ps > 0.0)) throw Error(ErrorCode::DegenerateChannel, "psi = 0");
  return ch.sigma_u_sq() + 2.0 - a * a / ps;
}

double static_threshold(const ChannelModel& ch) {
  const auto& p = ch.static_params();
  const double m2 = std::norm(p.m);
  if (!(m2 > 0.0)) return std::numeric_limits<double>::infinity();
  const double su = ch.sigma_u_sq();
  return ((1.0 + su) * std::abs(p.k) - su * std::norm(p.k)) / m2;
}

cplx static_limit_theta(const ChannelModel& ch, double epsilon) {
  const cplx k = ch.static_params().k;
  if (k == cplx(0.0)) return 0.0;
  return epsilon * k / std::abs(k);
}

EqualizerDesign static_optimal(const ChannelModel& ch) {
  const auto& p = ch.static_params();
  const double su = ch.sigma_u_sq();
  const double ps = static_psi(ch);
  const double ak = std::abs(p.k);
  const double a = (1.0 + su) * ak;
  if (ps == 0.0 && ak == 0.0) {
    throw Error(ErrorCode::DegenerateChannel, "psi = 0 and k = 0: every filter gives su + 2");
  }
  EqualizerDesign d;
  d.method = "static_optimal";
  if (ps <= a) {
    // Contraction constraint active: unimodular gain.
    const cplx h = std::conj(p.k) / ak;
    const double cost = ps - 2.0 * a + 2.0 + su;
    d.h11 = h;
    d.h12 = 0.0;
    d.h21 = 0.0;
    d.h22 = 1.0;
    d.attained_cost = cost;
    d.parameters["branch"] = 1.0;
  } else {
    const cplx h = (1.0 + su) * std::conj(p.k) / ps;
    const double r = std::sqrt(std::max(0.0, 1.0 - std::norm(h)));
    const double cost = 2.0 + su - a * a / ps;
    d.h11 = h;
    d.h12 = r;
    d.h21 = r;
    d.h22 = -std::conj(h);
    d.attained_cost = cost;
    d.parameters["branch"] = 2.0;
    d.static_bs = StaticRealization{std::norm(h)};
  }
  d.gamma_sq_bound = *d.attained_cost + tolerances().bound_margin;
  d.parameters["psi"] = ps;
  d.parameters["threshold_sigma_w_sq"] = static_threshold(ch);
  return d;
}

StaticRealization static_realization(const ChannelModel& ch) {
  const double ps = static_psi(ch);
  const double su = ch.sigma_u_sq();
  const double eta = std::norm(ch.static_params().k);
  if (!(ps > (1.0 + su) * std::sqrt(eta))) {
    throw Error(ErrorCode::BranchMismatch,
                "the optimal gain is unimodular here; only a phase shift is needed");
  }
  return StaticRealization{(1.0 + su) * (1.0 + su) * eta / (ps * ps)};
}

std::optional<double> threshold_lmi_feasible(const ChannelModel& ch, double gamma_sq) {
  const double su = ch.sigma_u_sq();
  const double r = su + 2.0 - gamma_sq;
  if (ch.kind() == ChannelKind::Static) {
    // det = D theta^2 + B theta - 1 with D = psi R - A^2 and B = psi - R;
    // also theta psi > 1 and theta R + 1 > 0.
    const double ps = static_psi(ch);
    const double a = (1.0 + su) * std::abs(ch.static_params().k);
    const double dd = ps * r - a * a;
    const double bb = ps - r;
    auto ok = [&](double t) {
      return t > 0.0 && t <= kThetaMax && dd * t * t + bb * t - 1.0 > 0.0 && t * ps - 1.0 > 0.0 &&
             t * r + 1.0 > 0.0;
    };
    std::vector<double> candidates{kThetaMax};
    if (bb > 0.0) candidates.push_back(2.0 / bb);
    if (dd < 0.0) candidates.push_back(-bb / (2.0 * dd));
    if (ps > 0.0) candidates.push_back(2.0 / ps);
    for (double t : candidates) {
      if (ok(t)) return t;
    }
    return std::nullopt;
  }
  const FrequencyGrid grid = synthesis_grid(ch);
  const RationalFunction ps = psi(ch);
  std::vector<double> psi_w;
  std::vector<cplx> g11_w;
  for (double w : grid) {
    psi_w.push_back(ps.on_axis(w).real());
    g11_w.push_back(ch.g11().on_axis(w));
  }
  for (int i = 0; i <= 100; ++i) {
    const double t = std::pow(10.0, -6.0 + 10.0 * i / 100.0);
    bool all = true;
    for (std::size_t j = 0; j < grid.size() && all; ++j) {
      all = lmi_min_eig(t, psi_w[j], g11_w[j], su, r) >= 0.0;
    }
    if (all) return t;
  }
  return std::nullopt;
}

}  // namespace coheq
