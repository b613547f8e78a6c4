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
#include <sstream>
#include <string>

#include "coheq/errors.hpp"
#include "coheq/synthesis.hpp"
#include "coheq/tolerances.hpp"

namespace coheq {

namespace {

std::string num(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

// Feasibility of gamma^2 for the search, evaluated without exceptions.
bool gamma_feasible(const CavityDesignConstants& base, double su, double sw, double gamma_sq,
                    double theta) {
  const double r = su + 2.0 - gamma_sq;
  if (!(r > 0.0)) return false;
  const double u3 = std::sqrt(r);
  const double beta =
      (1.0 + su) * (base.delta - 1.0 / base.delta) / (u3 * std::sqrt(2.0 * (sw - su) * (1.0 + base.rho)));
  if (!(beta > 1.0)) return false;
  const double alpha = std::sqrt(beta * beta - 1.0);
  const double lim = u3 / base.mu;
  if (!(beta + alpha > lim)) return false;
  return theta < (beta - lim) / alpha;
}

}  // namespace

ThetaInterval cavity_theta_interval(const ChannelModel& ch, double gamma_sq) {
  const CavityDesignConstants c = cavity_constants(ch, gamma_sq);
  return {-1.0, std::min((c.beta - c.upsilon3 / c.mu) / c.alpha, 0.0)};
}

TransferMatrix cavity_closed_form_filter(double a, double c, double kappa, double omega_c) {
  const cplx iw(0.0, omega_c);
  const double d = std::sqrt((c * c - a * a) / (1.0 - a * a));
  const double b = std::sqrt(1.0 - a * a);
  const cplx pole = -c * kappa - iw;
  return TransferMatrix::from_2x2(
      RationalFunction::first_order(-kappa - iw, pole, a),
      RationalFunction::first_order(-d * kappa - iw, pole, -b),
      RationalFunction::first_order(d * kappa - iw, pole, b),
      RationalFunction::first_order(kappa - iw, pole, a));
}

EqualizerDesign cavity_suboptimal(const ChannelModel& ch, double gamma_sq, double theta_const) {
  const CavityDesignConstants k = cavity_constants(ch, gamma_sq);
  const auto& cp = ch.cavity_params();
  const double lim = k.upsilon3 / k.mu;
  if (!(k.beta + k.alpha > lim)) {
    throw Error(ErrorCode::ConditionNineFourFails,
                "beta + alpha = " + num(k.beta + k.alpha) + " <= Upsilon3 / mu = " + num(lim));
  }
  const double upper = std::min((k.beta - lim) / k.alpha, 0.0);
  if (!(theta_const > -1.0 && theta_const < upper)) {
    throw Error(ErrorCode::ThetaOutOfInterval, "Theta = " + num(theta_const) +
                                                   " is outside (-1, " + num(upper) + ")");
  }
  const double den = k.beta - theta_const * k.alpha;
  const double a = -k.upsilon3 / (k.mu * den);
  const double c = (k.beta * k.delta_hat - theta_const * k.nu) / den;
  const cplx iw(0.0, cp.omega_c);
  const RationalFunction h11 = RationalFunction::first_order(-cp.kappa - iw, -c * cp.kappa - iw, a);

  EqualizerDesign d = complete_equalizer(h11, synthesis_grid(ch));
  d.method = "cavity_suboptimal";
  d.gamma_sq_bound = gamma_sq;
  d.theta = theta_const;
  d.parameters["a"] = a;
  d.parameters["c"] = c;
  d.parameters["kappa"] = cp.kappa;
  d.parameters["omega_c"] = cp.omega_c;
  d.parameters["theta"] = theta_const;
  d.parameters["beta"] = k.beta;
  d.parameters["alpha"] = k.alpha;
  d.parameters["nu"] = k.nu;
  d.parameters["mu"] = k.mu;
  d.parameters["upsilon3"] = k.upsilon3;
  d.parameters["rho"] = k.rho;
  d.parameters["rho_hat"] = k.rho_hat;
  d.parameters["delta"] = k.delta;
  d.parameters["delta_hat"] = k.delta_hat;
  d.cavity = cavity_realization(a, c, cp.kappa);
  return d;
}

GammaSearchResult cavity_gamma_search(const ChannelModel& ch) {
  return cavity_gamma_search(ch, tolerances().theta_offset);
}

GammaSearchResult cavity_gamma_search(const ChannelModel& ch, double theta_offset) {
  const auto& tol = tolerances();
  const CavityDesignConstants base = cavity_constants_base(ch);
  const double su = ch.sigma_u_sq();
  const double sw = ch.sigma_w_sq();
  const double top = su + 2.0;
  const double theta = -1.0 + theta_offset;
  if (!(theta_offset > 0.0 && theta_offset < 1.0)) {
    throw Error(ErrorCode::ThetaOutOfInterval, "Theta offset must lie in (0, 1)");
  }

  double hi = top * (1.0 - 1e-12);
  if (!gamma_feasible(base, su, sw, hi, theta)) {
    throw Error(ErrorCode::Infeasible, "no gamma^2 below su + 2 satisfies the cavity conditions");
  }
  double lo = 0.0;
  if (gamma_feasible(base, su, sw, lo, theta)) {
    hi = lo;
  } else {
    while (hi - lo > tol.gamma_bisect) {
      const double mid = 0.5 * (lo + hi);
      if (gamma_feasible(base, su, sw, mid, theta)) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
  }
  GammaSearchResult out;
  out.gamma_sq = hi + tol.gamma_margin;
  if (!(out.gamma_sq < top)) {
    out.gamma_sq = top;
    out.design = trivial_design(ch);
    out.trivial = true;
    return out;
  }
  out.design = cavity_suboptimal(ch, out.gamma_sq, theta);
  out.design.method = "cavity_gamma_search";
  out.design.parameters["theta_offset"] = theta_offset;
  out.design.parameters["gamma_sq_boundary"] = hi;
  return out;
}

CavityRealization cavity_realization(double a, double c, double kappa) {
  if (!(std::abs(a) < 1.0 && c > 1.0)) {
    throw Error(ErrorCode::ParameterOutOfRange,
                "realization needs |a| < 1 < c, got a = " + num(a) + ", c = " + num(c));
  }
  const double a2 = a * a;
  const double r = std::sqrt((c * c - a2) * (1.0 - a2));
  auto root = [](double x) { return std::sqrt(std::max(0.0, x)); };
  CavityRealization out;
  out.a = a;
  out.c = c;
  out.eta1 = -root((c + a2 - r) / (2.0 * c));
  out.xi1 = root((c - a2 + r) / (2.0 * c));
  out.eta2 = -root((c - a2 - r) / (2.0 * c));
  out.xi2 = root((c + a2 + r) / (2.0 * c));
  out.hc_pole = c * kappa;
  return out;
}

CavityRealization cavity_realization(const EqualizerDesign& design) {
  const auto a = design.parameters.find("a");
  const auto c = design.parameters.find("c");
  const auto k = design.parameters.find("kappa");
  if (a == design.parameters.end() || c == design.parameters.end() ||
      k == design.parameters.end()) {
    throw Error(ErrorCode::InvalidArgument, "design has no cavity parameters");
  }
  return cavity_realization(a->second, c->second, k->second);
}

TransferMatrix cavity_realization_matrix(const CavityRealization& r, double kappa,
                                         double omega_c) {
  const cplx iw(0.0, omega_c);
  const RationalFunction hc =
      RationalFunction::first_order(r.c * kappa - iw, -r.c * kappa - iw, 1.0);
  const TransferMatrix b1 = TransferMatrix::from_2x2(r.xi1, r.eta1, r.eta1, -r.xi1);
  const TransferMatrix b2 = TransferMatrix::from_2x2(r.eta2, r.xi2, r.xi2, -r.eta2);
  const TransferMatrix mid = TransferMatrix::from_2x2(hc, 0.0, 0.0, 1.0);
  return b2 * mid * b1;
}

}  // namespace coheq
