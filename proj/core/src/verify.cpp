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

#include "coheq/verify.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>

#include "coheq/norms.hpp"
#include "coheq/tolerances.hpp"

namespace coheq {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void classify_rank(double x2, bool* high, bool* low, bool* mid) {
  const auto& tol = tolerances();
  if (x2 > tol.rank_high) {
    *high = true;
  } else if (x2 < tol.rank_low) {
    *low = true;
  } else {
    *mid = true;
  }
}

void finalize(VerificationReport& r) {
  const auto& tol = tolerances();
  if (r.paraunitarity_evaluated && !(r.paraunitarity_residual_max < tol.design_paraunitary)) {
    r.failures.push_back("paraunitarity");
  }
  if (!(r.contraction_margin >= tol.contraction_margin)) r.failures.push_back("contraction");
  if (!(r.psd_bound_margin > 0.0)) r.failures.push_back("psd_bound");
  if (!r.blocks_stable) r.failures.push_back("stability");
  r.passed = r.failures.empty();
}

}  // namespace

FrequencyGrid verification_grid(const ChannelModel& ch, int n_per_side) {
  return FrequencyGrid::log_symmetric(1e-4, 1e3, n_per_side, true)
      .merged(ch.special_frequencies());
}

VerificationReport verify_design(const ChannelModel& ch, const EqualizerDesign& design) {
  return verify_design(ch, design, verification_grid(ch));
}

VerificationReport verify_design(const ChannelModel& ch, const EqualizerDesign& design,
                                 const FrequencyGrid& grid) {
  VerificationReport r;
  r.grid_used = grid;
  r.gamma_sq_bound = design.gamma_sq_bound;
  const TransferMatrix hm = design.h();
  r.blocks_stable = hm.is_stable();
  r.analytic_margin = hm.analytic_margin();
  if (!r.blocks_stable) {
    r.paraunitarity_residual_max = kNaN;
    r.contraction_margin = kNaN;
    r.psd_bound_margin = kNaN;
    finalize(r);
    return r;
  }
  r.paraunitarity_residual_max = paraunitarity_residual(hm, grid);

  bool high = false;
  bool low = false;
  bool mid = false;
  double max_h = 0.0;
  double max_p = -std::numeric_limits<double>::infinity();
  for (double w : grid) {
    const cplx h = design.h11.on_axis(w);
    max_h = std::max(max_h, std::abs(h));
    max_p = std::max(max_p, error_psd_value(ch, h, w));
    classify_rank(1.0 - std::norm(h), &high, &low, &mid);
  }
  r.h3_rank_constant = !mid && !(high && low);

  const AxisSup sh = sup_abs_on_axis(design.h11);
  const AxisSup sp = sup_real_on_axis(error_psd_rational(ch, design.h11));
  r.analytic_max_abs_h11 = sh.value;
  r.analytic_max_psd = sp.value;
  r.max_abs_h11 = std::max(max_h, sh.value);
  r.max_psd = std::max(max_p, sp.value);
  r.contraction_margin = 1.0 - r.max_abs_h11;
  r.psd_bound_margin = design.gamma_sq_bound - r.max_psd;
  finalize(r);
  return r;
}

VerificationReport verify_interpolant(const ChannelModel& ch, const Interpolant& h,
                                      double gamma_sq_bound, const FrequencyGrid& grid) {
  VerificationReport r;
  std::vector<double> ws;
  for (const cplx& s : h.coefficients().nodes()) ws.push_back(s.imag());
  r.grid_used = grid.merged(node_neighbourhoods(ws, h.tau()));
  r.gamma_sq_bound = gamma_sq_bound;
  r.paraunitarity_evaluated = false;
  r.paraunitarity_residual_max = kNaN;
  r.analytic_margin = h.tau();
  bool high = false;
  bool low = false;
  bool mid = false;
  double max_h = 0.0;
  double max_p = -std::numeric_limits<double>::infinity();
  for (double w : r.grid_used) {
    const cplx v = h.on_axis(w);
    max_h = std::max(max_h, std::abs(v));
    max_p = std::max(max_p, error_psd_value(ch, v, w));
    classify_rank(1.0 - std::norm(v), &high, &low, &mid);
  }
  r.h3_rank_constant = !mid && !(high && low);
  r.max_abs_h11 = max_h;
  r.max_psd = max_p;
  if (h.explicit_form()) {
    r.blocks_stable = h.explicit_form()->is_stable();
    r.analytic_margin = h.explicit_form()->analytic_margin();
    const AxisSup sh = sup_abs_on_axis(*h.explicit_form());
    const AxisSup sp = sup_real_on_axis(error_psd_rational(ch, *h.explicit_form()));
    r.analytic_max_abs_h11 = sh.value;
    r.analytic_max_psd = sp.value;
    r.max_abs_h11 = std::max(r.max_abs_h11, sh.value);
    r.max_psd = std::max(r.max_psd, sp.value);
  }
  r.contraction_margin = 1.0 - r.max_abs_h11;
  r.psd_bound_margin = gamma_sq_bound - r.max_psd;
  finalize(r);
  return r;
}

double s_procedure_value(const ChannelModel& ch, double theta, double gamma_sq, cplx h,
                         double omega) {
  return (1.0 - std::norm(h)) + theta * (error_psd_value(ch, h, omega) - gamma_sq);
}

ThresholdCertificate best_threshold_multiplier(const ChannelModel& ch, double gamma_sq,
                                               const FrequencyGrid& grid) {
  const double su = ch.sigma_u_sq();
  const double r = su + 2.0 - gamma_sq;
  std::vector<double> ps;
  std::vector<cplx> g;
  for (double w : grid) {
    const cplx g11 = ch.g11().on_axis(w);
    const cplx g12 = ch.g12().on_axis(w);
    ps.push_back(std::norm(g11) * su + std::norm(g12) * ch.sigma_w_sq());
    g.push_back(g11);
  }
  // Min over the grid of the smallest eigenvalue; concave in theta.
  const auto m = [&](double log_theta) {
    const double t = std::pow(10.0, log_theta);
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < ps.size(); ++j) {
      Eigen::Matrix2cd a;
      a << t * ps[j] - 1.0, -t * (1.0 + su) * std::conj(g[j]), -t * (1.0 + su) * g[j],
          t * r + 1.0;
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(a, Eigen::EigenvaluesOnly);
      worst = std::min(worst, es.eigenvalues()(0));
    }
    return worst;
  };
  std::vector<double> logs;
  for (int i = 0; i <= 200; ++i) logs.push_back(-8.0 + 12.0 * i / 200.0);
  const GridMax best = refine_grid_max(m, logs, 1);
  return {std::pow(10.0, best.omega), best.value, std::nullopt};
}

std::optional<ThresholdCertificate> certify_threshold(const ChannelModel& ch, double gamma_sq,
                                                      const FrequencyGrid& grid) {
  ThresholdCertificate c = best_threshold_multiplier(ch, gamma_sq, grid);
  const bool found = c.min_eig_over_grid >= 0.0;
  if (ch.kind() == ChannelKind::Static) {
    c.closed_form_agrees = threshold_lmi_feasible(ch, gamma_sq).has_value() == found;
  }
  if (!found) return std::nullopt;
  return c;
}

}  // namespace coheq
