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

#include "coheq/nevpick.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <string>

#include "coheq/errors.hpp"
#include "coheq/norms.hpp"
#include "coheq/tolerances.hpp"

namespace coheq {

PickProblem build_pick(const std::vector<cplx>& nodes, const std::vector<cplx>& values) {
  if (nodes.size() != values.size() || nodes.empty()) {
    throw Error(ErrorCode::InvalidArgument, "nodes and values must be nonempty and equal length");
  }
  const std::size_t n = nodes.size();
  for (std::size_t l = 0; l < n; ++l) {
    if (!(nodes[l].real() > 0.0)) {
      throw Error(ErrorCode::NodeInLeftHalfPlane, "node " + std::to_string(l) + " has Re s <= 0");
    }
    if (std::abs(values[l]) > 1.0) {
      throw Error(ErrorCode::ParameterOutOfRange,
                  "node value " + std::to_string(l) + " lies outside the unit disc");
    }
    for (std::size_t k = 0; k < l; ++k) {
      if (std::abs(nodes[l] - nodes[k]) <= 1e-14 * (1.0 + std::abs(nodes[l]))) {
        throw Error(ErrorCode::DuplicateNodes, "nodes " + std::to_string(k) + " and " +
                                                   std::to_string(l) + " coincide");
      }
    }
  }
  PickProblem p;
  p.nodes = nodes;
  p.values = values;
  p.pick_matrix.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t k = 0; k < n; ++k) {
      p.pick_matrix(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(k)) =
          (1.0 - values[l] * std::conj(values[k])) / (nodes[l] + std::conj(nodes[k]));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(p.pick_matrix, Eigen::EigenvaluesOnly);
  p.min_eigenvalue = es.eigenvalues()(0);
  double scale = 0.0;
  for (const cplx& s : nodes) scale = std::max(scale, 1.0 / (2.0 * s.real()));
  p.positive_definite = p.min_eigenvalue > tolerances().pick_min_eig * scale;
  return p;
}

PickProblem build_pick_on_axis(const std::vector<double>& omegas,
                               const std::vector<cplx>& values, double tau) {
  if (!(tau > 0.0)) throw Error(ErrorCode::NodeInLeftHalfPlane, "tau must be positive");
  std::vector<cplx> nodes;
  for (double w : omegas) nodes.emplace_back(tau, w);
  PickProblem p = build_pick(nodes, values);
  p.omegas = omegas;
  p.tau = tau;
  return p;
}

double choose_tau(const std::vector<cplx>& values, const std::vector<double>& omegas,
                  double tau0) {
  double tau = tau0;
  for (int i = 0; i <= tolerances().tau_halvings; ++i) {
    if (build_pick_on_axis(omegas, values, tau).positive_definite) return tau;
    tau *= 0.5;
  }
  throw Error(ErrorCode::CannotAchievePD,
              "Pick matrix not positive definite after " +
                  std::to_string(tolerances().tau_halvings) +
                  " halvings of tau; a node value is too close to the unit circle");
}

PickCoefficients::PickCoefficients(const PickProblem& p) : nodes_(p.nodes), values_(p.values) {
  if (!p.positive_definite) throw Error(ErrorCode::PickNotPD, "Pick matrix is not positive definite");
  const auto n = static_cast<Eigen::Index>(nodes_.size());
  Eigen::MatrixX2cd b(n, 2);
  for (Eigen::Index l = 0; l < n; ++l) {
    b(l, 0) = 1.0;
    b(l, 1) = -values_[static_cast<std::size_t>(l)];
  }
  Eigen::LLT<Eigen::MatrixXcd> llt(p.pick_matrix);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorCode::PickNotPD, "Cholesky factorization of the Pick matrix failed");
  }
  x_ = llt.solve(b);
}

Eigen::Matrix2cd PickCoefficients::eval(cplx s) const {
  Eigen::Matrix2cd w = Eigen::Matrix2cd::Identity();
  for (std::size_t k = 0; k < nodes_.size(); ++k) {
    const cplx d = s + std::conj(nodes_[k]);
    const cplx c0 = 1.0 / d;
    const cplx c1 = std::conj(values_[k]) / d;
    const auto kk = static_cast<Eigen::Index>(k);
    w(0, 0) -= c0 * x_(kk, 0);
    w(0, 1) -= c0 * x_(kk, 1);
    w(1, 0) -= c1 * x_(kk, 0);
    w(1, 1) -= c1 * x_(kk, 1);
  }
  return w;
}

namespace {

// delta * prod_k (s - a_k) - sum_k r_k prod_{j != k} (s - a_j)
Polynomial partial_fraction_numerator(const std::vector<cplx>& a, const std::vector<cplx>& r,
                                      cplx delta) {
  Polynomial acc = Polynomial::from_roots(a, delta);
  for (std::size_t k = 0; k < a.size(); ++k) {
    std::vector<cplx> others;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j != k) others.push_back(a[j]);
    }
    acc = acc - Polynomial::from_roots(others, r[k]);
  }
  return acc;
}

std::vector<cplx> w_poles(const std::vector<cplx>& nodes) {
  std::vector<cplx> a;
  for (const cplx& s : nodes) a.push_back(-std::conj(s));
  return a;
}

}  // namespace

std::optional<TransferMatrix> PickCoefficients::explicit_blocks() const {
  if (nodes_.size() > kExplicitNodes) return std::nullopt;
  const std::vector<cplx> a = w_poles(nodes_);
  std::vector<RationalFunction> e;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      std::vector<cplx> r;
      for (std::size_t k = 0; k < nodes_.size(); ++k) {
        const cplx c = i == 0 ? cplx(1.0) : std::conj(values_[k]);
        r.push_back(c * x_(static_cast<Eigen::Index>(k), j));
      }
      const Polynomial num = partial_fraction_numerator(a, r, i == j ? 1.0 : 0.0);
      e.emplace_back(num, Polynomial::from_roots(a));
    }
  }
  return TransferMatrix(2, 2, std::move(e));
}

PickCoefficients coefficient_matrix(const PickProblem& p) { return PickCoefficients(p); }

Interpolant::Interpolant(PickCoefficients w, RationalFunction theta, double tau)
    : w_(std::move(w)), theta_(std::move(theta)), tau_(tau) {
  if (w_.size() > PickCoefficients::kExplicitNodes) return;
  const std::vector<cplx> a = w_poles(w_.nodes());
  RationalFunction hhat;
  if (theta_.is_constant()) {
    const cplx th = theta_.gain();
    // Poles from the eigenvalues of A + b c2 (state-space form of the
    // denominator), zeros from the numerator polynomial.
    const auto n = static_cast<Eigen::Index>(a.size());
    Eigen::VectorXcd b = w_.solved().col(0) * th + w_.solved().col(1);
    Eigen::MatrixXcd acl = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) acl(k, k) = a[static_cast<std::size_t>(k)];
    Eigen::RowVectorXcd c2(n);
    for (Eigen::Index k = 0; k < n; ++k) c2(k) = std::conj(w_.values()[static_cast<std::size_t>(k)]);
    acl += b * c2;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(acl, false);
    std::vector<cplx> poles(es.eigenvalues().data(), es.eigenvalues().data() + n);
    std::vector<cplx> r(b.data(), b.data() + n);
    const Polynomial num = partial_fraction_numerator(a, r, th);
    hhat = num.is_zero() ? RationalFunction()
                         : RationalFunction::from_zpk(num.roots(), poles, num.leading());
  } else {
    const TransferMatrix wb = *w_.explicit_blocks();
    hhat = (wb(0, 0) * theta_ + wb(0, 1)) / (wb(1, 0) * theta_ + wb(1, 1));
  }
  explicit_ = hhat.shifted(tau_);
}

cplx Interpolant::eval(cplx s) const {
  const cplx z = s + tau_;
  const Eigen::Matrix2cd w = w_.eval(z);
  const cplx th = theta_.eval(z);
  return (w(0, 0) * th + w(0, 1)) / (w(1, 0) * th + w(1, 1));
}

Interpolant interpolant(const PickProblem& p, const RationalFunction& theta) {
  if (!theta.is_stable()) throw Error(ErrorCode::ThetaNotAdmissible, "Theta must be stable");
  const double tn = hinf_norm(theta);
  if (!(tn < 1.0)) {
    throw Error(ErrorCode::ThetaNotAdmissible,
                "||Theta||_inf = " + std::to_string(tn) + " is not below 1");
  }
  return Interpolant(PickCoefficients(p), theta, p.tau);
}

std::vector<double> node_neighbourhoods(const std::vector<double>& omegas, double tau) {
  static const double offs[] = {0.1, 0.3, 1.0, 3.0, 10.0, 30.0};
  std::vector<double> out;
  for (double w : omegas) {
    out.push_back(w);
    for (double o : offs) {
      out.push_back(w + o * tau);
      out.push_back(w - o * tau);
    }
  }
  return out;
}

double interpolant_sup_psd(const ChannelModel& ch, const Interpolant& h, const FrequencyGrid& grid) {
  if (h.explicit_form()) {
    return sup_real_on_axis(error_psd_rational(ch, *h.explicit_form())).value;
  }
  const auto& om = h.coefficients().nodes();
  std::vector<double> ws;
  for (const cplx& s : om) ws.push_back(s.imag());
  const FrequencyGrid g = grid.merged(node_neighbourhoods(ws, h.tau()));
  const auto f = [&](double w) { return error_psd_value(ch, h.on_axis(w), w); };
  return refine_grid_max(f, g.points(), 2 * static_cast<int>(om.size()) + 3).value;
}

NevpickDesign sdp_nevpick_design(const ChannelModel& ch, const FrequencyGrid& grid,
                                 const std::vector<double>& thetas, double tau0) {
  const auto& tol = tolerances();
  NevpickDesign out;
  out.grid = grid_solve(ch, grid);
  out.shrunk_values = shrink_to_interior(out.grid.h11_values, tol.node_shrink);
  const double tau = choose_tau(out.shrunk_values, grid.points(), tau0);
  out.pick = build_pick_on_axis(grid.points(), out.shrunk_values, tau);
  out.thetas = thetas;
  const FrequencyGrid dense = synthesis_grid(ch);
  for (double th : thetas) {
    Interpolant h = interpolant(out.pick, RationalFunction(th));
    const double sup = interpolant_sup_psd(ch, h, dense);
    std::optional<EqualizerDesign> done;
    if (h.explicit_form()) {
      EqualizerDesign d = complete_equalizer(*h.explicit_form(),
                                             dense.merged(node_neighbourhoods(grid.points(), tau)));
      d.method = "sdp_nevpick";
      d.theta = th;
      d.attained_cost = sup;
      d.gamma_sq_bound = sup + tol.bound_margin;
      d.parameters["tau"] = tau;
      d.parameters["gamma_tilde_sq"] = out.grid.gamma_tilde_sq;
      d.parameters["theta"] = th;
      done = std::move(d);
    }
    out.dense_sup_psd.push_back(sup);
    out.interpolants.push_back(std::move(h));
    out.completed.push_back(std::move(done));
  }
  return out;
}

}  // namespace coheq
