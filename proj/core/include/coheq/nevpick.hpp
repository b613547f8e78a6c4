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
#include <optional>
#include <vector>

#include "coheq/channel.hpp"
#include "coheq/frequency_grid.hpp"
#include "coheq/rational.hpp"
#include "coheq/sdp.hpp"
#include "coheq/synthesis.hpp"
#include "coheq/transfer_matrix.hpp"

namespace coheq {

// Interpolation data in the shifted variable: nodes s_l = i w_l + tau.
struct PickProblem {
  std::vector<cplx> nodes;
  std::vector<cplx> values;
  std::vector<double> omegas;  // empty when nodes were given directly
  double tau = 0.0;            // 0 when nodes were given directly
  Eigen::MatrixXcd pick_matrix;
  double min_eigenvalue = 0.0;
  bool positive_definite = false;
};

// P_lk = (1 - v_l conj(v_k)) / (s_l + conj(s_k)). Throws DuplicateNodes,
// NodeInLeftHalfPlane, and ParameterOutOfRange for |v| > 1. Positive
// definiteness is recorded, not enforced.
PickProblem build_pick(const std::vector<cplx>& nodes, const std::vector<cplx>& values);
PickProblem build_pick_on_axis(const std::vector<double>& omegas,
                               const std::vector<cplx>& values, double tau);

// Halves tau from tau0 until the Pick matrix is positive definite with
// smallest eigenvalue above Tolerances::pick_min_eig / (2 tau).
// Throws CannotAchievePD after Tolerances::tau_halvings halvings.
double choose_tau(const std::vector<cplx>& values, const std::vector<double>& omegas,
                  double tau0);

// W(s) = I - C(s) P^-1 B with C rows [1/(s + conj s_k)], [conj v_k/(s + conj s_k)]
// and B rows [1, -v_l]. The solve against P uses its Cholesky factor.
class PickCoefficients {
 public:
  explicit PickCoefficients(const PickProblem& p);

  Eigen::Matrix2cd eval(cplx s) const;
  std::size_t size() const { return nodes_.size(); }
  // Blocks as rational functions; available for up to kExplicitNodes nodes.
  std::optional<TransferMatrix> explicit_blocks() const;

  const std::vector<cplx>& nodes() const { return nodes_; }
  const std::vector<cplx>& values() const { return values_; }
  // P^-1 B, L x 2.
  const Eigen::MatrixX2cd& solved() const { return x_; }

  static constexpr std::size_t kExplicitNodes = 8;

 private:
  std::vector<cplx> nodes_;
  std::vector<cplx> values_;
  Eigen::MatrixX2cd x_;
};

PickCoefficients coefficient_matrix(const PickProblem& p);

// H11(s) = Hhat(s + tau) with Hhat = (W11 Theta + W12)/(W21 Theta + W22).
class Interpolant {
 public:
  Interpolant(PickCoefficients w, RationalFunction theta, double tau);

  // Pointwise LFT evaluation; valid for any number of nodes.
  cplx eval(cplx s) const;
  cplx on_axis(double omega) const { return eval(cplx(0.0, omega)); }
  double tau() const { return tau_; }
  const RationalFunction& theta() const { return theta_; }
  const PickCoefficients& coefficients() const { return w_; }
  // Explicit rational form of H11 when the node count allows it.
  const std::optional<RationalFunction>& explicit_form() const { return explicit_; }

 private:
  PickCoefficients w_;
  RationalFunction theta_;
  double tau_;
  std::optional<RationalFunction> explicit_;
};

// Throws PickNotPD, or ThetaNotAdmissible unless Theta is stable with
// ||Theta||_inf < 1.
Interpolant interpolant(const PickProblem& p, const RationalFunction& theta);

// Frequencies around each node (w_l +- tau * {0.1 .. 30}) where the
// interpolant has its sharp features.
std::vector<double> node_neighbourhoods(const std::vector<double>& omegas, double tau);

// Grid relaxation followed by interpolation of the node values.
struct NevpickDesign {
  GridSolution grid;
  std::vector<cplx> shrunk_values;
  PickProblem pick;
  std::vector<Interpolant> interpolants;  // one per Theta
  std::vector<double> thetas;
  // Dense-grid supremum of P_e for each interpolant (exact when explicit).
  std::vector<double> dense_sup_psd;
  // Completed filters, present when the node count permits an explicit form.
  std::vector<std::optional<EqualizerDesign>> completed;
};

NevpickDesign sdp_nevpick_design(const ChannelModel& ch, const FrequencyGrid& grid,
                                 const std::vector<double>& thetas, double tau0);

// Supremum of P_e(iw, H11) for an interpolant over the dense grid plus node
// neighbourhoods, refined by golden-section search.
double interpolant_sup_psd(const ChannelModel& ch, const Interpolant& h, const FrequencyGrid& grid);

}  // namespace coheq
