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
#include <vector>

#include "coheq/channel.hpp"
#include "coheq/frequency_grid.hpp"

namespace coheq {

// Minimizer of P_e(iw, h) over the closed unit disc at one frequency.
struct NodeOptimum {
  cplx h11;
  double cost = 0.0;
  bool on_boundary = false;
  // Psi(iw) = 0 and G11(iw) = 0: every h gives su + 2; h = 0 is returned.
  bool degenerate = false;
  // Multiplier of |h| <= 1; zero in the interior.
  double lambda = 0.0;
};

// Exact scalar KKT solution: h* = (1 + su) conj(G11) / Psi, projected
// radially onto the unit circle when |h*| > 1.
NodeOptimum per_frequency_optimum(const ChannelModel& ch, double omega);

struct GridSolution {
  FrequencyGrid omegas;
  std::vector<cplx> h11_values;
  std::vector<double> per_freq_cost;
  std::vector<bool> on_boundary;
  double gamma_tilde_sq = 0.0;
  // gamma_tilde_sq reached su + 2: the filter H11 = 0 is already optimal.
  bool trivial = false;
  int degenerate_nodes = 0;
};

GridSolution grid_solve(const ChannelModel& ch, const FrequencyGrid& grid);

// {0} and +-10 log-spaced frequencies over [1e-3, 10]; 21 nodes.
FrequencyGrid paper_grid();

// Values with |v| > factor are pulled radially to |v| = factor.
std::vector<cplx> shrink_to_interior(const std::vector<cplx>& values, double factor);

// Node data for the n-mode grid problem.
struct MultimodeNode {
  Eigen::MatrixXcd g11;      // n x n
  Eigen::MatrixXcd g12;      // n x m
  Eigen::MatrixXcd sigma_u;  // n x n, Hermitian >= 0 (already transposed)
  Eigen::MatrixXcd sigma_w;  // m x m, Hermitian >= 0 (already transposed)
};

// P_e = H Psi H^dag - H B - B^dag H^dag + Sigma_u + 2 I with B = G11 (I + Sigma_u).
Eigen::MatrixXcd multimode_error_psd(const MultimodeNode& node, const Eigen::MatrixXcd& h);

struct MultimodeOptimum {
  Eigen::MatrixXcd h11;
  double lambda_max = 0.0;
  int iterations = 0;
};

// Best-effort minimization of lambda_max(P_e) over contractions by projected
// subgradient steps (singular values clipped to 1), started from the
// clipped unconstrained minimizer. Keeps the best iterate.
MultimodeOptimum per_frequency_optimum_multimode(const MultimodeNode& node,
                                                 int max_iterations = 10000);

}  // namespace coheq
