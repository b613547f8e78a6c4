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

#include "coheq/sdp.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "coheq/errors.hpp"

namespace coheq {

NodeOptimum per_frequency_optimum(const ChannelModel& ch, double omega) {
  const double su = ch.sigma_u_sq();
  const cplx g11 = ch.g11().on_axis(omega);
  const cplx g12 = ch.g12().on_axis(omega);
  const double ps = std::norm(g11) * su + std::norm(g12) * ch.sigma_w_sq();
  const double ag = std::abs(g11);

  NodeOptimum out;
  if (!(ps > 0.0)) {
    if (ag == 0.0) {
      out.degenerate = true;
      out.h11 = 0.0;
    } else {
      out.h11 = std::conj(g11) / ag;
      out.on_boundary = true;
      out.lambda = (1.0 + su) * ag;
    }
  } else {
    const cplx h = (1.0 + su) * std::conj(g11) / ps;
    if (std::abs(h) <= 1.0) {
      out.h11 = h;
    } else {
      out.h11 = h / std::abs(h);
      out.on_boundary = true;
      out.lambda = (1.0 + su) * ag - ps;
    }
  }
  out.cost = error_psd_value(ch, out.h11, omega);
  return out;
}

GridSolution grid_solve(const ChannelModel& ch, const FrequencyGrid& grid) {
  if (grid.empty()) throw Error(ErrorCode::InvalidArgument, "grid_solve needs a nonempty grid");
  GridSolution sol;
  sol.omegas = grid;
  sol.gamma_tilde_sq = 0.0;
  for (double w : grid) {
    const NodeOptimum n = per_frequency_optimum(ch, w);
    sol.h11_values.push_back(n.h11);
    sol.per_freq_cost.push_back(n.cost);
    sol.on_boundary.push_back(n.on_boundary);
    if (n.degenerate) ++sol.degenerate_nodes;
    sol.gamma_tilde_sq = std::max(sol.gamma_tilde_sq, n.cost);
  }
  sol.trivial = !(sol.gamma_tilde_sq < ch.sigma_u_sq() + 2.0);
  return sol;
}

FrequencyGrid paper_grid() { return FrequencyGrid::log_symmetric(1e-3, 10.0, 10, true); }

std::vector<cplx> shrink_to_interior(const std::vector<cplx>& values, double factor) {
  std::vector<cplx> out(values);
  for (auto& v : out) {
    const double m = std::abs(v);
    if (m > factor) v *= factor / m;
  }
  return out;
}

Eigen::MatrixXcd multimode_error_psd(const MultimodeNode& node, const Eigen::MatrixXcd& h) {
  const auto n = node.g11.rows();
  const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(n, n);
  const Eigen::MatrixXcd psi = node.g11 * node.sigma_u * node.g11.adjoint() +
                               node.g12 * node.sigma_w * node.g12.adjoint();
  const Eigen::MatrixXcd b = node.g11 * (eye + node.sigma_u);
  return h * psi * h.adjoint() - h * b - b.adjoint() * h.adjoint() + node.sigma_u + 2.0 * eye;
}

namespace {

double lambda_max(const Eigen::MatrixXcd& p, Eigen::VectorXcd* v) {
  const Eigen::MatrixXcd herm = 0.5 * (p + p.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm);
  const auto last = es.eigenvalues().size() - 1;
  if (v) *v = es.eigenvectors().col(last);
  return es.eigenvalues()(last);
}

Eigen::MatrixXcd clip_to_contraction(const Eigen::MatrixXcd& h) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(h, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::VectorXd s = svd.singularValues().cwiseMin(1.0);
  return svd.matrixU() * s.cast<cplx>().asDiagonal() * svd.matrixV().adjoint();
}

}  // namespace

MultimodeOptimum per_frequency_optimum_multimode(const MultimodeNode& node, int max_iterations) {
  const auto n = node.g11.rows();
  if (node.g11.cols() != n || node.sigma_u.rows() != n || node.g12.rows() != n ||
      node.sigma_w.rows() != node.g12.cols()) {
    throw Error(ErrorCode::InvalidArgument, "inconsistent multimode node shapes");
  }
  const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(n, n);
  const Eigen::MatrixXcd psi = node.g11 * node.sigma_u * node.g11.adjoint() +
                               node.g12 * node.sigma_w * node.g12.adjoint();
  const Eigen::MatrixXcd b = node.g11 * (eye + node.sigma_u);

  // Lipschitz estimate from the largest eigenvalue of Psi by power iteration.
  Eigen::VectorXcd x = Eigen::VectorXcd::Ones(n);
  double lip = 0.0;
  for (int it = 0; it < 100; ++it) {
    const Eigen::VectorXcd y = psi * x;
    const double nrm = y.norm();
    if (nrm == 0.0) break;
    lip = nrm / x.norm();
    x = y / nrm;
  }
  lip = 2.0 * lip;
  if (!(lip > 1e-12)) lip = 1.0;
  const double step = 1.0 / lip;

  Eigen::MatrixXcd h =
      clip_to_contraction(b.adjoint() * psi.completeOrthogonalDecomposition().pseudoInverse());
  MultimodeOptimum best{h, lambda_max(multimode_error_psd(node, h), nullptr), 0};
  for (int it = 1; it <= max_iterations; ++it) {
    Eigen::VectorXcd v;
    lambda_max(multimode_error_psd(node, h), &v);
    const Eigen::MatrixXcd grad = v * v.adjoint() * (h * psi - b.adjoint());
    const Eigen::MatrixXcd next = clip_to_contraction(h - step * grad);
    const double lam = lambda_max(multimode_error_psd(node, next), nullptr);
    if (lam < best.lambda_max) best = {next, lam, it};
    if ((next - h).norm() < 1e-13) break;
    h = next;
  }
  return best;
}

}  // namespace coheq
