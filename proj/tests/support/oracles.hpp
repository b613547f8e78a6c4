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

// Independent reference computations for the test suites. Nothing here calls
// into the library's formulas for the quantity being checked.

#include <complex>
#include <functional>
#include <vector>

namespace coheq::testing {

using cplx = std::complex<double>;

// P_e from the full filter row [H11 G11 - 1, H11 G12, H12] weighted by the
// annihilation-field intensities (1 + su, 1 + sw, 1).
double psd_full(cplx g11, cplx g12, cplx h11, cplx h12, double su, double sw);

// Static beam-splitter cost with the completion |H12|^2 = 1 - |H11|^2.
double static_cost(cplx k, cplx m, double su, double sw, cplx h11);

struct DiscMin {
  cplx argmin;
  double value = 0.0;
};

// Exhaustive search over the closed unit disc on a polar grid with radial
// step `step` and angular step `step` radians.
DiscMin disc_search(const std::function<double(cplx)>& cost, double step = 1e-3);

// sum_j c_j s^j by explicit powers.
cplx eval_coeffs(const std::vector<cplx>& ascending, cplx s);
cplx eval_ratio(const std::vector<cplx>& num, const std::vector<cplx>& den, cplx s);

// Cavity channel blocks at s from G_c(s) = (s - kappa + i Omega)/(s + kappa + i Omega).
struct CavityBlocks {
  cplx g11, g12, g21, g22;
};
CavityBlocks cavity_blocks(double k, double kappa, double omega_c, cplx s);

// Noise threshold of the static channel.
double static_threshold_formula(double abs_k, double abs_m, double su);

// Pick matrix from its definition.
std::vector<std::vector<cplx>> pick_matrix(const std::vector<cplx>& nodes,
                                           const std::vector<cplx>& values);

// Smallest eigenvalue of a Hermitian matrix by Jacobi rotations.
double hermitian_min_eig(std::vector<std::vector<cplx>> a);

}  // namespace coheq::testing
