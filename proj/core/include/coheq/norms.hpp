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

#include <functional>

#include "coheq/frequency_grid.hpp"
#include "coheq/rational.hpp"
#include "coheq/transfer_matrix.hpp"

namespace coheq {

// 2048 log-spaced points per side over [1e-4, 1e4], mirrored, plus 0.
FrequencyGrid default_hinf_grid();

// Grid estimate of the H-infinity norm: largest singular value over the grid
// (plus the imaginary parts of the poles), refined by golden-section search
// around the best grid points. This is a lower bound on the true supremum
// whose accuracy is limited by grid resolution. Throws UnstableInput.
double hinf_norm(const RationalFunction& f, const FrequencyGrid& grid);
double hinf_norm(const RationalFunction& f);
double hinf_norm(const TransferMatrix& f, const FrequencyGrid& grid);
double hinf_norm(const TransferMatrix& f);

// Maximizes a scalar function of omega over a sorted grid, then refines the
// best few local maxima by golden-section search between their neighbours.
struct GridMax {
  double omega = 0.0;
  double value = 0.0;
};
GridMax refine_grid_max(const std::function<double(double)>& g, const std::vector<double>& grid,
                        int n_refine = 3);

// Exact supremum over the whole imaginary axis (including the limit at
// infinity) located from the real roots of the derivative of the real
// rational function of omega.
struct AxisSup {
  double omega = 0.0;  // location; +inf if the supremum is the limit at infinity
  double value = 0.0;
};
// sup_w |f(iw)|
AxisSup sup_abs_on_axis(const RationalFunction& f);
// sup_w x(iw) for a function that is real on the axis (para-Hermitian).
AxisSup sup_real_on_axis(const RationalFunction& x);

}  // namespace coheq
