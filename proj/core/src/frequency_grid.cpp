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

#include "coheq/frequency_grid.hpp"

#include <algorithm>
#include <cmath>

#include "coheq/errors.hpp"

namespace coheq {

FrequencyGrid::FrequencyGrid(std::vector<double> points) : points_(std::move(points)) {
  for (double w : points_) {
    if (!std::isfinite(w)) throw Error(ErrorCode::InvalidArgument, "non-finite grid frequency");
  }
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

std::vector<double> logspace(double lo, double hi, int n) {
  if (n < 1 || !(lo > 0.0) || !(hi >= lo)) {
    throw Error(ErrorCode::InvalidArgument, "logspace needs 0 < lo <= hi and n >= 1");
  }
  std::vector<double> out(static_cast<std::size_t>(n));
  const double a = std::log10(lo);
  const double b = std::log10(hi);
  for (int i = 0; i < n; ++i) {
    const double t = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
    out[static_cast<std::size_t>(i)] = std::pow(10.0, a + t * (b - a));
  }
  // Pin the endpoints exactly.
  out.front() = lo;
  if (n > 1) out.back() = hi;
  return out;
}

FrequencyGrid FrequencyGrid::log_symmetric(double lo, double hi, int n_per_side,
                                           bool include_zero) {
  std::vector<double> pts;
  for (double w : logspace(lo, hi, n_per_side)) {
    pts.push_back(w);
    pts.push_back(-w);
  }
  if (include_zero) pts.push_back(0.0);
  return FrequencyGrid(std::move(pts));
}

FrequencyGrid FrequencyGrid::merged(const std::vector<double>& extra) const {
  std::vector<double> pts(points_);
  pts.insert(pts.end(), extra.begin(), extra.end());
  return FrequencyGrid(std::move(pts));
}

}  // namespace coheq
