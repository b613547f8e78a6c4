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

#include <vector>

namespace coheq {

// Sorted, duplicate-free set of real frequencies in rad/s.
class FrequencyGrid {
 public:
  FrequencyGrid() = default;
  // Sorts and removes exact duplicates; throws InvalidArgument on non-finite input.
  explicit FrequencyGrid(std::vector<double> points);

  // n log-spaced points per side over [lo, hi], mirrored to negative
  // frequencies, optionally with 0.
  static FrequencyGrid log_symmetric(double lo, double hi, int n_per_side, bool include_zero);

  FrequencyGrid merged(const std::vector<double>& extra) const;

  const std::vector<double>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  double operator[](std::size_t i) const { return points_[i]; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

 private:
  std::vector<double> points_;
};

// n points with log10 spacing from lo to hi inclusive.
std::vector<double> logspace(double lo, double hi, int n);

}  // namespace coheq
