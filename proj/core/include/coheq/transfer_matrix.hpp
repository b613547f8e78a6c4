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

#include "coheq/rational.hpp"

namespace coheq {

// Small matrix of rational functions, row-major.
class TransferMatrix {
 public:
  TransferMatrix(int rows, int cols);
  TransferMatrix(int rows, int cols, std::vector<RationalFunction> entries);

  static TransferMatrix identity(int n);
  // [[0, 1], [1, 0]]
  static TransferMatrix swap();
  static TransferMatrix from_2x2(const RationalFunction& a, const RationalFunction& b,
                                 const RationalFunction& c, const RationalFunction& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const RationalFunction& operator()(int i, int j) const;
  const std::vector<RationalFunction>& entries() const { return entries_; }

  Eigen::MatrixXcd eval(cplx s) const;
  Eigen::MatrixXcd on_axis(double omega) const { return eval(cplx(0.0, omega)); }

  // Transpose with each entry para-conjugated.
  TransferMatrix para_conjugate() const;
  // Exact for n <= 3 (cofactor expansion).
  RationalFunction determinant() const;
  // Exact inverse for 1x1 and 2x2; SingularMatrix if the determinant vanishes.
  TransferMatrix inverse() const;

  bool is_stable() const;
  double analytic_margin() const;

  friend TransferMatrix operator*(const TransferMatrix& a, const TransferMatrix& b);
  friend TransferMatrix operator+(const TransferMatrix& a, const TransferMatrix& b);
  friend TransferMatrix operator-(const TransferMatrix& a, const TransferMatrix& b);

 private:
  int rows_;
  int cols_;
  std::vector<RationalFunction> entries_;
};

}  // namespace coheq
