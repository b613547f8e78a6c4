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

#include "coheq/transfer_matrix.hpp"

#include <algorithm>
#include <limits>

#include "coheq/errors.hpp"

namespace coheq {

TransferMatrix::TransferMatrix(int rows, int cols)
    : TransferMatrix(rows, cols,
                     std::vector<RationalFunction>(static_cast<std::size_t>(rows * cols))) {}

TransferMatrix::TransferMatrix(int rows, int cols, std::vector<RationalFunction> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 1 || cols < 1 || entries_.size() != static_cast<std::size_t>(rows * cols)) {
    throw Error(ErrorCode::InvalidArgument, "transfer matrix shape does not match entries");
  }
}

TransferMatrix TransferMatrix::identity(int n) {
  std::vector<RationalFunction> e(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i * n + i)] = RationalFunction(1.0);
  return {n, n, std::move(e)};
}

TransferMatrix TransferMatrix::swap() { return from_2x2(0.0, 1.0, 1.0, 0.0); }

TransferMatrix TransferMatrix::from_2x2(const RationalFunction& a, const RationalFunction& b,
                                        const RationalFunction& c, const RationalFunction& d) {
  return {2, 2, {a, b, c, d}};
}

const RationalFunction& TransferMatrix::operator()(int i, int j) const {
  return entries_.at(static_cast<std::size_t>(i * cols_ + j));
}

Eigen::MatrixXcd TransferMatrix::eval(cplx s) const {
  Eigen::MatrixXcd m(rows_, cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).eval(s);
  }
  return m;
}

TransferMatrix TransferMatrix::para_conjugate() const {
  std::vector<RationalFunction> e;
  e.reserve(entries_.size());
  for (int i = 0; i < cols_; ++i) {
    for (int j = 0; j < rows_; ++j) e.push_back((*this)(j, i).para_conjugate());
  }
  return {cols_, rows_, std::move(e)};
}

RationalFunction TransferMatrix::determinant() const {
  if (rows_ != cols_) throw Error(ErrorCode::InvalidArgument, "determinant of non-square matrix");
  const auto& m = *this;
  switch (rows_) {
    case 1: return m(0, 0);
    case 2: return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    case 3:
      return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
             m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
             m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    default:
      throw Error(ErrorCode::InvalidArgument, "determinant implemented up to 3x3");
  }
}

TransferMatrix TransferMatrix::inverse() const {
  if (rows_ != cols_ || rows_ > 2) {
    throw Error(ErrorCode::InvalidArgument, "exact inverse implemented for 1x1 and 2x2");
  }
  const RationalFunction det = determinant();
  if (det.is_zero()) throw Error(ErrorCode::SingularMatrix, "determinant is identically zero");
  const RationalFunction inv = det.inverse();
  if (rows_ == 1) return {1, 1, {inv}};
  const auto& m = *this;
  return from_2x2(m(1, 1) * inv, -m(0, 1) * inv, -m(1, 0) * inv, m(0, 0) * inv);
}

bool TransferMatrix::is_stable() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const RationalFunction& f) { return f.is_stable(); });
}

double TransferMatrix::analytic_margin() const {
  double tau = std::numeric_limits<double>::infinity();
  for (const auto& f : entries_) tau = std::min(tau, f.analytic_margin());
  return tau;
}

TransferMatrix operator*(const TransferMatrix& a, const TransferMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "shape mismatch in product");
  std::vector<RationalFunction> e;
  e.reserve(static_cast<std::size_t>(a.rows_ * b.cols_));
  for (int i = 0; i < a.rows_; ++i) {
    for (int j = 0; j < b.cols_; ++j) {
      RationalFunction acc;
      for (int k = 0; k < a.cols_; ++k) acc = acc + a(i, k) * b(k, j);
      e.push_back(acc);
    }
  }
  return {a.rows_, b.cols_, std::move(e)};
}

TransferMatrix operator+(const TransferMatrix& a, const TransferMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(ErrorCode::InvalidArgument, "shape mismatch in sum");
  }
  std::vector<RationalFunction> e;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) e.push_back(a.entries_[i] + b.entries_[i]);
  return {a.rows_, a.cols_, std::move(e)};
}

TransferMatrix operator-(const TransferMatrix& a, const TransferMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(ErrorCode::InvalidArgument, "shape mismatch in difference");
  }
  std::vector<RationalFunction> e;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) e.push_back(a.entries_[i] - b.entries_[i]);
  return {a.rows_, a.cols_, std::move(e)};
}

}  // namespace coheq
