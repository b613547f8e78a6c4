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

#include "coheq/polynomial.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace coheq {

Polynomial::Polynomial(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == cplx(0.0)) coeffs_.pop_back();
}

Polynomial Polynomial::constant(cplx c) { return Polynomial({c}); }

Polynomial Polynomial::from_roots(const std::vector<cplx>& roots, cplx lead) {
  if (lead == cplx(0.0)) return Polynomial();
  std::vector<cplx> c{lead};
  for (const cplx& r : roots) {
    std::vector<cplx> next(c.size() + 1, 0.0);
    for (std::size_t j = 0; j < c.size(); ++j) {
      next[j + 1] += c[j];
      next[j] -= r * c[j];
    }
    c = std::move(next);
  }
  return Polynomial(std::move(c));
}

cplx Polynomial::coeff(int j) const {
  if (j < 0 || j > degree()) return 0.0;
  return coeffs_[static_cast<std::size_t>(j)];
}

cplx Polynomial::leading() const {
  return coeffs_.empty() ? cplx(0.0) : coeffs_.back();
}

cplx Polynomial::eval(cplx s) const {
  cplx acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + *it;
  return acc;
}

double Polynomial::eval_scale(cplx s) const {
  const double r = std::abs(s);
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * r + std::abs(*it);
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (degree() < 1) return Polynomial();
  std::vector<cplx> d(coeffs_.size() - 1);
  for (std::size_t j = 1; j < coeffs_.size(); ++j) {
    d[j - 1] = coeffs_[j] * static_cast<double>(j);
  }
  return Polynomial(std::move(d));
}

Polynomial Polynomial::para_conjugate() const {
  std::vector<cplx> c(coeffs_.size());
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    c[j] = (j % 2 == 0 ? 1.0 : -1.0) * std::conj(coeffs_[j]);
  }
  return Polynomial(std::move(c));
}

Polynomial Polynomial::on_imaginary_axis() const {
  static const cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::vector<cplx> c(coeffs_.size());
  for (std::size_t j = 0; j < coeffs_.size(); ++j) c[j] = coeffs_[j] * ipow[j % 4];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::scaled(cplx a) const {
  std::vector<cplx> c(coeffs_);
  for (auto& x : c) x *= a;
  return Polynomial(std::move(c));
}

std::vector<cplx> Polynomial::roots() const {
  const int n = degree();
  if (n < 1) return {};
  if (n == 1) return {-coeffs_[0] / coeffs_[1]};

  // Companion matrix of the monic polynomial.
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  const cplx lead = leading();
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -coeffs_[static_cast<std::size_t>(i)] / lead;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  std::vector<cplx> r(es.eigenvalues().data(), es.eigenvalues().data() + n);

  const Polynomial dp = derivative();
  for (cplx& z : r) {
    cplx best = z;
    double best_res = std::abs(eval(z));
    for (int it = 0; it < 4; ++it) {
      const cplx d = dp.eval(z);
      if (d == cplx(0.0)) break;
      z -= eval(z) / d;
      const double res = std::abs(eval(z));
      if (!(res < best_res)) break;
      best = z;
      best_res = res;
    }
    z = best;
  }
  std::sort(r.begin(), r.end(), [](const cplx& a, const cplx& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return r;
}

Polynomial add_cancelling(const Polynomial& a, const Polynomial& b, double rel) {
  const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<cplx> c(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const cplx x = a.coeff(static_cast<int>(j));
    const cplx y = b.coeff(static_cast<int>(j));
    c[j] = x + y;
    if (std::abs(c[j]) <= rel * (std::abs(x) + std::abs(y))) c[j] = 0.0;
  }
  return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  return add_cancelling(a, b, 0.0);
}

Polynomial operator-(const Polynomial& a) { return a.scaled(-1.0); }

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<cplx> c(a.coeffs().size() + b.coeffs().size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      c[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
  }
  return Polynomial(std::move(c));
}

}  // namespace coheq
