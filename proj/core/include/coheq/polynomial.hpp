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

#include <complex>
#include <vector>

namespace coheq {

using cplx = std::complex<double>;

// Polynomial with complex coefficients stored in ascending degree.
// Trailing zero coefficients are trimmed on construction, so the leading
// coefficient is nonzero unless the polynomial is identically zero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<cplx> coeffs);

  static Polynomial constant(cplx c);
  // lead * prod_i (s - roots[i])
  static Polynomial from_roots(const std::vector<cplx>& roots, cplx lead = 1.0);

  const std::vector<cplx>& coeffs() const { return coeffs_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  cplx coeff(int j) const;
  cplx leading() const;

  cplx eval(cplx s) const;
  // sum_j |c_j| |s|^j, the natural scale for rounding error in eval(s).
  double eval_scale(cplx s) const;

  Polynomial derivative() const;
  // p^H(s) = conj(p(-conj(s))): coefficients conj(c_j) (-1)^j.
  Polynomial para_conjugate() const;
  // q(w) = p(i w), for studying p on the imaginary axis.
  Polynomial on_imaginary_axis() const;
  Polynomial scaled(cplx a) const;

  // Roots via companion-matrix eigenvalues, each polished by Newton steps.
  std::vector<cplx> roots() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);

 private:
  void trim();
  std::vector<cplx> coeffs_;
};

// Sum with elementwise cancellation: any coefficient with
// |c_j| <= rel * (|a_j| + |b_j|) is set to exactly zero before trimming.
Polynomial add_cancelling(const Polynomial& a, const Polynomial& b, double rel);

}  // namespace coheq
