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

#include "coheq/polynomial.hpp"

namespace coheq {

// Scalar rational function over the complex numbers.
//
// The factored form gain * prod(s - z_i) / prod(s - p_j) is the primary
// representation: products, inverses and para-conjugates act on it without
// root finding, which keeps exact cancellations exact. The coefficient form
// (monic denominator) is derived once on construction. Numerator and
// denominator roots closer than Tolerances::root_cancel are cancelled.
class RationalFunction {
 public:
  RationalFunction();
  RationalFunction(cplx c);   // NOLINT: constants convert implicitly
  RationalFunction(double c);  // NOLINT
  RationalFunction(const Polynomial& num, const Polynomial& den);

  static RationalFunction from_zpk(std::vector<cplx> zeros, std::vector<cplx> poles,
                                   cplx gain);
  // gain * (s - zero) / (s - pole)
  static RationalFunction first_order(cplx zero, cplx pole, cplx gain = 1.0);
  // The variable s itself.
  static RationalFunction s();

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  const std::vector<cplx>& zeros() const { return zeros_; }
  const std::vector<cplx>& poles() const { return poles_; }
  cplx gain() const { return gain_; }

  int num_degree() const { return is_zero() ? -1 : static_cast<int>(zeros_.size()); }
  int den_degree() const { return static_cast<int>(poles_.size()); }
  bool is_zero() const { return gain_ == cplx(0.0); }
  bool is_constant() const { return zeros_.empty() && poles_.empty(); }
  bool is_proper() const { return is_zero() || zeros_.size() <= poles_.size(); }

  // Throws PoleHit when s sits on a pole to working precision.
  cplx eval(cplx s) const;
  cplx operator()(cplx s) const { return eval(s); }
  cplx on_axis(double omega) const { return eval(cplx(0.0, omega)); }
  // Limit as |s| -> infinity; infinite for improper functions.
  cplx at_infinity() const;

  // f^H(s) = conj(f(-conj(s))).
  RationalFunction para_conjugate() const;
  RationalFunction inverse() const;
  // s -> f(s + a)
  RationalFunction shifted(cplx a) const;

  bool is_stable() const;
  // Largest tau with every pole in Re s < -tau; +inf without poles.
  double analytic_margin() const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a);

 private:
  void normalize();

  std::vector<cplx> zeros_;
  std::vector<cplx> poles_;
  cplx gain_ = 0.0;
  Polynomial num_;
  Polynomial den_;
};

}  // namespace coheq
