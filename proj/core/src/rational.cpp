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

#include "coheq/rational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "coheq/errors.hpp"
#include "coheq/tolerances.hpp"

namespace coheq {

namespace {

bool root_less(const cplx& a, const cplx& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

// Splits a and b into the pairs that match within tol (returned) and the
// leftovers (left in place). Greedy nearest match, deterministic order.
std::vector<cplx> extract_common(std::vector<cplx>& a, std::vector<cplx>& b, double tol) {
  std::vector<cplx> common;
  std::vector<bool> used(b.size(), false);
  std::vector<cplx> rest_a;
  for (const cplx& x : a) {
    std::size_t best = b.size();
    double best_d = tol;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(x - b[j]);
      if (d <= best_d) {
        best_d = d;
        best = j;
      }
    }
    if (best < b.size()) {
      used[best] = true;
      common.push_back(0.5 * (x + b[best]));
    } else {
      rest_a.push_back(x);
    }
  }
  std::vector<cplx> rest_b;
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (!used[j]) rest_b.push_back(b[j]);
  }
  a = std::move(rest_a);
  b = std::move(rest_b);
  return common;
}

}  // namespace

RationalFunction::RationalFunction() : den_(Polynomial::constant(1.0)) {}

RationalFunction::RationalFunction(cplx c) : gain_(c) { normalize(); }

RationalFunction::RationalFunction(double c) : RationalFunction(cplx(c, 0.0)) {}

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) {
    throw Error(ErrorCode::SingularMatrix, "rational function with zero denominator");
  }
  if (num.is_zero()) {
    gain_ = 0.0;
  } else {
    zeros_ = num.roots();
    poles_ = den.roots();
    gain_ = num.leading() / den.leading();
  }
  normalize();
}

RationalFunction RationalFunction::from_zpk(std::vector<cplx> zeros, std::vector<cplx> poles,
                                            cplx gain) {
  RationalFunction f;
  f.gain_ = gain;
  if (gain != cplx(0.0)) {
    f.zeros_ = std::move(zeros);
    f.poles_ = std::move(poles);
  }
  f.normalize();
  return f;
}

RationalFunction RationalFunction::first_order(cplx zero, cplx pole, cplx gain) {
  return from_zpk({zero}, {pole}, gain);
}

RationalFunction RationalFunction::s() { return from_zpk({0.0}, {}, 1.0); }

void RationalFunction::normalize() {
  if (gain_ == cplx(0.0)) {
    zeros_.clear();
    poles_.clear();
  } else {
    extract_common(zeros_, poles_, tolerances().root_cancel);
  }
  const auto cap = static_cast<std::size_t>(tolerances().max_degree);
  if (zeros_.size() > cap || poles_.size() > cap) {
    throw Error(ErrorCode::DegreeOverflow,
                "degree " + std::to_string(std::max(zeros_.size(), poles_.size())) +
                    " exceeds the cap of " + std::to_string(cap));
  }
  std::sort(zeros_.begin(), zeros_.end(), root_less);
  std::sort(poles_.begin(), poles_.end(), root_less);
  num_ = Polynomial::from_roots(zeros_, gain_);
  den_ = Polynomial::from_roots(poles_, 1.0);
}

cplx RationalFunction::eval(cplx s) const {
  if (is_zero()) return 0.0;
  const cplx d = den_.eval(s);
  if (!poles_.empty() && std::abs(d) <= tolerances().pole_hit * den_.eval_scale(s)) {
    throw Error(ErrorCode::PoleHit, "evaluation at a pole, s = (" + std::to_string(s.real()) +
                                        ", " + std::to_string(s.imag()) + ")");
  }
  cplx acc = gain_;
  for (const cplx& z : zeros_) acc *= (s - z);
  for (const cplx& p : poles_) acc /= (s - p);
  return acc;
}

cplx RationalFunction::at_infinity() const {
  if (is_zero() || zeros_.size() < poles_.size()) return 0.0;
  if (zeros_.size() == poles_.size()) return gain_;
  const double inf = std::numeric_limits<double>::infinity();
  return {inf, inf};
}

RationalFunction RationalFunction::para_conjugate() const {
  if (is_zero()) return {};
  std::vector<cplx> z;
  std::vector<cplx> p;
  for (const cplx& x : zeros_) z.push_back(-std::conj(x));
  for (const cplx& x : poles_) p.push_back(-std::conj(x));
  const bool odd = ((zeros_.size() + poles_.size()) % 2) == 1;
  return from_zpk(std::move(z), std::move(p), (odd ? -1.0 : 1.0) * std::conj(gain_));
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw Error(ErrorCode::SingularMatrix, "inverse of the zero function");
  return from_zpk(poles_, zeros_, 1.0 / gain_);
}

RationalFunction RationalFunction::shifted(cplx a) const {
  std::vector<cplx> z(zeros_);
  std::vector<cplx> p(poles_);
  for (auto& x : z) x -= a;
  for (auto& x : p) x -= a;
  return from_zpk(std::move(z), std::move(p), gain_);
}

bool RationalFunction::is_stable() const {
  return std::all_of(poles_.begin(), poles_.end(), [](const cplx& p) { return p.real() < 0.0; });
}

double RationalFunction::analytic_margin() const {
  if (poles_.empty()) return std::numeric_limits<double>::infinity();
  double worst = -std::numeric_limits<double>::infinity();
  for (const cplx& p : poles_) worst = std::max(worst, p.real());
  return -worst;
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<cplx> z(a.zeros_);
  z.insert(z.end(), b.zeros_.begin(), b.zeros_.end());
  std::vector<cplx> p(a.poles_);
  p.insert(p.end(), b.poles_.begin(), b.poles_.end());
  return RationalFunction::from_zpk(std::move(z), std::move(p), a.gain_ * b.gain_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  return a * b.inverse();
}

RationalFunction operator-(const RationalFunction& a) {
  return RationalFunction::from_zpk(a.zeros_, a.poles_, -a.gain_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  // Shared poles enter the common denominator once.
  std::vector<cplx> pa(a.poles_);
  std::vector<cplx> pb(b.poles_);
  std::vector<cplx> den = extract_common(pa, pb, tolerances().root_cancel);
  const Polynomial na = Polynomial::from_roots(a.zeros_, a.gain_) * Polynomial::from_roots(pb);
  const Polynomial nb = Polynomial::from_roots(b.zeros_, b.gain_) * Polynomial::from_roots(pa);
  const Polynomial num = add_cancelling(na, nb, tolerances().coeff_cancel);
  if (num.is_zero()) return {};
  den.insert(den.end(), pa.begin(), pa.end());
  den.insert(den.end(), pb.begin(), pb.end());
  return RationalFunction::from_zpk(num.roots(), std::move(den), num.leading());
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}

}  // namespace coheq
