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

#include "coheq/norms.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>

#include "coheq/errors.hpp"

namespace coheq {

namespace {

double golden_max(const std::function<double(double)>& g, double a, double b, double* arg) {
  const double r = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - r * (b - a);
  double d = a + r * (b - a);
  double gc = g(c);
  double gd = g(d);
  for (int it = 0; it < 80 && (b - a) > 1e-14 * (1.0 + std::abs(a) + std::abs(b)); ++it) {
    if (gc >= gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - r * (b - a);
      gc = g(c);
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + r * (b - a);
      gd = g(d);
    }
  }
  *arg = gc >= gd ? c : d;
  return std::max(gc, gd);
}

std::vector<double> with_pole_frequencies(const FrequencyGrid& grid,
                                          const std::vector<cplx>& poles) {
  std::vector<double> extra;
  for (const cplx& p : poles) extra.push_back(p.imag());
  return grid.merged(extra).points();
}

// Real polynomial of omega representing conj-multiplication on the axis:
// returns p(iw) * conj(q(iw)) with its coefficient vector.
Polynomial axis_product(const Polynomial& p, const Polynomial& q) {
  const Polynomial pw = p.on_imaginary_axis();
  std::vector<cplx> qc(q.on_imaginary_axis().coeffs());
  for (auto& c : qc) c = std::conj(c);
  return pw * Polynomial(std::move(qc));
}

Polynomial real_part(const Polynomial& p) {
  std::vector<cplx> c(p.coeffs());
  for (auto& x : c) x = cplx(x.real(), 0.0);
  return Polynomial(std::move(c));
}

AxisSup sup_of_ratio(const Polynomial& n, const Polynomial& d,
                     const std::function<double(double)>& value, double at_inf) {
  AxisSup best{std::numeric_limits<double>::infinity(), at_inf};
  auto consider = [&](double w) {
    const double v = value(w);
    if (!std::isnan(v) && v > best.value) best = {w, v};
  };
  consider(0.0);
  const Polynomial crit = n.derivative() * d - n * d.derivative();
  if (!crit.is_zero()) {
    for (const cplx& r : crit.roots()) {
      if (std::abs(r.imag()) <= 1e-6 * (1.0 + std::abs(r.real()))) consider(r.real());
    }
  }
  return best;
}

}  // namespace

FrequencyGrid default_hinf_grid() { return FrequencyGrid::log_symmetric(1e-4, 1e4, 2048, true); }

GridMax refine_grid_max(const std::function<double(double)>& g, const std::vector<double>& grid,
                        int n_refine) {
  if (grid.empty()) throw Error(ErrorCode::InvalidArgument, "empty grid");
  std::vector<double> vals(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) vals[i] = g(grid[i]);

  std::vector<std::size_t> peaks;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const bool left = i == 0 || vals[i] >= vals[i - 1];
    const bool right = i + 1 == grid.size() || vals[i] >= vals[i + 1];
    if (left && right) peaks.push_back(i);
  }
  std::sort(peaks.begin(), peaks.end(),
            [&](std::size_t a, std::size_t b) { return vals[a] > vals[b]; });

  GridMax best{grid[peaks.front()], vals[peaks.front()]};
  for (int k = 0; k < n_refine && k < static_cast<int>(peaks.size()); ++k) {
    const std::size_t i = peaks[static_cast<std::size_t>(k)];
    const double a = grid[i == 0 ? 0 : i - 1];
    const double b = grid[i + 1 == grid.size() ? i : i + 1];
    if (!(b > a)) continue;
    double arg = 0.0;
    const double v = golden_max(g, a, b, &arg);
    if (v > best.value) best = {arg, v};
  }
  return best;
}

double hinf_norm(const RationalFunction& f, const FrequencyGrid& grid) {
  if (!f.is_stable()) throw Error(ErrorCode::UnstableInput, "hinf_norm of an unstable function");
  if (f.is_constant()) return std::abs(f.gain());
  const auto pts = with_pole_frequencies(grid, f.poles());
  const auto g = [&](double w) { return std::abs(f.on_axis(w)); };
  return std::max(refine_grid_max(g, pts).value, std::abs(f.at_infinity()));
}

double hinf_norm(const RationalFunction& f) { return hinf_norm(f, default_hinf_grid()); }

double hinf_norm(const TransferMatrix& f, const FrequencyGrid& grid) {
  if (!f.is_stable()) throw Error(ErrorCode::UnstableInput, "hinf_norm of an unstable matrix");
  std::vector<cplx> poles;
  for (const auto& e : f.entries()) poles.insert(poles.end(), e.poles().begin(), e.poles().end());
  const auto pts = with_pole_frequencies(grid, poles);
  const auto g = [&](double w) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(f.on_axis(w));
    return svd.singularValues()(0);
  };
  return refine_grid_max(g, pts).value;
}

double hinf_norm(const TransferMatrix& f) { return hinf_norm(f, default_hinf_grid()); }

AxisSup sup_abs_on_axis(const RationalFunction& f) {
  if (f.is_zero()) return {0.0, 0.0};
  const double inf = std::numeric_limits<double>::infinity();
  const double at_inf = f.is_proper() ? std::abs(f.at_infinity()) : inf;
  if (!f.is_proper()) return {inf, inf};
  const Polynomial n = real_part(axis_product(f.num(), f.num()));
  const Polynomial d = real_part(axis_product(f.den(), f.den()));
  auto value = [&](double w) {
    try {
      return std::abs(f.on_axis(w));
    } catch (const Error&) {
      return inf;
    }
  };
  AxisSup s = sup_of_ratio(n, d, value, at_inf);
  return s;
}

AxisSup sup_real_on_axis(const RationalFunction& x) {
  if (x.is_zero()) return {0.0, 0.0};
  const double inf = std::numeric_limits<double>::infinity();
  if (!x.is_proper()) return {inf, inf};
  const Polynomial n = real_part(axis_product(x.num(), x.den()));
  const Polynomial d = real_part(axis_product(x.den(), x.den()));
  auto value = [&](double w) {
    try {
      return x.on_axis(w).real();
    } catch (const Error&) {
      return inf;
    }
  };
  return sup_of_ratio(n, d, value, x.at_infinity().real());
}

}  // namespace coheq
