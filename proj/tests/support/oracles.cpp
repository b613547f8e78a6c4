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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace coheq::testing {

double psd_full(cplx g11, cplx g12, cplx h11, cplx h12, double su, double sw) {
  const cplx e1 = h11 * g11 - 1.0;
  const cplx e2 = h11 * g12;
  return (1.0 + su) * std::norm(e1) + (1.0 + sw) * std::norm(e2) + std::norm(h12);
}

double static_cost(cplx k, cplx m, double su, double sw, cplx h11) {
  const double rest = std::max(0.0, 1.0 - std::norm(h11));
  return psd_full(k, m, h11, std::sqrt(rest), su, sw);
}

DiscMin disc_search(const std::function<double(cplx)>& cost, double step) {
  DiscMin best{0.0, cost(0.0)};
  const int nr = static_cast<int>(std::round(1.0 / step));
  const int na = static_cast<int>(std::ceil(2.0 * std::numbers::pi / step));
  for (int i = 1; i <= nr; ++i) {
    const double r = static_cast<double>(i) / nr;
    for (int j = 0; j < na; ++j) {
      const cplx h = std::polar(r, 2.0 * std::numbers::pi * j / na);
      const double v = cost(h);
      if (v < best.value) best = {h, v};
    }
  }
  return best;
}

cplx eval_coeffs(const std::vector<cplx>& c, cplx s) {
  cplx acc = 0.0;
  cplx p = 1.0;
  for (const cplx& a : c) {
    acc += a * p;
    p *= s;
  }
  return acc;
}

cplx eval_ratio(const std::vector<cplx>& num, const std::vector<cplx>& den, cplx s) {
  return eval_coeffs(num, s) / eval_coeffs(den, s);
}

CavityBlocks cavity_blocks(double k, double kappa, double omega_c, cplx s) {
  const cplx iw(0.0, omega_c);
  const cplx gc = (s - kappa + iw) / (s + kappa + iw);
  const double k2 = k * k;
  const double km = k * std::sqrt(1.0 - k2);
  return {k2 * gc - (1.0 - k2), km * (gc + 1.0), -km * (gc + 1.0), k2 - (1.0 - k2) * gc};
}

double static_threshold_formula(double abs_k, double abs_m, double su) {
  return ((1.0 + su) * abs_k - su * abs_k * abs_k) / (abs_m * abs_m);
}

std::vector<std::vector<cplx>> pick_matrix(const std::vector<cplx>& s, const std::vector<cplx>& v) {
  const std::size_t n = s.size();
  std::vector<std::vector<cplx>> p(n, std::vector<cplx>(n));
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t k = 0; k < n; ++k) {
      p[l][k] = (1.0 - v[l] * std::conj(v[k])) / (s[l] + std::conj(s[k]));
    }
  }
  return p;
}

double hermitian_min_eig(std::vector<std::vector<cplx>> a) {
  // Real symmetric embedding [[Re, -Im], [Im, Re]] has the same spectrum
  // (each eigenvalue doubled), which lets plain cyclic Jacobi do the work.
  const std::size_t n = a.size();
  const std::size_t m = 2 * n;
  std::vector<std::vector<double>> b(m, std::vector<double>(m));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      b[i][j] = b[i + n][j + n] = a[i][j].real();
      b[i][j + n] = -a[i][j].imag();
      b[i + n][j] = a[i][j].imag();
    }
  }
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < m; ++p) {
      for (std::size_t q = p + 1; q < m; ++q) off += b[p][q] * b[p][q];
    }
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < m; ++p) {
      for (std::size_t q = p + 1; q < m; ++q) {
        if (std::abs(b[p][q]) < 1e-300) continue;
        const double theta = (b[q][q] - b[p][p]) / (2.0 * b[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        for (std::size_t r = 0; r < m; ++r) {
          const double brp = b[r][p], brq = b[r][q];
          b[r][p] = c * brp - sn * brq;
          b[r][q] = sn * brp + c * brq;
        }
        for (std::size_t r = 0; r < m; ++r) {
          const double bpr = b[p][r], bqr = b[q][r];
          b[p][r] = c * bpr - sn * bqr;
          b[q][r] = sn * bpr + c * bqr;
        }
      }
    }
  }
  double lo = b[0][0];
  for (std::size_t i = 1; i < m; ++i) lo = std::min(lo, b[i][i]);
  return lo;
}

}  // namespace coheq::testing
