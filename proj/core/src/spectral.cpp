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

#include "coheq/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "coheq/errors.hpp"
#include "coheq/tolerances.hpp"

namespace coheq {

namespace {

bool by_real_part(const cplx& a, const cplx& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

// Left half of a reflection-symmetric root set.
std::vector<cplx> stable_half(std::vector<cplx> roots, const char* what) {
  if (roots.size() % 2 != 0) {
    throw Error(ErrorCode::NotFactorable,
                std::string("odd number of ") + what + ", not para-Hermitian");
  }
  std::sort(roots.begin(), roots.end(), by_real_part);
  const std::size_t half = roots.size() / 2;
  std::vector<cplx> out(roots.begin(), roots.begin() + static_cast<std::ptrdiff_t>(half));
  for (const cplx& left : out) {
    if (left.real() > 1e-7 * (1.0 + std::abs(left))) {
      throw Error(ErrorCode::NotFactorable,
                  std::string("unpaired right half-plane ") + what);
    }
  }
  return out;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

}  // namespace

FrequencyGrid spectral_check_grid() { return FrequencyGrid::log_symmetric(1e-3, 1e3, 200, true); }

double spectral_factor_residual(const RationalFunction& m, const RationalFunction& x,
                                const FrequencyGrid& grid) {
  double worst = 0.0;
  for (double w : grid) {
    const double xv = x.on_axis(w).real();
    worst = std::max(worst, std::abs(std::norm(m.on_axis(w)) - xv) / (1.0 + std::abs(xv)));
  }
  return worst;
}

RationalFunction spectral_factor(const RationalFunction& x) {
  const auto& tol = tolerances();
  if (x.is_zero()) return {};

  std::vector<double> extra;
  for (const cplx& z : x.zeros()) extra.push_back(-z.imag());
  for (const cplx& p : x.poles()) extra.push_back(-p.imag());
  for (const cplx& z : x.zeros()) extra.push_back(z.imag());
  FrequencyGrid grid = spectral_check_grid().merged(extra);

  double best_w = 0.0;
  double best_x = -1.0;
  for (double w : grid) {
    cplx v;
    try {
      v = x.on_axis(w);
    } catch (const Error&) {
      throw Error(ErrorCode::NotFactorable, "pole on the imaginary axis");
    }
    const double scale = 1.0 + std::abs(v);
    if (std::abs(v.imag()) > 1e-8 * scale) {
      throw Error(ErrorCode::NotFactorable, "not real on the imaginary axis at w = " + fmt(w));
    }
    if (v.real() < -tol.negative_psd * scale) {
      throw Error(ErrorCode::NotFactorable, "negative on the imaginary axis at w = " + fmt(w));
    }
    if (v.real() > best_x) {
      best_x = v.real();
      best_w = w;
    }
  }
  if (x.is_constant()) return RationalFunction(std::sqrt(std::max(0.0, x.gain().real())));

  const std::vector<cplx> z = stable_half(x.zeros(), "zeros");
  const std::vector<cplx> p = stable_half(x.poles(), "poles");
  const RationalFunction shape = RationalFunction::from_zpk(z, p, 1.0);
  const double mag = std::abs(shape.on_axis(best_w));
  if (!(best_x > 0.0) || !(mag > 0.0)) {
    throw Error(ErrorCode::NotFactorable, "cannot fix the gain");
  }
  const RationalFunction m = shape * (std::sqrt(best_x) / mag);

  const double res = spectral_factor_residual(m, x, grid);
  if (!(res < tol.factor_residual)) {
    throw Error(ErrorCode::NotFactorable, "factor residual " + fmt(res) + " too large");
  }
  return m;
}

Eigen::Matrix2cd upsilon_at(const AuxiliaryFactorization& aux, cplx s) {
  Eigen::Matrix2cd u;
  u << aux.upsilon1.eval(s), aux.upsilon2.eval(s), aux.upsilon3, aux.upsilon4.eval(s);
  return u;
}

Eigen::Matrix2cd phi_at(const AuxiliaryFactorization& aux, cplx s) {
  const double r = aux.upsilon3 * aux.upsilon3;
  Eigen::Matrix2cd f;
  f << 1.0, aux.q.eval(s), aux.q.para_conjugate().eval(s), r;
  return f;
}

double j_factor_residual(const AuxiliaryFactorization& aux, const FrequencyGrid& grid) {
  Eigen::Matrix2cd j;
  j << 1.0, 0.0, 0.0, -1.0;
  double worst = 0.0;
  for (double w : grid) {
    const cplx s(0.0, w);
    const Eigen::Matrix2cd u = upsilon_at(aux, s);
    const Eigen::Matrix2cd d = u * j * u.adjoint() - phi_at(aux, s);
    worst = std::max(worst, d.cwiseAbs().maxCoeff());
  }
  return worst;
}

namespace {

void finish(AuxiliaryFactorization& aux) {
  aux.upsilon4 = RationalFunction();
  aux.identity_residual = j_factor_residual(aux, spectral_check_grid());
  aux.margin = std::min({aux.m_factor.analytic_margin(), aux.m_factor.inverse().analytic_margin(),
                         aux.upsilon1.analytic_margin(), aux.upsilon1.inverse().analytic_margin(),
                         aux.upsilon2.analytic_margin(),
                         aux.upsilon2.is_zero() ? 0.0 : aux.upsilon2.inverse().analytic_margin()});
}

double check_gamma(const ChannelModel& ch, double gamma_sq) {
  const double r = ch.sigma_u_sq() + 2.0 - gamma_sq;
  if (!(r > 0.0)) {
    throw Error(ErrorCode::GammaTooLarge,
                "gamma^2 = " + fmt(gamma_sq) + " >= su + 2; the filter H11 = 0 already meets it");
  }
  return r;
}

}  // namespace

CavityDesignConstants cavity_constants_base(const ChannelModel& ch) {
  const auto& cp = ch.cavity_params();
  const double su = ch.sigma_u_sq();
  const double sw = ch.sigma_w_sq();
  if (!(sw > su && su > 0.0)) {
    throw Error(ErrorCode::ParameterOutOfRange, "cavity design constants need sw > su > 0");
  }
  const double k2 = cp.k * cp.k;
  CavityDesignConstants c;
  c.rho = 1.0 + su / (2.0 * (sw - su) * k2 * (1.0 - k2));
  c.rho_hat = (c.rho - 1.0) / (c.rho + 1.0);
  c.delta = std::sqrt(1.0 - k2) / std::abs(cp.k);
  c.delta_hat = 1.0 / (1.0 - 2.0 * k2);
  c.mu = std::sqrt(2.0 * (sw - su) * k2 * (1.0 - k2) * (1.0 + c.rho));
  return c;
}

CavityDesignConstants cavity_constants(const ChannelModel& ch, double gamma_sq) {
  CavityDesignConstants c = cavity_constants_base(ch);
  const auto& cp = ch.cavity_params();
  const double su = ch.sigma_u_sq();
  const double sw = ch.sigma_w_sq();
  const double r = check_gamma(ch, gamma_sq);
  c.upsilon3 = std::sqrt(r);
  c.beta = (1.0 + su) * (c.delta - 1.0 / c.delta) /
           (c.upsilon3 * std::sqrt(2.0 * (sw - su) * (1.0 + c.rho)));
  if (!(c.beta > 1.0)) {
    throw Error(ErrorCode::BetaNotAdmissible,
                "beta = " + fmt(c.beta) + " <= 1 at gamma^2 = " + fmt(gamma_sq) +
                    "; beta grows with gamma^2, so a larger gamma^2 is needed");
  }
  c.alpha = std::sqrt(c.beta * c.beta - 1.0);
  c.nu = std::sqrt(c.beta * c.beta * c.delta_hat * c.delta_hat - c.rho_hat);
  const cplx iw(0.0, cp.omega_c);
  c.n1 = RationalFunction::from_zpk({-c.delta_hat * cp.kappa - iw}, {}, c.beta);
  c.n2 = RationalFunction::from_zpk({-(c.nu / c.alpha) * cp.kappa - iw}, {}, c.alpha);
  return c;
}

AuxiliaryFactorization j_spectral_factor(const ChannelModel& ch, double gamma_sq) {
  const double r = check_gamma(ch, gamma_sq);
  const double su = ch.sigma_u_sq();
  AuxiliaryFactorization aux;
  aux.gamma_sq = gamma_sq;
  aux.psi = psi(ch);
  aux.upsilon3 = std::sqrt(r);

  if (ch.kind() == ChannelKind::Static) {
    const cplx k = ch.static_params().k;
    const double ps = aux.psi.gain().real();
    if (!(ps > 0.0)) throw Error(ErrorCode::DegenerateChannel, "Psi = 0, no spectral factor inverse");
    const double a2 = std::norm(k) * (1.0 + su) * (1.0 + su);
    if (!(a2 > ps * r)) {
      throw Error(ErrorCode::GammaTooSmall,
                  "|k|^2 (1 + su)^2 <= psi (su + 2 - gamma^2) at gamma^2 = " + fmt(gamma_sq));
    }
    aux.m_factor = RationalFunction(std::sqrt(ps));
    aux.q = RationalFunction(-k * (1.0 + su) / std::sqrt(ps));
    aux.upsilon1 = RationalFunction(-k * (1.0 + su) / std::sqrt(ps * r));
    aux.upsilon2 = RationalFunction(std::sqrt(a2 / (ps * r) - 1.0));
  } else {
    CavityDesignConstants c;
    try {
      c = cavity_constants(ch, gamma_sq);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::BetaNotAdmissible) throw Error(ErrorCode::GammaTooSmall, e.what());
      throw;
    }
    const auto& cp = ch.cavity_params();
    const cplx iw(0.0, cp.omega_c);
    const double srh = std::sqrt(c.rho_hat);
    aux.m_factor = RationalFunction::from_zpk({-srh * cp.kappa - iw}, {-cp.kappa - iw}, c.mu);
    aux.q = -(ch.g11() / aux.m_factor) * (1.0 + su);
    aux.upsilon1 =
        RationalFunction::from_zpk({-c.delta_hat * cp.kappa - iw}, {-srh * cp.kappa - iw}, c.beta);
    aux.upsilon2 = RationalFunction::from_zpk({-(c.nu / c.alpha) * cp.kappa - iw},
                                              {-srh * cp.kappa - iw}, c.alpha);
  }
  finish(aux);
  return aux;
}

AuxiliaryFactorization j_spectral_factor_generic(const ChannelModel& ch, double gamma_sq) {
  const double r = check_gamma(ch, gamma_sq);
  const double su = ch.sigma_u_sq();
  AuxiliaryFactorization aux;
  aux.gamma_sq = gamma_sq;
  aux.psi = psi(ch);
  aux.upsilon3 = std::sqrt(r);
  aux.m_factor = spectral_factor(aux.psi);
  if (aux.m_factor.is_zero()) throw Error(ErrorCode::DegenerateChannel, "Psi = 0");
  aux.q = -(ch.g11() / aux.m_factor) * (1.0 + su);
  aux.upsilon1 = aux.q * (1.0 / aux.upsilon3);
  const RationalFunction y = aux.q * aux.q.para_conjugate() * (1.0 / r) - RationalFunction(1.0);
  try {
    aux.upsilon2 = spectral_factor(y);
  } catch (const Error& e) {
    throw Error(ErrorCode::GammaTooSmall,
                "Q Q^H / R - 1 has no spectral factor at gamma^2 = " + fmt(gamma_sq) + " (" +
                    e.what() + ")");
  }
  if (aux.upsilon2.is_zero()) {
    throw Error(ErrorCode::GammaTooSmall, "Upsilon2 vanishes at gamma^2 = " + fmt(gamma_sq));
  }
  finish(aux);
  return aux;
}

}  // namespace coheq
