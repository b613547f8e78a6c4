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

#include <gtest/gtest.h>

#include <coheq/channel.hpp>
#include <coheq/errors.hpp>
#include <random>

#include "oracles.hpp"

namespace {

using coheq::cplx;
using coheq::ErrorCode;
using coheq::FieldIntensities;
using coheq::RationalFunction;

const cplx I(0.0, 1.0);

coheq::ChannelModel beam_splitter(double su, double sw, double eta = 0.7) {
  return coheq::new_static_channel(std::sqrt(eta), std::sqrt(1.0 - eta), 0.0, {su, sw});
}

coheq::ChannelModel cavity(double sw) { return coheq::new_cavity_channel(0.4, 5.0, 10.0, {0.1, sw}); }

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const coheq::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no coheq::Error thrown";
  return ErrorCode::InvalidArgument;
}

TEST(Channel, IdentityChannel) {
  const auto ch = coheq::new_static_channel(1.0, 0.0, 0.0, {0.1, 0.2});
  const Eigen::MatrixXcd g = ch.g().on_axis(1.0);
  EXPECT_LT((g - Eigen::MatrixXcd::Identity(2, 2)).norm(), 1e-15);
}

TEST(Channel, BeamSplitterBlocks) {
  const auto ch = beam_splitter(0.1, 0.2);
  EXPECT_NEAR(ch.g11().gain().real(), 0.83666, 1e-5);
  EXPECT_LT(std::abs(std::norm(ch.g11().gain()) + std::norm(ch.g12().gain()) - 1.0), 1e-12);
  EXPECT_LT(coheq::paraunitarity_residual(ch.g(), coheq::channel_check_grid()), 1e-12);
}

TEST(Channel, RejectsNonUnitaryBeamSplitter) {
  EXPECT_EQ(code_of([] { coheq::new_static_channel(0.5, 0.5, 0.0, {0.1, 0.2}); }),
            ErrorCode::NotUnitary);
}

TEST(Channel, CavityResonance) {
  const auto ch = cavity(0.2);
  EXPECT_LT(std::abs(ch.g11().on_axis(-10.0) - cplx(-1.0)), 1e-14);
}

TEST(Channel, CavityBlocksMatchPhysicalModel) {
  const auto ch = cavity(0.2);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> w(-100.0, 100.0);
  for (int i = 0; i < 200; ++i) {
    const double om = w(rng);
    const auto b = coheq::testing::cavity_blocks(0.4, 5.0, 10.0, cplx(0.0, om));
    EXPECT_LT(std::abs(ch.g11().on_axis(om) - b.g11), 1e-13);
    EXPECT_LT(std::abs(ch.g12().on_axis(om) - b.g12), 1e-13);
    EXPECT_LT(std::abs(ch.g21().on_axis(om) - b.g21), 1e-13);
    EXPECT_LT(std::abs(ch.g22().on_axis(om) - b.g22), 1e-13);
    Eigen::Matrix2cd g;
    g << b.g11, b.g12, b.g21, b.g22;
    EXPECT_LT((g * g.adjoint() - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff(), 1e-9);
  }
  EXPECT_LT(coheq::paraunitarity_residual(ch.g(), coheq::channel_check_grid()), 1e-9);
}

TEST(Channel, CavityParameterRange) {
  EXPECT_EQ(code_of([] { coheq::new_cavity_channel(0.8, 5.0, 10.0, {0.1, 0.2}); }),
            ErrorCode::ParameterOutOfRange);
  EXPECT_EQ(code_of([] { coheq::new_cavity_channel(0.4, -1.0, 10.0, {0.1, 0.2}); }),
            ErrorCode::ParameterOutOfRange);
}

TEST(Channel, PsiExamples) {
  const auto eq = beam_splitter(0.3, 0.3);
  EXPECT_NEAR(coheq::psi(eq).on_axis(2.0).real(), 0.3, 1e-15);
  EXPECT_NEAR(coheq::psi(beam_splitter(0.1, 0.2)).on_axis(0.0).real(), 0.13, 1e-15);
  const RationalFunction p = coheq::psi(cavity(0.2));
  EXPECT_NEAR(p.on_axis(-10.0).real(), 0.1, 1e-13);
  EXPECT_NEAR(p.on_axis(-10.0).imag(), 0.0, 1e-13);
}

TEST(Channel, ZeroFilterCost) {
  for (const auto& ch : {beam_splitter(0.1, 4.0), cavity(0.2)}) {
    for (double w : {-30.0, -10.0, 0.0, 3.0}) {
      EXPECT_NEAR(coheq::error_psd(ch, RationalFunction(0.0), w), 2.1, 1e-14);
    }
  }
}

TEST(Channel, StaticBranchBValue) {
  const auto ch = beam_splitter(0.1, 4.0);
  const double k = std::sqrt(0.7);
  const double psi = 0.7 * 0.1 + 0.3 * 4.0;
  const double h = 1.1 * k / psi;
  const double expect = 2.1 - 1.21 * 0.7 / 1.27;
  EXPECT_NEAR(coheq::error_psd_value(ch, h, 0.0), expect, 1e-14);
  EXPECT_NEAR(expect, 1.433071, 1e-6);
  const auto best = coheq::testing::disc_search(
      [&](cplx z) { return coheq::testing::static_cost(k, std::sqrt(0.3), 0.1, 4.0, z); });
  EXPECT_NEAR(best.value, expect, 1e-5);
}

TEST(Channel, ReducedFormulaMatchesFullOracle) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> w(-60.0, 60.0);
  std::uniform_real_distribution<double> r(0.0, 1.0), ph(-3.14159, 3.14159);
  for (const auto& ch : {beam_splitter(0.1, 4.0), beam_splitter(0.5, 0.05, 0.3), cavity(0.2), cavity(4.0)}) {
    for (int i = 0; i < 100; ++i) {
      const double om = w(rng);
      const cplx h = std::polar(r(rng), ph(rng));
      const cplx h12 = std::polar(std::sqrt(1.0 - std::norm(h)), ph(rng));
      const double ref = coheq::testing::psd_full(ch.g11().on_axis(om), ch.g12().on_axis(om), h, h12,
                                                  ch.sigma_u_sq(), ch.sigma_w_sq());
      EXPECT_NEAR(coheq::error_psd_value(ch, h, om), ref, 1e-10);
      const coheq::ErrorModel em(ch);
      EXPECT_NEAR(coheq::error_psd_oracle_value(em, ch.g11().on_axis(om), ch.g12().on_axis(om), h, h12),
                  ref, 1e-12);
    }
  }
}

TEST(Channel, RationalPsdMatchesPointwise) {
  const auto ch = cavity(0.2);
  const RationalFunction h = RationalFunction::first_order(-5.0 - 10.0 * I, -7.961 - 10.0 * I, -0.999);
  const RationalFunction p = coheq::error_psd_rational(ch, h);
  for (double w : {-40.0, -10.0, -3.0, 0.0, 5.0, 80.0}) {
    EXPECT_NEAR(p.on_axis(w).real(), coheq::error_psd(ch, h, w), 1e-12);
    EXPECT_NEAR(p.on_axis(w).imag(), 0.0, 1e-12);
  }
}

TEST(Channel, PassThrough) {
  const auto ch = beam_splitter(0.1, 4.0);
  const double k = std::sqrt(0.7);
  const double expect = (k - 1.0) * (k - 1.0) * 1.1 + 0.3 * 5.0;
  EXPECT_NEAR(coheq::unequalized_psd(ch, 0.0), expect, 1e-14);
  // Frozen from the formula above.
  EXPECT_NEAR(expect, 1.529348, 1e-6);
  const double psi = 1.27;
  const double gamma0 = 2.1 - 1.21 * 0.7 / psi;
  EXPECT_NEAR(expect - gamma0, std::pow(psi - 1.1 * k, 2) / psi, 1e-13);
  EXPECT_NEAR(expect - gamma0, 0.096277, 1e-6);
}

TEST(Channel, ErrorModelIntensities) {
  const coheq::ErrorModel em(cavity(0.2));
  const double expect[6] = {1.1, 1.2, 1.0, 0.1, 0.2, 0.0};
  for (int i = 0; i < 6; ++i) EXPECT_DOUBLE_EQ(em.f_v(i, i), expect[i]);
  EXPECT_DOUBLE_EQ((em.f_v - Eigen::Matrix<double, 6, 6>(em.f_v.diagonal().asDiagonal())).norm(), 0.0);
}

}  // namespace
