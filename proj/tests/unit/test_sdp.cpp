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
#include <coheq/sdp.hpp>
#include <coheq/synthesis.hpp>
#include <random>

#include "oracles.hpp"

namespace {

using coheq::cplx;

coheq::ChannelModel cavity(double sw) { return coheq::new_cavity_channel(0.4, 5.0, 10.0, {0.1, sw}); }

TEST(PresetGrid, Shape) {
  const auto g = coheq::paper_grid();
  ASSERT_EQ(g.size(), 21u);
  for (double w : g) {
    bool mirrored = false;
    for (double v : g) mirrored = mirrored || v == -w;
    EXPECT_TRUE(mirrored) << w;
  }
  EXPECT_EQ(g[10], 0.0);
  EXPECT_DOUBLE_EQ(g[20], 10.0);
  EXPECT_DOUBLE_EQ(g[11], 1e-3);
}

TEST(PerFrequency, StaticMatchesClosedFormEverywhere) {
  for (double sw : {0.05, 0.2, 1.0, 2.9, 4.0, 8.0}) {
    const auto ch = coheq::new_static_channel(std::sqrt(0.7), std::sqrt(0.3), 0.0, {0.1, sw});
    const auto d = coheq::static_optimal(ch);
    for (double w : {-5.0, 0.0, 3.0}) {
      const auto n = coheq::per_frequency_optimum(ch, w);
      EXPECT_LT(std::abs(n.h11 - d.h11.gain()), 1e-14);
      EXPECT_NEAR(n.cost, *d.attained_cost, 1e-14);
    }
  }
}

TEST(PerFrequency, ZeroPsiOptimumOnBoundary) {
  const cplx k = std::polar(std::sqrt(0.6), 0.7);
  const cplx m = std::polar(std::sqrt(0.4), -0.2);
  const auto ch = coheq::new_static_channel(k, m, 0.0, {0.0, 0.0});
  const auto n = coheq::per_frequency_optimum(ch, 1.0);
  EXPECT_LT(std::abs(n.h11 - std::conj(k) / std::abs(k)), 1e-15);
  EXPECT_NEAR(n.cost, 2.0 - 2.0 * std::abs(k), 1e-15);
  EXPECT_TRUE(n.on_boundary);
}

TEST(PerFrequency, CavityNodesBeatDiscSearch) {
  const auto ch = cavity(0.2);
  for (double w : {-10.0, -3.0, 0.0, 1e-3, 10.0}) {
    const auto n = coheq::per_frequency_optimum(ch, w);
    const cplx g11 = ch.g11().on_axis(w), g12 = ch.g12().on_axis(w);
    const auto cost = [&](cplx h) {
      return coheq::testing::psd_full(g11, g12, h, std::sqrt(std::max(0.0, 1.0 - std::norm(h))), 0.1, 0.2);
    };
    const auto best = coheq::testing::disc_search(cost, 2e-3);
    EXPECT_LE(n.cost, best.value + 1e-12) << w;
    EXPECT_NEAR(n.cost, best.value, 1e-4) << w;
    EXPECT_NEAR(n.cost, cost(n.h11), 1e-12) << w;
    EXPECT_LE(std::abs(n.h11), 1.0);
  }
}

TEST(GridSolve, CavityLowNoise) {
  const auto s = coheq::grid_solve(cavity(0.2), coheq::paper_grid());
  EXPECT_NEAR(s.gamma_tilde_sq, 0.7049, 0.01);
  EXPECT_EQ(s.h11_values.size(), 21u);
  EXPECT_FALSE(s.trivial);
}

TEST(GridSolve, CavityHighNoise) {
  const auto s = coheq::grid_solve(cavity(4.0), coheq::paper_grid());
  EXPECT_NEAR(s.gamma_tilde_sq, 1.8117, 0.01);
}

TEST(GridSolve, StaticNodesShareOneValue) {
  const auto ch = coheq::new_static_channel(std::sqrt(0.7), std::sqrt(0.3), 0.0, {0.1, 4.0});
  const auto s = coheq::grid_solve(ch, coheq::paper_grid());
  const auto d = coheq::static_optimal(ch);
  for (const cplx& v : s.h11_values) EXPECT_LT(std::abs(v - d.h11.gain()), 1e-14);
  EXPECT_NEAR(s.gamma_tilde_sq, *d.attained_cost, 1e-14);
}

TEST(Shrink, ScalesOnlyBoundaryValues) {
  const auto out = coheq::shrink_to_interior({cplx(1.0), cplx(0.5), std::polar(1.0, 2.0)}, 0.99);
  EXPECT_NEAR(std::abs(out[0]), 0.99, 1e-15);
  EXPECT_LE(std::abs(out[1]), 0.5 + 1e-15);
  EXPECT_NEAR(std::arg(out[2]), 2.0, 1e-15);
}

TEST(Multimode, ScalarEmbeddingReproducesScalarOptimum) {
  const auto ch = cavity(4.0);
  for (double w : {-10.0, 0.0, 5.0}) {
    coheq::MultimodeNode node;
    node.g11 = Eigen::MatrixXcd::Constant(1, 1, ch.g11().on_axis(w));
    node.g12 = Eigen::MatrixXcd::Constant(1, 1, ch.g12().on_axis(w));
    node.sigma_u = Eigen::MatrixXcd::Constant(1, 1, 0.1);
    node.sigma_w = Eigen::MatrixXcd::Constant(1, 1, 4.0);
    const auto mm = coheq::per_frequency_optimum_multimode(node);
    const auto sc = coheq::per_frequency_optimum(ch, w);
    EXPECT_NEAR(mm.lambda_max, sc.cost, 1e-6) << w;
    EXPECT_NEAR(coheq::multimode_error_psd(node, Eigen::MatrixXcd::Constant(1, 1, sc.h11))(0, 0).real(),
                sc.cost, 1e-12);
  }
}

TEST(Multimode, DecoupledModesGiveWorstScalarCost) {
  const auto a = cavity(0.2);
  const auto b = cavity(4.0);
  const double w = 1.0;
  coheq::MultimodeNode node;
  node.g11 = Eigen::MatrixXcd::Zero(2, 2);
  node.g12 = Eigen::MatrixXcd::Zero(2, 2);
  node.g11(0, 0) = a.g11().on_axis(w);
  node.g11(1, 1) = b.g11().on_axis(w);
  node.g12(0, 0) = a.g12().on_axis(w);
  node.g12(1, 1) = b.g12().on_axis(w);
  node.sigma_u = 0.1 * Eigen::MatrixXcd::Identity(2, 2);
  node.sigma_w = Eigen::MatrixXcd::Zero(2, 2);
  node.sigma_w(0, 0) = 0.2;
  node.sigma_w(1, 1) = 4.0;
  const auto mm = coheq::per_frequency_optimum_multimode(node);
  const double worst = std::max(coheq::per_frequency_optimum(a, w).cost, coheq::per_frequency_optimum(b, w).cost);
  EXPECT_NEAR(mm.lambda_max, worst, 1e-4);
  EXPECT_LE(Eigen::JacobiSVD<Eigen::MatrixXcd>(mm.h11).singularValues()(0), 1.0 + 1e-12);
}

}  // namespace
