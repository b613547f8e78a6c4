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

#include <algorithm>
#include <coheq/channel.hpp>
#include <coheq/nevpick.hpp>
#include <coheq/sdp.hpp>
#include <coheq/synthesis.hpp>
#include <coheq/verify.hpp>
#include <random>

namespace {

using coheq::cplx;
using coheq::RationalFunction;

coheq::ChannelModel static_ch(double sw) {
  return coheq::new_static_channel(std::sqrt(0.7), std::sqrt(0.3), 0.0, {0.1, sw});
}
coheq::ChannelModel cavity(double sw) { return coheq::new_cavity_channel(0.4, 5.0, 10.0, {0.1, sw}); }

bool has_failure(const coheq::VerificationReport& r, const std::string& what) {
  return std::any_of(r.failures.begin(), r.failures.end(),
                     [&](const std::string& f) { return f.find(what) != std::string::npos; });
}

TEST(VerifyDesign, SwapFilterPasses) {
  const auto ch = static_ch(0.2);
  auto d = coheq::trivial_design(ch);
  const auto r = coheq::verify_design(ch, d);
  EXPECT_TRUE(r.passed);
  EXPECT_NEAR(r.max_psd, 2.1, 1e-12);
  EXPECT_LT(r.paraunitarity_residual_max, 1e-12);
  EXPECT_NEAR(r.max_abs_h11, 0.0, 1e-15);
}

TEST(VerifyDesign, CavityDesignPassesAndPerturbedFails) {
  const auto ch = cavity(0.2);
  const auto g = coheq::cavity_gamma_search(ch);
  const auto r = coheq::verify_design(ch, g.design);
  EXPECT_TRUE(r.passed);
  EXPECT_GE(r.psd_bound_margin, 0.0);
  ASSERT_TRUE(r.analytic_max_abs_h11.has_value());
  EXPECT_NEAR(*r.analytic_max_abs_h11, r.max_abs_h11, 1e-6);

  auto bad = g.design;
  bad.h11 = bad.h11 * RationalFunction(1.0 / (*r.analytic_max_abs_h11) * 1.01);
  const auto rb = coheq::verify_design(ch, bad);
  EXPECT_FALSE(rb.passed);
  EXPECT_TRUE(has_failure(rb, "contraction"));
  EXPECT_TRUE(has_failure(rb, "paraunitar"));
}

TEST(VerifyDesign, LooseBoundIsReported) {
  const auto ch = static_ch(4.0);
  auto d = coheq::static_optimal(ch);
  d.gamma_sq_bound = *d.attained_cost - 1e-3;
  const auto r = coheq::verify_design(ch, d);
  EXPECT_FALSE(r.passed);
  EXPECT_LT(r.psd_bound_margin, 0.0);
}

TEST(Certificate, SProcedureIsTheQuadraticForm) {
  const auto ch = cavity(1.0);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const double w = 20.0 * u(rng), th = std::abs(u(rng)), gs = 1.0 + std::abs(u(rng));
    const cplx h(u(rng), u(rng));
    const double pe = coheq::error_psd_value(ch, h, w);
    EXPECT_NEAR(coheq::s_procedure_value(ch, th, gs, h, w), (1.0 - std::norm(h)) + th * (pe - gs), 1e-12);
  }
}

TEST(Certificate, HighNoiseCertifiedAndAgreesWithClosedForm) {
  const auto ch = static_ch(4.0);
  const double gs = coheq::static_unconstrained_bound(ch);
  const auto grid = coheq::verification_grid(ch, 50);
  const auto c = coheq::certify_threshold(ch, gs, grid);
  ASSERT_TRUE(c.has_value());
  ASSERT_TRUE(c->closed_form_agrees.has_value());
  EXPECT_TRUE(*c->closed_form_agrees);
  EXPECT_GE(c->min_eig_over_grid, 0.0);
  // With the certified multiplier no h in the disc can do better than gs.
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const cplx h(u(rng), u(rng));
    EXPECT_GE(coheq::s_procedure_value(ch, c->theta, gs, h, 0.0), -1e-9);
  }
}

TEST(Certificate, LowNoiseHasNoCertificate) {
  const auto ch = static_ch(0.2);
  const double gs = coheq::static_unconstrained_bound(ch);
  const auto grid = coheq::verification_grid(ch, 50);
  EXPECT_FALSE(coheq::certify_threshold(ch, gs, grid).has_value());
  const auto best = coheq::best_threshold_multiplier(ch, gs, grid);
  EXPECT_LT(best.min_eig_over_grid, 0.0);
  EXPECT_FALSE(best.closed_form_agrees.has_value());
  EXPECT_FALSE(coheq::threshold_lmi_feasible(ch, gs).has_value());
}

TEST(Certificate, CavityIsInformationalOnly) {
  const auto ch = cavity(4.0);
  const auto best = coheq::best_threshold_multiplier(ch, 1.8, coheq::verification_grid(ch, 50));
  EXPECT_FALSE(best.closed_form_agrees.has_value());
}

TEST(VerifyInterpolant, PassesWithDenseBoundAndFailsBelowIt) {
  const auto ch = cavity(4.0);
  const auto nd = coheq::sdp_nevpick_design(ch, coheq::paper_grid(), {0.0}, 1e-3);
  const auto& h = nd.interpolants[0];
  const auto grid = coheq::verification_grid(ch, 300);
  const double bound = nd.dense_sup_psd[0] * (1.0 + 1e-9) + 1e-9;
  const auto ok = coheq::verify_interpolant(ch, h, bound, grid);
  EXPECT_TRUE(ok.passed);
  EXPECT_FALSE(ok.paraunitarity_evaluated);
  EXPECT_LE(ok.max_abs_h11, 1.0 + 1e-9);
  const auto bad = coheq::verify_interpolant(ch, h, nd.grid.gamma_tilde_sq * 0.9, grid);
  EXPECT_FALSE(bad.passed);
}

}  // namespace
