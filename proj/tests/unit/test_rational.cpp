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

#include <coheq/errors.hpp>
#include <coheq/frequency_grid.hpp>
#include <coheq/norms.hpp>
#include <coheq/polynomial.hpp>
#include <coheq/rational.hpp>
#include <coheq/transfer_matrix.hpp>
#include <random>

#include "oracles.hpp"

namespace {

using coheq::cplx;
using coheq::ErrorCode;
using coheq::FrequencyGrid;
using coheq::Polynomial;
using coheq::RationalFunction;
using coheq::TransferMatrix;

const cplx I(0.0, 1.0);

RationalFunction cavity_like() {
  return RationalFunction::first_order(5.0 - 10.0 * I, -5.0 - 10.0 * I);
}

// Random proper function with stable poles, degree 1..3.
RationalFunction random_stable(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::uniform_real_distribution<double> re(0.2, 4.0);
  std::uniform_int_distribution<int> deg(1, 3);
  const int n = deg(rng);
  std::vector<cplx> zeros, poles;
  for (int i = 0; i < n; ++i) {
    poles.emplace_back(-re(rng), u(rng));
    zeros.emplace_back(u(rng), u(rng));
  }
  return RationalFunction::from_zpk(zeros, poles, cplx(u(rng), u(rng)));
}

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

TEST(Polynomial, TrimsAndReportsDegree) {
  const Polynomial p({1.0, 2.0, 0.0, 0.0});
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(p.leading(), cplx(2.0));
  EXPECT_TRUE(Polynomial({0.0, 0.0}).is_zero());
  EXPECT_EQ(Polynomial().degree(), -1);
}

TEST(Polynomial, RootsOfProductAreSortedAndAccurate) {
  const std::vector<cplx> r{-2.0 + I, 3.0, -1.0 - 4.0 * I, 0.5 * I};
  const Polynomial p = Polynomial::from_roots(r, 2.0 - I);
  const auto found = p.roots();
  ASSERT_EQ(found.size(), r.size());
  for (const cplx& z : r) {
    double best = 1e9;
    for (const cplx& f : found) best = std::min(best, std::abs(f - z));
    EXPECT_LT(best, 1e-12);
  }
  for (std::size_t i = 1; i < found.size(); ++i) EXPECT_LE(found[i - 1].real(), found[i].real());
}

TEST(Polynomial, ParaConjugateMatchesDefinition) {
  const Polynomial p({1.0 + I, -2.0, 3.0 * I});
  const Polynomial q = p.para_conjugate();
  for (double w : {-3.0, 0.0, 0.7}) {
    const cplx s(0.2, w);
    EXPECT_LT(std::abs(q.eval(s) - std::conj(p.eval(-std::conj(s)))), 1e-13);
  }
}

TEST(Polynomial, AddCancellingZeroesTinyCoefficients) {
  const Polynomial a({1.0, 1.0 + 1e-15});
  const Polynomial b({1.0, -1.0});
  EXPECT_EQ(coheq::add_cancelling(a, b, 1e-12).degree(), 0);
}

TEST(Rational, EvalExamples) {
  const RationalFunction f = RationalFunction::first_order(5.0 - 10.0 * I, -5.0 - 10.0 * I);
  EXPECT_LT(std::abs(f.eval(0.0) - cplx(0.6, 0.8)), 1e-15);
  EXPECT_EQ(RationalFunction(1.0).eval(3.0 + 4.0 * I), cplx(1.0));
  const RationalFunction g = RationalFunction(1.0) / (RationalFunction::s() + 1.0);
  EXPECT_EQ(code_of([&] { g.eval(-1.0); }), ErrorCode::PoleHit);
}

TEST(Rational, DenominatorIsMonic) {
  const RationalFunction f(Polynomial({2.0, 4.0}), Polynomial({6.0, 2.0}));
  EXPECT_EQ(f.den().leading(), cplx(1.0));
  EXPECT_LT(std::abs(f.eval(1.0) - cplx(6.0 / 8.0)), 1e-15);
}

TEST(Rational, ParaConjugateExamples) {
  const cplx c(0.3, -1.7);
  EXPECT_EQ(RationalFunction(c).para_conjugate().eval(2.0 + I), std::conj(c));
  const cplx a(2.0, 3.0);
  const RationalFunction f = RationalFunction(1.0) / (RationalFunction::s() + a);
  const RationalFunction fh = f.para_conjugate();
  for (cplx s : {cplx(0.1, 0.2), cplx(-0.4, 5.0)}) {
    EXPECT_LT(std::abs(fh.eval(s) - 1.0 / (-s + std::conj(a))), 1e-14);
  }
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> w(-50.0, 50.0);
  const RationalFunction g = cavity_like();
  const RationalFunction gh = g.para_conjugate();
  for (int i = 0; i < 100; ++i) {
    const double om = w(rng);
    EXPECT_LT(std::abs(gh.on_axis(om) - std::conj(g.on_axis(om))), 1e-12);
  }
}

TEST(Rational, ParaConjugatePropertyRandom) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> w(-100.0, 100.0);
  for (int t = 0; t < 20; ++t) {
    const RationalFunction f = random_stable(rng) * random_stable(rng) + random_stable(rng);
    const RationalFunction fh = f.para_conjugate();
    for (int i = 0; i < 200; ++i) {
      const double om = w(rng);
      const cplx v = f.on_axis(om);
      EXPECT_LT(std::abs(fh.on_axis(om) - std::conj(v)), 1e-12 * std::max(1.0, std::abs(v)));
    }
  }
}

TEST(Rational, ArithmeticIdentities) {
  const RationalFunction f(Polynomial({2.0, 1.0}), Polynomial({3.0, 1.0}));
  const RationalFunction one = f * f.inverse();
  EXPECT_TRUE(one.is_constant());
  EXPECT_LT(std::abs(one.gain() - 1.0), 1e-14);
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_EQ(code_of([] { RationalFunction(0.0).inverse(); }), ErrorCode::SingularMatrix);
}

TEST(Rational, SharedPolesEnterSumOnce) {
  const RationalFunction a = RationalFunction(1.0) / (RationalFunction::s() + 2.0);
  const RationalFunction b = RationalFunction(3.0) / (RationalFunction::s() + 2.0);
  EXPECT_EQ((a + b).den_degree(), 1);
}

TEST(Rational, ArithmeticMatchesPointwiseOracle) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> w(-20.0, 20.0);
  for (int t = 0; t < 20; ++t) {
    const RationalFunction f = random_stable(rng);
    const RationalFunction g = random_stable(rng);
    const RationalFunction sum = f + g, prod = f * g, quo = f / g;
    for (int i = 0; i < 20; ++i) {
      const cplx s(0.0, w(rng));
      const cplx fv = coheq::testing::eval_ratio(f.num().coeffs(), f.den().coeffs(), s);
      const cplx gv = coheq::testing::eval_ratio(g.num().coeffs(), g.den().coeffs(), s);
      const double scale = 1.0 + std::abs(fv) + std::abs(gv);
      EXPECT_LT(std::abs(sum.eval(s) - (fv + gv)), 1e-10 * scale);
      EXPECT_LT(std::abs(prod.eval(s) - fv * gv), 1e-10 * scale * scale);
      if (std::abs(gv) > 1e-3) EXPECT_LT(std::abs(quo.eval(s) - fv / gv), 1e-8 * scale / std::abs(gv));
    }
  }
}

TEST(Rational, PolesOfProductAreSubsetOfFactorPoles) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const RationalFunction f = random_stable(rng);
    const RationalFunction g = random_stable(rng);
    const RationalFunction p = f * g;
    for (const cplx& z : p.poles()) {
      double best = 1e9;
      for (const auto* h : {&f, &g}) {
        for (const cplx& q : h->poles()) best = std::min(best, std::abs(z - q));
      }
      EXPECT_LT(best, 1e-8);
    }
  }
}

TEST(Rational, CommonFactorsCancel) {
  const RationalFunction f = RationalFunction::from_zpk({-1.0, 2.0}, {-1.0 + 1e-11, -3.0}, 1.0);
  EXPECT_EQ(f.den_degree(), 1);
  EXPECT_EQ(f.num_degree(), 1);
}

TEST(Rational, DegreeCap) {
  std::vector<cplx> poles;
  for (int i = 0; i < 17; ++i) poles.emplace_back(-1.0 - i, 0.0);
  EXPECT_EQ(code_of([&] { RationalFunction::from_zpk({}, poles, 1.0); }), ErrorCode::DegreeOverflow);
}

TEST(Rational, StabilityAndMargin) {
  const RationalFunction f = RationalFunction(1.0) / (RationalFunction::s() + (5.0 + 10.0 * I));
  ASSERT_EQ(f.poles().size(), 1u);
  EXPECT_LT(std::abs(f.poles()[0] - (-5.0 - 10.0 * I)), 1e-15);
  EXPECT_TRUE(f.is_stable());
  EXPECT_DOUBLE_EQ(f.analytic_margin(), 5.0);
  const RationalFunction g = RationalFunction::from_zpk({-1.0}, {1.0, -2.0}, 1.0);
  EXPECT_FALSE(g.is_stable());
  const RationalFunction h = RationalFunction::first_order(-5.0 - 10.0 * I, -7.961 - 10.0 * I, -1.0);
  EXPECT_TRUE(h.is_stable());
  EXPECT_NEAR(h.analytic_margin(), 7.961, 1e-12);
  EXPECT_TRUE(std::isinf(RationalFunction(Polynomial({1.0, 1.0}), Polynomial({1.0})).analytic_margin()));
}

TEST(Rational, ShiftedEvaluatesAtOffset) {
  const RationalFunction f = cavity_like();
  const RationalFunction g = f.shifted(0.25);
  EXPECT_LT(std::abs(g.eval(I) - f.eval(I + 0.25)), 1e-14);
}

TEST(TransferMatrix, SwapSquaredIsIdentity) {
  const TransferMatrix p = TransferMatrix::swap() * TransferMatrix::swap();
  const Eigen::MatrixXcd v = p.eval(0.3 * I);
  EXPECT_LT((v - Eigen::MatrixXcd::Identity(2, 2)).norm(), 1e-15);
}

TEST(TransferMatrix, InverseTimesMatrixIsIdentity) {
  const RationalFunction a = cavity_like();
  const RationalFunction b = RationalFunction::first_order(-2.0, -3.0, 0.5);
  const TransferMatrix m = TransferMatrix::from_2x2(a, b, b * 2.0, RationalFunction(1.5));
  const TransferMatrix p = m * m.inverse();
  for (double w : FrequencyGrid::log_symmetric(1e-2, 1e2, 25, false)) {
    EXPECT_LT((p.on_axis(w) - Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-10);
  }
  const TransferMatrix singular = TransferMatrix::from_2x2(a, a, a, a);
  EXPECT_EQ(code_of([&] { singular.inverse(); }), ErrorCode::SingularMatrix);
}

TEST(FrequencyGrid, SortsDeduplicatesAndRejectsNonFinite) {
  const FrequencyGrid g({3.0, -1.0, 3.0, 0.0});
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g[0], -1.0);
  EXPECT_EQ(code_of([] { FrequencyGrid({1.0, std::nan("")}); }), ErrorCode::InvalidArgument);
  const auto ls = coheq::logspace(1e-3, 10.0, 10);
  EXPECT_EQ(ls.front(), 1e-3);
  EXPECT_EQ(ls.back(), 10.0);
}

TEST(Norms, Examples) {
  EXPECT_DOUBLE_EQ(coheq::hinf_norm(RationalFunction(0.5)), 0.5);
  const RationalFunction f = RationalFunction(1.0) / (RationalFunction::s() + 1.0);
  EXPECT_NEAR(coheq::hinf_norm(f), 1.0, 1e-12);
  const RationalFunction h = RationalFunction::first_order(-5.0 - 10.0 * I, -7.961 - 10.0 * I, -1.0);
  // |h| rises towards 1 as |w| grows; the supremum is the limit.
  EXPECT_NEAR(coheq::hinf_norm(h), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(h.on_axis(-10.0)), 5.0 / 7.961, 1e-14);
  const RationalFunction u = RationalFunction(1.0) / (RationalFunction::s() - 1.0);
  EXPECT_EQ(code_of([&] { coheq::hinf_norm(u); }), ErrorCode::UnstableInput);
}

TEST(Norms, ExactAxisSupremumAgreesWithGrid) {
  const RationalFunction f = RationalFunction::from_zpk({-0.1 + 3.0 * I}, {-0.2 - 2.0 * I, -1.0 + 4.0 * I}, 2.0);
  const auto sup = coheq::sup_abs_on_axis(f);
  EXPECT_NEAR(sup.value, coheq::hinf_norm(f), 1e-9);
  EXPECT_NEAR(std::abs(f.on_axis(sup.omega)), sup.value, 1e-12);
}

TEST(Norms, Submultiplicative) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 15; ++t) {
    const RationalFunction f = random_stable(rng);
    const RationalFunction g = random_stable(rng);
    EXPECT_LE(coheq::hinf_norm(f * g), coheq::hinf_norm(f) * coheq::hinf_norm(g) * (1.0 + 1e-9));
  }
}

}  // namespace
