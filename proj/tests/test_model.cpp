#include <gtest/gtest.h>

#include <cmath>

#include "lzda/errors.hpp"
#include "lzda/model.hpp"
#include "oracles.hpp"

using namespace lzda;

namespace {

VehicleParams suv_front(double a) {
  VehicleParams p = kSuvParams;
  p.a = a;
  return p;
}

}  // namespace

// Frozen from a 30-digit evaluation of the coefficient formulas with the SUV values.
TEST(BuildModel, SuvAt25) {
  const LateralModel m = build_model(kSuvParams, 25.0);
  EXPECT_NEAR(m.a11(), -4.91277533039648, 1e-12);
  EXPECT_NEAR(m.a12(), -24.9683171806167, 1e-12);
  EXPECT_NEAR(m.a21(), 0.0156347826086957, 1e-14);
  EXPECT_NEAR(m.a22(), -4.95417329043478, 1e-12);
  EXPECT_NEAR(m.b2(), 1.0 / 4600.0, 1e-18);
  EXPECT_NEAR(m.e1(), 61.4977973568282, 1e-11);
  EXPECT_NEAR(m.e2(), 43.1242608695652, 1e-11);
}

TEST(BuildModel, SuvAt5) {
  const LateralModel m = build_model(kSuvParams, 5.0);
  EXPECT_NEAR(m.a11(), -24.5638766519824, 1e-11);
  EXPECT_NEAR(m.a12() + m.vx(), 0.158414096916300, 1e-12);
}

TEST(BuildModel, RejectsZeroSpeed) {
  try {
    build_model(kSuvParams, 0.0);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.field(), "vx");
  }
}

TEST(BuildModel, ErrorNamesOffendingField) {
  VehicleParams p = kSuvParams;
  p.Cr = -1.0;
  try {
    build_model(p, 10.0);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.field(), "Cr");
  }
  p = kSuvParams;
  p.Iz = 0.0;
  EXPECT_THROW(build_model(p, 10.0), ValidationError);
  p = kSuvParams;
  p.m = std::nan("");
  EXPECT_THROW(build_model(p, 10.0), ValidationError);
}

TEST(BuildModel, SignInvariantsOverRandomParameters) {
  oracle::ParamGenerator gen(11);
  for (int i = 0; i < 2000; ++i) {
    const auto c = gen.next();
    const LateralModel m = build_model(c.params, c.vx);
    ASSERT_LT(m.a11(), 0.0);
    ASSERT_LT(m.a22(), 0.0);
    ASSERT_GT(m.b2(), 0.0);
    ASSERT_GT(m.e1(), 0.0);
    ASSERT_GT(m.e2(), 0.0);
  }
}

TEST(OutputModel, YawRate) {
  const OutputModel out = output_model(build_model(kSuvParams, 12.0), OutputCase::YawRate);
  EXPECT_EQ(out.rows, 1u);
  EXPECT_EQ(out.C[0][0], 0.0);
  EXPECT_EQ(out.C[0][1], 1.0);
  EXPECT_EQ(out.D_delta[0], 0.0);
}

TEST(OutputModel, LateralAccelAt5) {
  const LateralModel m = build_model(kSuvParams, 5.0);
  const OutputModel out = output_model(m, OutputCase::LateralAccel);
  EXPECT_EQ(out.rows, 1u);
  EXPECT_NEAR(out.C[0][0], -24.5638766519824, 1e-11);
  EXPECT_NEAR(out.C[0][1], 0.158414096916300, 1e-12);
  EXPECT_NEAR(out.D_delta[0], 61.4977973568282, 1e-11);
}

TEST(OutputModel, BothStacksSingleRowsExactly) {
  oracle::ParamGenerator gen(12);
  for (int i = 0; i < 200; ++i) {
    const auto c = gen.next();
    const LateralModel m = build_model(c.params, c.vx);
    const OutputModel yaw = output_model(m, OutputCase::YawRate);
    const OutputModel acc = output_model(m, OutputCase::LateralAccel);
    const OutputModel both = output_model(m, OutputCase::Both);
    ASSERT_EQ(both.rows, 2u);
    EXPECT_EQ(both.C[0], yaw.C[0]);
    EXPECT_EQ(both.C[1], acc.C[0]);
    EXPECT_EQ(both.D_delta[0], yaw.D_delta[0]);
    EXPECT_EQ(both.D_delta[1], acc.D_delta[0]);
  }
}

TEST(StabilityMargin, SuvValues) {
  EXPECT_NEAR(a_stability_margin(build_model(kSuvParams, 5.0)), 8.18438273113658, 1e-10);
  EXPECT_NEAR(a_stability_margin(build_model(suv_front(1.521), 5.0)), 8.68464537481474, 1e-10);
}

TEST(StabilityMargin, BalancedGeometryGivesWheelbaseSquared) {
  VehicleParams p = kSuvParams;
  p.a = 1.4;
  p.b = 1.4;
  p.Cr = p.Cf;
  EXPECT_DOUBLE_EQ(a_stability_margin(build_model(p, 30.0)), 2.8 * 2.8);
}

TEST(Eigenvalues, UnsafeSuvMatchesReportedPoles) {
  const auto eig = eigenvalues_A(build_model(suv_front(1.521), 5.0));
  EXPECT_NEAR(eig[0].real(), -27.6103741274515, 1e-9);
  EXPECT_NEAR(eig[1].real(), -23.5100350636614, 1e-9);
  EXPECT_EQ(eig[0].imag(), 0.0);
  EXPECT_EQ(eig[1].imag(), 0.0);
}

TEST(Eigenvalues, TriangularMatrix) {
  // aCf == bCr zeroes a21, so A is upper triangular.
  VehicleParams p = kSuvParams;
  p.a = 1.5;
  p.b = 1.5;
  p.Cr = p.Cf;
  const LateralModel m = build_model(p, 10.0);
  ASSERT_EQ(m.a21(), 0.0);
  const auto eig = eigenvalues_A(m);
  EXPECT_NEAR(eig[0].real(), std::min(m.a11(), m.a22()), 1e-12);
  EXPECT_NEAR(eig[1].real(), std::max(m.a11(), m.a22()), 1e-12);
}

TEST(Eigenvalues, SuvAt25IsStableComplexPair) {
  // Quadratic-formula oracle: -4.93347 +/- 0.62446i.
  const auto eig = eigenvalues_A(build_model(kSuvParams, 25.0));
  EXPECT_NEAR(eig[0].real(), -4.93347431041563, 1e-10);
  EXPECT_NEAR(eig[0].imag(), -0.624456374336967, 1e-10);
  EXPECT_NEAR(eig[1].imag(), 0.624456374336967, 1e-10);
  EXPECT_LT(eig[1].real(), 0.0);
}

TEST(Eigenvalues, AgreeWithGeneralSolver) {
  oracle::ParamGenerator gen(13);
  for (int i = 0; i < 500; ++i) {
    const auto c = gen.next();
    const auto eig = eigenvalues_A(build_model(c.params, c.vx));
    const auto ref = oracle::reference_eigenvalues(oracle::state_matrix(c.params, c.vx));
    const double scale = std::max(1.0, std::abs(ref[0]));
    for (int k = 0; k < 2; ++k) {
      ASSERT_NEAR(eig[k].real(), ref[k].real(), 1e-9 * scale);
      ASSERT_NEAR(eig[k].imag(), ref[k].imag(), 1e-9 * scale);
    }
  }
}

TEST(Eigenvalues, PositiveMarginImpliesHurwitz) {
  oracle::ParamGenerator gen(14);
  int positive = 0;
  for (int i = 0; i < 5000; ++i) {
    const auto c = gen.next();
    const LateralModel m = build_model(c.params, c.vx);
    if (a_stability_margin(m) <= 0.0) continue;
    ++positive;
    const auto ref = oracle::reference_eigenvalues(oracle::state_matrix(c.params, c.vx));
    ASSERT_LT(ref[1].real(), 0.0);
    ASSERT_LT(eigenvalues_A(m)[1].real(), 0.0);
  }
  EXPECT_GT(positive, 1000);
}

TEST(OutputCaseNames, RoundTrip) {
  for (auto c : {OutputCase::YawRate, OutputCase::LateralAccel, OutputCase::Both}) {
    EXPECT_EQ(parse_output_case(to_string(c)), c);
  }
  EXPECT_THROW(parse_output_case("yaw"), ValidationError);
}
