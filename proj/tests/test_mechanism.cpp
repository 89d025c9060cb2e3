#include <pfva/mechanism.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "mechanism_oracles.hpp"
#include "test_support.hpp"

namespace {

using pfva::CrankSliderGeometry;
using pfva::MechanismMasses;
using pfva::testing::Rng;
using std::numbers::pi;

const CrankSliderGeometry<double> kGeo{0.15, 0.45};

TEST(Geometry, DefaultStrokeCoversSliderEndpoints) {
  const CrankSliderGeometry<double> g;
  EXPECT_DOUBLE_EQ(g.stroke_min(), 0.30);
  EXPECT_DOUBLE_EQ(g.stroke_max(), 0.60);
  EXPECT_NO_THROW(pfva::validate(g));
  EXPECT_THROW(pfva::validate(CrankSliderGeometry<double>{0.5, 0.4}), pfva::DomainError);
  EXPECT_THROW(pfva::validate(CrankSliderGeometry<double>{0.0, 0.4}), pfva::DomainError);
  EXPECT_THROW(pfva::validate(MechanismMasses<double>{0.0, -1.0, 0.0}), pfva::DomainError);
}

TEST(SliderPosition, Examples) {
  EXPECT_DOUBLE_EQ(pfva::slider_position(kGeo, 0.0), 0.60);
  EXPECT_DOUBLE_EQ(pfva::slider_position(kGeo, pi), 0.30);
  EXPECT_DOUBLE_EQ(pfva::slider_position(kGeo, pi / 2), std::sqrt(0.45 * 0.45 - 0.15 * 0.15));
}

TEST(Kic, Examples) {
  EXPECT_EQ(pfva::kic_first(kGeo, 0.0), 0.0);
  EXPECT_NEAR(pfva::kic_first(kGeo, pi), 0.0, 1e-16);
  EXPECT_NEAR(pfva::kic_first(kGeo, pi / 2), -0.15, 1e-16);

  const double h = 1e-6;
  EXPECT_LE(pfva::testing::rel_err(pfva::kic_first(kGeo, 1.0), pfva::testing::fd_first(kGeo, 1.0, h)), 1e-6);
  EXPECT_LE(pfva::testing::rel_err(pfva::kic_second(kGeo, 1.0), pfva::testing::fd_second(kGeo, 1.0)), 1e-6);
}

TEST(JointFromSlider, StrokeEndpoints) {
  EXPECT_EQ(pfva::joint_from_slider(kGeo, kGeo.stroke_max()), 0.0);
  EXPECT_EQ(pfva::joint_from_slider(kGeo, kGeo.stroke_min()), pi);
  EXPECT_NEAR(pfva::joint_from_slider(kGeo, std::sqrt(0.45 * 0.45 - 0.15 * 0.15)), pi / 2, 1e-12);
}

TEST(JointFromSlider, DefaultMoveFinalSliderPosition) {
  const double theta = pfva::joint_from_slider(kGeo, 0.5873);
  // Reference from an independent Brent solve of the same loop closure.
  EXPECT_NEAR(theta, 0.3595868556828562, 1e-9);
  EXPECT_NEAR(pfva::slider_position(kGeo, theta), 0.5873, 1e-12);
}

TEST(JointFromSlider, OutOfStroke) {
  EXPECT_THROW(pfva::joint_from_slider(kGeo, 0.2999), pfva::OutOfStrokeError);
  EXPECT_THROW(pfva::joint_from_slider(kGeo, 0.6001), pfva::OutOfStrokeError);
  EXPECT_THROW(pfva::joint_from_slider(kGeo, std::nan("")), pfva::OutOfStrokeError);
}

TEST(EffectiveInertia, Examples) {
  for (double theta : {0.0, 0.5, 1.5, 2.5, pi}) {
    EXPECT_DOUBLE_EQ(pfva::effective_inertia(kGeo, MechanismMasses<double>{0.01, 0.0, 0.0}, theta), 0.01);
  }
  EXPECT_EQ(pfva::effective_inertia(kGeo, MechanismMasses<double>{0.0, 0.0, 1.0}, 0.0), 0.0);

  const MechanismMasses<double> m{0.01, 0.5, 1.0};
  const double i_star = pfva::effective_inertia(kGeo, m, pi / 2);
  EXPECT_NEAR(i_star, 2.0 * pfva::testing::kinetic_energy(kGeo, m, pi / 2, 1.0), 1e-14);
  EXPECT_NEAR(i_star, 0.04375, 1e-14);
}

// Property checks.

TEST(MechanismProperties, EnergyConsistency) {
  Rng rng(31);
  for (int i = 0; i < 5000; ++i) {
    const double r = rng.uniform(0.01, 1.0);
    const CrankSliderGeometry<double> g{r, r * rng.uniform(1.05, 5.0)};
    const MechanismMasses<double> m{rng.uniform(0, 0.1), rng.uniform(0, 5), rng.uniform(0, 5)};
    const double theta = rng.uniform(0.0, pi);
    const double theta_dot = rng.uniform(-20, 20);
    const double ke = pfva::testing::kinetic_energy(g, m, theta, theta_dot);
    const double model = 0.5 * pfva::effective_inertia(g, m, theta) * theta_dot * theta_dot;
    ASSERT_LE(std::abs(model - ke), 1e-10 * std::max(ke, 1e-300)) << theta;
  }
}

TEST(MechanismProperties, InertiaBoundedBelowByCrank) {
  Rng rng(32);
  const MechanismMasses<double> m{0.01, 0.5, 1.0};
  for (int i = 0; i < 5000; ++i) {
    ASSERT_GE(pfva::effective_inertia(kGeo, m, rng.uniform(-10, 10)), m.i_crank);
  }
}

TEST(MechanismProperties, SliderJointRoundTrip) {
  Rng rng(33);
  for (int i = 0; i < 5000; ++i) {
    const double theta = rng.uniform(0.01, pi - 0.01);
    ASSERT_NEAR(pfva::joint_from_slider(kGeo, pfva::slider_position(kGeo, theta)), theta, 1e-9);
  }
}

TEST(MechanismProperties, StrokeIsMonotone) {
  Rng rng(34);
  for (int i = 0; i < 5000; ++i) {
    const double r = rng.uniform(0.01, 1.0);
    const CrankSliderGeometry<double> g{r, r * rng.uniform(1.001, 5.0)};
    ASSERT_LT(pfva::kic_first(g, rng.uniform(1e-6, pi - 1e-6)), 0.0);
  }
}

TEST(MechanismProperties, KicAgreesWithFiniteDifferences) {
  Rng rng(35);
  for (int i = 0; i < 2000; ++i) {
    const double theta = rng.uniform(0.05, pi - 0.05);
    const double g1 = pfva::kic_first(kGeo, theta);
    const double g2 = pfva::kic_second(kGeo, theta);
    ASSERT_LE(std::abs(g1 - pfva::testing::fd_first(kGeo, theta, 1e-6)), 1e-6 * std::max(std::abs(g1), 1e-3));
    ASSERT_LE(std::abs(g2 - pfva::testing::fd_second(kGeo, theta)), 1e-6 * std::max(std::abs(g2), 1e-3));
  }
}

}  // namespace
