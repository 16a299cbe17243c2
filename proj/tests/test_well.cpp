#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

#include "swell/well.hpp"

using swell::PotentialWell;

TEST(Well, StrengthFromDepth) {
  const auto w = PotentialWell::from_depth(2.4, 10.0);
  EXPECT_NEAR(w.alpha(), std::sqrt(115.2), 1e-14);
  EXPECT_NEAR(w.qb(), std::sqrt(115.2) / std::numbers::pi + 0.5, 1e-14);
  EXPECT_NEAR(w.qb(), 3.91, 1e-2);
}

TEST(Well, DepthFromStrengthKeepsAlpha) {
  const auto w = PotentialWell::from_strength(8.7326, 39.0535);
  EXPECT_EQ(w.alpha(), 39.0535);
  EXPECT_NEAR(w.v0(), 39.0535 * 39.0535 / (2 * 8.7326 * 8.7326), 1e-12);
  EXPECT_NEAR(w.v0(), 10.0, 2e-4);
}

TEST(Well, ScaledKeepsStrength) {
  const auto w = PotentialWell::from_depth(2.4, 10.0);
  const auto s = w.scaled(5.0);
  EXPECT_DOUBLE_EQ(s.a(), 12.0);
  EXPECT_DOUBLE_EQ(s.v0(), 0.4);
  EXPECT_EQ(s.alpha(), w.alpha());
}

TEST(Well, RejectsBadParameters) {
  EXPECT_THROW(PotentialWell::from_depth(0.0, 1.0), std::domain_error);
  EXPECT_THROW(PotentialWell::from_depth(1.0, -1.0), std::domain_error);
  EXPECT_THROW(PotentialWell::from_depth(NAN, 1.0), std::domain_error);
  EXPECT_THROW(PotentialWell::from_strength(1.0, 0.0), std::domain_error);
  EXPECT_THROW(PotentialWell::from_depth(1.0, 1.0).scaled(0.0), std::domain_error);
}

TEST(Well, WaveNumberFloor) {
  EXPECT_NO_THROW(swell::require_wave_number(1e-6, "k"));
  EXPECT_THROW(swell::require_wave_number(9e-7, "k"), std::domain_error);
  EXPECT_THROW(swell::require_wave_number(INFINITY, "k"), std::domain_error);
}
