#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "swell/quadrature.hpp"
#include "swell/scattering.hpp"

using namespace swell;

TEST(Quadrature, MatchesClosedFormTrapping) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(1e-3, 10.0);
  for (const auto& w : {PotentialWell::from_depth(2.4, 10.0), PotentialWell::from_depth(12.0, 10.0),
                        PotentialWell::from_strength(8.7766, 39.2505)}) {
    for (int i = 0; i < 200; ++i) {
      const double k = dist(rng);
      const auto q = trapping_probability_adaptive(w, k);
      EXPECT_NEAR(q.value, trapping_probability(w, k), 1e-9) << "k = " << k;
      EXPECT_LT(q.change, 1e-12);
    }
  }
}

TEST(Quadrature, FixedRuleRoundsToPanels) {
  const auto w = PotentialWell::from_depth(2.4, 10.0);
  EXPECT_DOUBLE_EQ(trapping_probability_quadrature(w, 0.5, 17), trapping_probability_quadrature(w, 0.5, 32));
  EXPECT_THROW(trapping_probability_quadrature(w, 0.5, 8), std::domain_error);
}

TEST(Quadrature, ExtendedRadiusDensity) {
  const auto w = PotentialWell::from_depth(2.4, 10.0);
  for (double k : {0.3, 0.8983, 1.6}) {
    for (double r : {2.4, 3.0, 7.2}) {
      const auto q = density_integral_adaptive(w, k, r);
      EXPECT_NEAR(q.value, radius_extended(w, k, r).p_r, 1e-9) << "k = " << k << " r = " << r;
    }
  }
}
