#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "swell/experiments.hpp"

using namespace swell;

TEST(Experiments, ReferenceTable) {
  const auto refs = reference_table();
  ASSERT_EQ(refs.size(), 7u);
  for (const auto& row : refs) {
    const auto w = reference_well(row);
    EXPECT_NEAR(w.alpha(), row.alpha, 1e-3) << row.label;
    EXPECT_NEAR(w.qb(), row.qb, 1e-2) << row.label;
  }
}

TEST(Experiments, Table1ScalingRows) {
  const auto rows = table1();
  ASSERT_EQ(rows.size(), 7u);
  const auto& one = rows[0].record;
  const auto& three = rows[2].record;
  EXPECT_NEAR(three.k_star, one.k_star / 5, 1e-8);
  EXPECT_NEAR(three.k_tau, one.k_tau / 5, 1e-8);
  EXPECT_NEAR(three.k_p, one.k_p / 5, 1e-8);
  EXPECT_NEAR(three.k_sigma, one.k_sigma / 5, 1e-8);
  EXPECT_NEAR(three.kappa, one.kappa / 5, 1e-8);
  EXPECT_NEAR(three.modulus, one.modulus / 5, 1e-8);
  EXPECT_NEAR(three.ell_ratio, one.ell_ratio, 1e-8);
  EXPECT_EQ(rows[3].well_label, "IV");
  EXPECT_NEAR(rows[3].record.k_star, 0.4572, 5e-4);
  EXPECT_NEAR(rows[3].record.ell_ratio, 1.0153, 5e-4);
}

TEST(Experiments, ScalingCheck) {
  const auto one = PotentialWell::from_depth(2.4, 10.0);
  const auto identity = scaling_check(one, 1.0);
  EXPECT_TRUE(identity.pass);
  EXPECT_EQ(identity.phi_dev, 0.0);
  EXPECT_TRUE(scaling_check(one, 5.0).pass);
  const auto half = scaling_check(PotentialWell::from_depth(12.0, 10.0), 0.5);
  EXPECT_TRUE(half.pass);
  EXPECT_LT(half.ell_dev, 1e-10);
  EXPECT_LT(half.tau_dev, 1e-10);
  EXPECT_THROW(scaling_check(one, -1.0), std::domain_error);
}

TEST(Experiments, SweepAroundWellsIVToVII) {
  const auto pts = alpha_sweep(39.0535, 39.3489, 4, 8.7766);
  ASSERT_EQ(pts.size(), 4u);
  EXPECT_NEAR(pts[0].ell_ratio_1, 1.0153, 1e-3);
  EXPECT_NEAR(pts[3].ell_ratio_1, 1.0009, 1e-3);
  EXPECT_GT(pts[2].ell_ratio_1, pts[1].ell_ratio_1);  // growth toward threshold
  for (const auto& p : pts) EXPECT_GE(p.ell_ratio_1, 1.0 - 1e-12);
  EXPECT_THROW(alpha_sweep(2.0, 1.0, 3, 1.0), std::domain_error);
}

TEST(Experiments, FigureMarkersNearPole) {
  const auto data = figure_data(PotentialWell::from_depth(2.4, 10.0), 0.01, 3.5, 2048);
  ASSERT_EQ(data.rows.size(), 2048u);
  double peak = -1, pole = -1;
  for (const auto& m : data.markers) {
    if (m.kind == "l_peak" && peak < 0) peak = m.k;
    if (m.kind == "pole_re" && pole < 0) pole = m.k;
  }
  ASSERT_GT(peak, 0);
  ASSERT_GT(pole, 0);
  EXPECT_NEAR(peak, pole, 2e-3);
}

TEST(Experiments, WellVDelayDivergesAtThreshold) {
  const auto data = figure_data(PotentialWell::from_strength(8.7766, 39.2505), 0.01, 1.0, 8192, false);
  for (std::size_t i = 1; i < data.rows.size() && data.rows[i].k <= 0.05; ++i) {
    EXPECT_LT(data.rows[i].tau, data.rows[i - 1].tau);
  }
}

namespace {

double sigma_phi_fwhm(const FigureDataset& d) {
  auto top = std::max_element(d.rows.begin(), d.rows.end(),
                              [](const auto& l, const auto& r) { return l.sigma_phi < r.sigma_phi; });
  const double half = 0.5 * top->sigma_phi;
  auto lo = top, hi = top;
  while (lo != d.rows.begin() && lo->sigma_phi > half) --lo;
  while (hi + 1 != d.rows.end() && hi->sigma_phi > half) ++hi;
  return hi->k - lo->k;
}

}  // namespace

TEST(Experiments, WellIIResonanceIsSharper) {
  const auto one = figure_data(PotentialWell::from_depth(2.4, 10.0), 0.6, 1.4, 8192, false);
  const auto two = figure_data(PotentialWell::from_depth(12.0, 10.0), 0.9, 1.1, 8192, false);
  EXPECT_LT(sigma_phi_fwhm(two), sigma_phi_fwhm(one));
}

TEST(Experiments, Linspace) {
  const auto v = linspace(0.0, 1.0, 5);
  ASSERT_EQ(v.size(), 5u);
  EXPECT_EQ(v[2], 0.5);
  EXPECT_EQ(v.back(), 1.0);
  EXPECT_THROW(linspace(0.0, 1.0, 0), std::domain_error);
}
