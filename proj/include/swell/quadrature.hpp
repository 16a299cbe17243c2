#pragma once

#include "swell/well.hpp"

namespace swell {

/// Result of an adaptive quadrature run.
struct QuadratureResult {
  double value = 0;
  int n_points = 0;      ///< nodes used by the accepted estimate
  double change = 0;     ///< |last - previous| at acceptance
};

/// Trapping probability (1/a) * integral_0^a |A sin(qr)|^2 dr by composite
/// 16-point Gauss-Legendre with n_points nodes (rounded up to a multiple of 16).
/// Independent of the closed form; used as its oracle.
double trapping_probability_quadrature(const PotentialWell& well, double k, int n_points);

/// Same integral, doubling the node count from 16 until successive
/// estimates differ by less than `tol`.
QuadratureResult trapping_probability_adaptive(const PotentialWell& well, double k,
                                               double tol = 1e-12);

/// (1/r) * integral_0^r |psi(k; s)|^2 ds for r >= a, integrating the interior
/// and exterior wavefunctions separately with the same doubling rule.
QuadratureResult density_integral_adaptive(const PotentialWell& well, double k, double r,
                                           double tol = 1e-12);

}  // namespace swell
