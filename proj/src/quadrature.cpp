#include "swell/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "swell/scattering.hpp"

namespace swell {

namespace {

constexpr int kPanelOrder = 16;
constexpr int kMaxPoints = 1 << 20;

using PanelRule = boost::math::quadrature::gauss<double, kPanelOrder>;

template <class F>
double composite(F&& f, double lo, double hi, int panels) {
  const double width = (hi - lo) / panels;
  double sum = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double left = lo + i * width;
    const double right = (i + 1 == panels) ? hi : left + width;
    sum += PanelRule::integrate(f, left, right);
  }
  return sum;
}

template <class Estimate>
QuadratureResult doubling(Estimate&& estimate, double tol) {
  int panels = 1;
  double previous = estimate(panels);
  for (;;) {
    panels *= 2;
    if (panels * kPanelOrder > kMaxPoints) {
      throw NumericalError("adaptive quadrature did not converge");
    }
    const double current = estimate(panels);
    const double change = std::abs(current - previous);
    if (change < tol) return {current, panels * kPanelOrder, change};
    previous = current;
  }
}

}  // namespace

double trapping_probability_quadrature(const PotentialWell& well, double k, int n_points) {
  require_wave_number(k, "trapping_probability_quadrature");
  if (n_points < kPanelOrder) {
    throw std::domain_error("trapping_probability_quadrature: n_points must be >= 16");
  }
  const int panels = (n_points + kPanelOrder - 1) / kPanelOrder;
  const double a = well.a();
  const double amp2 = std::norm(interior_amplitude(well, k));
  const double q = std::sqrt(k * k + 2.0 * well.v0());
  auto density = [&](double r) {
    const double s = std::sin(q * r);
    return amp2 * s * s;
  };
  return composite(density, 0.0, a, panels) / a;
}

QuadratureResult trapping_probability_adaptive(const PotentialWell& well, double k, double tol) {
  require_wave_number(k, "trapping_probability_adaptive");
  return doubling(
      [&](int panels) { return trapping_probability_quadrature(well, k, panels * kPanelOrder); },
      tol);
}

QuadratureResult density_integral_adaptive(const PotentialWell& well, double k, double r,
                                           double tol) {
  require_wave_number(k, "density_integral_adaptive");
  const double a = well.a();
  if (!(r >= a)) throw std::domain_error("density_integral_adaptive: radius must be >= a");

  const std::complex<double> amp = interior_amplitude(well, k);
  const std::complex<double> s = s_matrix(well, k);
  const double q = std::sqrt(k * k + 2.0 * well.v0());
  auto inside = [&](double x) { return std::norm(amp * std::sin(q * x)); };
  auto outside = [&](double x) {
    return std::norm(std::polar(1.0, -k * x) + s * std::polar(1.0, k * x));
  };
  auto estimate = [&](int panels) {
    double total = composite(inside, 0.0, a, panels);
    if (r > a) total += composite(outside, a, r, panels);
    return total / r;
  };
  return doubling(estimate, tol);
}

}  // namespace swell
