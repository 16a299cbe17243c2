#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <span>
#include <vector>

#include "swell/well.hpp"

namespace swell {

/// Every s-wave scattering function of the well at one real wave number.
struct ScatterSample {
  double k = 0;            ///< external wave number
  double q = 0;            ///< internal wave number, q^2 = k^2 + 2 v0
  double theta = 0;        ///< full phase shift, theta = phi - k a
  double phi = 0;          ///< resonant phase shift, continuous branch with phi(0+) = 0
  double sigma = 0;        ///< s-wave cross section (4 pi / k^2) sin^2(theta)
  double sigma_theta = 0;  ///< scaled cross section 4 sin^2(theta)
  double sigma_phi = 0;    ///< resonant scaled cross section 4 sin^2(phi)
  double tau = 0;          ///< Wigner-Smith time delay
  double ell = 0;          ///< effective traversal distance 2 dphi/dk
  double p_trap = 0;       ///< trapping probability inside the well
  double a2 = 0;           ///< relative interior intensity |A|^2
  double r0 = 0;           ///< reaction function psi/psi' at r = a (infinite where cos(qa) = 0)
};

/// Resonant phase, traversal distance and trapping probability re-evaluated
/// at a separation radius r >= a.
struct RadiusExtendedSample {
  double r = 0;
  double phi_r = 0;
  double ell_r = 0;
  double p_r = 0;  ///< (1/r) * integral of |psi|^2 over [0, r]
};

/// Real-axis observables that the peak finder scans.
enum class Observable { ell, tau, trap, sigma_phi };

const char* to_string(Observable obs);

namespace detail {

// Closed forms in the dimensionless variables x = k a and y = q a,
// y^2 = x^2 + alpha^2. Templated so that peak refinement can run in
// extended precision.
template <std::floating_point Real>
struct ClosedForm {
  ClosedForm(Real alpha, Real x) : alpha(alpha), x(x) {
    using std::cos, std::sin, std::sqrt;
    y = sqrt(x * x + alpha * alpha);
    cos_y = cos(y);
    sin_y = sin(y);
    denom = x * x + alpha * alpha * cos_y * cos_y;
    sinc2 = sin(2 * y) / (2 * y);
  }

  Real intensity() const { return 4 * x * x / denom; }
  Real sigma_phi() const { return 4 * x * x * sin_y * sin_y / denom; }
  Real trap() const { return 2 * x * x * (1 - sinc2) / denom; }
  // l / (2a); written over the common denominator so that k -> 0 stays finite.
  Real ell_ratio() const { return (x * x + alpha * alpha * sinc2) / denom; }

  Real alpha, x, y, cos_y, sin_y, denom, sinc2;
};

template <std::floating_point Real>
Real observable_value(Real alpha, Real a, Observable obs, Real k) {
  const ClosedForm<Real> cf(alpha, k * a);
  switch (obs) {
    case Observable::ell:
      return 2 * a * cf.ell_ratio();
    case Observable::tau:
      return 2 * a * (cf.ell_ratio() - 1) / k;
    case Observable::trap:
      return cf.trap();
    case Observable::sigma_phi:
      return cf.sigma_phi();
  }
  return Real(0);
}

}  // namespace detail

/// Closed-form value of `obs` at wave number k.
double evaluate(const PotentialWell& well, Observable obs, double k);
/// Same, in long double; used where argmax resolution matters.
long double evaluate_extended(const PotentialWell& well, Observable obs, long double k);

double intensity(const PotentialWell& well, double k);
double resonant_cross_section(const PotentialWell& well, double k);
double trapping_probability(const PotentialWell& well, double k);
double traversal_distance(const PotentialWell& well, double k);
double time_delay(const PotentialWell& well, double k);

/// Principal value of the resonant phase, atan2(k sin(qa), q cos(qa)).
double phase_principal(const PotentialWell& well, double k);

/// Reduce a phase to [0, pi).
double mod_pi(double phase);

/// Tracks the continuous branch of the resonant phase along increasing k.
///
/// Starts at kMinWaveNumber with the branch chosen so that phi(k_min) is the
/// representative nearest zero. Each step is accepted only when the wrapped
/// phase increment stays below pi/2 and agrees to within pi/4 with the
/// trapezoidal estimate from the analytic traversal distance; otherwise
/// the step is halved.
class PhaseUnwrapper {
 public:
  explicit PhaseUnwrapper(const PotentialWell& well);

  /// Move to wave number k >= current position and return phi(k).
  double advance_to(double k);

  double k() const noexcept { return k_; }
  double phase() const noexcept { return raw_ + offset_; }

 private:
  PotentialWell well_;
  double k_;
  double principal_;
  double raw_;
  double offset_;
  double ell_;
};

/// Continuous resonant phase phi(k), anchored at phi(k_min) ~ 0.
double phase_resonant(const PotentialWell& well, double k);

/// All scattering functions at k.
ScatterSample scatter_sample(const PotentialWell& well, double k);

/// Scattering functions along a strictly increasing set of wave numbers,
/// unwrapping the phase incrementally.
std::vector<ScatterSample> scatter_scan(const PotentialWell& well, std::span<const double> ks);

/// Reaction function R0 = tan(qa)/q and its k-derivative.
struct ReactionFunction {
  double r0;
  double dr0;
};
ReactionFunction reaction_function(const PotentialWell& well, double k);

/// Traversal distance from the reaction function, 2 (R0 + k R0') / (1 + (k R0)^2).
double traversal_distance_from_reaction(const PotentialWell& well, double k);

/// S-matrix element from the continuity ratio form.
std::complex<double> s_matrix(const PotentialWell& well, double k);

/// Interior amplitude A of psi = A sin(qr).
std::complex<double> interior_amplitude(const PotentialWell& well, double k);

/// Scattering wavefunction at radius r >= 0: A sin(qr) inside, e^{-ikr} + S e^{ikr} outside.
std::complex<double> wavefunction(const PotentialWell& well, double k, double r);

/// Phase, traversal distance and trapping probability at radius r >= a.
RadiusExtendedSample radius_extended(const PotentialWell& well, double k, double r);

}  // namespace swell
