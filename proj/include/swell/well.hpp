#pragma once

#include <numbers>
#include <stdexcept>
#include <string>

namespace swell {

/// Smallest wave number at which any scattering function is evaluated.
inline constexpr double kMinWaveNumber = 1e-6;

/// Raised when an iterative numerical procedure cannot make progress
/// (for instance, phase unwrapping step underflow).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Attractive central square well of radius `a` and depth |V0| in units
/// where hbar = mu = 1. The dimensionless strength is alpha^2 = 2 a^2 |V0|
/// and Q_B = alpha/pi + 1/2 estimates the number of bound states.
class PotentialWell {
 public:
  /// Well from radius and depth.
  static PotentialWell from_depth(double a, double v0);

  /// Well from radius and strength; depth follows as v0 = alpha^2 / (2 a^2).
  /// The given alpha is stored verbatim.
  static PotentialWell from_strength(double a, double alpha);

  double a() const noexcept { return a_; }
  double v0() const noexcept { return v0_; }
  double alpha() const noexcept { return alpha_; }
  double qb() const noexcept { return alpha_ / std::numbers::pi + 0.5; }

  /// Same strength, radius multiplied by `factor`.
  PotentialWell scaled(double factor) const;

 private:
  PotentialWell(double a, double v0, double alpha) : a_(a), v0_(v0), alpha_(alpha) {}

  double a_;
  double v0_;
  double alpha_;
};

inline PotentialWell make_well(double a, double v0) { return PotentialWell::from_depth(a, v0); }

// Throws std::domain_error naming `what` unless k >= kMinWaveNumber.
void require_wave_number(double k, const char* what);

}  // namespace swell
