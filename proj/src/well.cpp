#include "swell/well.hpp"

#include <cmath>

namespace swell {

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw std::domain_error(std::string(name) + " must be positive and finite, got " +
                            std::to_string(value));
  }
}

}  // namespace

PotentialWell PotentialWell::from_depth(double a, double v0) {
  require_positive(a, "well radius a");
  require_positive(v0, "well depth v0");
  return PotentialWell(a, v0, std::sqrt(2.0 * a * a * v0));
}

PotentialWell PotentialWell::from_strength(double a, double alpha) {
  require_positive(a, "well radius a");
  require_positive(alpha, "well strength alpha");
  return PotentialWell(a, alpha * alpha / (2.0 * a * a), alpha);
}

PotentialWell PotentialWell::scaled(double factor) const {
  require_positive(factor, "scale factor");
  return PotentialWell(a_ * factor, v0_ / (factor * factor), alpha_);
}

void require_wave_number(double k, const char* what) {
  if (!(k >= kMinWaveNumber) || !std::isfinite(k)) {
    throw std::domain_error(std::string(what) + ": wave number must be >= 1e-6, got " +
                            std::to_string(k));
  }
}

}  // namespace swell
