#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "swell/well.hpp"

namespace swell {

enum class PoleKind { bound, resonance, virtual_state };

const char* to_string(PoleKind kind);

/// A zero of the S-matrix denominator D(k) = cos(qa) - i (k/q) sin(qa).
///
/// Bound states sit on the positive imaginary axis, virtual states on the
/// negative imaginary axis, and resonance poles in the fourth quadrant.
/// Mirror poles -conj(K) in the third quadrant are not reported.
struct PoleK {
  std::complex<double> value;
  double kappa = 0;     ///< Re K
  double modulus = 0;   ///< |K|
  PoleKind kind = PoleKind::resonance;
  double residual = 0;  ///< |D(K)|, rescaled when |Im(qa)| > 30
};

struct PoleSearchConfig {
  double re_max = 4.0;
  double im_min = -2.0;
  int grid_nx = 64;
  int grid_ny = 16;
  double newton_tol = 1e-12;
  int max_iter = 100;
  double dedup_tol = 1e-8;
  bool include_bound = true;

  /// Throws std::domain_error on an invalid configuration.
  void validate() const;

  /// Defaults sized for `well`: the grid spacing follows the pole spacing,
  /// which scales like 1/a, and the search reaches 4/a below the real axis.
  static PoleSearchConfig for_well(const PotentialWell& well, double re_max);
};

/// Value of D at complex k. When |Im(qa)| exceeds 30 the value is multiplied
/// by exp(-|Im(qa)|) to stay finite; zeros are unchanged.
struct Denominator {
  std::complex<double> value;
  std::complex<double> derivative;  ///< dD/dk, scaled like `value`
  bool rescaled = false;
  double log_scale = 0;  ///< |Im(qa)| when rescaled, else 0
};

Denominator denominator(const PotentialWell& well, std::complex<double> k);

/// Newton iteration on D from `seed`; returns the root if the residual drops
/// below cfg.newton_tol within cfg.max_iter steps.
std::optional<std::complex<double>> polish_root(const PotentialWell& well, std::complex<double> seed,
                                                const PoleSearchConfig& cfg);

/// Poles in the rectangle 0 <= Re K <= re_max, im_min <= Im K < 0, plus the
/// bound states when cfg.include_bound is set. Sorted by (Re K, Im K).
std::vector<PoleK> find_poles(const PotentialWell& well, const PoleSearchConfig& cfg);

/// Bound-state wave numbers kappa_b > 0 with D(i kappa_b) = 0, ascending.
std::vector<double> bound_states(const PotentialWell& well);

/// Virtual-state depths gamma > 0 with D(-i gamma) = 0 and gamma <= gamma_max, ascending.
std::vector<double> virtual_states(const PotentialWell& well, double gamma_max);

}  // namespace swell
