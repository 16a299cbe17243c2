#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "swell/poles.hpp"
#include "swell/scattering.hpp"
#include "swell/well.hpp"

namespace swell {

/// Sampled values of one function on an increasing set of wave numbers.
struct KGrid {
  double k_min = 0;
  double k_max = 0;
  std::vector<std::pair<double, double>> samples;  ///< (k, value), strictly increasing in k
  bool adaptive = false;
};

struct Peak {
  double k = 0;
  double value = 0;
  bool boundary = false;  ///< maximum sits on the first or last sample
};

using RefineFn = std::function<long double(long double)>;

/// Uniform sampling of f with n >= 3 samples on [k_min, k_max].
KGrid sample_uniform(const std::function<double(double)>& f, double k_min, double k_max, int n);

/// Samples observable `obs` with `density` samples per unit k, doubling the
/// density until the number of interior maxima is the same on two
/// successive grids (at most `max_doublings` times).
KGrid scan_observable(const PotentialWell& well, Observable obs, double k_min, double k_max,
                      double density = 4096.0, int max_doublings = 5);

/// Local maxima of the sampled function. Interior maxima (middle sample
/// strictly above both neighbours) are refined by golden-section search on
/// `refine` to a bracket narrower than `tol`; without `refine` the sample
/// position is reported. Maxima on the first or last sample carry
/// boundary = true. Throws std::domain_error for fewer than 3 samples.
std::vector<Peak> local_maxima(const KGrid& grid, const RefineFn& refine = {}, double tol = 1e-10);

/// Golden-section search for a maximum of f inside [lo, hi].
long double golden_section_max(const RefineFn& f, long double lo, long double hi, long double tol);

/// Peak positions of the traversal distance, time delay, trapping probability
/// and resonant cross section belonging to one resonance, with the pole the
/// resonance is attached to.
struct ResonanceRecord {
  int n = 0;
  double k_star = 0;   ///< maximum of l
  double k_tau = 0;    ///< maximum of tau; 0 with tau_boundary when tau peaks at k -> 0
  double k_p = 0;      ///< maximum of P
  double k_sigma = 0;  ///< maximum of sigma_phi
  double phi_at_kstar = 0;  ///< phi mod pi at k_star
  double ell_ratio = 0;     ///< l(k_star) / 2a
  double kappa = 0;         ///< Re of the attached pole
  double modulus = 0;       ///< |K| of the attached pole
  std::complex<double> pole;
  PoleKind pole_kind = PoleKind::resonance;
  bool star_boundary = false;  ///< l maximum at k_min (near-threshold virtual state)
  bool tau_boundary = false;
  bool tau_matched = false;
  bool p_matched = false;
  bool sigma_matched = false;
};

struct ReportOptions {
  double k_min = kMinWaveNumber;
  double density = 4096.0;
};

/// Resonance records for every resonance whose l maximum lies in [k_min, k_max].
///
/// Each interior maximum of l is attached to the nearest pole in the lower
/// half plane and kept when that pole is a resonance pole; a maximum of l
/// at k_min is kept when its nearest pole is a virtual state or a resonance
/// pole without an interior maximum nearer to it. Maxima of tau, P and
/// sigma_phi go to the resonance whose l maximum (kept or not) is nearest,
/// unless they lie further from it than half the spacing to the neighbouring
/// l maximum; such peaks stay unmatched (field NaN, *_matched false).
std::vector<ResonanceRecord> resonance_report(const PotentialWell& well, double k_max,
                                              const ReportOptions& options = {});

/// First resonance record, widening the scan range until one is found.
std::optional<ResonanceRecord> first_resonance(const PotentialWell& well,
                                               const ReportOptions& options = {});

}  // namespace swell
