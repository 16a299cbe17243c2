#pragma once

#include <span>
#include <string>
#include <vector>

#include "swell/peaks.hpp"
#include "swell/scattering.hpp"
#include "swell/well.hpp"

namespace swell {

/// Published parameters and first-resonance data for one of the seven
/// reference wells.
struct ReferenceRow {
  const char* label;
  double a;
  double v0;     ///< listed depth |V0|
  double alpha;  ///< listed strength
  bool defined_by_alpha;  ///< build from (a, alpha) rather than (a, v0)
  double qb;
  double k_star;
  double k_tau;
  double k_p;
  double k_sigma;
  double kappa;
  double modulus;
  double ell_ratio;
  double phi_at_kstar;
};

std::span<const ReferenceRow> reference_table();

/// Well described by a reference row.
PotentialWell reference_well(const ReferenceRow& row);

struct Table1Row {
  std::string well_label;
  PotentialWell well;
  ResonanceRecord record;  ///< first resonance
};

/// First-resonance data for all seven reference wells, computed from scratch.
std::vector<Table1Row> table1();

struct SweepPoint {
  double alpha = 0;
  double qb = 0;
  double k_star_1 = 0;
  double ell_ratio_1 = 0;
  bool boundary = false;  ///< first maximum of l sits at k_min
};

/// First maximum of l/(2a) for n strengths evenly spaced on [alpha_min, alpha_max]
/// at fixed radius (depth varies as alpha^2 / (2 a^2)).
std::vector<SweepPoint> alpha_sweep(double alpha_min, double alpha_max, int n, double a_fixed);

/// Maximum deviations between a well and its copy scaled by `factor`
/// (a' = factor a, same alpha), compared at k' = k / factor:
/// phi, sigma_phi and P must agree, l' = factor l and tau' = factor^2 tau.
struct ScalingReport {
  double factor = 1;
  int n_points = 0;
  double phi_dev = 0;
  double sigma_phi_dev = 0;
  double trap_dev = 0;
  double ell_dev = 0;  ///< max |l'(k') - factor l(k)| / max(1, |factor l(k)|)
  double tau_dev = 0;  ///< max |tau'(k') - factor^2 tau(k)| / max(1, |factor^2 tau(k)|)
  bool pass = false;   ///< phase and probabilities within 1e-12, l and tau within 1e-10
};

ScalingReport scaling_check(const PotentialWell& well, double factor, int n_points = 257);

struct Marker {
  std::string kind;  ///< "l_peak" or "pole_re"
  double k = 0;
};

struct FigureDataset {
  std::vector<ScatterSample> rows;
  std::vector<Marker> markers;
};

/// n evenly spaced samples of every scattering function on [k_min, k_max],
/// plus the l maxima and pole real parts of the resonances in range.
FigureDataset figure_data(const PotentialWell& well, double k_min, double k_max, int n = 8192,
                          bool with_markers = true);

/// Evenly spaced wave numbers, inclusive of both ends.
std::vector<double> linspace(double lo, double hi, int n);

}  // namespace swell
