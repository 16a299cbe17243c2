#include "swell/peaks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace swell {

KGrid sample_uniform(const std::function<double(double)>& f, double k_min, double k_max, int n) {
  if (n < 3) throw std::domain_error("sample_uniform: need at least 3 samples");
  if (!(k_max > k_min)) throw std::domain_error("sample_uniform: k_max must exceed k_min");
  KGrid grid;
  grid.k_min = k_min;
  grid.k_max = k_max;
  grid.samples.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double k = (i + 1 == n) ? k_max : k_min + (k_max - k_min) * i / (n - 1);
    grid.samples.emplace_back(k, f(k));
  }
  return grid;
}

namespace {

int count_interior_maxima(const KGrid& grid) {
  int count = 0;
  const auto& s = grid.samples;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    if (s[i].second > s[i - 1].second && s[i].second > s[i + 1].second) ++count;
  }
  return count;
}

}  // namespace

KGrid scan_observable(const PotentialWell& well, Observable obs, double k_min, double k_max,
                      double density, int max_doublings) {
  require_wave_number(k_min, "scan_observable");
  if (!(k_max > k_min)) throw std::domain_error("scan_observable: k_max must exceed k_min");
  if (!(density > 0.0)) throw std::domain_error("scan_observable: density must be positive");

  auto f = [&](double k) { return evaluate(well, obs, k); };
  auto samples_for = [&](double d) {
    return std::max(3, static_cast<int>(std::ceil((k_max - k_min) * d)) + 1);
  };

  KGrid grid = sample_uniform(f, k_min, k_max, samples_for(density));
  int count = count_interior_maxima(grid);
  for (int i = 0; i < max_doublings; ++i) {
    density *= 2.0;
    KGrid finer = sample_uniform(f, k_min, k_max, samples_for(density));
    const int finer_count = count_interior_maxima(finer);
    grid = std::move(finer);
    if (finer_count == count) break;
    count = finer_count;
  }
  grid.adaptive = true;
  return grid;
}

long double golden_section_max(const RefineFn& f, long double lo, long double hi, long double tol) {
  const long double inv_phi = (std::sqrt(5.0L) - 1.0L) / 2.0L;
  long double c = hi - inv_phi * (hi - lo);
  long double d = lo + inv_phi * (hi - lo);
  long double fc = f(c);
  long double fd = f(d);
  while (hi - lo > tol) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  return 0.5L * (lo + hi);
}

std::vector<Peak> local_maxima(const KGrid& grid, const RefineFn& refine, double tol) {
  const auto& s = grid.samples;
  if (s.size() < 3) throw std::domain_error("local_maxima: need at least 3 samples");
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!(s[i].first > s[i - 1].first)) {
      throw std::domain_error("local_maxima: sample positions must be strictly increasing");
    }
  }

  std::vector<Peak> peaks;
  if (s[0].second > s[1].second) peaks.push_back({s[0].first, s[0].second, true});
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    if (!(s[i].second > s[i - 1].second && s[i].second > s[i + 1].second)) continue;
    if (!refine) {
      peaks.push_back({s[i].first, s[i].second, false});
      continue;
    }
    const long double k = golden_section_max(refine, s[i - 1].first, s[i + 1].first, tol);
    peaks.push_back({static_cast<double>(k), static_cast<double>(refine(k)), false});
  }
  const std::size_t last = s.size() - 1;
  if (s[last].second > s[last - 1].second) peaks.push_back({s[last].first, s[last].second, true});
  return peaks;
}

namespace {

struct Candidate {
  Peak peak;
  int pole = -1;
  double distance = std::numeric_limits<double>::infinity();
  bool kept = false;
};

std::vector<Peak> observable_peaks(const PotentialWell& well, Observable obs, double k_min,
                                   double k_max, double density) {
  const RefineFn refine = [&well, obs](long double k) { return evaluate_extended(well, obs, k); };
  return local_maxima(scan_observable(well, obs, k_min, k_max, density), refine);
}

// Index of the candidate nearest to k, or -1.
int nearest_candidate(const std::vector<Candidate>& candidates, double k) {
  int best = -1;
  double best_dist = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const double d = std::abs(candidates[i].peak.k - k);
    if (d < best_dist) {
      best_dist = d;
      best = static_cast<int>(i);
    }
  }
  return best;
}

// Half the distance from candidate c to its neighbours; at either end of the
// list the one available neighbour is used. Infinite for a lone candidate.
double half_spacing(const std::vector<Candidate>& candidates, int c) {
  double gap = std::numeric_limits<double>::infinity();
  const double k = candidates[static_cast<std::size_t>(c)].peak.k;
  for (const auto& other : candidates) {
    const double d = std::abs(other.peak.k - k);
    if (d > 0.0) gap = std::min(gap, d);
  }
  return 0.5 * gap;
}

}  // namespace

std::vector<ResonanceRecord> resonance_report(const PotentialWell& well, double k_max,
                                              const ReportOptions& options) {
  const double k_min = options.k_min;
  require_wave_number(k_min, "resonance_report");
  if (!(k_max > k_min)) throw std::domain_error("resonance_report: k_max must exceed k_min");

  PoleSearchConfig cfg = PoleSearchConfig::for_well(well, 1.25 * k_max + 2.0 / well.a());
  cfg.include_bound = false;
  const std::vector<PoleK> poles = find_poles(well, cfg);

  std::vector<Candidate> candidates;
  for (const Peak& p : observable_peaks(well, Observable::ell, k_min, k_max, options.density)) {
    if (p.boundary && p.k != k_min) continue;
    Candidate c{p};
    for (std::size_t j = 0; j < poles.size(); ++j) {
      const double d = std::abs(poles[j].value - std::complex<double>(p.k, 0.0));
      if (d < c.distance) {
        c.distance = d;
        c.pole = static_cast<int>(j);
      }
    }
    if (c.pole >= 0) {
      const PoleKind kind = poles[static_cast<std::size_t>(c.pole)].kind;
      c.kept = p.boundary ? true : kind == PoleKind::resonance;
    }
    candidates.push_back(c);
  }
  // One l maximum per pole: the nearest; a boundary maximum never displaces an interior one.
  for (auto& c : candidates) {
    if (!c.kept) continue;
    for (const auto& other : candidates) {
      if (&other == &c || !other.kept || other.pole != c.pole) continue;
      const bool other_wins = (c.peak.boundary && !other.peak.boundary) ||
                              (c.peak.boundary == other.peak.boundary && other.distance < c.distance);
      if (other_wins) {
        c.kept = false;
        break;
      }
    }
  }

  std::vector<ResonanceRecord> records;
  std::vector<int> record_of(candidates.size(), -1);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const Candidate& c = candidates[i];
    if (!c.kept) continue;
    const PoleK& pole = poles[static_cast<std::size_t>(c.pole)];
    ResonanceRecord r;
    r.k_star = c.peak.k;
    r.star_boundary = c.peak.boundary;
    r.ell_ratio = evaluate(well, Observable::ell, r.k_star) / (2.0 * well.a());
    r.phi_at_kstar = mod_pi(phase_principal(well, r.k_star));
    r.pole = pole.value;
    r.kappa = pole.kappa;
    r.modulus = pole.modulus;
    r.pole_kind = pole.kind;
    r.k_tau = r.k_p = r.k_sigma = std::numeric_limits<double>::quiet_NaN();
    record_of[i] = static_cast<int>(records.size());
    records.push_back(r);
  }
  for (std::size_t i = 0; i < records.size(); ++i) records[i].n = static_cast<int>(i) + 1;

  bool tau_boundary_at_kmin = false;
  auto assign = [&](Observable obs, double ResonanceRecord::*field, bool ResonanceRecord::*matched) {
    for (const Peak& p : observable_peaks(well, obs, k_min, k_max, options.density)) {
      if (p.boundary) {
        if (obs == Observable::tau && p.k == k_min) tau_boundary_at_kmin = true;
        continue;
      }
      const int c = nearest_candidate(candidates, p.k);
      if (c < 0 || record_of[static_cast<std::size_t>(c)] < 0) continue;
      if (std::abs(p.k - candidates[static_cast<std::size_t>(c)].peak.k) > half_spacing(candidates, c)) continue;
      ResonanceRecord& r = records[static_cast<std::size_t>(record_of[static_cast<std::size_t>(c)])];
      if (!(r.*matched) || std::abs(p.k - r.k_star) < std::abs(r.*field - r.k_star)) {
        r.*field = p.k;
        r.*matched = true;
      }
    }
  };
  assign(Observable::tau, &ResonanceRecord::k_tau, &ResonanceRecord::tau_matched);
  assign(Observable::trap, &ResonanceRecord::k_p, &ResonanceRecord::p_matched);
  assign(Observable::sigma_phi, &ResonanceRecord::k_sigma, &ResonanceRecord::sigma_matched);

  if (!records.empty() && !records.front().tau_matched && tau_boundary_at_kmin) {
    records.front().k_tau = 0.0;
    records.front().tau_boundary = true;
    records.front().tau_matched = true;
  }
  return records;
}

std::optional<ResonanceRecord> first_resonance(const PotentialWell& well, const ReportOptions& options) {
  // Range reaching the second zero of cos(qa) above threshold.
  const double alpha = well.alpha();
  const double pi = std::numbers::pi;
  const double j0 = std::floor(alpha / pi - 0.5) + 1.0;
  const double y2 = (2.0 * (j0 + 1.0) + 1.0) * pi / 2.0;
  double k_max = 1.2 * std::sqrt(y2 * y2 - alpha * alpha) / well.a();
  for (int attempt = 0; attempt < 6; ++attempt) {
    auto records = resonance_report(well, k_max, options);
    if (!records.empty()) return records.front();
    k_max *= 2.0;
  }
  return std::nullopt;
}

}  // namespace swell
