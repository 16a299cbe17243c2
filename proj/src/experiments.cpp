#include "swell/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "parallel.hpp"

namespace swell {

namespace {

// Wells I-III are listed by radius and depth; IV-VII are the evenly spaced
// strengths 39.0535 ... 39.3489 at the listed radii.
constexpr ReferenceRow kReference[] = {
    {"I", 2.4, 10.0, 10.733, false, 3.91, 0.8983, 0.8934, 0.9990, 0.9950, 0.8994, 0.9936, 1.0486, 1.33},
    {"II", 12.0, 10.0, 53.665, false, 17.58, 0.9915, 0.9915, 0.9952, 0.9950, 0.9913, 0.9949, 1.0014, 1.53},
    {"III", 12.0, 0.4, 10.733, false, 3.91, 0.1797, 0.1787, 0.1990, 0.1990, 0.1799, 0.1987, 1.0486, 1.33},
    {"IV", 8.7326, 10.0, 39.0535, true, 12.931, 0.4572, 0.4570, 0.4716, 0.4714, 0.4572, 0.4714, 1.0153, 0.68},
    {"V", 8.7766, 10.0, 39.2505, true, 12.994, 0.0585, 0.0, 0.1407, 0.1406, 0.0825, 0.1407, 1.352, 1.39},
    {"VI", 8.7546, 10.0, 39.1520, true, 12.962, 0.3274, 0.3269, 0.3475, 0.3474, 0.3279, 0.3473, 1.0293, 1.44},
    {"VII", 8.7987, 10.0, 39.3489, true, 13.025, 1.7948, 1.7948, 1.7991, 1.7985, 1.7943, 1.7983, 1.0009, 1.54},
};

}  // namespace

std::span<const ReferenceRow> reference_table() { return kReference; }

PotentialWell reference_well(const ReferenceRow& row) {
  return row.defined_by_alpha ? PotentialWell::from_strength(row.a, row.alpha)
                              : PotentialWell::from_depth(row.a, row.v0);
}

std::vector<Table1Row> table1() {
  const auto refs = reference_table();
  std::vector<Table1Row> rows;
  rows.reserve(refs.size());
  for (const auto& ref : refs) rows.push_back({ref.label, reference_well(ref), {}});
  detail::parallel_for(rows.size(), [&](std::size_t i) {
    auto record = first_resonance(rows[i].well);
    if (!record) throw NumericalError(std::string("no resonance found for well ") + refs[i].label);
    rows[i].record = *record;
  });
  return rows;
}

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 1) throw std::domain_error("linspace: n must be positive");
  if (n == 1) return {lo};
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  out.back() = hi;
  return out;
}

std::vector<SweepPoint> alpha_sweep(double alpha_min, double alpha_max, int n, double a_fixed) {
  if (!(alpha_min > 0.0) || !(alpha_max > alpha_min)) {
    throw std::domain_error("alpha_sweep: need alpha_max > alpha_min > 0");
  }
  if (n < 2) throw std::domain_error("alpha_sweep: n must be at least 2");
  const std::vector<double> alphas = linspace(alpha_min, alpha_max, n);
  std::vector<SweepPoint> points(alphas.size());
  detail::parallel_for(alphas.size(), [&](std::size_t i) {
    const PotentialWell well = PotentialWell::from_strength(a_fixed, alphas[i]);
    auto record = first_resonance(well);
    if (!record) throw NumericalError("alpha_sweep: no resonance at alpha = " + std::to_string(alphas[i]));
    points[i] = {alphas[i], well.qb(), record->k_star, record->ell_ratio, record->star_boundary};
  });
  return points;
}

ScalingReport scaling_check(const PotentialWell& well, double factor, int n_points) {
  if (!(factor > 0.0)) throw std::domain_error("scaling_check: factor must be positive");
  if (n_points < 2) throw std::domain_error("scaling_check: need at least 2 points");
  const PotentialWell scaled = well.scaled(factor);

  std::vector<double> ks = linspace(0.05 / well.a(), 10.0 / well.a(), n_points);
  std::vector<double> mapped(ks.size());
  std::transform(ks.begin(), ks.end(), mapped.begin(), [factor](double k) { return k / factor; });
  const auto base = scatter_scan(well, ks);
  const auto other = scatter_scan(scaled, mapped);

  ScalingReport rep;
  rep.factor = factor;
  rep.n_points = n_points;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const ScatterSample& s = base[i];
    const ScatterSample& t = other[i];
    rep.phi_dev = std::max(rep.phi_dev, std::abs(s.phi - t.phi));
    rep.sigma_phi_dev = std::max(rep.sigma_phi_dev, std::abs(s.sigma_phi - t.sigma_phi));
    rep.trap_dev = std::max(rep.trap_dev, std::abs(s.p_trap - t.p_trap));
    const double ell_expect = factor * s.ell;
    const double tau_expect = factor * factor * s.tau;
    rep.ell_dev = std::max(rep.ell_dev, std::abs(t.ell - ell_expect) / std::max(1.0, std::abs(ell_expect)));
    rep.tau_dev = std::max(rep.tau_dev, std::abs(t.tau - tau_expect) / std::max(1.0, std::abs(tau_expect)));
  }
  rep.pass = rep.phi_dev < 1e-12 && rep.sigma_phi_dev < 1e-12 && rep.trap_dev < 1e-12 &&
             rep.ell_dev < 1e-10 && rep.tau_dev < 1e-10;
  return rep;
}

FigureDataset figure_data(const PotentialWell& well, double k_min, double k_max, int n,
                          bool with_markers) {
  require_wave_number(k_min, "figure_data");
  if (!(k_max > k_min)) throw std::domain_error("figure_data: k_max must exceed k_min");
  if (n < 2) throw std::domain_error("figure_data: n must be at least 2");

  FigureDataset data;
  const std::vector<double> ks = linspace(k_min, k_max, n);
  data.rows = scatter_scan(well, ks);
  if (!with_markers) return data;

  ReportOptions options;
  options.k_min = k_min;
  for (const auto& r : resonance_report(well, k_max, options)) {
    if (!r.star_boundary) data.markers.push_back({"l_peak", r.k_star});
    if (r.pole_kind == PoleKind::resonance && r.kappa >= k_min && r.kappa <= k_max) {
      data.markers.push_back({"pole_re", r.kappa});
    }
  }
  std::stable_sort(data.markers.begin(), data.markers.end(),
                   [](const Marker& l, const Marker& r) { return l.k < r.k; });
  return data;
}

}  // namespace swell
