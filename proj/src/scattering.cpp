#include "swell/scattering.hpp"

#include <algorithm>
#include <stdexcept>

namespace swell {

namespace {

constexpr double kPi = std::numbers::pi;
using namespace std::complex_literals;

ScatterSample make_sample(const PotentialWell& well, double k, double phi) {
  const double a = well.a();
  const detail::ClosedForm<double> cf(well.alpha(), k * a);

  ScatterSample s;
  s.k = k;
  s.q = cf.y / a;
  s.phi = phi;
  s.theta = phi - k * a;
  const double st = std::sin(s.theta);
  s.sigma_theta = 4.0 * st * st;
  s.sigma = 4.0 * kPi * st * st / (k * k);
  s.sigma_phi = cf.sigma_phi();
  s.ell = 2.0 * a * cf.ell_ratio();
  s.tau = (s.ell - 2.0 * a) / k;
  s.p_trap = cf.trap();
  s.a2 = cf.intensity();
  s.r0 = cf.sin_y / (cf.cos_y * s.q);
  return s;
}

}  // namespace

const char* to_string(Observable obs) {
  switch (obs) {
    case Observable::ell:
      return "ell";
    case Observable::tau:
      return "tau";
    case Observable::trap:
      return "p_trap";
    case Observable::sigma_phi:
      return "sigma_phi";
  }
  return "?";
}

double evaluate(const PotentialWell& well, Observable obs, double k) {
  return detail::observable_value<double>(well.alpha(), well.a(), obs, k);
}

long double evaluate_extended(const PotentialWell& well, Observable obs, long double k) {
  return detail::observable_value<long double>(well.alpha(), well.a(), obs, k);
}

double intensity(const PotentialWell& well, double k) {
  require_wave_number(k, "intensity");
  return detail::ClosedForm<double>(well.alpha(), k * well.a()).intensity();
}

double resonant_cross_section(const PotentialWell& well, double k) {
  require_wave_number(k, "resonant_cross_section");
  return evaluate(well, Observable::sigma_phi, k);
}

double trapping_probability(const PotentialWell& well, double k) {
  require_wave_number(k, "trapping_probability");
  return evaluate(well, Observable::trap, k);
}

double traversal_distance(const PotentialWell& well, double k) {
  require_wave_number(k, "traversal_distance");
  return evaluate(well, Observable::ell, k);
}

double time_delay(const PotentialWell& well, double k) {
  require_wave_number(k, "time_delay");
  return evaluate(well, Observable::tau, k);
}

double phase_principal(const PotentialWell& well, double k) {
  const double x = k * well.a();
  const double y = std::sqrt(x * x + well.alpha() * well.alpha());
  return std::atan2(x * std::sin(y), y * std::cos(y));
}

double mod_pi(double phase) {
  double r = std::fmod(phase, kPi);
  if (r < 0.0) r += kPi;
  if (r >= kPi) r = 0.0;
  return r;
}

PhaseUnwrapper::PhaseUnwrapper(const PotentialWell& well)
    : well_(well),
      k_(kMinWaveNumber),
      principal_(phase_principal(well, kMinWaveNumber)),
      raw_(principal_),
      offset_(-kPi * std::round(principal_ / kPi)),
      ell_(evaluate(well, Observable::ell, kMinWaveNumber)) {}

double PhaseUnwrapper::advance_to(double k) {
  if (!(k >= k_)) {
    throw std::domain_error("PhaseUnwrapper::advance_to: wave numbers must not decrease");
  }
  while (k_ < k) {
    double h = k - k_;
    const double slope = 0.5 * std::abs(ell_);
    if (slope * h > 0.25 * kPi) h = 0.25 * kPi / slope;

    for (;;) {
      const double k_next = (h >= k - k_) ? k : k_ + h;
      const double p_next = phase_principal(well_, k_next);
      const double ell_next = evaluate(well_, Observable::ell, k_next);
      const double step = std::remainder(p_next - principal_, 2.0 * kPi);
      const double predicted = 0.25 * (k_next - k_) * (ell_ + ell_next);
      if (std::abs(step) < 0.5 * kPi && std::abs(step - predicted) < 0.25 * kPi) {
        raw_ += step;
        principal_ = p_next;
        ell_ = ell_next;
        k_ = k_next;
        break;
      }
      h *= 0.5;
      if (h < 1e-14 * std::max(k_, 1.0)) {
        throw NumericalError("phase unwrapping step underflow near k = " + std::to_string(k_));
      }
    }
  }
  return phase();
}

double phase_resonant(const PotentialWell& well, double k) {
  require_wave_number(k, "phase_resonant");
  PhaseUnwrapper unwrapper(well);
  return unwrapper.advance_to(k);
}

ScatterSample scatter_sample(const PotentialWell& well, double k) {
  require_wave_number(k, "scatter_sample");
  PhaseUnwrapper unwrapper(well);
  return make_sample(well, k, unwrapper.advance_to(k));
}

std::vector<ScatterSample> scatter_scan(const PotentialWell& well, std::span<const double> ks) {
  std::vector<ScatterSample> out;
  out.reserve(ks.size());
  PhaseUnwrapper unwrapper(well);
  double prev = 0.0;
  for (double k : ks) {
    require_wave_number(k, "scatter_scan");
    if (!out.empty() && !(k > prev)) {
      throw std::domain_error("scatter_scan: wave numbers must be strictly increasing");
    }
    out.push_back(make_sample(well, k, unwrapper.advance_to(k)));
    prev = k;
  }
  return out;
}

ReactionFunction reaction_function(const PotentialWell& well, double k) {
  require_wave_number(k, "reaction_function");
  const double a = well.a();
  const double q = std::sqrt(k * k + 2.0 * well.v0());
  const double c = std::cos(q * a);
  const double t = std::sin(q * a) / c;
  const double dq = k / q;
  const double r0 = t / q;
  const double dr0 = dq * (a / (c * c * q) - t / (q * q));
  return {r0, dr0};
}

double traversal_distance_from_reaction(const PotentialWell& well, double k) {
  const auto [r0, dr0] = reaction_function(well, k);
  const double kr = k * r0;
  return 2.0 * (r0 + k * dr0) / (1.0 + kr * kr);
}

std::complex<double> s_matrix(const PotentialWell& well, double k) {
  require_wave_number(k, "s_matrix");
  const double a = well.a();
  const double q = std::sqrt(k * k + 2.0 * well.v0());
  const double c = std::cos(q * a);
  const double s = (k / q) * std::sin(q * a);
  const std::complex<double> ratio = std::complex<double>(c, s) / std::complex<double>(c, -s);
  return -std::exp(-2.0i * (k * a)) * ratio;
}

std::complex<double> interior_amplitude(const PotentialWell& well, double k) {
  require_wave_number(k, "interior_amplitude");
  const double a = well.a();
  const double q = std::sqrt(k * k + 2.0 * well.v0());
  const double c = std::cos(q * a);
  const double s = (k / q) * std::sin(q * a);
  return -2.0i * (k / q) * std::exp(-1.0i * (k * a)) / std::complex<double>(c, -s);
}

std::complex<double> wavefunction(const PotentialWell& well, double k, double r) {
  if (!(r >= 0.0)) throw std::domain_error("wavefunction: radius must be nonnegative");
  require_wave_number(k, "wavefunction");
  if (r <= well.a()) {
    const double q = std::sqrt(k * k + 2.0 * well.v0());
    return interior_amplitude(well, k) * std::sin(q * r);
  }
  return std::exp(-1.0i * (k * r)) + s_matrix(well, k) * std::exp(1.0i * (k * r));
}

RadiusExtendedSample radius_extended(const PotentialWell& well, double k, double r) {
  const double a = well.a();
  if (!(r >= a)) throw std::domain_error("radius_extended: radius must be >= a");
  require_wave_number(k, "radius_extended");

  const double phi_a = phase_resonant(well, k);
  const double p_a = evaluate(well, Observable::trap, k);
  const double ell_a = evaluate(well, Observable::ell, k);

  RadiusExtendedSample out;
  out.r = r;
  out.phi_r = phi_a + k * (r - a);
  out.ell_r = ell_a + 2.0 * (r - a);
  out.p_r = (a * p_a + 2.0 * (r - a) - (std::sin(2.0 * out.phi_r) - std::sin(2.0 * phi_a)) / k) / r;
  return out;
}

}  // namespace swell
