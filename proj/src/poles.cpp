#include "swell/poles.hpp"

#include <algorithm>
#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "swell/scattering.hpp"

namespace swell {

namespace {

using cplx = std::complex<double>;
constexpr double kRescaleThreshold = 30.0;

// sin(w)/w and (w cos w - sin w)/w^3 with their series near w = 0.
struct SincTerms {
  cplx g;
  cplx h;
};

SincTerms sinc_terms(cplx w, cplx cos_w, cplx sin_w) {
  if (std::abs(w) < 1e-3) {
    const cplx w2 = w * w;
    return {1.0 - w2 / 6.0 + w2 * w2 / 120.0, -1.0 / 3.0 + w2 / 30.0 - w2 * w2 / 840.0};
  }
  return {sin_w / w, (w * cos_w - sin_w) / (w * w * w)};
}

template <class F>
double bracket_root(F&& f, double lo, double hi, double f_lo, double f_hi) {
  std::uintmax_t iters = 200;
  const auto [left, right] = boost::math::tools::toms748_solve(
      f, lo, hi, f_lo, f_hi, boost::math::tools::eps_tolerance<double>(52), iters);
  return 0.5 * (left + right);
}

// Brackets sign changes of f over a uniform grid on [lo, hi]; the value at lo
// is included so roots between lo and the first node are not lost.
template <class F>
std::vector<double> scan_roots(F&& f, double lo, double hi, int n) {
  std::vector<double> roots;
  double x_prev = lo;
  double f_prev = f(lo);
  for (int i = 1; i <= n; ++i) {
    const double x = lo + (hi - lo) * i / n;
    const double fx = f(x);
    if (fx == 0.0) {
      if (i < n) roots.push_back(x);
    } else if (f_prev != 0.0 && std::signbit(fx) != std::signbit(f_prev)) {
      roots.push_back(bracket_root(f, x_prev, x, f_prev, fx));
    }
    x_prev = x;
    f_prev = fx;
  }
  return roots;
}

bool in_rectangle(cplx k, const PoleSearchConfig& cfg) {
  return k.real() >= 0.0 && k.real() <= cfg.re_max && k.imag() >= cfg.im_min && k.imag() < 0.0;
}

PoleK make_pole(const PotentialWell& well, cplx k, PoleKind kind) {
  PoleK p;
  p.value = k;
  p.kappa = k.real();
  p.modulus = std::abs(k);
  p.kind = kind;
  p.residual = std::abs(denominator(well, k).value);
  return p;
}

}  // namespace

const char* to_string(PoleKind kind) {
  switch (kind) {
    case PoleKind::bound:
      return "bound";
    case PoleKind::resonance:
      return "resonance";
    case PoleKind::virtual_state:
      return "virtual";
  }
  return "?";
}

void PoleSearchConfig::validate() const {
  if (!(re_max > 0.0)) throw std::domain_error("pole search: re_max must be positive");
  if (!(im_min < 0.0)) throw std::domain_error("pole search: im_min must be negative");
  if (grid_nx < 8 || grid_ny < 8) throw std::domain_error("pole search: grid sizes must be >= 8");
  if (!(newton_tol > 0.0)) throw std::domain_error("pole search: newton_tol must be positive");
  if (!(dedup_tol > 0.0)) throw std::domain_error("pole search: dedup_tol must be positive");
  if (max_iter < 1) throw std::domain_error("pole search: max_iter must be positive");
}

PoleSearchConfig PoleSearchConfig::for_well(const PotentialWell& well, double re_max) {
  PoleSearchConfig cfg;
  cfg.re_max = re_max;
  cfg.im_min = -4.0 / well.a();
  cfg.grid_nx = std::max(16, static_cast<int>(std::ceil(4.0 * re_max * well.a())));
  cfg.grid_ny = 16;
  return cfg;
}

Denominator denominator(const PotentialWell& well, cplx k) {
  const double a = well.a();
  const double alpha = well.alpha();
  const cplx z = k * a;
  const cplx w = std::sqrt(z * z + alpha * alpha);

  const double u = w.real();
  const double v = w.imag();
  Denominator out;
  cplx cos_w, sin_w;
  if (std::abs(v) > kRescaleThreshold) {
    const double decay = std::exp(-2.0 * std::abs(v));
    const double ch = 0.5 * (1.0 + decay);
    const double sh = std::copysign(0.5 * (1.0 - decay), v);
    cos_w = cplx(std::cos(u) * ch, -std::sin(u) * sh);
    sin_w = cplx(std::sin(u) * ch, std::cos(u) * sh);
    out.rescaled = true;
    out.log_scale = std::abs(v);
  } else {
    cos_w = std::cos(w);
    sin_w = std::sin(w);
  }

  const auto [g, h] = sinc_terms(w, cos_w, sin_w);
  const cplx i(0.0, 1.0);
  out.value = cos_w - i * z * g;
  // d/dz, then chain rule dz/dk = a.
  out.derivative = a * (-z * g - i * (g + z * z * h));
  return out;
}

std::optional<cplx> polish_root(const PotentialWell& well, cplx seed, const PoleSearchConfig& cfg) {
  cplx k = seed;
  for (int it = 0; it < cfg.max_iter; ++it) {
    const Denominator d = denominator(well, k);
    if (d.derivative == 0.0) return std::nullopt;
    const cplx step = d.value / d.derivative;
    k -= step;
    if (!std::isfinite(k.real()) || !std::isfinite(k.imag())) return std::nullopt;
    if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(k))) break;
  }
  // Snap imaginary-axis roots onto the axis.
  if (std::abs(k.real()) < 1e-9 * std::max(1.0, std::abs(k))) {
    const cplx snapped(0.0, k.imag());
    if (std::abs(denominator(well, snapped).value) <= std::abs(denominator(well, k).value)) {
      k = snapped;
    }
  }
  if (std::abs(denominator(well, k).value) < cfg.newton_tol) return k;
  return std::nullopt;
}

std::vector<PoleK> find_poles(const PotentialWell& well, const PoleSearchConfig& cfg) {
  cfg.validate();

  std::vector<cplx> seeds;
  seeds.reserve(static_cast<std::size_t>(cfg.grid_nx) * cfg.grid_ny);
  for (int i = 0; i < cfg.grid_nx; ++i) {
    for (int j = 0; j < cfg.grid_ny; ++j) {
      seeds.emplace_back(cfg.re_max * (i + 0.5) / cfg.grid_nx, cfg.im_min * (j + 0.5) / cfg.grid_ny);
    }
  }
  // Poles sit just below the real-axis maxima of the traversal distance.
  {
    const int n = std::max(256, static_cast<int>(std::ceil(512.0 * cfg.re_max * well.a())));
    double prev2 = 0, prev1 = 0;
    for (int i = 0; i <= n; ++i) {
      const double k = kMinWaveNumber + (cfg.re_max - kMinWaveNumber) * i / n;
      const double l = evaluate(well, Observable::ell, k);
      if (i >= 2 && prev1 > prev2 && prev1 > l) {
        const double k_peak = kMinWaveNumber + (cfg.re_max - kMinWaveNumber) * (i - 1) / n;
        seeds.emplace_back(k_peak, -0.25 / well.a());
        seeds.emplace_back(k_peak, -1.0 / well.a());
      }
      prev2 = prev1;
      prev1 = l;
    }
  }

  std::vector<PoleK> poles;
  auto add = [&](const PoleK& p) {
    for (auto& existing : poles) {
      if (std::abs(existing.value - p.value) < cfg.dedup_tol) {
        if (p.residual < existing.residual) existing = p;
        return;
      }
    }
    poles.push_back(p);
  };

  for (const cplx& seed : seeds) {
    auto root = polish_root(well, seed, cfg);
    if (!root) continue;
    cplx k = *root;
    if (k.real() < 0.0) k = -std::conj(k);
    if (!in_rectangle(k, cfg)) continue;
    add(make_pole(well, k, k.real() == 0.0 ? PoleKind::virtual_state : PoleKind::resonance));
  }
  for (double gamma : virtual_states(well, -cfg.im_min)) {
    add(make_pole(well, cplx(0.0, -gamma), PoleKind::virtual_state));
  }
  if (cfg.include_bound) {
    for (double kappa : bound_states(well)) add(make_pole(well, cplx(0.0, kappa), PoleKind::bound));
  }

  std::sort(poles.begin(), poles.end(), [](const PoleK& l, const PoleK& r) {
    if (l.value.real() != r.value.real()) return l.value.real() < r.value.real();
    return l.value.imag() < r.value.imag();
  });
  return poles;
}

std::vector<double> bound_states(const PotentialWell& well) {
  const double alpha = well.alpha();
  // Parameterize qa = alpha cos t, kappa a = alpha sin t on t in [0, pi/2];
  // D(i kappa) = cos(qa) + kappa a sin(qa)/(qa).
  auto f = [alpha](double t) {
    const double x = alpha * std::cos(t);
    const double y = alpha * std::sin(t);
    const double sinc = (x == 0.0) ? 1.0 : std::sin(x) / x;
    return std::cos(x) + y * sinc;
  };
  const int n = std::max(2048, static_cast<int>(64.0 * std::ceil(alpha)));
  std::vector<double> kappas;
  for (double t : scan_roots(f, 0.0, 0.5 * std::numbers::pi, n)) {
    if (t <= 0.0) continue;
    kappas.push_back(alpha * std::sin(t) / well.a());
  }
  std::sort(kappas.begin(), kappas.end());
  return kappas;
}

std::vector<double> virtual_states(const PotentialWell& well, double gamma_max) {
  if (!(gamma_max > 0.0)) return {};
  const double alpha = well.alpha();
  // D(-i gamma) with g = gamma a; beyond g = alpha the interior wave number is
  // imaginary and the hyperbolic form is rescaled by exp(-p).
  auto f = [alpha](double g) {
    if (g <= alpha) {
      const double x = std::sqrt(alpha * alpha - g * g);
      const double sinc = (x == 0.0) ? 1.0 : std::sin(x) / x;
      return std::cos(x) - g * sinc;
    }
    const double p = std::sqrt(g * g - alpha * alpha);
    const double decay = std::exp(-2.0 * p);
    const double sinh_over_p = (p < 1e-8) ? 1.0 : 0.5 * (1.0 - decay) / p;
    return 0.5 * (1.0 + decay) - g * sinh_over_p;
  };
  const double g_max = gamma_max * well.a();
  const int n = std::max(4096, static_cast<int>(256.0 * std::ceil(g_max)));
  std::vector<double> gammas;
  for (double g : scan_roots(f, 0.0, g_max, n)) {
    if (g <= 0.0) continue;
    gammas.push_back(g / well.a());
  }
  return gammas;
}

}  // namespace swell
