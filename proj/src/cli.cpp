#include "swell/cli.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>

#include "swell/experiments.hpp"
#include "swell/output.hpp"
#include "swell/peaks.hpp"
#include "swell/poles.hpp"

namespace swell::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<double> a, v0, alpha;
  double kmin = kMinWaveNumber;
  std::optional<double> kmax;
  int n = 8192;
  std::string format = "csv";
  std::string output;
  std::optional<double> im_min;
  double re_max = 4.0;
  int digits = 8;
  bool markers = false;
  double alpha_min = 5.0;
  double alpha_max = 60.0;
  double step = 0.05;
  double a_fixed = 8.7766;
  double factor = 5.0;
};

PotentialWell well_from(const Options& o) {
  if (!o.a) throw UsageError("--a: the well radius is required");
  if (o.v0 && o.alpha) throw UsageError("--alpha: give either --v0 or --alpha, not both");
  if (!o.v0 && !o.alpha) throw UsageError("--v0: either --v0 or --alpha is required");
  if (!(*o.a > 0.0) || !std::isfinite(*o.a)) throw UsageError("--a: must be positive and finite");
  try {
    return o.alpha ? PotentialWell::from_strength(*o.a, *o.alpha) : PotentialWell::from_depth(*o.a, *o.v0);
  } catch (const std::domain_error& e) {
    throw UsageError(std::string(o.alpha ? "--alpha" : "--v0") + ": " + e.what());
  }
}

void check_range(const Options& o, double kmax) {
  if (!(o.kmin >= kMinWaveNumber)) throw UsageError("--kmin: must be at least 1e-6");
  if (!(kmax > o.kmin)) throw UsageError("--kmax: must exceed --kmin");
}

Table scan_table(const PotentialWell& well, const Options& o) {
  if (!o.kmax) throw UsageError("--kmax: required for scan");
  check_range(o, *o.kmax);
  if (o.n < 2) throw UsageError("--n: need at least 2 samples");
  const FigureDataset data = figure_data(well, o.kmin, *o.kmax, o.n, o.markers);

  Table t;
  t.columns = {"k", "tau", "ell", "p_trap", "sigma", "sigma_theta", "sigma_phi", "theta_mod_pi", "phi_mod_pi"};
  if (o.markers) t.columns.emplace_back("marker");
  for (const auto& s : data.rows) {
    std::vector<Cell> row = {s.k,           s.tau,       s.ell,           s.p_trap,       s.sigma,
                             s.sigma_theta, s.sigma_phi, mod_pi(s.theta), mod_pi(s.phi)};
    if (o.markers) row.emplace_back(std::string());
    t.rows.push_back(std::move(row));
  }
  const double nan = std::nan("");
  for (const auto& m : data.markers) {
    std::vector<Cell> row(t.columns.size(), Cell(nan));
    row.front() = m.k;
    row.back() = m.kind;
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table poles_table(const PotentialWell& well, const Options& o) {
  PoleSearchConfig cfg = PoleSearchConfig::for_well(well, o.re_max);
  if (o.im_min) cfg.im_min = *o.im_min;
  if (!(cfg.re_max > 0.0)) throw UsageError("--re-max: must be positive");
  if (!(cfg.im_min < 0.0)) throw UsageError("--im-min: must be negative");
  Table t;
  t.columns = {"re", "im", "modulus", "kind", "residual"};
  for (const auto& p : find_poles(well, cfg)) {
    t.rows.push_back({p.value.real(), p.value.imag(), p.modulus, std::string(to_string(p.kind)), p.residual});
  }
  return t;
}

Table bound_table(const PotentialWell& well) {
  Table t;
  t.columns = {"n", "kappa", "energy"};
  long long n = 0;
  for (double kappa : bound_states(well)) t.rows.push_back({++n, kappa, -0.5 * kappa * kappa});
  return t;
}

std::vector<Cell> record_cells(const ResonanceRecord& r) {
  return {static_cast<long long>(r.n),
          r.k_star,
          r.k_tau,
          r.k_p,
          r.k_sigma,
          r.kappa,
          r.modulus,
          r.ell_ratio,
          r.phi_at_kstar,
          r.pole.real(),
          r.pole.imag(),
          std::string(to_string(r.pole_kind)),
          r.star_boundary,
          r.tau_boundary};
}

const std::vector<std::string> kRecordColumns = {
    "n",     "k_star",       "k_tau",   "k_p",     "k_sigma",   "kappa",         "modulus",
    "ell_ratio", "phi_at_kstar", "pole_re", "pole_im", "pole_kind", "star_boundary", "tau_boundary"};

Table report_table(const PotentialWell& well, const Options& o) {
  ReportOptions ro;
  ro.k_min = o.kmin;
  Table t;
  t.columns = kRecordColumns;
  if (o.kmax) {
    check_range(o, *o.kmax);
    for (const auto& r : resonance_report(well, *o.kmax, ro)) t.rows.push_back(record_cells(r));
  } else {
    check_range(o, std::numeric_limits<double>::infinity());
    auto r = first_resonance(well, ro);
    if (!r) throw NumericalError("no resonance found");
    t.rows.push_back(record_cells(*r));
  }
  return t;
}

Table table1_table() {
  Table t;
  t.columns = {"well", "a", "v0", "alpha", "qb", "k_star", "k_tau", "k_p", "k_sigma", "kappa", "modulus",
               "ell_ratio", "phi_at_kstar"};
  for (const auto& row : table1()) {
    const auto& r = row.record;
    t.rows.push_back({row.well_label, row.well.a(), row.well.v0(), row.well.alpha(), row.well.qb(), r.k_star,
                      r.k_tau, r.k_p, r.k_sigma, r.kappa, r.modulus, r.ell_ratio, r.phi_at_kstar});
  }
  return t;
}

Table sweep_table(const Options& o) {
  if (!(o.alpha_min > 0.0)) throw UsageError("--alpha-min: must be positive");
  if (!(o.alpha_max > o.alpha_min)) throw UsageError("--alpha-max: must exceed --alpha-min");
  if (!(o.step > 0.0)) throw UsageError("--step: must be positive");
  if (!(o.a_fixed > 0.0)) throw UsageError("--a: must be positive");
  const int n = static_cast<int>(std::floor((o.alpha_max - o.alpha_min) / o.step + 1e-9)) + 1;
  const double hi = o.alpha_min + (n - 1) * o.step;
  Table t;
  t.columns = {"alpha", "qb", "k_star_1", "ell_ratio_1", "boundary"};
  for (const auto& p : alpha_sweep(o.alpha_min, n > 1 ? hi : o.alpha_min + o.step, std::max(n, 2), o.a_fixed)) {
    t.rows.push_back({p.alpha, p.qb, p.k_star_1, p.ell_ratio_1, p.boundary});
  }
  return t;
}

Table scaling_table(const PotentialWell& well, const Options& o) {
  if (!(o.factor > 0.0)) throw UsageError("--factor: must be positive");
  const ScalingReport r = scaling_check(well, o.factor);
  Table t;
  t.columns = {"factor", "n_points", "phi_dev", "sigma_phi_dev", "trap_dev", "ell_dev", "tau_dev", "pass"};
  t.rows.push_back({r.factor, static_cast<long long>(r.n_points), r.phi_dev, r.sigma_phi_dev, r.trap_dev,
                    r.ell_dev, r.tau_dev, r.pass});
  return t;
}

void add_well_flags(CLI::App* sub, Options& o) {
  sub->add_option("--a", o.a, "well radius");
  sub->add_option("--v0", o.v0, "well depth |V0|");
  sub->add_option("--alpha", o.alpha, "strength alpha (needs --a)");
}

void add_output_flags(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--output", o.output, "output file (default stdout)");
  sub->add_option("--digits", o.digits, "significant digits")->check(CLI::Range(1, 17));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"s-wave square-well scattering"};
  app.require_subcommand(1);
  Options o;

  auto* scan = app.add_subcommand("scan", "sample every scattering function on a k grid");
  add_well_flags(scan, o);
  scan->add_option("--kmin", o.kmin, "lowest wave number");
  scan->add_option("--kmax", o.kmax, "highest wave number");
  scan->add_option("--n", o.n, "number of samples");
  scan->add_flag("--markers", o.markers, "append l-peak and pole marker rows");
  add_output_flags(scan, o);

  auto* poles = app.add_subcommand("poles", "zeros of the S-matrix denominator");
  add_well_flags(poles, o);
  poles->add_option("--re-max", o.re_max, "largest Re K searched");
  poles->add_option("--im-min", o.im_min, "lowest Im K searched (default -4/a)");
  add_output_flags(poles, o);

  auto* bound = app.add_subcommand("bound-states", "bound-state wave numbers");
  add_well_flags(bound, o);
  add_output_flags(bound, o);

  auto* report = app.add_subcommand("report", "resonance records");
  add_well_flags(report, o);
  report->add_option("--kmin", o.kmin, "lowest wave number");
  report->add_option("--kmax", o.kmax, "highest wave number (default: first resonance only)");
  add_output_flags(report, o);

  auto* t1 = app.add_subcommand("table1", "first resonance of the seven reference wells");
  add_output_flags(t1, o);

  auto* sweep = app.add_subcommand("sweep", "first l maximum against alpha at fixed radius");
  sweep->add_option("--a", o.a_fixed, "fixed radius");
  sweep->add_option("--alpha-min", o.alpha_min, "first alpha");
  sweep->add_option("--alpha-max", o.alpha_max, "last alpha");
  sweep->add_option("--step", o.step, "alpha step");
  add_output_flags(sweep, o);

  auto* scaling = app.add_subcommand("scaling", "compare a well with its rescaled copy");
  add_well_flags(scaling, o);
  scaling->add_option("--factor", o.factor, "radius scale factor");
  add_output_flags(scaling, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return 2;
  }

  try {
    Table table;
    if (scan->parsed()) {
      table = scan_table(well_from(o), o);
    } else if (poles->parsed()) {
      table = poles_table(well_from(o), o);
    } else if (bound->parsed()) {
      table = bound_table(well_from(o));
    } else if (report->parsed()) {
      table = report_table(well_from(o), o);
    } else if (t1->parsed()) {
      table = table1_table();
    } else if (sweep->parsed()) {
      table = sweep_table(o);
    } else {
      table = scaling_table(well_from(o), o);
    }

    const Format format = o.format == "json" ? Format::json : Format::csv;
    if (o.output.empty()) {
      write_table(out, table, format, o.digits);
    } else {
      std::ofstream file(o.output, std::ios::binary);
      if (!file) throw UsageError("--output: cannot open " + o.output);
      write_table(file, table, format, o.digits);
    }
    return 0;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace swell::cli
