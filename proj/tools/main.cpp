// Scenario-driven command line front end. Every command loads one scenario
// file, computes, and writes CSV (plus optional SVG) into --out together
// with a manifest. All file output is deterministic: rerunning a command
// with identical inputs reproduces identical bytes.

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mwi/beam.hpp"
#include "mwi/closedform.hpp"
#include "mwi/config.hpp"
#include "mwi/constants.hpp"
#include "mwi/decoherence.hpp"
#include "mwi/errors.hpp"
#include "mwi/farfield.hpp"
#include "mwi/kinematics.hpp"
#include "mwi/nearfield.hpp"
#include "mwi/output.hpp"
#include "mwi/pattern.hpp"
#include "mwi/scenario.hpp"
#include "mwi/sweep.hpp"
#include "mwi/talbot.hpp"

namespace fs = std::filesystem;
using namespace mwi;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

const char* kPalette[] = {"#1f6fb2", "#d1495b", "#2e8b57", "#ab47bc",
                          "#ef8a17", "#5c6bc0", "#26a69a", "#8d6e63"};
constexpr int kPaletteSize = 8;

struct Ctx {
  std::string scenario_path;
  std::string scenario_text;
  ExperimentConfig raw;
  fs::path out;
  bool svg = false;
  int threads = 1;
};

// Collects output files and finishes with the manifest. SVG calls are
// dropped unless the run asked for them.
class Emitter {
 public:
  Emitter(Ctx& ctx, std::string command)
      : out_(ctx.out), svg_enabled_(ctx.svg) {
    manifest_.command = std::move(command);
    manifest_.scenario_digest = fnv1a_hex(ctx.scenario_text);
  }

  void param(const std::string& key, const std::string& value) {
    manifest_.parameters[key] = value;
  }
  // keeps literal values away from the bool overload
  void param(const std::string& key, const char* v) { param(key, std::string(v)); }
  void param(const std::string& key, double v) { param(key, format_number(v)); }
  void param(const std::string& key, int v) { param(key, std::to_string(v)); }
  void param(const std::string& key, bool v) { param(key, v ? "true" : "false"); }

  void table(const std::string& name, const Table& t) {
    write_text_file(out_ / name, format_csv(t));
    manifest_.outputs.push_back(name);
  }

  void svg(const std::string& name, const SvgPlot& plot) {
    if (!svg_enabled_) return;
    write_text_file(out_ / name, render_svg(plot));
    manifest_.outputs.push_back(name);
  }

  void finish() { write_text_file(out_ / "manifest.json", manifest_json(manifest_)); }

 private:
  fs::path out_;
  bool svg_enabled_;
  RunManifest manifest_;
};

std::vector<double> uniform_grid(double lo, double hi, int points) {
  if (points < 2) throw ConfigError("grid needs at least 2 points");
  if (!(hi > lo)) throw ConfigError("grid needs max > min");
  std::vector<double> x(points);
  for (int i = 0; i < points; ++i) {
    x[i] = lo + (hi - lo) * static_cast<double>(i) / (points - 1);
  }
  return x;
}

SvgSeries pattern_series(const Pattern& p, int color_index) {
  SvgSeries s;
  s.x = p.x;
  s.y = p.intensity;
  s.color = kPalette[color_index % kPaletteSize];
  return s;
}

SvgSeries normalized_series(const Pattern& p, int color_index) {
  return pattern_series(peak_normalize(p), color_index);
}

// Reference speed for quantities that need a single velocity class.
double reference_velocity(const ValidatedConfig& cfg) {
  if (cfg->beam.mode == BeamMode::monochromatic) {
    return beam_kinematics(cfg).velocity;
  }
  return VelocityDistribution::from_config(cfg->beam).mean();
}

GratingParams grating_params(const ValidatedConfig& cfg, const BeamKinematics& kin) {
  GratingParams p;
  p.wavelength = kin.wavelength;
  p.distance = cfg->geometry.screen_distance;
  p.period = cfg->grating.period;
  p.slit_count = cfg->grating.slit_count;
  p.aperture = ApertureModel::from_grating(cfg->grating);
  return p;
}

// Transverse slit packets on the grating pitch, forward momentum from the
// monochromatic wavelength.
GaussianBeamState nearfield_state(const ValidatedConfig& cfg, double sigma_y) {
  if (cfg->beam.mode != BeamMode::monochromatic) {
    throw ConfigError(
        "near-field propagation needs beam.mode \"monochromatic\"");
  }
  const GratingSpec& g = cfg->grating;
  std::vector<double> offsets(static_cast<std::size_t>(g.slit_count));
  for (int i = 0; i < g.slit_count; ++i) {
    offsets[static_cast<std::size_t>(i)] = (i - 0.5 * (g.slit_count - 1)) * g.period;
  }
  const double k_y = 2.0 * constants::pi / cfg->beam.wavelength;
  return make_beam_state(cfg->molecule.mass, g.aperture_sigma(), sigma_y, k_y,
                         std::move(offsets));
}

void print_kv(const std::string& key, double value) {
  std::cout << key << " " << format_number(value) << "\n";
}

// ---------------------------------------------------------------- rates

void run_rates(Ctx& ctx) {
  ValidatedConfig cfg = validate(ctx.raw);
  DecoherenceRates r = total_rates(cfg);

  Table t;
  t.columns = {"photon_scattering", "blackbody",     "vibrational",
               "photon_total",      "air_constant",  "air_n1",
               "total_n1",          "thermal_wavelength_env",
               "thermal_wavelength_emit",            "gas_de_broglie",
               "emitted_power",     "emitted_photon_rate"};
  t.rows = {{r.photon_scattering, r.blackbody, r.vibrational, r.photon_total(),
             r.air_constant, r.air(1), r.total(1), r.thermal_wavelength_env,
             r.thermal_wavelength_emit, r.gas_de_broglie, r.emitted_power,
             r.emitted_photon_rate}};

  Emitter em(ctx, "rates");
  em.table("rates.csv", t);
  em.finish();

  std::cout << "localization rates [1/(m^2 s)] and the constants behind them\n";
  print_kv("  photon_scattering      ", r.photon_scattering);
  print_kv("  blackbody              ", r.blackbody);
  print_kv("  vibrational            ", r.vibrational);
  print_kv("  air at one period      ", r.air(1));
  print_kv("  total at one period    ", r.total(1));
  print_kv("  air collision rate 1/s ", r.air_constant);
  print_kv("  emitted power W        ", r.emitted_power);
  print_kv("  emitted photons 1/s    ", r.emitted_photon_rate);
}

// ------------------------------------------------------------ coherence

struct CoherenceOpts {
  double delta_y = 1e-6;
};

void run_coherence(Ctx& ctx, const CoherenceOpts& opt) {
  ValidatedConfig cfg = validate(ctx.raw);
  const double v = reference_velocity(cfg);
  BeamKinematics kin = beam_kinematics(cfg, v);
  CoherenceState st = coherence_state(cfg, v);
  const double ell_screen = st.ell(kin.time_of_flight);
  const std::optional<double> tau = st.tau_c();

  Table t;
  t.columns = {"velocity", "wavelength", "time_of_flight",
               "ell0",     "lambda",     "ell_screen",
               "tau_c"};
  t.rows = {{kin.velocity, kin.wavelength, kin.time_of_flight, st.ell0,
             st.lambda, ell_screen, tau ? *tau : -1.0}};

  Emitter em(ctx, "coherence");
  em.param("delta_y", opt.delta_y);
  em.table("coherence.csv", t);
  em.finish();

  print_kv("velocity m/s      ", kin.velocity);
  print_kv("wavelength m      ", kin.wavelength);
  print_kv("time of flight s  ", kin.time_of_flight);
  print_kv("ell0 m            ", st.ell0);
  print_kv("ell at screen m   ", ell_screen);
  if (tau) {
    print_kv("coherence time s  ", *tau);
  } else {
    std::cout << "coherence time s   unbounded (no localization)\n";
  }

  RegimeReport rr = regime_report(cfg, ell_screen, opt.delta_y);
  std::cout << "regime checks (warn at threshold)\n";
  for (const RegimeEntry& e : rr.entries) {
    std::cout << "  " << e.name << " " << format_number(e.value) << " / "
              << format_number(e.threshold) << (e.warn ? "  WARN" : "") << "\n";
  }
}

// -------------------------------------------------------------- pattern

struct PatternOpts {
  double xmin = 0.0;
  double xmax = 0.0;
  int points = 801;
  std::string normalize = "density";
  bool oracle = false;
  bool per_pair_air = false;
};

void run_pattern(Ctx& ctx, const PatternOpts& opt) {
  ValidatedConfig cfg = validate(ctx.raw);
  if (cfg->beam.mode != BeamMode::monochromatic) {
    throw ConfigError(
        "pattern needs a single wavelength; run a supersonic beam through fig4");
  }
  BeamKinematics kin = beam_kinematics(cfg);
  GratingParams p = grating_params(cfg, kin);
  const double order = p.lambda_L() / p.period;

  double lo = opt.xmin, hi = opt.xmax;
  if (lo == 0.0 && hi == 0.0) {
    lo = -5.0 * order;
    hi = 5.0 * order;
  }
  std::vector<double> x = uniform_grid(lo, hi, opt.points);

  CoherenceState st = coherence_state(cfg, kin.velocity);
  const double ell = st.ell(kin.time_of_flight);

  Pattern model;
  if (opt.per_pair_air) {
    DecoherenceRates rates = total_rates(cfg);
    DivergenceModel div = DivergenceModel::gaussian(1.0 / st.ell0);
    model = grating_pattern_general(
        x, p, div, [&](int n) { return rates.photon_total() + rates.air(n); },
        kin.time_of_flight);
  } else {
    model = grating_pattern(x, p, ell);
  }

  Pattern oracle_curve;
  if (opt.oracle) oracle_curve = screen_intensity_oracle(x, p, ell);

  if (opt.normalize == "peak") {
    model = peak_normalize(std::move(model));
    if (opt.oracle) oracle_curve = peak_normalize(std::move(oracle_curve));
  }

  Table t;
  t.columns = {"x", "intensity"};
  if (opt.oracle) t.columns.push_back("oracle");
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::vector<double> row = {x[i], model.intensity[i]};
    if (opt.oracle) row.push_back(oracle_curve.intensity[i]);
    t.rows.push_back(std::move(row));
  }

  Emitter em(ctx, "pattern");
  em.param("xmin", lo);
  em.param("xmax", hi);
  em.param("points", opt.points);
  em.param("normalize", opt.normalize);
  em.param("oracle", opt.oracle);
  em.param("per_pair_air", opt.per_pair_air);
  em.table("pattern.csv", t);

  SvgPlot plot;
  plot.series.push_back(normalized_series(model, 0));
  if (opt.oracle) plot.series.push_back(normalized_series(oracle_curve, 1));
  em.svg("pattern.svg", plot);
  em.finish();

  print_kv("wavelength m       ", kin.wavelength);
  print_kv("fringe spacing m   ", order);
  print_kv("ell at screen m    ", ell);
  print_kv("pattern peak       ", pattern_peak(model));
}

// ----------------------------------------------------------------- fig4

struct Fig4Opts {
  double v0 = 0.0;
  double vhat = 0.0;
  double xtilde = -1.0;
  double background = -1.0;
  int points = 1001;
  double span_orders = 5.0;
  std::string data_file;
};

std::vector<std::pair<double, double>> read_xy_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open data file \"" + path + "\"");
  std::vector<std::pair<double, double>> rows;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const char* s = line.c_str();
    char* end = nullptr;
    const double a = std::strtod(s, &end);
    if (end == s) {
      // one non-numeric header line is fine, anything else is not
      if (first) {
        first = false;
        continue;
      }
      throw ConfigError("data file: unparsable line \"" + line + "\"");
    }
    while (*end == ',' || *end == ' ' || *end == '\t') ++end;
    char* end2 = nullptr;
    const double b = std::strtod(end, &end2);
    if (end2 == end) throw ConfigError("data file: line needs two columns: " + line);
    rows.emplace_back(a, b);
    first = false;
  }
  if (rows.empty()) throw ConfigError("data file is empty: " + path);
  return rows;
}

double interp_linear(const Pattern& p, double x) {
  if (x <= p.x.front()) return p.intensity.front();
  if (x >= p.x.back()) return p.intensity.back();
  const double step = p.step();
  const auto i = static_cast<std::size_t>((x - p.x.front()) / step);
  const double f = (x - p.x[i]) / step;
  return p.intensity[i] * (1.0 - f) + p.intensity[i + 1] * f;
}

void run_fig4(Ctx& ctx, const Fig4Opts& opt) {
  ValidatedConfig cfg = validate(ctx.raw);

  BeamSpec beam = cfg->beam;
  if (opt.v0 > 0.0) {
    beam.v0 = opt.v0;
    beam.mode = BeamMode::supersonic;
  }
  if (opt.vhat > 0.0) {
    beam.v_hat = opt.vhat;
    beam.mode = BeamMode::supersonic;
  }
  VelocityDistribution dist = VelocityDistribution::from_config(beam);

  const double mean_v = dist.mean();
  const double lambda_mean = constants::h / (cfg->molecule.mass * mean_v);
  const double order =
      lambda_mean * cfg->geometry.screen_distance / cfg->grating.period;
  std::vector<double> x =
      uniform_grid(-opt.span_orders * order, opt.span_orders * order, opt.points);

  const double x_tilde =
      opt.xtilde >= 0.0 ? opt.xtilde : cfg->geometry.detector_half_width;
  const double background =
      opt.background >= 0.0 ? opt.background : cfg->geometry.background;

  Pattern curve = detected_pattern(x, cfg, dist, x_tilde, background);

  Table t;
  t.columns = {"x", "model"};
  for (std::size_t i = 0; i < x.size(); ++i) {
    t.rows.push_back({x[i], curve.intensity[i]});
  }

  Emitter em(ctx, "fig4");
  em.param("v0", dist.v0());
  em.param("v_hat", dist.v_hat());
  em.param("x_tilde", x_tilde);
  em.param("background", background);
  em.param("points", opt.points);
  em.param("span_orders", opt.span_orders);
  em.table("fig4.csv", t);

  SvgPlot plot;
  plot.series.push_back(pattern_series(curve, 0));

  if (!opt.data_file.empty()) {
    auto data = read_xy_csv(opt.data_file);
    Table dt;
    dt.columns = {"x", "data", "model", "residual"};
    SvgSeries ds;
    ds.color = kPalette[1];
    for (const auto& [dx, dy] : data) {
      const double m = interp_linear(curve, dx);
      dt.rows.push_back({dx, dy, m, dy - m});
      ds.x.push_back(dx);
      ds.y.push_back(dy);
    }
    em.param("data", fs::path(opt.data_file).filename().string());
    em.table("fig4_data.csv", dt);
    plot.series.push_back(std::move(ds));
  }

  em.svg("fig4.svg", plot);
  em.finish();

  print_kv("mean velocity m/s ", mean_v);
  print_kv("fringe spacing m  ", order);
  print_kv("x_tilde m         ", x_tilde);
  print_kv("background        ", background);
}

// ---------------------------------------------------------------- sweep

struct SweepOpts {
  std::string parameter;
  std::vector<double> values;
  std::string convention = "fixed-temperature";
  double xtilde = 0.0;
  double background = 0.0;
  int points = 801;
  double span_orders = 4.0;
};

void run_sweep_cmd(Ctx& ctx, const SweepOpts& opt) {
  ValidatedConfig cfg = validate(ctx.raw);

  SweepSpec spec;
  spec.parameter = sweep_parameter_from_string(opt.parameter);
  spec.values = opt.values;
  spec.base = ctx.raw;
  spec.mass_convention = opt.convention == "fixed-velocity"
                             ? MassConvention::fixed_velocity
                             : MassConvention::fixed_temperature;
  spec.x_tilde = opt.xtilde;
  spec.background = opt.background;

  const double v_ref = reference_velocity(cfg);
  const double lambda_ref = constants::h / (cfg->molecule.mass * v_ref);
  const double order =
      lambda_ref * cfg->geometry.screen_distance / cfg->grating.period;
  std::vector<double> x =
      uniform_grid(-opt.span_orders * order, opt.span_orders * order, opt.points);

  SweepResult res = run_sweep(spec, x, ctx.threads);

  Emitter em(ctx, "sweep");
  em.param("parameter", opt.parameter);
  em.param("mass_convention", opt.convention);
  em.param("x_tilde", opt.xtilde);
  em.param("background", opt.background);
  em.param("points", opt.points);
  em.param("span_orders", opt.span_orders);
  for (std::size_t i = 0; i < opt.values.size(); ++i) {
    em.param("value_" + std::to_string(i), opt.values[i]);
  }

  Table base_t;
  base_t.columns = {"x", "intensity"};
  for (std::size_t i = 0; i < x.size(); ++i) {
    base_t.rows.push_back({x[i], res.base_curve.intensity[i]});
  }
  em.table("sweep_base.csv", base_t);

  Table sum_t;
  sum_t.columns = {"value", "ok", "visibility", "fringe_count"};

  SvgPlot plot;
  plot.series.push_back(pattern_series(res.base_curve, 0));

  for (std::size_t i = 0; i < res.points.size(); ++i) {
    const SweepPoint& pt = res.points[i];
    sum_t.rows.push_back({pt.value, pt.ok ? 1.0 : 0.0, pt.visibility,
                          static_cast<double>(pt.fringe_count)});
    if (!pt.ok) {
      std::cerr << "sweep point value=" << format_number(pt.value)
                << " failed: " << pt.error << "\n";
      continue;
    }
    Table pt_t;
    pt_t.columns = {"x", "intensity"};
    for (std::size_t j = 0; j < x.size(); ++j) {
      pt_t.rows.push_back({x[j], pt.curve.intensity[j]});
    }
    em.table("sweep_point_" + std::to_string(i) + ".csv", pt_t);
    plot.series.push_back(pattern_series(pt.curve, static_cast<int>(i) + 1));
  }
  em.table("sweep_summary.csv", sum_t);
  em.svg("sweep.svg", plot);
  em.finish();

  print_kv("base peak (pre-normalization) ", res.base_peak);
  for (const SweepPoint& pt : res.points) {
    std::cout << "value " << format_number(pt.value);
    if (pt.ok) {
      std::cout << "  visibility " << format_number(pt.visibility)
                << "  fringes " << pt.fringe_count << "\n";
    } else {
      std::cout << "  FAILED\n";
    }
  }
}

// ------------------------------------------------------------ nearfield

struct NearfieldOpts {
  std::vector<double> distances = {2e-3, 5e-3, 2e-2, 1e-1};
  double sigma_y = 1e-3;
  int points = 241;
  double half_width_fringes = 3.0;
};

void run_nearfield(Ctx& ctx, const NearfieldOpts& opt) {
  ValidatedConfig cfg = validate(ctx.raw);
  GaussianBeamState state = nearfield_state(cfg, opt.sigma_y);
  const double lambda = cfg->beam.wavelength;
  const double period = cfg->grating.period;

  Table grid_t;
  grid_t.columns = {"distance", "x", "intensity"};
  Table sum_t;
  sum_t.columns = {"distance", "mass", "visibility", "negative_fraction",
                   "slow_beam"};

  SvgPlot plot;
  int color = 0;

  for (double L : opt.distances) {
    if (!(L > 0.0)) throw ConfigError("nearfield: distances must be > 0");
    const double hint = lambda * L / period;
    std::vector<double> x =
        make_grid(opt.half_width_fringes * hint, static_cast<std::size_t>(opt.points));
    ArrivalResult ar = arrival_intensity(x, L, state);

    for (std::size_t i = 0; i < x.size(); ++i) {
      grid_t.rows.push_back({L, x[i], ar.pattern.intensity[i]});
    }
    const double mass = trapezoid_mass(ar.pattern);
    const double vis = fringe_visibility(ar.pattern, hint);
    sum_t.rows.push_back(
        {L, mass, vis, ar.negative_fraction, ar.slow_beam_warning ? 1.0 : 0.0});

    plot.series.push_back(normalized_series(ar.pattern, color++));

    std::cout << "L " << format_number(L) << "  mass " << format_number(mass)
              << "  visibility " << format_number(vis) << "  negative "
              << format_number(ar.negative_fraction)
              << (ar.slow_beam_warning ? "  SLOW-BEAM" : "") << "\n";
  }

  Emitter em(ctx, "nearfield");
  em.param("sigma_y", opt.sigma_y);
  em.param("points", opt.points);
  em.param("half_width_fringes", opt.half_width_fringes);
  for (std::size_t i = 0; i < opt.distances.size(); ++i) {
    em.param("distance_" + std::to_string(i), opt.distances[i]);
  }
  em.table("nearfield.csv", grid_t);
  em.table("nearfield_summary.csv", sum_t);
  em.svg("nearfield.svg", plot);
  em.finish();
}

// ------------------------------------------------------------ timescales

struct TimescalesOpts {
  std::vector<double> distances = {2e-3, 5e-3, 2e-2, 1e-1};
  double sigma_y = 1e-3;
};

void run_timescales(Ctx& ctx, const TimescalesOpts& opt) {
  ValidatedConfig cfg = validate(ctx.raw);
  GaussianBeamState state = nearfield_state(cfg, opt.sigma_y);

  Table t;
  t.columns = {"distance", "spreading_tau", "flight", "crossing", "ky_sigma_y"};
  const double product = state.k_y * state.sigma_y;
  for (double L : opt.distances) {
    if (!(L > 0.0)) throw ConfigError("timescales: distances must be > 0");
    TimeScales ts = time_scales(state, L);
    t.rows.push_back({L, ts.tau, ts.flight, ts.crossing, product});
    std::cout << "L " << format_number(L) << "  spreading_tau "
              << format_number(ts.tau) << "  flight " << format_number(ts.flight)
              << "  crossing " << format_number(ts.crossing) << "\n";
  }
  print_kv("k_y * sigma_y ", product);
  if (product < 10.0) {
    std::cout << "slow beam: arrival intensity may dip negative\n";
  }

  Emitter em(ctx, "timescales");
  em.param("sigma_y", opt.sigma_y);
  for (std::size_t i = 0; i < opt.distances.size(); ++i) {
    em.param("distance_" + std::to_string(i), opt.distances[i]);
  }
  em.table("timescales.csv", t);
  em.finish();
}

// --------------------------------------------------------------- talbot

struct TalbotOpts {
  double ell = 0.0;  // 0 means free (no environment)
  int truncation = 16;
  int points = 501;
  double span_periods = 1.25;
  bool shift_scan = false;
  int shift_points = 65;
};

void run_talbot(Ctx& ctx, const TalbotOpts& opt) {
  ValidatedConfig cfg = validate(ctx.raw);
  if (cfg->beam.mode != BeamMode::monochromatic) {
    throw ConfigError("talbot needs beam.mode \"monochromatic\"");
  }
  const double period = cfg->grating.period;
  const double lambda = cfg->beam.wavelength;
  const double ell_T = opt.ell > 0.0 ? opt.ell : kInf;

  TalbotSetup setup = make_talbot_setup(period, lambda, cfg->molecule.mass,
                                        opt.truncation, ell_T);
  ApertureModel ap = ApertureModel::from_grating(cfg->grating);

  std::vector<double> x = make_grid(opt.span_periods * period,
                                    static_cast<std::size_t>(opt.points));
  Pattern image = std::isfinite(setup.ell_T)
                      ? talbot_image_env(x, ap, period, setup.ell_T, opt.truncation)
                      : talbot_image_free(x, ap, period, opt.truncation);
  const double integral =
      image_period_integral(ap, period, setup.ell_T, opt.truncation);

  Table img_t;
  img_t.columns = {"x", "intensity"};
  for (std::size_t i = 0; i < x.size(); ++i) {
    img_t.rows.push_back({x[i], image.intensity[i]});
  }

  Table scales_t;
  scales_t.columns = {"talbot_length", "talbot_time", "period_integral"};
  scales_t.rows = {{setup.length, setup.time, integral}};

  Emitter em(ctx, "talbot");
  em.param("ell_T", opt.ell);
  em.param("truncation", opt.truncation);
  em.param("points", opt.points);
  em.param("span_periods", opt.span_periods);
  em.param("shift_scan", opt.shift_scan);
  em.table("talbot.csv", img_t);
  em.table("talbot_scales.csv", scales_t);

  SvgPlot plot;
  plot.series.push_back(normalized_series(image, 0));
  em.svg("talbot.svg", plot);

  if (opt.shift_scan) {
    Table scan_t;
    scan_t.columns = {"shift", "signal"};
    SvgPlot scan_plot;
    scan_plot.x_label = "shift[m]";
    scan_plot.y_label = "transmitted fraction";
    SvgSeries s;
    s.color = kPalette[1];
    for (int i = 0; i < opt.shift_points; ++i) {
      const double shift = period * static_cast<double>(i) / (opt.shift_points - 1);
      const double sig =
          two_grating_signal(shift, ap, period, setup.ell_T, opt.truncation);
      scan_t.rows.push_back({shift, sig});
      s.x.push_back(shift);
      s.y.push_back(sig);
    }
    scan_plot.series.push_back(std::move(s));
    em.table("talbot_shift.csv", scan_t);
    em.svg("talbot_shift.svg", scan_plot);
  }
  em.finish();

  print_kv("talbot length m   ", setup.length);
  print_kv("talbot time s     ", setup.time);
  print_kv("period integral m ", integral);
}

// -------------------------------------------------------- check-appendix

struct AppendixOpts {
  double ell = 1e-7;
  int points = 101;
};

void run_check_appendix(Ctx& ctx, const AppendixOpts& opt) {
  ValidatedConfig cfg = validate(ctx.raw);
  const double d = cfg->grating.slit_width;
  const double kbar_max = 2.0 * constants::pi / d;

  Table t;
  t.columns = {"kbar", "averaging_factor"};
  for (int i = 0; i < opt.points; ++i) {
    const double kbar = kbar_max * static_cast<double>(i) / (opt.points - 1);
    t.rows.push_back({kbar, slit_averaging_factor(d, opt.ell, kbar)});
  }

  const double v = reference_velocity(cfg);
  GaussianTwoSlit g;
  g.mass = cfg->molecule.mass;
  g.sigma_x = cfg->grating.aperture_sigma();
  g.separation = cfg->grating.period;
  g.ell = opt.ell;
  g.time_of_flight = cfg->geometry.screen_distance / v;

  Emitter em(ctx, "check-appendix");
  em.param("ell", opt.ell);
  em.param("points", opt.points);
  em.table("appendix.csv", t);
  em.finish();

  print_kv("averaging factor at kbar=0 ", t.rows.front()[1]);
  print_kv("averaging factor at 2pi/d  ", t.rows.back()[1]);
  print_kv("closed-form quality Q      ", quality_Q(g));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matter-wave interferometry simulator"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string out_dir = "out";
  std::string format = "csv";
  int threads = 1;
  app.add_option("--scenario", scenario_path, "scenario JSON file")->required();
  app.add_option("--out", out_dir, "output directory (default: out)");
  app.add_option("--format", format, "csv or csv,svg")
      ->check(CLI::IsMember({"csv", "csv,svg", "svg,csv", "svg"}));
  app.add_option("--threads", threads, "worker threads for sweeps")
      ->check(CLI::PositiveNumber);

  CLI::App* c_rates = app.add_subcommand("rates", "decoherence rate budget");

  CoherenceOpts co;
  CLI::App* c_coh = app.add_subcommand("coherence", "coherence lengths and times");
  c_coh->add_option("--delta-y", co.delta_y, "longitudinal packet extension [m]");

  PatternOpts po;
  CLI::App* c_pat = app.add_subcommand("pattern", "far-field screen pattern");
  c_pat->add_option("--xmin", po.xmin, "grid start [m] (default: -5 orders)");
  c_pat->add_option("--xmax", po.xmax, "grid end [m] (default: +5 orders)");
  c_pat->add_option("--points", po.points, "grid points")->check(CLI::PositiveNumber);
  c_pat->add_option("--normalize", po.normalize, "density or peak")
      ->check(CLI::IsMember({"density", "peak"}));
  c_pat->add_flag("--oracle", po.oracle, "add the direct-quadrature column");
  c_pat->add_flag("--per-pair-air", po.per_pair_air,
                  "resolve the gas rate per slit separation");

  Fig4Opts fo;
  CLI::App* c_fig4 = app.add_subcommand("fig4", "detected polychromatic curve");
  c_fig4->add_option("--v0", fo.v0, "override drift speed [m/s]");
  c_fig4->add_option("--vhat", fo.vhat, "override spread speed [m/s]");
  c_fig4->add_option("--xtilde", fo.xtilde,
                     "detector half width [m] (default: scenario)");
  c_fig4->add_option("--background", fo.background,
                     "additive background (default: scenario)");
  c_fig4->add_option("--points", fo.points, "grid points")->check(CLI::PositiveNumber);
  c_fig4->add_option("--span-orders", fo.span_orders, "half width in fringe orders");
  c_fig4->add_option("--data", fo.data_file, "measured x,value CSV to compare");

  SweepOpts so;
  CLI::App* c_sweep = app.add_subcommand("sweep", "parameter sweep of the fig4 pipeline");
  c_sweep->add_option("--parameter", so.parameter,
                      "mass_multiple, pressure_multiple, distance_multiple, "
                      "velocity_selection")
      ->required();
  c_sweep->add_option("--values", so.values, "comma-separated sweep values")
      ->required()
      ->delimiter(',');
  c_sweep->add_option("--mass-convention", so.convention,
                      "fixed-temperature or fixed-velocity")
      ->check(CLI::IsMember({"fixed-temperature", "fixed-velocity"}));
  c_sweep->add_option("--xtilde", so.xtilde, "detector half width [m]");
  c_sweep->add_option("--background", so.background, "additive background");
  c_sweep->add_option("--points", so.points, "grid points")->check(CLI::PositiveNumber);
  c_sweep->add_option("--span-orders", so.span_orders, "half width in base orders");

  NearfieldOpts no;
  CLI::App* c_near = app.add_subcommand("nearfield", "arrival patterns at short distances");
  c_near->add_option("--distances", no.distances, "comma-separated distances [m]")
      ->delimiter(',');
  c_near->add_option("--sigma-y", no.sigma_y, "longitudinal packet width [m]");
  c_near->add_option("--points", no.points, "grid points per distance")
      ->check(CLI::PositiveNumber);
  c_near->add_option("--half-width-fringes", no.half_width_fringes,
                     "grid half width in fringe spacings");

  TimescalesOpts to;
  CLI::App* c_time = app.add_subcommand("timescales", "near-field time scales");
  c_time->add_option("--distances", to.distances, "comma-separated distances [m]")
      ->delimiter(',');
  c_time->add_option("--sigma-y", to.sigma_y, "longitudinal packet width [m]");

  TalbotOpts tao;
  CLI::App* c_tal = app.add_subcommand("talbot", "self-image at the first revival");
  c_tal->add_option("--ell", tao.ell, "coherence length at the image [m], 0 = free");
  c_tal->add_option("--truncation", tao.truncation, "propagator copy cutoff")
      ->check(CLI::PositiveNumber);
  c_tal->add_option("--points", tao.points, "grid points")->check(CLI::PositiveNumber);
  c_tal->add_option("--span-periods", tao.span_periods, "grid half width in periods");
  c_tal->add_flag("--shift-scan", tao.shift_scan, "scan the second grating shift");
  c_tal->add_option("--shift-points", tao.shift_points, "points in the shift scan")
      ->check(CLI::PositiveNumber);

  AppendixOpts ao;
  CLI::App* c_app = app.add_subcommand("check-appendix", "closed-form slit factors");
  c_app->add_option("--ell", ao.ell, "coherence length at the grating [m]");
  c_app->add_option("--points", ao.points, "scan points")->check(CLI::PositiveNumber);

  for (CLI::App* sub : {c_rates, c_coh, c_pat, c_fig4, c_sweep, c_near, c_time,
                        c_tal, c_app}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Ctx ctx;
    ctx.scenario_path = scenario_path;
    {
      std::ifstream in(scenario_path, std::ios::binary);
      if (!in) throw ConfigError("scenario: cannot open \"" + scenario_path + "\"");
      ctx.scenario_text.assign(std::istreambuf_iterator<char>(in),
                               std::istreambuf_iterator<char>());
    }
    ctx.raw = parse_scenario(ctx.scenario_text);
    ctx.out = out_dir;
    ctx.svg = format.find("svg") != std::string::npos;
    ctx.threads = threads;

    if (c_rates->parsed()) run_rates(ctx);
    if (c_coh->parsed()) run_coherence(ctx, co);
    if (c_pat->parsed()) run_pattern(ctx, po);
    if (c_fig4->parsed()) run_fig4(ctx, fo);
    if (c_sweep->parsed()) run_sweep_cmd(ctx, so);
    if (c_near->parsed()) run_nearfield(ctx, no);
    if (c_time->parsed()) run_timescales(ctx, to);
    if (c_tal->parsed()) run_talbot(ctx, tao);
    if (c_app->parsed()) run_check_appendix(ctx, ao);
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const ConvergenceError& e) {
    std::cerr << "convergence error: " << e.what() << " (achieved "
              << format_number(e.achieved()) << ")\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
