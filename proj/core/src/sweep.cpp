#include "mwi/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "mwi/beam.hpp"
#include "mwi/constants.hpp"
#include "mwi/errors.hpp"
#include "mwi/farfield.hpp"
#include "mwi/kinematics.hpp"

namespace mwi {

ExperimentConfig apply_sweep_value(const ExperimentConfig& base,
                                   SweepParameter parameter, double value,
                                   MassConvention convention) {
  if (!(value > 0.0) && parameter != SweepParameter::velocity_selection) {
    throw ConfigError("sweep: multiplier must be positive");
  }
  ExperimentConfig cfg = base;
  switch (parameter) {
    case SweepParameter::mass_multiple: {
      cfg.molecule.mass *= value;
      if (convention == MassConvention::fixed_temperature) {
        // fixed source temperature: v ~ 1/sqrt(M), hence lambda ~ 1/sqrt(M)
        const double vf = 1.0 / std::sqrt(value);
        if (cfg.beam.mode == BeamMode::supersonic) {
          cfg.beam.v0 *= vf;
          cfg.beam.v_hat *= vf;
          if (cfg.beam.has_window()) {
            cfg.beam.window_min *= vf;
            cfg.beam.window_max *= vf;
          }
        } else {
          cfg.beam.wavelength *= vf;
        }
      } else if (cfg.beam.mode == BeamMode::monochromatic) {
        // fixed speed: lambda ~ 1/M, velocities untouched
        cfg.beam.wavelength /= value;
      }
      break;
    }
    case SweepParameter::pressure_multiple:
      cfg.environment.pressure *= value;
      break;
    case SweepParameter::distance_multiple:
      cfg.geometry.screen_distance *= value;
      break;
    case SweepParameter::velocity_selection: {
      if (!(value >= 0.0) || value >= 2.0) {
        throw ConfigError("sweep: selection fraction must lie in [0, 2)");
      }
      if (value == 0.0) break;  // neutral: unselected beam
      if (cfg.beam.mode != BeamMode::supersonic) {
        throw ConfigError("sweep: velocity selection needs a supersonic beam");
      }
      cfg.beam.window_min = cfg.beam.v0 * (1.0 - value / 2.0);
      cfg.beam.window_max = cfg.beam.v0 * (1.0 + value / 2.0);
      break;
    }
  }
  return cfg;
}

namespace {

double neutral_value(SweepParameter parameter) {
  return parameter == SweepParameter::velocity_selection ? 0.0 : 1.0;
}

// detected curve plus the fringe metrics for one configuration
struct CurveOutcome {
  Pattern curve;
  double visibility = 0.0;
  int fringe_count = 0;
};

CurveOutcome evaluate_point(const ExperimentConfig& raw,
                            const std::vector<double>& x, double x_tilde,
                            double background) {
  const ValidatedConfig cfg = validate(raw);
  const VelocityDistribution dist = VelocityDistribution::from_config(cfg->beam);
  CurveOutcome out;
  out.curve = detected_curve(x, cfg, dist, x_tilde, background);
  const double lambda_mean =
      constants::h / (cfg->molecule.mass * dist.mean());
  const double fringe_hint =
      lambda_mean * cfg->geometry.screen_distance / cfg->grating.period;
  out.visibility = fringe_visibility(out.curve, fringe_hint);
  out.fringe_count = count_fringes_above(out.curve, 0.05);
  return out;
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec, const std::vector<double>& x,
                      int threads) {
  if (spec.values.empty()) throw ConfigError("sweep: values must be nonempty");
  if (threads < 1) threads = 1;

  SweepResult result;
  const ExperimentConfig base_cfg = apply_sweep_value(
      spec.base, spec.parameter, neutral_value(spec.parameter),
      spec.mass_convention);
  const CurveOutcome base = evaluate_point(base_cfg, x, spec.x_tilde,
                                           spec.background);
  result.base_peak = pattern_peak(base.curve);
  if (!(result.base_peak > 0.0)) {
    throw ConfigError("sweep: base curve has no positive maximum");
  }
  result.base_curve = base.curve;
  for (double& v : result.base_curve.intensity) v /= result.base_peak;
  result.base_curve.norm = Normalization::peak;

  result.points.resize(spec.values.size());
  const auto worker = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < spec.values.size(); i += stride) {
      SweepPoint& point = result.points[i];
      point.value = spec.values[i];
      try {
        const ExperimentConfig cfg = apply_sweep_value(
            spec.base, spec.parameter, spec.values[i], spec.mass_convention);
        CurveOutcome outcome =
            evaluate_point(cfg, x, spec.x_tilde, spec.background);
        for (double& v : outcome.curve.intensity) v /= result.base_peak;
        point.curve = std::move(outcome.curve);
        point.visibility = outcome.visibility;
        point.fringe_count = outcome.fringe_count;
        point.ok = true;
      } catch (const std::exception& e) {
        point.ok = false;
        point.error = e.what();
      }
    }
  };

  const std::size_t n_workers =
      std::min<std::size_t>(threads, spec.values.size());
  if (n_workers <= 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (std::size_t w = 0; w < n_workers; ++w) {
      pool.emplace_back(worker, w, n_workers);
    }
    for (std::thread& t : pool) t.join();
  }
  return result;
}

std::string to_string(SweepParameter parameter) {
  switch (parameter) {
    case SweepParameter::mass_multiple: return "mass_multiple";
    case SweepParameter::pressure_multiple: return "pressure_multiple";
    case SweepParameter::distance_multiple: return "distance_multiple";
    case SweepParameter::velocity_selection: return "velocity_selection";
  }
  return "unknown";
}

SweepParameter sweep_parameter_from_string(const std::string& name) {
  if (name == "mass_multiple") return SweepParameter::mass_multiple;
  if (name == "pressure_multiple") return SweepParameter::pressure_multiple;
  if (name == "distance_multiple") return SweepParameter::distance_multiple;
  if (name == "velocity_selection") return SweepParameter::velocity_selection;
  throw ConfigError("sweep: unknown parameter '" + name + "'");
}

}  // namespace mwi
