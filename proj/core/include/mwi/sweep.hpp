#pragma once

#include <string>
#include <vector>

#include "mwi/config.hpp"
#include "mwi/pattern.hpp"

namespace mwi {

/// Which knob a sweep turns.
enum class SweepParameter {
  mass_multiple,      ///< molecule mass scaled, velocities follow the convention
  pressure_multiple,  ///< environment pressure scaled
  distance_multiple,  ///< grating-to-screen distance scaled
  velocity_selection, ///< beam windowed to a fractional width around v0
};

/// Kinematic convention for mass sweeps. A thermal source at fixed
/// temperature slows heavier molecules (v ~ 1/sqrt(M)); alternatively the
/// speed can be held fixed so only the wavelength shrinks.
enum class MassConvention { fixed_temperature, fixed_velocity };

struct SweepSpec {
  SweepParameter parameter = SweepParameter::pressure_multiple;
  std::vector<double> values;  ///< multipliers, or window fractions dv/v
  ExperimentConfig base;
  MassConvention mass_convention = MassConvention::fixed_temperature;
  double x_tilde = 0.0;     ///< detector window half-width; 0 = no smoothing
  double background = 0.0;  ///< additive floor before normalization
};

/// One evaluated sweep point. When a stage fails the point carries the
/// error text and no curve; the remaining points still run.
struct SweepPoint {
  double value = 0.0;
  bool ok = false;
  std::string error;
  Pattern curve;             ///< scaled by the shared base normalization
  double visibility = 0.0;   ///< central-fringe contrast
  int fringe_count = 0;      ///< interior maxima above 5% of this curve's peak
};

struct SweepResult {
  Pattern base_curve;  ///< reference curve, max exactly 1
  double base_peak = 0.0;  ///< raw central maximum used as the common scale
  std::vector<SweepPoint> points;
};

/// Rebuild a configuration with one sweep value applied. The neutral value
/// (multiplier 1, or selection fraction 0) returns the base unchanged.
ExperimentConfig apply_sweep_value(const ExperimentConfig& base,
                                   SweepParameter parameter, double value,
                                   MassConvention convention);

/// Run the detected-curve pipeline for every value, all curves normalized
/// by the base case's central maximum. Points run in parallel when
/// `threads` > 1; results are ordered like `spec.values` regardless.
SweepResult run_sweep(const SweepSpec& spec, const std::vector<double>& x,
                      int threads = 1);

std::string to_string(SweepParameter parameter);
SweepParameter sweep_parameter_from_string(const std::string& name);

}  // namespace mwi
