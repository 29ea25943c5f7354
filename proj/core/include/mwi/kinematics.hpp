#pragma once

#include <string>
#include <vector>

#include "mwi/config.hpp"

namespace mwi {

/// Longitudinal kinematics of one velocity class.
struct BeamKinematics {
  double velocity;       // m/s
  double wavelength;     // m, h / (M v)
  double time_of_flight; // s, distance / velocity
  double distance;       // m, grating to screen
  /// Transverse wavenumber conjugate to screen position x: 2 pi x / (lambda L).
  double kbar(double x) const;
};

/// Kinematics from a monochromatic configuration. Throws ConfigError for a
/// supersonic beam, where no single velocity exists; use the explicit
/// reference-velocity overload for that case.
BeamKinematics beam_kinematics(const ValidatedConfig& cfg);

/// Kinematics at an explicit reference velocity (any beam mode).
BeamKinematics beam_kinematics(const ValidatedConfig& cfg, double velocity);

/// One dimensionless smallness parameter with its 0.1 warn threshold.
struct RegimeEntry {
  std::string name;
  double value;
  double threshold;
  bool warn; // value >= threshold; informational, never an error
};

struct RegimeReport {
  std::vector<RegimeEntry> entries;
  double time_of_flight;  // s
  double crossing_spread; // s, packet length / velocity
  bool any_warn() const;
};

/// Checks the small parameters behind the far-field treatment: paraxiality,
/// the stationary-phase drop of the source-size phase, slit and period size
/// against the transverse coherence length, and the time-of-flight spread.
/// `ell` is the transverse coherence length at the screen, `delta_y` the
/// longitudinal packet extension.
RegimeReport regime_report(const ValidatedConfig& cfg, double ell, double delta_y);

} // namespace mwi
