#pragma once

#include <string>
#include <vector>

#include "mwi/errors.hpp"

namespace mwi {

/// Internal-state and polarizability data of the diffracted particle.
struct MoleculeSpec {
  double mass = 0.0;                    // kg
  double radius = 0.0;                  // m
  double dielectric_constant = 0.0;     // relative permittivity, > 1
  double emissivity = 0.0;              // in (0, 1]
  double internal_temperature = 0.0;    // K
  double vibrational_photon_rate = 0.0; // 1/s, photons emitted by internal modes
  double vibrational_wavenumber = 0.0;  // 1/m, typical emitted wavenumber
};

/// Residual gas and radiation environment of the interferometer.
struct EnvironmentSpec {
  double temperature = 0.0;   // K
  double pressure = 0.0;      // Pa, 0 means perfect vacuum
  double gas_mass = 0.0;      // kg per gas particle
  double cross_section = 0.0; // m^2, total collision cross section
};

/// Source collimation: either two slits of width `aperture` a distance
/// `separation` apart, or a direct transverse momentum spread sigma_kx.
/// A positive sigma_kx takes precedence over the slit geometry.
struct CollimationSpec {
  double aperture = 0.0;   // m
  double separation = 0.0; // m
  double sigma_kx = 0.0;   // 1/m
  bool has_geometry() const { return aperture > 0.0 && separation > 0.0; }
  bool has_direct() const { return sigma_kx > 0.0; }
};

enum class ApertureShape { rectangular, gaussian };

/// Diffraction grating: `slit_count` slits of width `slit_width` on a
/// `period` pitch, symmetric about the optical axis.
struct GratingSpec {
  double period = 0.0;     // m
  double slit_width = 0.0; // m
  int slit_count = 0;      // even
  ApertureShape shape = ApertureShape::rectangular;
  double sigma_x = 0.0; // m, gaussian profile width; 0 selects slit_width/6
  double aperture_sigma() const { return sigma_x > 0.0 ? sigma_x : slit_width / 6.0; }
};

/// Grating-to-screen geometry and detector response.
struct GeometrySpec {
  double screen_distance = 0.0;     // m
  double detector_half_width = 0.0; // m, moving-average half window
  double background = 0.0;          // additive constant, raw intensity units
};

enum class BeamMode { monochromatic, supersonic };

/// Longitudinal beam preparation.
struct BeamSpec {
  BeamMode mode = BeamMode::monochromatic;
  double wavelength = 0.0; // m, monochromatic mode
  double v0 = 0.0;         // m/s, supersonic drift parameter
  double v_hat = 0.0;      // m/s, supersonic width parameter
  double window_min = 0.0; // m/s, optional velocity selection
  double window_max = 0.0; // m/s
  bool has_window() const { return window_max > window_min && window_max > 0.0; }
};

struct ExperimentConfig {
  MoleculeSpec molecule;
  EnvironmentSpec environment;
  CollimationSpec collimation;
  GratingSpec grating;
  GeometrySpec geometry;
  BeamSpec beam;
};

/// Result of checking a configuration: every violated constraint, plus
/// non-fatal warnings (e.g. collimation slits not far apart enough for the
/// small-angle approximation to be comfortable).
struct ValidationReport {
  std::vector<Violation> violations;
  std::vector<Violation> warnings;
  bool ok() const { return violations.empty(); }
};

/// Collects all violations; never throws.
ValidationReport check_config(const ExperimentConfig& cfg);

/// A configuration that passed check_config. The only way to obtain one is
/// through validate(), so downstream code can assume the constraints hold.
class ValidatedConfig {
 public:
  const ExperimentConfig& operator*() const { return cfg_; }
  const ExperimentConfig* operator->() const { return &cfg_; }
  friend ValidatedConfig validate(const ExperimentConfig& cfg);

 private:
  explicit ValidatedConfig(ExperimentConfig cfg) : cfg_(std::move(cfg)) {}
  ExperimentConfig cfg_;
};

/// Throws ConfigError carrying the complete violation list.
ValidatedConfig validate(const ExperimentConfig& cfg);

/// Validation is idempotent: an already validated configuration passes through.
inline const ValidatedConfig& validate(const ValidatedConfig& cfg) { return cfg; }

} // namespace mwi
