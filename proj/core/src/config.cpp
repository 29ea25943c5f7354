#include "mwi/config.hpp"

#include <cmath>
#include <sstream>

namespace mwi {

std::string format_violations(const std::vector<Violation>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << "; ";
    os << v[i].field << ": " << v[i].constraint << " (got " << v[i].value << ")";
  }
  return os.str();
}

namespace {

void require(std::vector<Violation>& out, bool ok, const std::string& field,
             const std::string& constraint, double value) {
  if (!ok) out.push_back({field, constraint, value});
}

bool finite(double x) { return std::isfinite(x); }

} // namespace

ValidationReport check_config(const ExperimentConfig& cfg) {
  ValidationReport r;
  auto& v = r.violations;

  const MoleculeSpec& m = cfg.molecule;
  require(v, finite(m.mass) && m.mass > 0.0, "molecule.mass", "must be > 0", m.mass);
  require(v, finite(m.radius) && m.radius > 0.0, "molecule.radius", "must be > 0", m.radius);
  require(v, finite(m.dielectric_constant) && m.dielectric_constant > 1.0,
          "molecule.dielectric_constant", "must be > 1", m.dielectric_constant);
  require(v, finite(m.emissivity) && m.emissivity > 0.0 && m.emissivity <= 1.0,
          "molecule.emissivity", "must be in (0, 1]", m.emissivity);
  require(v, finite(m.internal_temperature) && m.internal_temperature > 0.0,
          "molecule.internal_temperature", "must be > 0", m.internal_temperature);
  require(v, finite(m.vibrational_photon_rate) && m.vibrational_photon_rate >= 0.0,
          "molecule.vibrational_photon_rate", "must be >= 0", m.vibrational_photon_rate);
  require(v, finite(m.vibrational_wavenumber) && m.vibrational_wavenumber >= 0.0,
          "molecule.vibrational_wavenumber", "must be >= 0", m.vibrational_wavenumber);

  const EnvironmentSpec& e = cfg.environment;
  require(v, finite(e.temperature) && e.temperature > 0.0, "environment.temperature",
          "must be > 0", e.temperature);
  require(v, finite(e.pressure) && e.pressure >= 0.0, "environment.pressure",
          "must be >= 0", e.pressure);
  require(v, finite(e.gas_mass) && e.gas_mass > 0.0, "environment.gas_mass",
          "must be > 0", e.gas_mass);
  require(v, finite(e.cross_section) && e.cross_section > 0.0, "environment.cross_section",
          "must be > 0", e.cross_section);

  const CollimationSpec& col = cfg.collimation;
  if (col.has_direct()) {
    require(v, finite(col.sigma_kx), "collimation.sigma_kx", "must be finite", col.sigma_kx);
  } else if (col.has_geometry()) {
    require(v, finite(col.aperture) && col.aperture > 0.0, "collimation.aperture",
            "must be > 0", col.aperture);
    require(v, finite(col.separation) && col.separation > 0.0, "collimation.separation",
            "must be > 0", col.separation);
    if (col.separation < 10.0 * col.aperture) {
      r.warnings.push_back({"collimation.separation",
                            "small-angle approximation wants separation >= 10 * aperture",
                            col.separation});
    }
  } else {
    require(v, false, "collimation",
            "needs either sigma_kx > 0 or aperture > 0 with separation > 0", 0.0);
  }

  const GratingSpec& g = cfg.grating;
  require(v, finite(g.period) && g.period > 0.0, "grating.period", "must be > 0", g.period);
  require(v, finite(g.slit_width) && g.slit_width > 0.0, "grating.slit_width",
          "must be > 0", g.slit_width);
  require(v, g.slit_width < g.period, "grating.slit_width", "must be < period", g.slit_width);
  require(v, g.slit_count >= 2 && g.slit_count % 2 == 0, "grating.slit_count",
          "must be even and >= 2", static_cast<double>(g.slit_count));
  if (g.shape == ApertureShape::gaussian) {
    require(v, finite(g.sigma_x) && g.sigma_x >= 0.0, "grating.sigma_x",
            "must be >= 0 (0 selects slit_width/6)", g.sigma_x);
  }

  const GeometrySpec& geo = cfg.geometry;
  require(v, finite(geo.screen_distance) && geo.screen_distance > 0.0,
          "geometry.screen_distance", "must be > 0", geo.screen_distance);
  require(v, finite(geo.detector_half_width) && geo.detector_half_width >= 0.0,
          "geometry.detector_half_width", "must be >= 0", geo.detector_half_width);
  require(v, finite(geo.background) && geo.background >= 0.0, "geometry.background",
          "must be >= 0", geo.background);

  const BeamSpec& b = cfg.beam;
  if (b.mode == BeamMode::monochromatic) {
    require(v, finite(b.wavelength) && b.wavelength > 0.0, "beam.wavelength",
            "must be > 0 in monochromatic mode", b.wavelength);
  } else {
    require(v, finite(b.v0) && b.v0 > 0.0, "beam.v0", "must be > 0 in supersonic mode", b.v0);
    require(v, finite(b.v_hat) && b.v_hat > 0.0, "beam.v_hat",
            "must be > 0 in supersonic mode", b.v_hat);
  }
  if (b.window_min != 0.0 || b.window_max != 0.0) {
    require(v, b.window_min >= 0.0 && b.window_max > b.window_min, "beam.velocity_window",
            "needs 0 <= min < max", b.window_min);
  }

  return r;
}

ValidatedConfig validate(const ExperimentConfig& cfg) {
  ValidationReport r = check_config(cfg);
  if (!r.ok()) {
    throw ConfigError("invalid configuration: " + format_violations(r.violations),
                      r.violations);
  }
  return ValidatedConfig(cfg);
}

} // namespace mwi
