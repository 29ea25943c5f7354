#include "mwi/kinematics.hpp"

#include <cmath>

#include "mwi/constants.hpp"

namespace mwi {

namespace k = constants;

double BeamKinematics::kbar(double x) const {
  return 2.0 * k::pi * x / (wavelength * distance);
}

BeamKinematics beam_kinematics(const ValidatedConfig& cfg) {
  if (cfg->beam.mode != BeamMode::monochromatic) {
    throw ConfigError("beam_kinematics: supersonic beam has no single velocity; "
                      "pass a reference velocity explicitly");
  }
  const double v = k::h / (cfg->molecule.mass * cfg->beam.wavelength);
  return beam_kinematics(cfg, v);
}

BeamKinematics beam_kinematics(const ValidatedConfig& cfg, double velocity) {
  if (!(velocity > 0.0) || !std::isfinite(velocity)) {
    throw ConfigError("beam_kinematics: reference velocity must be positive");
  }
  BeamKinematics out;
  out.velocity = velocity;
  out.wavelength = k::h / (cfg->molecule.mass * velocity);
  out.distance = cfg->geometry.screen_distance;
  out.time_of_flight = out.distance / velocity;
  return out;
}

bool RegimeReport::any_warn() const {
  for (const auto& e : entries)
    if (e.warn) return true;
  return false;
}

RegimeReport regime_report(const ValidatedConfig& cfg, double ell, double delta_y) {
  const BeamKinematics kin = cfg->beam.mode == BeamMode::monochromatic
                                 ? beam_kinematics(cfg)
                                 : beam_kinematics(cfg, cfg->beam.v0);
  const double M = cfg->molecule.mass;
  const double T = kin.time_of_flight;
  const double L = kin.distance;
  const double d = cfg->grating.slit_width;
  const double D = cfg->grating.period;
  const double span = cfg->grating.slit_count * D; // illuminated grating extension

  const double threshold = 0.1;
  RegimeReport r;
  r.time_of_flight = T;
  r.crossing_spread = delta_y / kin.velocity;

  auto add = [&](const std::string& name, double value) {
    r.entries.push_back({name, value, threshold, value >= threshold});
  };
  // paraxial: wavelength small against the packet length
  add("wavelength_over_packet", kin.wavelength / delta_y);
  // packet short against the flight distance
  add("packet_over_distance", delta_y / L);
  // stationary phase: grating-extension phase drops against the coherence scale
  add("span_coherence_phase", M * span * ell / (k::hbar * T));
  // far-field: quadratic phase across the grating negligible
  add("span_quadratic_phase", M * span * span / (k::hbar * T));
  // slit narrow against the coherence length
  add("slit_over_coherence", d / ell);
  // neighbouring slits still mutually coherent
  add("period_over_coherence", D / ell);
  // crossing-time spread against the time of flight (equals delta_y/L)
  add("time_spread", r.crossing_spread / T);
  return r;
}

} // namespace mwi
