#include "mwi/decoherence.hpp"

#include <cmath>

#include "mwi/constants.hpp"

namespace mwi {

namespace k = constants;

double thermal_wavelength(double temperature) {
  return k::h * k::c / (k::k_B * temperature);
}

double photon_scattering_rate(const MoleculeSpec& molecule, double temperature) {
  // Dipole-limit model: meaningful only while the thermal wavelength stays
  // large against the particle radius. Out-of-regime inputs still evaluate.
  const double lam = thermal_wavelength(temperature);
  const double R = molecule.radius;
  const double eps = molecule.dielectric_constant;
  const double pol = (eps - 1.0) / (eps + 2.0); // Clausius-Mossotti contrast
  const double factorial8 = 40320.0;
  const double r6 = R * R * R * R * R * R;
  const double kth = 2.0 * k::pi / lam;
  return factorial8 * (8.0 * k::c * r6 / 3.0) * pol * pol * k::zeta9 *
         std::pow(kth, 9.0);
}

double air_collision_rate(const EnvironmentSpec& environment) {
  return environment.cross_section * environment.pressure *
         std::sqrt(32.0 * k::pi /
                   (k::k_B * environment.temperature * environment.gas_mass));
}

double air_localization_rate(double collision_rate, int n, double period) {
  if (n < 1) throw ConfigError("air_localization_rate: separation index must be >= 1");
  const double s = n * period;
  return collision_rate / (s * s);
}

BlackbodyEmission blackbody_emission(const MoleculeSpec& molecule) {
  BlackbodyEmission out;
  const double area = 4.0 * k::pi * molecule.radius * molecule.radius;
  const double t4 = std::pow(molecule.internal_temperature, 4.0);
  out.power = molecule.emissivity * area * k::sigma_SB * t4;
  out.photon_rate = out.power / (k::k_B * molecule.internal_temperature);
  out.wavelength = thermal_wavelength(molecule.internal_temperature);
  return out;
}

double blackbody_localization_rate(const MoleculeSpec& molecule) {
  const BlackbodyEmission e = blackbody_emission(molecule);
  return (8.0 * k::pi * k::pi * k::zeta5 / k::zeta3) * e.photon_rate *
         molecule.emissivity / (e.wavelength * e.wavelength);
}

double vibrational_localization_rate(const MoleculeSpec& molecule) {
  const double kk = molecule.vibrational_wavenumber;
  return molecule.vibrational_photon_rate * kk * kk / 6.0;
}

double DecoherenceRates::air(int n) const {
  return air_localization_rate(air_constant, n, grating_period);
}

double DecoherenceRates::photon_total() const {
  return photon_scattering + blackbody + vibrational;
}

double DecoherenceRates::total(int n) const { return air(n) + photon_total(); }

DecoherenceRates total_rates(const ValidatedConfig& cfg) {
  DecoherenceRates r;
  r.photon_scattering = photon_scattering_rate(cfg->molecule, cfg->environment.temperature);
  r.blackbody = blackbody_localization_rate(cfg->molecule);
  r.vibrational = vibrational_localization_rate(cfg->molecule);
  r.air_constant = air_collision_rate(cfg->environment);
  r.grating_period = cfg->grating.period;
  r.thermal_wavelength_env = thermal_wavelength(cfg->environment.temperature);
  const BlackbodyEmission e = blackbody_emission(cfg->molecule);
  r.thermal_wavelength_emit = e.wavelength;
  r.emitted_power = e.power;
  r.emitted_photon_rate = e.photon_rate;
  r.gas_de_broglie =
      k::h / std::sqrt(2.0 * k::pi * cfg->environment.gas_mass * k::k_B *
                       cfg->environment.temperature);
  return r;
}

double initial_coherence_length(const ValidatedConfig& cfg, double velocity) {
  const CollimationSpec& c = cfg->collimation;
  if (c.has_direct()) return 1.0 / c.sigma_kx;
  // two-slit collimator: divergence half angle theta = aperture/separation,
  // taken as the 3 sigma point of the transverse momentum spread
  const double theta = c.aperture / c.separation;
  const double sigma_kx = cfg->molecule.mass * velocity * theta / (3.0 * k::hbar);
  return 1.0 / sigma_kx;
}

double coherence_length_at(double ell0, double lambda, double t) {
  return ell0 / std::sqrt(1.0 + (2.0 * lambda * t / 3.0) * ell0 * ell0);
}

std::optional<double> coherence_time(double ell0, double lambda, double period) {
  if (lambda == 0.0) return std::nullopt; // nothing localizes: unbounded
  if (ell0 <= period) return 0.0;         // already below one period
  const double ratio = period / ell0;
  return 3.0 / (2.0 * lambda * period * period) * (1.0 - ratio * ratio);
}

CoherenceState coherence_state(const ValidatedConfig& cfg, double velocity) {
  CoherenceState s;
  s.ell0 = initial_coherence_length(cfg, velocity);
  s.lambda = total_rates(cfg).total(1);
  s.period = cfg->grating.period;
  return s;
}

} // namespace mwi
