#pragma once

#include <optional>

#include "mwi/config.hpp"

namespace mwi {

/// Wien-style thermal photon wavelength h c / (k_B Theta) [m].
double thermal_wavelength(double temperature);

/// Localization rate [m^-2 s^-1] from Rayleigh scattering of thermal photons
/// off a dielectric sphere of the molecule's radius, at environment
/// temperature `temperature`. Dipole-limit model: meaningful only while the
/// thermal wavelength stays large against the particle radius.
double photon_scattering_rate(const MoleculeSpec& molecule, double temperature);

/// Total collision rate [1/s] with the residual gas in the saturated
/// (long-distance) regime.
double air_collision_rate(const EnvironmentSpec& environment);

/// Localization rate [m^-2 s^-1] attributed to gas collisions at separation
/// n * period: collision_rate / (n period)^2. The saturated event rate is
/// spread over the separation actually resolved.
double air_localization_rate(double collision_rate, int n, double period);

/// Thermal photons emitted by the hot molecule itself.
struct BlackbodyEmission {
  double power;       // W
  double photon_rate; // 1/s
  double wavelength;  // m, thermal wavelength at the internal temperature
};
BlackbodyEmission blackbody_emission(const MoleculeSpec& molecule);

/// Localization rate [m^-2 s^-1] from blackbody emission:
/// (8 pi^2 zeta(5)/zeta(3)) * photon_rate * emissivity / wavelength^2.
double blackbody_localization_rate(const MoleculeSpec& molecule);

/// Localization rate [m^-2 s^-1] from vibrational relaxation photons:
/// photon_rate * wavenumber^2 / 6 (isotropic emission).
double vibrational_localization_rate(const MoleculeSpec& molecule);

/// The full rate budget of a configuration.
struct DecoherenceRates {
  double photon_scattering = 0.0; // m^-2 s^-1
  double blackbody = 0.0;         // m^-2 s^-1
  double vibrational = 0.0;       // m^-2 s^-1
  double air_constant = 0.0;      // 1/s, saturated collision rate
  double grating_period = 0.0;    // m, for the per-separation air rate

  // Auxiliary lengths and rates behind the table entries.
  double thermal_wavelength_env = 0.0; // m
  double thermal_wavelength_emit = 0.0;// m
  double gas_de_broglie = 0.0;         // m, thermal de Broglie wavelength of the gas
  double emitted_power = 0.0;          // W
  double emitted_photon_rate = 0.0;    // 1/s

  double air(int n = 1) const;          // m^-2 s^-1 at separation n * period
  double photon_total() const;          // scattering + blackbody + vibrational
  double total(int n = 1) const;        // air(n) + photon_total()
};

DecoherenceRates total_rates(const ValidatedConfig& cfg);

/// Transverse coherence length [m] behind the collimator: 1/sigma_kx, with
/// sigma_kx = M v theta / (3 hbar) and theta = aperture/separation for the
/// two-slit collimator, or the directly specified spread.
double initial_coherence_length(const ValidatedConfig& cfg, double velocity);

/// Coherence length after time t under localization rate `lambda`:
/// ell0 / sqrt(1 + (2 lambda t / 3) ell0^2).
double coherence_length_at(double ell0, double lambda, double t);

/// Time for the coherence length to shrink from ell0 to `period`:
/// 3/(2 lambda period^2) * (1 - (period/ell0)^2), clamped at 0 when
/// ell0 <= period. nullopt means unbounded (lambda == 0).
std::optional<double> coherence_time(double ell0, double lambda, double period);

/// Coherence bookkeeping for one configuration and velocity class.
struct CoherenceState {
  double ell0 = 0.0;   // m
  double lambda = 0.0; // m^-2 s^-1, total localization rate
  double period = 0.0; // m
  double ell(double t) const { return coherence_length_at(ell0, lambda, t); }
  std::optional<double> tau_c() const { return coherence_time(ell0, lambda, period); }
};

CoherenceState coherence_state(const ValidatedConfig& cfg, double velocity);

} // namespace mwi
