#pragma once

// Physical and mathematical constants, SI units throughout.
// Energies cross to eV only at the I/O boundary.

namespace mwi::constants {

/// pi to double precision.
inline constexpr double pi = 3.141'592'653'589'793;

/// Planck constant [J s], exact by SI definition.
inline constexpr double h = 6.626'070'15e-34;

/// Reduced Planck constant [J s].
inline constexpr double hbar = h / (2.0 * pi);

/// Speed of light in vacuum [m/s], exact.
inline constexpr double c = 299'792'458.0;

/// Boltzmann constant [J/K], exact.
inline constexpr double k_B = 1.380'649e-23;

/// Electron volt [J], exact.
inline constexpr double eV = 1.602'176'634e-19;

/// Stefan-Boltzmann constant [W m^-2 K^-4], 2 pi^5 k_B^4 / (15 h^3 c^2).
inline constexpr double sigma_SB = 5.670'374'419e-8;

/// Riemann zeta(3), enters the thermal-photon number prefactor.
inline constexpr double zeta3 = 1.202'056'903'159'594;

/// Riemann zeta(5), enters the thermal-photon k^2 moment.
inline constexpr double zeta5 = 1.036'927'755'143'370;

/// Riemann zeta(9), enters the Rayleigh scattering k^8 moment.
inline constexpr double zeta9 = 1.002'008'392'826'082;

} // namespace mwi::constants
