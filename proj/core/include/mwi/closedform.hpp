#pragma once

#include <vector>

#include "mwi/pattern.hpp"

namespace mwi {

/// Two Gaussian slits evolved in free flight after a coherence-reducing
/// interaction at the grating. Everything about this configuration has a
/// closed-form screen intensity, which makes it the exact reference the
/// numeric routes are checked against.
struct GaussianTwoSlit {
  double mass = 0.0;            ///< particle mass [kg]
  double sigma_x = 0.0;         ///< Gaussian slit spread [m]
  double separation = 0.0;      ///< slit centre distance [m]
  double ell = 0.0;             ///< coherence length at the grating [m], may be inf
  double time_of_flight = 0.0;  ///< free evolution time [s]
};

/// Spread factor shared by every term of the closed form:
///   Q = 1 + (2 M sigma^2 / (hbar T))^2 + (2 sigma / ell)^2.
/// Q -> 1 in the far-field, fully coherent limit.
double quality_Q(const GaussianTwoSlit& p);

/// Exact screen probability density at position x; integrates to 1 over
/// the whole axis for any coherence length.
double two_slit_intensity(const GaussianTwoSlit& p, double x);

/// two_slit_intensity sampled on a grid.
Pattern two_slit_pattern(const std::vector<double>& x, const GaussianTwoSlit& p);

/// Relative flattening of the interference term caused by a finite slit
/// width d when the coherence length at the grating is ell, evaluated at
/// screen wavenumber kbar = 2 pi x / (lambda L). Values grow from 0 (no
/// influence) towards 1 as d / ell increases. The removable kbar -> 0
/// singularity switches to its series value for |ell * kbar| < 1e-6.
double slit_averaging_factor(double d, double ell, double kbar);

}  // namespace mwi
