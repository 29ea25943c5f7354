#pragma once

#include <limits>
#include <vector>

#include "mwi/aperture.hpp"
#include "mwi/pattern.hpp"

namespace mwi {

/// Grating self-imaging distance 2 D^2 / lambda.
double talbot_length(double period, double wavelength);

/// Flight time to the first self-image, 2 M D^2 / h. Equals
/// talbot_length / v for the matching de Broglie speed v = h / (M lambda).
double talbot_time(double period, double wavelength, double mass);

/// One self-imaging configuration.
struct TalbotSetup {
  double period = 0.0;
  double wavelength = 0.0;
  double mass = 0.0;
  double length = 0.0;  ///< talbot_length(period, wavelength)
  double time = 0.0;    ///< talbot_time(period, wavelength, mass)
  int truncation = 16;  ///< propagator image-sum cutoff J
  double ell_T = 0.0;   ///< coherence length when the image forms; inf = free
};

TalbotSetup make_talbot_setup(double period, double wavelength, double mass,
                              int truncation = 16,
                              double ell_T = std::numeric_limits<double>::infinity());

/// Intensity at the first self-image with no environment: the propagator
/// collapses to displaced copies, I(x) = |sum_{|j| <= J} phi(x + j D)|^2.
/// Errors if J is too small for the copies to cover the requested grid.
Pattern talbot_image_free(const std::vector<double>& x, const ApertureModel& ap,
                          double period, int truncation = 16);

/// Self-image with environmental damping: harmonic m of the free image is
/// attenuated by exp(-2 m^2 (D / ell_T)^2). Fourier coefficients come from
/// the aperture autocorrelation, integrated numerically; harmonics are kept
/// up to 2 J with a doubling gate (ConvergenceError if 1e-8 of the peak is
/// not reached, which happens for hard-edged apertures at very large
/// ell_T / D where the image approaches a discontinuous profile).
Pattern talbot_image_env(const std::vector<double>& x, const ApertureModel& ap,
                         double period, double ell_T, int truncation = 16);

/// Integral of the self-image over one period, with image discontinuities
/// handled exactly. Pass ell_T = inf for the free image.
double image_period_integral(const ApertureModel& ap, double period,
                             double ell_T, int truncation = 16);

/// Fraction of the self-imaged beam transmitted by a second identical
/// grating displaced by `shift`: S = int I(x) Tr(x + shift) dx over one
/// period, normalized by int I(x) dx. Periodic in shift with period D;
/// maximal at shift = 0 for the free image.
double two_grating_signal(double shift, const ApertureModel& ap, double period,
                          double ell_T, int truncation = 16);

}  // namespace mwi
