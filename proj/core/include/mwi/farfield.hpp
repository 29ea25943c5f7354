#pragma once

#include <functional>
#include <vector>

#include "mwi/aperture.hpp"
#include "mwi/pattern.hpp"

namespace mwi {

/// Everything the far-field screen formulas need about one experiment leg.
struct GratingParams {
  double wavelength = 0.0;  ///< de Broglie wavelength [m]
  double distance = 0.0;    ///< grating-to-screen distance [m]
  double period = 0.0;      ///< slit spacing [m]
  int slit_count = 0;       ///< number of open slits, even
  ApertureModel aperture = ApertureModel::rectangular(1.0);

  /// Fringe spacing scale: fringe m sits at m * lambda_L() / period.
  double lambda_L() const { return wavelength * distance; }
};

/// Screen intensity of an N-slit grating with transverse coherence length
/// `ell` at the grating. Pass ell = infinity for full coherence. The result
/// is a probability density: it integrates to slit_count times the aperture
/// mass when slits do not overlap.
Pattern grating_pattern(const std::vector<double>& x, const GratingParams& params,
                        double ell);

/// Same screen formula with the slit-pair weights split into their physical
/// factors: a beam-divergence ratio evaluated at each slit separation and a
/// localization rate that may depend on the separation index. The weight of
/// the pair n slits apart is
///   divergence.ratio(n D) * exp(-rate(n) * T * (n D)^2 / 3).
/// With a Gaussian divergence of spread 1/ell0 and a constant rate this
/// reproduces grating_pattern at the evolved coherence length exactly.
Pattern grating_pattern_general(const std::vector<double>& x,
                                const GratingParams& params,
                                const DivergenceModel& divergence,
                                const std::function<double(int)>& rate,
                                double time_of_flight);

/// Fully coherent limit via the closed sin-ratio form; equals
/// grating_pattern with ell = infinity but stays stable near the
/// principal maxima where both sines vanish.
Pattern classical_grating_pattern(const std::vector<double>& x,
                                  const GratingParams& params);

/// Damping of the first-order fringe contrast relative to the fully
/// coherent pattern: divergence ratio at one period times the
/// localization decay accumulated over the flight.
double fringe_damping(const DivergenceModel& divergence, double period,
                      double rate, double time_of_flight);

/// Contrast (max - min) / (max + min) between the central principal
/// maximum and the first minimum beside it. `period_hint` is the expected
/// fringe spacing lambda L / D; the pattern must sample it with at least
/// 16 points.
double fringe_visibility(const Pattern& pattern, double period_hint);

/// Direct quadrature of the two-point screen integral, used as an
/// independent check on the closed-form patterns. Slit amplitudes and the
/// Gaussian coherence kernel are integrated over both grating coordinates
/// with adaptively doubled Gauss-Legendre order until consecutive
/// refinements agree within abs_tol_frac of the pattern scale.
/// Throws ConvergenceError (with the achieved estimate) if the order cap
/// is reached first.
Pattern screen_intensity_oracle(const std::vector<double>& x,
                                const GratingParams& params, double ell,
                                double abs_tol_frac = 1e-9);

}  // namespace mwi
