#pragma once

#include <vector>

#include "mwi/config.hpp"
#include "mwi/pattern.hpp"

namespace mwi {

/// Speed distribution of a seeded supersonic source, f(v) proportional to
/// v^3 exp[-(v-v0)^2/v_hat^2], optionally truncated to a selection window
/// and renormalized.
class VelocityDistribution {
 public:
  /// Unselected beam.
  VelocityDistribution(double v0, double v_hat);

  /// Velocity-selected beam; the window is intersected with v > 0.
  VelocityDistribution(double v0, double v_hat, double window_min,
                       double window_max);

  /// Build from a scenario's beam section (supersonic mode only).
  static VelocityDistribution from_config(const BeamSpec& beam);

  /// Normalized probability density [s/m]; zero outside the window.
  double pdf(double v) const;

  /// Most probable speed, from the stationarity condition 3/v = 2(v-v0)/v_hat^2.
  double mode() const;

  /// Mean speed over the (possibly windowed) distribution.
  double mean() const;

  double v0() const { return v0_; }
  double v_hat() const { return v_hat_; }
  double window_min() const { return lo_; }
  double window_max() const { return hi_; }

 private:
  double shape(double v) const;

  double v0_ = 0.0;
  double v_hat_ = 0.0;
  double lo_ = 0.0;  ///< effective support lower edge
  double hi_ = 0.0;  ///< effective support upper edge
  double norm_ = 1.0;
  double mean_ = 0.0;
};

/// Wavelength-averaged far-field pattern: the monochromatic pattern is
/// reevaluated per velocity node (wavelength, flight time, and coherence
/// length all follow the node's speed) and combined with the distribution's
/// weights. The node count doubles until two consecutive levels agree
/// within 1e-6 of the peak; ConvergenceError if the cap (2048 nodes) is
/// reached first.
Pattern polychromatic_pattern(const std::vector<double>& x,
                              const ValidatedConfig& cfg,
                              const VelocityDistribution& dist,
                              int quad_points = 64);

/// Moving average over a flat detector window of full width 2*x_tilde.
/// Windows reaching past the grid are clamped to the sampled range and
/// renormalized. A window narrower than half a grid step returns the
/// input unchanged; otherwise the grid must resolve the window
/// (step <= x_tilde / 4).
Pattern detector_average(const Pattern& input, double x_tilde);

/// Detected-curve pipeline: velocity averaging, detector smoothing,
/// constant background, in that order. Density normalization, no final
/// rescaling; feed through peak_normalize (or detected_pattern) for the
/// published shape.
Pattern detected_curve(const std::vector<double>& x, const ValidatedConfig& cfg,
                       const VelocityDistribution& dist, double x_tilde,
                       double background);

/// detected_curve scaled so the central maximum is exactly 1.
Pattern detected_pattern(const std::vector<double>& x, const ValidatedConfig& cfg,
                         const VelocityDistribution& dist, double x_tilde,
                         double background);

}  // namespace mwi
