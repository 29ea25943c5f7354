#pragma once

#include <cstddef>
#include <vector>

namespace mwi {

/// How the intensity values of a Pattern are scaled.
enum class Normalization {
  density,  ///< probability density per metre; integrates to the total mass
  peak,     ///< divided by the maximum value; dimensionless in [0, 1]
};

/// Sampled screen intensity on a uniform position grid.
struct Pattern {
  std::vector<double> x;          ///< positions [m], uniformly spaced
  std::vector<double> intensity;  ///< one value per position
  Normalization norm = Normalization::density;

  std::size_t size() const { return x.size(); }
  double step() const { return x.size() > 1 ? x[1] - x[0] : 0.0; }
};

/// Uniform grid of `n` points covering [-half_width, half_width].
std::vector<double> make_grid(double half_width, std::size_t n);

/// Largest intensity value.
double pattern_peak(const Pattern& p);

/// Rescale so the maximum becomes 1; no-op on an all-zero pattern.
Pattern peak_normalize(Pattern p);

/// Trapezoidal integral of the intensity over the grid.
double trapezoid_mass(const Pattern& p);

/// Number of interior local maxima whose height is at least
/// `fraction` of the pattern peak. Plateau points count once.
int count_fringes_above(const Pattern& p, double fraction);

}  // namespace mwi
