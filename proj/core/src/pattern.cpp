#include "mwi/pattern.hpp"

#include <algorithm>
#include <cmath>

#include "mwi/errors.hpp"

namespace mwi {

std::vector<double> make_grid(double half_width, std::size_t n) {
  if (n < 2) throw ConfigError("grid: need at least two points");
  if (!(half_width > 0.0)) throw ConfigError("grid: half width must be positive");
  std::vector<double> x(n);
  const double step = 2.0 * half_width / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = -half_width + step * static_cast<double>(i);
  }
  return x;
}

double pattern_peak(const Pattern& p) {
  double peak = 0.0;
  for (double v : p.intensity) peak = std::max(peak, v);
  return peak;
}

Pattern peak_normalize(Pattern p) {
  const double peak = pattern_peak(p);
  if (peak > 0.0) {
    for (double& v : p.intensity) v /= peak;
  }
  p.norm = Normalization::peak;
  return p;
}

double trapezoid_mass(const Pattern& p) {
  double mass = 0.0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    mass += 0.5 * (p.intensity[i] + p.intensity[i + 1]) * (p.x[i + 1] - p.x[i]);
  }
  return mass;
}

int count_fringes_above(const Pattern& p, double fraction) {
  const double cut = fraction * pattern_peak(p);
  int count = 0;
  std::size_t i = 1;
  while (i + 1 < p.size()) {
    if (p.intensity[i] > p.intensity[i - 1]) {
      // climb to the end of any flat top so a plateau counts once
      std::size_t j = i;
      while (j + 1 < p.size() && p.intensity[j + 1] == p.intensity[j]) ++j;
      if (j + 1 < p.size() && p.intensity[j + 1] < p.intensity[j] &&
          p.intensity[i] >= cut) {
        ++count;
      }
      i = j + 1;
    } else {
      ++i;
    }
  }
  return count;
}

}  // namespace mwi
