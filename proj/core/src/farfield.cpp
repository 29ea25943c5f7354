#include "mwi/farfield.hpp"

#include <cmath>
#include <limits>

#include "mwi/constants.hpp"
#include "mwi/errors.hpp"

namespace mwi {

namespace {

void check_params(const GratingParams& p) {
  std::vector<Violation> bad;
  if (!(p.wavelength > 0.0)) bad.push_back({"wavelength", "> 0", p.wavelength});
  if (!(p.distance > 0.0)) bad.push_back({"distance", "> 0", p.distance});
  if (!(p.period > 0.0)) bad.push_back({"period", "> 0", p.period});
  if (p.slit_count < 1) {
    bad.push_back({"slit_count", ">= 1", static_cast<double>(p.slit_count)});
  }
  if (!bad.empty()) throw ConfigError("grating params", bad);
}

// Shared evaluation: intensity from per-separation pair weights w[n],
// n = 1 .. N-1, with w[0] implicitly the diagonal term.
Pattern pattern_from_weights(const std::vector<double>& x,
                             const GratingParams& p,
                             const std::vector<double>& weight) {
  const double lamL = p.lambda_L();
  const int n_slits = p.slit_count;
  Pattern out;
  out.x = x;
  out.intensity.resize(x.size());
  out.norm = Normalization::density;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double kbar = 2.0 * constants::pi * x[i] / lamL;
    double bracket = static_cast<double>(n_slits);
    for (int n = 1; n < n_slits; ++n) {
      bracket += 2.0 * static_cast<double>(n_slits - n) * weight[n] *
                 std::cos(kbar * n * p.period);
    }
    out.intensity[i] = p.aperture.ft_squared(kbar) * bracket / lamL;
  }
  return out;
}

}  // namespace

Pattern grating_pattern(const std::vector<double>& x, const GratingParams& params,
                        double ell) {
  check_params(params);
  if (!(ell > 0.0)) throw ConfigError("grating pattern: ell must be positive");
  std::vector<double> weight(static_cast<std::size_t>(params.slit_count), 1.0);
  if (std::isfinite(ell)) {
    for (int n = 1; n < params.slit_count; ++n) {
      const double s = n * params.period;
      weight[n] = std::exp(-s * s / (2.0 * ell * ell));
    }
  }
  return pattern_from_weights(x, params, weight);
}

Pattern grating_pattern_general(const std::vector<double>& x,
                                const GratingParams& params,
                                const DivergenceModel& divergence,
                                const std::function<double(int)>& rate,
                                double time_of_flight) {
  check_params(params);
  if (!(time_of_flight >= 0.0)) {
    throw ConfigError("grating pattern: time of flight must be nonnegative");
  }
  if (!rate) throw ConfigError("grating pattern: rate function must be set");
  std::vector<double> weight(static_cast<std::size_t>(params.slit_count), 1.0);
  for (int n = 1; n < params.slit_count; ++n) {
    const double s = n * params.period;
    weight[n] = divergence.ratio(s) *
                std::exp(-rate(n) * time_of_flight * s * s / 3.0);
  }
  return pattern_from_weights(x, params, weight);
}

Pattern classical_grating_pattern(const std::vector<double>& x,
                                  const GratingParams& params) {
  check_params(params);
  const double lamL = params.lambda_L();
  const double n_slits = static_cast<double>(params.slit_count);
  Pattern out;
  out.x = x;
  out.intensity.resize(x.size());
  out.norm = Normalization::density;
  for (std::size_t i = 0; i < x.size(); ++i) {
    // Reduce the phase to the nearest principal maximum so the sine ratio
    // stays well conditioned at every grating order, not just the zeroth.
    const double s = params.period * x[i] / lamL;
    const double m = std::round(s);
    const double u = constants::pi * (s - m);
    double ratio;
    if (std::abs(std::sin(u)) < 1e-8) {
      // both sines vanish together; the ratio tends to N at each order
      const double nu = n_slits * u;
      ratio = n_slits * (1.0 - nu * nu / 6.0) / (1.0 - u * u / 6.0);
    } else {
      ratio = std::sin(n_slits * u) / std::sin(u);
    }
    const double kbar = 2.0 * constants::pi * x[i] / lamL;
    out.intensity[i] = params.aperture.ft_squared(kbar) * ratio * ratio / lamL;
  }
  return out;
}

double fringe_damping(const DivergenceModel& divergence, double period,
                      double rate, double time_of_flight) {
  if (!(period > 0.0)) throw ConfigError("fringe damping: period must be positive");
  return divergence.ratio(period) *
         std::exp(-rate * time_of_flight * period * period / 3.0);
}

double fringe_visibility(const Pattern& pattern, double period_hint) {
  if (pattern.size() < 3) {
    throw ConfigError("visibility: pattern too short");
  }
  const double step = pattern.step();
  if (!(period_hint > 0.0) || step > period_hint / 16.0) {
    throw ConfigError("visibility: need at least 16 samples per fringe period");
  }
  // locate the central principal maximum
  std::size_t peak = 0;
  double peak_val = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (std::abs(pattern.x[i]) <= period_hint / 2.0 &&
        pattern.intensity[i] > peak_val) {
      peak_val = pattern.intensity[i];
      peak = i;
    }
  }
  if (!std::isfinite(peak_val)) {
    throw ConfigError("visibility: grid does not cover the central fringe");
  }
  // walk outward to the first local minimum
  for (std::size_t i = peak + 1; i + 1 < pattern.size(); ++i) {
    if (pattern.intensity[i] <= pattern.intensity[i - 1] &&
        pattern.intensity[i] <= pattern.intensity[i + 1]) {
      const double lo = pattern.intensity[i];
      const double denom = peak_val + lo;
      if (denom <= 0.0) return 0.0;
      return (peak_val - lo) / denom;
    }
  }
  throw ConfigError("visibility: no minimum found beside the central fringe");
}

}  // namespace mwi
