#include "mwi/beam.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mwi/constants.hpp"
#include "mwi/decoherence.hpp"
#include "mwi/errors.hpp"
#include "mwi/farfield.hpp"
#include "mwi/kinematics.hpp"
#include "mwi/quadrature.hpp"

namespace mwi {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

VelocityDistribution::VelocityDistribution(double v0, double v_hat)
    : VelocityDistribution(v0, v_hat, 0.0, kInf) {}

VelocityDistribution::VelocityDistribution(double v0, double v_hat,
                                           double window_min, double window_max)
    : v0_(v0), v_hat_(v_hat) {
  std::vector<Violation> bad;
  if (!(v0 > 0.0)) bad.push_back({"v0", "> 0", v0});
  if (!(v_hat > 0.0)) bad.push_back({"v_hat", "> 0", v_hat});
  if (!(window_min >= 0.0)) bad.push_back({"window_min", ">= 0", window_min});
  if (!(window_max > window_min)) bad.push_back({"window_max", "> window_min", window_max});
  if (!bad.empty()) throw ConfigError("velocity distribution", bad);

  // effective support: the shape is negligible beyond 10 v_hat from v0
  lo_ = std::max({0.0, window_min, v0 - 10.0 * v_hat});
  hi_ = std::min(window_max, v0 + 10.0 * v_hat);
  if (!(hi_ > lo_)) {
    throw ConfigError("velocity distribution: window lies outside the support");
  }
  norm_ = integrate_gl([this](double v) { return shape(v); }, lo_, hi_, 128);
  if (!(norm_ > 0.0) || !std::isfinite(norm_)) {
    throw ConfigError("velocity distribution: normalization failed");
  }
  mean_ = integrate_gl([this](double v) { return v * shape(v); }, lo_, hi_, 128) /
          norm_;
}

VelocityDistribution VelocityDistribution::from_config(const BeamSpec& beam) {
  if (beam.mode != BeamMode::supersonic) {
    throw ConfigError("velocity distribution: beam mode is not supersonic");
  }
  if (beam.has_window()) {
    return VelocityDistribution(beam.v0, beam.v_hat, beam.window_min,
                                beam.window_max);
  }
  return VelocityDistribution(beam.v0, beam.v_hat);
}

double VelocityDistribution::shape(double v) const {
  const double d = (v - v0_) / v_hat_;
  return v * v * v * std::exp(-d * d);
}

double VelocityDistribution::pdf(double v) const {
  if (v <= 0.0 || v < lo_ || v > hi_) return 0.0;
  return shape(v) / norm_;
}

double VelocityDistribution::mode() const {
  // stationary point of 3 ln v - (v-v0)^2/v_hat^2
  const double peak =
      (v0_ + std::sqrt(v0_ * v0_ + 6.0 * v_hat_ * v_hat_)) / 2.0;
  return std::clamp(peak, lo_, hi_);
}

double VelocityDistribution::mean() const { return mean_; }

namespace {

// Weighted sum of monochromatic patterns at fixed node count.
Pattern velocity_average(const std::vector<double>& x, const ValidatedConfig& cfg,
                         const VelocityDistribution& dist, double lambda_rate,
                         double a, double b, int points) {
  const GaussLegendre rule = gauss_legendre_on(points, a, b);
  Pattern out;
  out.x = x;
  out.intensity.assign(x.size(), 0.0);
  out.norm = Normalization::density;

  double total_weight = 0.0;
  for (int i = 0; i < points; ++i) total_weight += rule.weight[i] * dist.pdf(rule.node[i]);
  if (!(total_weight > 0.0)) {
    throw ConfigError("polychromatic pattern: distribution mass vanishes on the node range");
  }

  GratingParams params;
  params.distance = cfg->geometry.screen_distance;
  params.period = cfg->grating.period;
  params.slit_count = cfg->grating.slit_count;
  params.aperture = ApertureModel::from_grating(cfg->grating);

  for (int i = 0; i < points; ++i) {
    const double v = rule.node[i];
    const double w = rule.weight[i] * dist.pdf(v) / total_weight;
    if (w == 0.0) continue;
    const BeamKinematics kin = beam_kinematics(cfg, v);
    params.wavelength = kin.wavelength;
    const double ell0 = initial_coherence_length(cfg, v);
    const double ell = coherence_length_at(ell0, lambda_rate, kin.time_of_flight);
    const Pattern mono = grating_pattern(x, params, ell);
    for (std::size_t j = 0; j < x.size(); ++j) {
      out.intensity[j] += w * mono.intensity[j];
    }
  }
  return out;
}

}  // namespace

Pattern polychromatic_pattern(const std::vector<double>& x,
                              const ValidatedConfig& cfg,
                              const VelocityDistribution& dist,
                              int quad_points) {
  if (quad_points < 2) {
    throw ConfigError("polychromatic pattern: need at least 2 quadrature points");
  }
  const double a = std::max({0.0, dist.v0() - 4.0 * dist.v_hat(), dist.window_min()});
  const double b = std::min(dist.v0() + 4.0 * dist.v_hat(), dist.window_max());
  if (!(b > a)) {
    throw ConfigError("polychromatic pattern: empty velocity range");
  }
  const double lambda_rate = total_rates(cfg).total(1);

  // double the node count until two consecutive levels agree; wide screen
  // grids make the per-velocity phase span large and can need well over the
  // starting count
  const int cap = std::max(quad_points, 2048);
  Pattern coarse = velocity_average(x, cfg, dist, lambda_rate, a, b, quad_points);
  double achieved = std::numeric_limits<double>::infinity();
  for (int n = 2 * quad_points; n <= cap; n *= 2) {
    Pattern fine = velocity_average(x, cfg, dist, lambda_rate, a, b, n);
    const double peak = pattern_peak(fine);
    double diff = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      diff = std::max(diff, std::abs(fine.intensity[j] - coarse.intensity[j]));
    }
    achieved = (peak > 0.0) ? diff / peak : diff;
    if (achieved <= 1e-6) return fine;
    coarse = std::move(fine);
  }
  throw ConvergenceError(
      "polychromatic pattern: velocity quadrature did not settle", achieved);
}

namespace {

// integral of the piecewise-linear interpolant from the grid start to p
double interp_prefix(const Pattern& pat, const std::vector<double>& prefix,
                     double p) {
  const std::size_t n = pat.size();
  const double h = pat.step();
  if (p <= pat.x.front()) return 0.0;
  if (p >= pat.x.back()) return prefix[n - 1];
  const std::size_t j = std::min(
      n - 2, static_cast<std::size_t>((p - pat.x.front()) / h));
  const double t = p - pat.x[j];
  const double slope = (pat.intensity[j + 1] - pat.intensity[j]) / h;
  const double value_mid = pat.intensity[j] + 0.5 * slope * t;
  return prefix[j] + t * value_mid;
}

}  // namespace

Pattern detector_average(const Pattern& input, double x_tilde) {
  if (!(x_tilde >= 0.0)) {
    throw ConfigError("detector smoothing: window must be nonnegative");
  }
  if (input.size() < 2) return input;
  const double h = input.step();
  if (x_tilde < h / 2.0) return input;  // window unresolvable: identity
  if (h > x_tilde / 4.0) {
    throw ConfigError("detector smoothing: grid too coarse for the window");
  }
  const std::size_t n = input.size();
  std::vector<double> prefix(n, 0.0);
  for (std::size_t j = 1; j < n; ++j) {
    prefix[j] = prefix[j - 1] +
                0.5 * (input.intensity[j] + input.intensity[j - 1]) * h;
  }
  Pattern out = input;
  for (std::size_t j = 0; j < n; ++j) {
    const double a = std::max(input.x[j] - x_tilde, input.x.front());
    const double b = std::min(input.x[j] + x_tilde, input.x.back());
    out.intensity[j] =
        (interp_prefix(input, prefix, b) - interp_prefix(input, prefix, a)) /
        (b - a);
  }
  return out;
}

Pattern detected_curve(const std::vector<double>& x, const ValidatedConfig& cfg,
                       const VelocityDistribution& dist, double x_tilde,
                       double background) {
  if (!(background >= 0.0)) {
    throw ConfigError("detected curve: background must be nonnegative");
  }
  Pattern p = polychromatic_pattern(x, cfg, dist);
  p = detector_average(p, x_tilde);
  for (double& v : p.intensity) v += background;
  return p;
}

Pattern detected_pattern(const std::vector<double>& x, const ValidatedConfig& cfg,
                         const VelocityDistribution& dist, double x_tilde,
                         double background) {
  return peak_normalize(detected_curve(x, cfg, dist, x_tilde, background));
}

}  // namespace mwi
