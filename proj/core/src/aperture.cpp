#include "mwi/aperture.hpp"

#include <cmath>

#include "mwi/constants.hpp"
#include "mwi/errors.hpp"

namespace mwi {

namespace {

// sin(x)/x with the removable singularity handled by series.
double sinc(double x) {
  if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

}  // namespace

ApertureModel ApertureModel::rectangular(double width) {
  if (!(width > 0.0)) throw ConfigError("aperture: width must be positive");
  ApertureModel m;
  const double half = width / 2.0;
  m.value_ = [half](double xi) { return std::abs(xi) <= half ? 1.0 : 0.0; };
  m.ft_squared_ = [width, half](double k) {
    const double s = sinc(k * half);
    return width * width * s * s;
  };
  m.support_radius_ = half;
  m.zero_mode_ = width;
  return m;
}

ApertureModel ApertureModel::gaussian(double sigma) {
  if (!(sigma > 0.0)) throw ConfigError("aperture: sigma must be positive");
  ApertureModel m;
  // Amplitude (3/sqrt(pi)) exp(-xi^2 / (4 sigma^2)) integrates to 6 sigma,
  // so the zero mode matches the nominal support width.
  const double amp = 3.0 / std::sqrt(constants::pi);
  m.value_ = [amp, sigma](double xi) {
    return amp * std::exp(-xi * xi / (4.0 * sigma * sigma));
  };
  m.ft_squared_ = [sigma](double k) {
    const double z = 6.0 * sigma;
    return z * z * std::exp(-2.0 * sigma * sigma * k * k);
  };
  m.support_radius_ = 12.0 * sigma;
  m.zero_mode_ = 6.0 * sigma;
  return m;
}

ApertureModel ApertureModel::from_grating(const GratingSpec& grating) {
  if (grating.shape == ApertureShape::gaussian) {
    return gaussian(grating.aperture_sigma());
  }
  return rectangular(grating.slit_width);
}

DivergenceModel DivergenceModel::collimated() {
  DivergenceModel d;
  d.ratio_ = [](double) { return 1.0; };
  return d;
}

DivergenceModel DivergenceModel::gaussian(double sigma_k) {
  if (!(sigma_k >= 0.0)) {
    throw ConfigError("divergence: sigma_k must be nonnegative");
  }
  DivergenceModel d;
  d.ratio_ = [sigma_k](double s) {
    return std::exp(-s * s * sigma_k * sigma_k / 2.0);
  };
  return d;
}

DivergenceModel DivergenceModel::custom(std::function<double(double)> ratio) {
  if (!ratio) throw ConfigError("divergence: ratio function must be set");
  DivergenceModel d;
  d.ratio_ = std::move(ratio);
  return d;
}

}  // namespace mwi
