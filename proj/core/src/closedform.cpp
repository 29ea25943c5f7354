#include "mwi/closedform.hpp"

#include <cmath>

#include "mwi/constants.hpp"
#include "mwi/errors.hpp"

namespace mwi {

namespace k = constants;

namespace {

void check(const GaussianTwoSlit& p) {
  std::vector<Violation> bad;
  if (!(p.mass > 0.0)) bad.push_back({"mass", "> 0", p.mass});
  if (!(p.sigma_x > 0.0)) bad.push_back({"sigma_x", "> 0", p.sigma_x});
  if (!(p.separation > 0.0)) bad.push_back({"separation", "> 0", p.separation});
  if (!(p.ell > 0.0)) bad.push_back({"ell", "> 0", p.ell});
  if (!(p.time_of_flight > 0.0)) {
    bad.push_back({"time_of_flight", "> 0", p.time_of_flight});
  }
  if (!bad.empty()) throw ConfigError("two-slit closed form", bad);
}

}  // namespace

double quality_Q(const GaussianTwoSlit& p) {
  check(p);
  const double spread = 2.0 * p.mass * p.sigma_x * p.sigma_x /
                        (k::hbar * p.time_of_flight);
  const double coh = std::isfinite(p.ell) ? 2.0 * p.sigma_x / p.ell : 0.0;
  return 1.0 + spread * spread + coh * coh;
}

double two_slit_intensity(const GaussianTwoSlit& p, double x) {
  check(p);
  const double q = quality_Q(p);
  const double mt = p.mass / (k::hbar * p.time_of_flight);
  const double gamma2 = 2.0 * p.sigma_x * p.sigma_x * mt * mt;
  const double d = p.separation;
  const double inv_ell2 = std::isfinite(p.ell) ? 1.0 / (p.ell * p.ell) : 0.0;

  const double left = 0.5 * std::exp(-gamma2 * (x - d / 2.0) * (x - d / 2.0) / q);
  const double right = 0.5 * std::exp(-gamma2 * (x + d / 2.0) * (x + d / 2.0) / q);
  const double cross =
      std::exp(-gamma2 * (x * x + d * d / 4.0) / q - d * d * inv_ell2 / (2.0 * q)) *
      std::cos(mt * d * x / q);

  const double overlap = std::exp(-d * d / (8.0 * p.sigma_x * p.sigma_x));
  const double pref = 2.0 * p.mass * p.sigma_x /
                      (k::hbar * p.time_of_flight * std::sqrt(2.0 * k::pi * q) *
                       (1.0 + overlap));
  return pref * (left + right + cross);
}

Pattern two_slit_pattern(const std::vector<double>& x, const GaussianTwoSlit& p) {
  Pattern out;
  out.x = x;
  out.intensity.resize(x.size());
  out.norm = Normalization::density;
  for (std::size_t i = 0; i < x.size(); ++i) {
    out.intensity[i] = two_slit_intensity(p, x[i]);
  }
  return out;
}

double slit_averaging_factor(double d, double ell, double kbar) {
  if (!(d > 0.0)) throw ConfigError("slit averaging: width must be positive");
  if (!(ell > 0.0) || !std::isfinite(ell)) {
    throw ConfigError("slit averaging: ell must be positive and finite");
  }
  const double y = d / ell;
  // denominator cosh(d/ell) - cos(kbar d) written via half-angle squares so
  // both vanishing pieces stay accurate
  const double sh = std::sinh(y / 2.0);
  if (std::abs(ell * kbar) < 1e-6) {
    // kbar -> 0 limit of the full expression
    return std::abs(1.0 - y * y / (4.0 * sh * sh + 4.0 * std::pow(std::sin(kbar * d / 2.0), 2.0)));
  }
  const double sn = std::sin(kbar * d / 2.0);
  const double num = (1.0 + 1.0 / (ell * kbar * ell * kbar)) * sn * sn;
  return std::abs(1.0 - num / (sh * sh + sn * sn));
}

}  // namespace mwi
