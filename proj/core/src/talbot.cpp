#include "mwi/talbot.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>

#include "mwi/constants.hpp"
#include "mwi/errors.hpp"
#include "mwi/quadrature.hpp"

namespace mwi {

namespace k = constants;

double talbot_length(double period, double wavelength) {
  if (!(period > 0.0) || !(wavelength > 0.0)) {
    throw ConfigError("talbot length: period and wavelength must be positive");
  }
  return 2.0 * period * period / wavelength;
}

double talbot_time(double period, double wavelength, double mass) {
  if (!(mass > 0.0)) throw ConfigError("talbot time: mass must be positive");
  if (!(period > 0.0) || !(wavelength > 0.0)) {
    throw ConfigError("talbot time: period and wavelength must be positive");
  }
  return 2.0 * mass * period * period / k::h;
}

TalbotSetup make_talbot_setup(double period, double wavelength, double mass,
                              int truncation, double ell_T) {
  if (truncation < 1) throw ConfigError("talbot setup: truncation must be >= 1");
  if (!(ell_T > 0.0)) throw ConfigError("talbot setup: ell_T must be positive");
  TalbotSetup s;
  s.period = period;
  s.wavelength = wavelength;
  s.mass = mass;
  s.length = talbot_length(period, wavelength);
  s.time = talbot_time(period, wavelength, mass);
  s.truncation = truncation;
  s.ell_T = ell_T;
  return s;
}

Pattern talbot_image_free(const std::vector<double>& x, const ApertureModel& ap,
                          double period, int truncation) {
  if (!(period > 0.0)) throw ConfigError("talbot image: period must be positive");
  if (truncation < 1) throw ConfigError("talbot image: truncation must be >= 1");
  double reach = 0.0;
  for (double xi : x) reach = std::max(reach, std::abs(xi));
  if (reach + ap.support_radius() > truncation * period) {
    throw ConfigError(
        "talbot image: truncation insufficient to cover the grid support");
  }
  Pattern out;
  out.x = x;
  out.intensity.resize(x.size());
  out.norm = Normalization::density;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double amp = 0.0;
    for (int j = -truncation; j <= truncation; ++j) {
      amp += ap.value(x[i] + j * period);
    }
    out.intensity[i] = amp * amp;
  }
  return out;
}

namespace {

using cdouble = std::complex<double>;

// Fourier coefficients of the periodically replicated intensity:
//   A_m = D * sum_n int phi(eta + n D) phi(eta) exp(-2 pi i m eta / D) deta.
// Real for the even apertures used here; kept complex for safety.
std::vector<cdouble> image_coefficients(const ApertureModel& ap, double period,
                                        int m_max) {
  const double r = ap.support_radius();
  const int n_max = static_cast<int>(std::ceil(2.0 * r / period));
  std::vector<cdouble> a(static_cast<std::size_t>(m_max) + 1, cdouble(0.0, 0.0));
  for (int m = 0; m <= m_max; ++m) {
    const double omega = 2.0 * k::pi * m / period;
    cdouble total(0.0, 0.0);
    for (int n = -n_max; n <= n_max; ++n) {
      const double lo = std::max(-r, -r - n * period);
      const double hi = std::min(r, r - n * period);
      if (!(hi > lo)) continue;
      const auto re = [&](double eta) {
        return ap.value(eta + n * period) * ap.value(eta) * std::cos(omega * eta);
      };
      const auto im = [&](double eta) {
        return -ap.value(eta + n * period) * ap.value(eta) * std::sin(omega * eta);
      };
      // keep at most ~4 oscillation periods per 64-point panel so every
      // harmonic is resolved, not just the low ones
      const double cycles = (hi - lo) * omega / (2.0 * k::pi);
      const int panels = 1 + static_cast<int>(cycles / 4.0);
      const double width = (hi - lo) / panels;
      for (int p = 0; p < panels; ++p) {
        const double pa = lo + p * width;
        const double pb = (p + 1 == panels) ? hi : pa + width;
        total += cdouble(integrate_gl(re, pa, pb, 64),
                         integrate_gl(im, pa, pb, 64));
      }
    }
    a[m] = period * total;
  }
  return a;
}

double env_intensity_at(double x, double period, double ell_T,
                        const std::vector<cdouble>& a) {
  const double damp_base = std::isfinite(ell_T)
                               ? 2.0 * (period / ell_T) * (period / ell_T)
                               : 0.0;
  double value = a[0].real();
  for (std::size_t m = 1; m < a.size(); ++m) {
    const double w = std::exp(-damp_base * static_cast<double>(m * m));
    const cdouble phase =
        std::exp(cdouble(0.0, 2.0 * k::pi * static_cast<double>(m) * x / period));
    value += 2.0 * w * std::real(a[m] * phase);
  }
  return value / (period * period);
}

std::vector<cdouble> gated_coefficients(const ApertureModel& ap, double period,
                                        double ell_T, int truncation) {
  // doubling gate on the harmonic cutoff: 2J -> 4J must be quiet
  const auto coarse = image_coefficients(ap, period, 2 * truncation);
  const auto fine = image_coefficients(ap, period, 4 * truncation);
  double peak = 0.0;
  double diff = 0.0;
  const int probes = 257;
  for (int i = 0; i < probes; ++i) {
    const double x = period * (static_cast<double>(i) / (probes - 1) - 0.5);
    const double c = env_intensity_at(x, period, ell_T, coarse);
    const double f = env_intensity_at(x, period, ell_T, fine);
    peak = std::max(peak, std::abs(f));
    diff = std::max(diff, std::abs(f - c));
  }
  if (peak > 0.0 && diff > 1e-8 * peak) {
    throw ConvergenceError(
        "talbot image: harmonic truncation did not settle (hard-edged "
        "aperture at large ell_T / period)",
        diff / peak);
  }
  return fine;
}

}  // namespace

Pattern talbot_image_env(const std::vector<double>& x, const ApertureModel& ap,
                         double period, double ell_T, int truncation) {
  if (!(period > 0.0)) throw ConfigError("talbot image: period must be positive");
  if (!(ell_T > 0.0)) throw ConfigError("talbot image: ell_T must be positive");
  if (truncation < 1) throw ConfigError("talbot image: truncation must be >= 1");
  const auto a = gated_coefficients(ap, period, ell_T, truncation);
  Pattern out;
  out.x = x;
  out.intensity.resize(x.size());
  out.norm = Normalization::density;
  for (std::size_t i = 0; i < x.size(); ++i) {
    out.intensity[i] = env_intensity_at(x[i], period, ell_T, a);
  }
  return out;
}

namespace {

double wrap_to_period(double x, double period) {
  double w = std::fmod(x + period / 2.0, period);
  if (w < 0.0) w += period;
  return w - period / 2.0;
}

// breakpoints of the integrands over one period [-D/2, D/2]
std::vector<double> integration_breakpoints(const ApertureModel& ap,
                                            double period, double shift) {
  std::set<double> pts{-period / 2.0, period / 2.0};
  const double r = std::min(ap.support_radius(), period / 2.0);
  auto add = [&](double p) {
    const double w = wrap_to_period(p, period);
    pts.insert(std::clamp(w, -period / 2.0, period / 2.0));
  };
  // image support edges and the shifted transmission edges / wrap seam
  add(r);
  add(-r);
  add(r - shift);
  add(-r - shift);
  add(period / 2.0 - shift);
  return {pts.begin(), pts.end()};
}

}  // namespace

double image_period_integral(const ApertureModel& ap, double period,
                             double ell_T, int truncation) {
  if (!(period > 0.0)) throw ConfigError("talbot image: period must be positive");
  const bool free_case = !std::isfinite(ell_T);
  std::vector<cdouble> a;
  if (!free_case) a = gated_coefficients(ap, period, ell_T, truncation);
  const auto image = [&](double x) {
    if (free_case) {
      double amp = 0.0;
      for (int j = -truncation; j <= truncation; ++j) {
        amp += ap.value(x + j * period);
      }
      return amp * amp;
    }
    return env_intensity_at(x, period, ell_T, a);
  };
  const auto pts = integration_breakpoints(ap, period, 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (!(pts[i + 1] > pts[i])) continue;
    total += integrate_gl(image, pts[i], pts[i + 1], 256);
  }
  return total;
}

double two_grating_signal(double shift, const ApertureModel& ap, double period,
                          double ell_T, int truncation) {
  if (!(period > 0.0)) throw ConfigError("two-grating signal: period must be positive");
  const bool free_case = !std::isfinite(ell_T);
  std::vector<cdouble> a;
  if (!free_case) a = gated_coefficients(ap, period, ell_T, truncation);
  const double open_peak = ap.value(0.0) * ap.value(0.0);
  const auto image = [&](double x) {
    if (free_case) {
      double amp = 0.0;
      for (int j = -truncation; j <= truncation; ++j) {
        amp += ap.value(x + j * period);
      }
      return amp * amp;
    }
    return env_intensity_at(x, period, ell_T, a);
  };
  const auto transmission = [&](double x) {
    const double w = wrap_to_period(x, period);
    const double v = ap.value(w);
    return v * v / open_peak;
  };

  const auto pts = integration_breakpoints(ap, period, shift);
  double through = 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (!(pts[i + 1] > pts[i])) continue;
    through += integrate_gl(
        [&](double x) { return image(x) * transmission(x + shift); }, pts[i],
        pts[i + 1], 256);
    total += integrate_gl(image, pts[i], pts[i + 1], 256);
  }
  if (!(total > 0.0)) {
    throw ConfigError("two-grating signal: image carries no intensity");
  }
  return through / total;
}

}  // namespace mwi
