#include "mwi/nearfield.hpp"

#include <algorithm>
#include <cmath>

#include "mwi/constants.hpp"
#include "mwi/errors.hpp"
#include "mwi/quadrature.hpp"

namespace mwi {

namespace k = constants;

namespace {

using cdouble = std::complex<double>;

// alpha(t) = 1 + i hbar t / (2 m sigma^2): complex spreading factor
cdouble spread_alpha(double t, double sigma, double mass) {
  return cdouble(1.0, k::hbar * t / (2.0 * mass * sigma * sigma));
}

}  // namespace

std::complex<double> evolve_gaussian_1d(double x, double t, double sigma,
                                        double k_wave, double x_center,
                                        double mass) {
  if (!(sigma > 0.0)) throw ConfigError("gaussian packet: sigma must be positive");
  if (!(mass > 0.0)) throw ConfigError("gaussian packet: mass must be positive");
  if (!(t >= 0.0)) throw ConfigError("gaussian packet: time must be nonnegative");
  const cdouble alpha = spread_alpha(t, sigma, mass);
  const double drift = k::hbar * k_wave * t / mass;
  const double big_x = x - x_center;
  const cdouble arg = -(big_x - drift) * (big_x - drift) /
                          (4.0 * sigma * sigma * alpha) +
                      cdouble(0.0, k_wave * (big_x - drift / 2.0));
  const double amp = std::pow(2.0 * k::pi * sigma * sigma, -0.25);
  return amp / std::sqrt(alpha) * std::exp(arg);
}

std::complex<double> evolve_gaussian_1d_dx(double x, double t, double sigma,
                                           double k_wave, double x_center,
                                           double mass) {
  const cdouble psi = evolve_gaussian_1d(x, t, sigma, k_wave, x_center, mass);
  const cdouble alpha = spread_alpha(t, sigma, mass);
  const double drift = k::hbar * k_wave * t / mass;
  const double big_x = x - x_center;
  return psi * (-(big_x - drift) / (2.0 * sigma * sigma * alpha) +
                cdouble(0.0, k_wave));
}

double GaussianBeamState::velocity() const { return k::hbar * k_y / mass; }

double GaussianBeamState::wavelength() const { return 2.0 * k::pi / k_y; }

double GaussianBeamState::transverse_span() const {
  const auto [lo, hi] = std::minmax_element(offsets.begin(), offsets.end());
  return (*hi - *lo) + 6.0 * sigma_x;
}

std::complex<double> GaussianBeamState::psi_x(double x, double t) const {
  cdouble sum(0.0, 0.0);
  for (double o : offsets) {
    sum += evolve_gaussian_1d(x, t, sigma_x, 0.0, o, mass);
  }
  return norm_x * sum;
}

std::complex<double> GaussianBeamState::psi_x_dx(double x, double t) const {
  cdouble sum(0.0, 0.0);
  for (double o : offsets) {
    sum += evolve_gaussian_1d_dx(x, t, sigma_x, 0.0, o, mass);
  }
  return norm_x * sum;
}

GaussianBeamState make_beam_state(double mass, double sigma_x, double sigma_y,
                                  double k_y, std::vector<double> offsets) {
  std::vector<Violation> bad;
  if (!(mass > 0.0)) bad.push_back({"mass", "> 0", mass});
  if (!(sigma_x > 0.0)) bad.push_back({"sigma_x", "> 0", sigma_x});
  if (!(sigma_y > 0.0)) bad.push_back({"sigma_y", "> 0", sigma_y});
  if (!(k_y > 0.0)) bad.push_back({"k_y", "> 0", k_y});
  if (offsets.empty()) {
    bad.push_back({"offsets", "nonempty", 0.0});
  }
  if (!bad.empty()) throw ConfigError("beam state", bad);

  GaussianBeamState s;
  s.mass = mass;
  s.sigma_x = sigma_x;
  s.sigma_y = sigma_y;
  s.k_y = k_y;
  s.offsets = std::move(offsets);
  double overlap = 0.0;
  for (double a : s.offsets) {
    for (double b : s.offsets) {
      const double d = a - b;
      overlap += std::exp(-d * d / (8.0 * sigma_x * sigma_x));
    }
  }
  s.norm_x = 1.0 / std::sqrt(overlap);
  return s;
}

double probability_density(double x, double y, double t,
                           const GaussianBeamState& state) {
  const double px = std::norm(state.psi_x(x, t));
  const double py = std::norm(
      evolve_gaussian_1d(y, t, state.sigma_y, state.k_y, 0.0, state.mass));
  return px * py;
}

double current_jx(double x, double y, double t, const GaussianBeamState& state) {
  const double py = std::norm(
      evolve_gaussian_1d(y, t, state.sigma_y, state.k_y, 0.0, state.mass));
  const cdouble psi = state.psi_x(x, t);
  const cdouble dpsi = state.psi_x_dx(x, t);
  return k::hbar / state.mass * py * std::imag(std::conj(psi) * dpsi);
}

double current_jy(double x, double y, double t, const GaussianBeamState& state) {
  const double px = std::norm(state.psi_x(x, t));
  const cdouble phi =
      evolve_gaussian_1d(y, t, state.sigma_y, state.k_y, 0.0, state.mass);
  const cdouble dphi =
      evolve_gaussian_1d_dx(y, t, state.sigma_y, state.k_y, 0.0, state.mass);
  return k::hbar / state.mass * px * std::imag(std::conj(phi) * dphi);
}

namespace {

// latest time at which the forward packet still touches the plane y = L
double crossing_horizon(const GaussianBeamState& state, double L) {
  const double v = state.velocity();
  double t_max = L / v;
  for (int pass = 0; pass < 2; ++pass) {
    const double grown =
        state.sigma_y * std::abs(spread_alpha(t_max, state.sigma_y, state.mass));
    t_max = (L + 8.0 * grown) / v;
  }
  return t_max;
}

}  // namespace

ArrivalResult arrival_intensity(const std::vector<double>& x, double L,
                                const GaussianBeamState& state) {
  if (!(L > 0.0)) throw ConfigError("arrival intensity: distance must be positive");
  const double t_max = crossing_horizon(state, L);

  ArrivalResult result;
  result.slow_beam_warning = state.k_y * state.sigma_y < 10.0;
  result.pattern.x = x;
  result.pattern.intensity.resize(x.size());
  result.pattern.norm = Normalization::density;

  // scale estimate for absolute tolerance floors: on-axis arrival density
  const auto integrand_at = [&](double xi) {
    return [&, xi](double t) { return current_jy(xi, L, t, state); };
  };
  const double central =
      std::abs(integrate_gk(integrand_at(0.0), 0.0, t_max, 1e-7).value);
  const double abs_floor = std::max(central, 1e-300) * 1e-10;

  double negative_mass = 0.0;
  double absolute_mass = 0.0;
  const double step = x.size() > 1 ? x[1] - x[0] : 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto f = integrand_at(x[i]);
    result.pattern.intensity[i] =
        integrate_gk(f, 0.0, t_max, 1e-7, abs_floor).value;
    const auto neg = [&f](double t) { return std::max(-f(t), 0.0); };
    const double neg_part =
        integrate_gk(neg, 0.0, t_max, 1e-4, abs_floor).value;
    negative_mass += neg_part * step;
    absolute_mass += (std::abs(result.pattern.intensity[i]) + 2.0 * neg_part) * step;
  }
  result.negative_fraction =
      absolute_mass > 0.0 ? negative_mass / absolute_mass : 0.0;
  return result;
}

double approx_I1(double x, double L, const GaussianBeamState& state) {
  if (!(L > 0.0)) throw ConfigError("arrival intensity: distance must be positive");
  const double v = state.velocity();
  const double sy = state.sigma_y;
  const double t_max = crossing_horizon(state, L);
  const auto f = [&](double t) {
    const double y = L - v * t;
    const double packet =
        std::exp(-y * y / (2.0 * sy * sy)) / std::sqrt(2.0 * k::pi * sy * sy);
    return std::norm(state.psi_x(x, t)) * packet;
  };
  return v * integrate_gk(f, 0.0, t_max, 1e-9, 1e-300).value;
}

double approx_I2(double x, double L, const GaussianBeamState& state) {
  if (!(L > 0.0)) throw ConfigError("arrival intensity: distance must be positive");
  return std::norm(state.psi_x(x, L / state.velocity()));
}

double approx_I3(double x, double L, const GaussianBeamState& state) {
  if (!(L > 0.0)) throw ConfigError("arrival intensity: distance must be positive");
  const double lamL = state.wavelength() * L;
  const double kbar = 2.0 * k::pi * x / lamL;
  // plain-convention transform of one slit: (8 pi sigma^2)^(1/4) e^(-sigma^2 k^2)
  const double single =
      std::pow(8.0 * k::pi * state.sigma_x * state.sigma_x, 0.25) *
      std::exp(-state.sigma_x * state.sigma_x * kbar * kbar);
  cdouble comb(0.0, 0.0);
  for (double o : state.offsets) {
    comb += std::exp(cdouble(0.0, -kbar * o));
  }
  const double amp2 = std::norm(state.norm_x * single * comb);
  return amp2 / lamL;
}

double fraunhofer_from_initial(
    double x, double wavelength, double L,
    const std::function<std::complex<double>(double)>& psi0,
    const std::vector<std::pair<double, double>>& segments) {
  if (!(wavelength > 0.0) || !(L > 0.0)) {
    throw ConfigError("fraunhofer intensity: wavelength and distance must be positive");
  }
  if (!psi0 || segments.empty()) {
    throw ConfigError("fraunhofer intensity: initial state and support required");
  }
  const double lamL = wavelength * L;
  const double kbar = 2.0 * k::pi * x / lamL;
  cdouble ft(0.0, 0.0);
  for (const auto& [a, b] : segments) {
    const auto re = [&](double xi) {
      return std::real(psi0(xi) * std::exp(cdouble(0.0, -kbar * xi)));
    };
    const auto im = [&](double xi) {
      return std::imag(psi0(xi) * std::exp(cdouble(0.0, -kbar * xi)));
    };
    ft += cdouble(integrate_gk(re, a, b, 1e-10, 1e-300).value,
                  integrate_gk(im, a, b, 1e-10, 1e-300).value);
  }
  return std::norm(ft) / lamL;
}

TimeScales time_scales(const GaussianBeamState& state, double L) {
  TimeScales out;
  const double span = state.transverse_span();
  out.tau = state.mass * span * span / k::hbar;
  out.flight = L / state.velocity();
  out.crossing = state.sigma_y / state.velocity();
  return out;
}

}  // namespace mwi
