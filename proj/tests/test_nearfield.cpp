#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "mwi/constants.hpp"
#include "mwi/errors.hpp"
#include "mwi/farfield.hpp"
#include "mwi/nearfield.hpp"
#include "mwi/quadrature.hpp"
#include "test_support.hpp"

using namespace mwi;

namespace {

// packet width after free spreading
double spread_sigma(double sigma, double t, double mass) {
  const double a = constants::hbar * t / (2.0 * mass * sigma * sigma);
  return sigma * std::sqrt(1.0 + a * a);
}

// Simpson rule on a uniform grid, n odd
double simpson(const std::vector<double>& f, double h) {
  double acc = f.front() + f.back();
  for (std::size_t i = 1; i + 1 < f.size(); ++i) {
    acc += f[i] * ((i % 2) ? 4.0 : 2.0);
  }
  return acc * h / 3.0;
}

double l2_distance(const Pattern& a, const Pattern& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a.intensity[i] - b.intensity[i];
    acc += d * d;
  }
  return std::sqrt(acc);
}

}  // namespace

TEST_CASE("free Gaussian packet stays normalized while it spreads") {
  const double m = testing::neutron_mass;
  const double sigma = 1e-6;
  const double tau = 2.0 * m * sigma * sigma / constants::hbar;
  for (double k : {0.0, 4.23e6}) {
    for (double t : {0.0, tau / 10.0, tau, 10.0 * tau}) {
      const double drift = constants::hbar * k / m * t;
      const double half = 12.0 * spread_sigma(sigma, t, m);
      const double mass =
          integrate_gk(
              [&](double x) {
                return std::norm(evolve_gaussian_1d(x, t, sigma, k, 0.0, m));
              },
              drift - half, drift + half, 1e-10)
              .value;
      CHECK(mass == doctest::Approx(1.0).epsilon(1e-8));
    }
  }
}

TEST_CASE("packet width and drift follow the closed-form envelope") {
  const double m = testing::neutron_mass;
  const double sigma = 1e-6;
  const double k = 1e6;
  const double t = 3.0 * 2.0 * m * sigma * sigma / constants::hbar;
  const double drift = constants::hbar * k / m * t;
  const double st = spread_sigma(sigma, t, m);
  const double at_centre = std::norm(evolve_gaussian_1d(drift, t, sigma, k, 0.0, m));
  CHECK(at_centre == doctest::Approx(1.0 / std::sqrt(2.0 * constants::pi * st * st))
                         .epsilon(1e-10));
  const double one_sigma =
      std::norm(evolve_gaussian_1d(drift + st, t, sigma, k, 0.0, m));
  CHECK(one_sigma == doctest::Approx(at_centre * std::exp(-0.5)).epsilon(1e-10));
}

TEST_CASE("closed-form spatial derivative matches finite differences") {
  const double m = testing::neutron_mass;
  const double sigma = 8.33e-7;
  const double k = 2e5;
  for (double t : {0.0, 1e-4, 5e-3}) {
    const double st = spread_sigma(sigma, t, m);
    const double h = 1e-5 * st;
    for (double x : {0.0, 0.7 * st, -1.9 * st}) {
      const auto up = evolve_gaussian_1d(x + h, t, sigma, k, 0.0, m);
      const auto dn = evolve_gaussian_1d(x - h, t, sigma, k, 0.0, m);
      const auto fd = (up - dn) / (2.0 * h);
      const auto exact = evolve_gaussian_1d_dx(x, t, sigma, k, 0.0, m);
      CHECK(std::abs(fd - exact) <= 1e-6 * std::abs(exact));
    }
  }
}

TEST_CASE("beam state normalization accounts for slit overlap") {
  const double m = testing::neutron_mass;
  SUBCASE("barely overlapping slit pair") {
    GaussianBeamState s = testing::neutron_state();
    const double mass =
        integrate_gk([&](double x) { return std::norm(s.psi_x(x, 0.0)); },
                     -3e-5, 3e-5, 1e-11)
            .value;
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("strongly overlapping pair") {
    const double sigma = 1e-6;
    GaussianBeamState s = make_beam_state(m, sigma, 1e-3, 1e7, {-sigma, sigma});
    const double mass =
        integrate_gk([&](double x) { return std::norm(s.psi_x(x, 0.0)); },
                     -2e-5, 2e-5, 1e-11)
            .value;
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("x part stays normalized under evolution") {
    GaussianBeamState s = testing::neutron_state();
    const double t = 5e-3;
    const double half = 12.0 * spread_sigma(s.sigma_x, t, m);
    const double mass =
        integrate_gk([&](double x) { return std::norm(s.psi_x(x, t)); }, -half,
                     half, 1e-10)
            .value;
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("beam state rejects invalid construction") {
  const double m = testing::neutron_mass;
  CHECK_THROWS_AS(make_beam_state(0.0, 1e-6, 1e-3, 1e7, {0.0}), ConfigError);
  CHECK_THROWS_AS(make_beam_state(m, -1e-6, 1e-3, 1e7, {0.0}), ConfigError);
  CHECK_THROWS_AS(make_beam_state(m, 1e-6, 1e-3, -1e7, {0.0}), ConfigError);
  CHECK_THROWS_AS(make_beam_state(m, 1e-6, 1e-3, 1e7, {}), ConfigError);
}

TEST_CASE("density and currents satisfy the continuity equation") {
  GaussianBeamState s = testing::neutron_state();
  const double v = s.velocity();
  const double L = 5e-3;
  const double T = L / v;

  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> ut(0.5 * T, 1.5 * T);
  std::uniform_real_distribution<double> ux(-1.0, 1.0);

  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const double t = ut(rng);
    const double sx = spread_sigma(s.sigma_x, t, s.mass);
    const double x = ux(rng) * (5e-6 + 2.0 * sx);
    const double y = v * t + ux(rng) * 2.5 * s.sigma_y;

    const double hx = 1e-4 * sx;
    const double hy = 1e-4 * s.sigma_y;
    const double ht = 1e-4 * s.sigma_y / v;

    const double dpdt = (probability_density(x, y, t + ht, s) -
                         probability_density(x, y, t - ht, s)) /
                        (2.0 * ht);
    const double djx =
        (current_jx(x + hx, y, t, s) - current_jx(x - hx, y, t, s)) / (2.0 * hx);
    const double djy =
        (current_jy(x, y + hy, t, s) - current_jy(x, y - hy, t, s)) / (2.0 * hy);

    const double scale = std::abs(dpdt) + std::abs(djx) + std::abs(djy);
    const double residual = std::abs(dpdt + djx + djy);
    REQUIRE(scale > 0.0);
    CHECK(residual <= 1e-6 * scale);
    ++checked;
  }
  CHECK(checked == 100);
}

TEST_CASE("currents point the way the packet moves") {
  GaussianBeamState s = testing::neutron_state();
  const double t = 3e-3;
  const double y = s.velocity() * t;
  // forward current at and around the packet centre
  CHECK(current_jy(0.0, y, t, s) > 0.0);
  CHECK(current_jy(0.0, y + s.sigma_y, t, s) > 0.0);
  CHECK(current_jy(1e-4, y, t, s) > 0.0);
  // symmetric slit pair with no transverse drift: no current across x = 0
  const double jx_scale = std::abs(current_jx(1e-4, y, t, s));
  CHECK(std::abs(current_jx(0.0, y, t, s)) <= 1e-12 * jx_scale);
  // density is even in x
  CHECK(probability_density(2e-4, y, t, s) ==
        doctest::Approx(probability_density(-2e-4, y, t, s)).epsilon(1e-12));
}

TEST_CASE("arrival pattern carries unit probability at the reference plane") {
  GaussianBeamState s = testing::neutron_state();
  const double L = 5e-3;
  auto x = make_grid(8e-4, 321);
  ArrivalResult res = arrival_intensity(x, L, s);
  CHECK(!res.slow_beam_warning);
  CHECK(res.negative_fraction < 1e-4);
  const double mass = trapezoid_mass(res.pattern);
  CHECK(mass > 0.995);
  CHECK(mass < 1.005);
}

TEST_CASE("arrival fringe contrast improves with distance") {
  GaussianBeamState s = testing::neutron_state();
  const double lambda = s.wavelength();
  const double D = 1e-5;
  double previous = -1.0;
  for (double L : {2e-3, 5e-3, 2e-2, 1e-1}) {
    const double hint = lambda * L / D;
    auto x = make_grid(1.6 * hint, 181);
    ArrivalResult res = arrival_intensity(x, L, s);
    const double vis = fringe_visibility(res.pattern, hint);
    CHECK(vis > previous);
    previous = vis;
  }
  CHECK(previous < 1.0);
}

TEST_CASE("first arrival approximation is the crossing-profile convolution") {
  GaussianBeamState s = testing::neutron_state();
  const double v = s.velocity();
  const double L = 5e-3;
  const double T = L / v;
  const double st = s.sigma_y / v;

  for (double x : {0.0, 5e-5, 1.9e-4}) {
    // independent route: Simpson over the same crossing window
    const double lo = std::max(0.0, T - 8.0 * st);
    const double hi = T + 8.0 * st;
    const int n = 4001;
    std::vector<double> f(n);
    const double h = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) {
      const double t = lo + h * i;
      const double y = L - v * t;
      const double profile = std::exp(-y * y / (2.0 * s.sigma_y * s.sigma_y)) /
                             std::sqrt(2.0 * constants::pi * s.sigma_y * s.sigma_y);
      f[i] = std::norm(s.psi_x(x, t)) * profile;
    }
    const double direct = v * simpson(f, h);
    CHECK(approx_I1(x, L, s) == doctest::Approx(direct).epsilon(1e-8));
  }
}

TEST_CASE("first arrival approximation integrates to one") {
  GaussianBeamState s = testing::neutron_state();
  const double L = 8e-3;  // crossing window well clear of t = 0
  const int n = 2501;
  std::vector<double> f(n);
  const double half = 2.5e-3;
  const double h = 2.0 * half / (n - 1);
  for (int i = 0; i < n; ++i) {
    f[i] = approx_I1(-half + h * i, L, s);
  }
  CHECK(simpson(f, h) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("frozen-time approximation is the evolved transverse density") {
  GaussianBeamState s = testing::neutron_state();
  const double L = 5e-3;
  const double T = L / s.velocity();
  for (double x : {0.0, 7e-5, -1.9e-4}) {
    CHECK(approx_I2(x, L, s) ==
          doctest::Approx(std::norm(s.psi_x(x, T))).epsilon(1e-12));
  }
}

TEST_CASE("far from the grating the arrival pattern freezes") {
  // crossing-time spread matters less and less as L grows past sigma_y
  GaussianBeamState s = testing::neutron_state();
  const double L = 1e-1;  // 100 sigma_y
  const double hint = s.wavelength() * L / 1e-5;
  auto x = make_grid(1.6 * hint, 161);
  ArrivalResult res = arrival_intensity(x, L, s);
  const double peak = pattern_peak(res.pattern);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double i2 = approx_I2(x[i], L, s);
    CHECK(std::abs(res.pattern.intensity[i] - i2) <= 0.01 * peak);
  }
}

TEST_CASE("the convolution approximation beats the frozen one up close") {
  GaussianBeamState s = testing::neutron_state();
  const double D = 1e-5;
  for (double L : {2e-3, 5e-3}) {
    const double hint = s.wavelength() * L / D;
    auto x = make_grid(1.6 * hint, 161);
    ArrivalResult res = arrival_intensity(x, L, s);
    Pattern p1, p2;
    p1.x = x;
    p2.x = x;
    p1.intensity.resize(x.size());
    p2.intensity.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      p1.intensity[i] = approx_I1(x[i], L, s);
      p2.intensity[i] = approx_I2(x[i], L, s);
    }
    CHECK(l2_distance(res.pattern, p1) <= l2_distance(res.pattern, p2));
  }
}

TEST_CASE("frozen and Fourier approximations meet in the far field") {
  GaussianBeamState s = testing::neutron_state();
  const double span = s.transverse_span();
  const double tau = s.mass * span * span / constants::hbar;

  SUBCASE("deep Fraunhofer: the two agree to two percent") {
    const double L = 1e-1;  // flight 28 tau
    const double hint = s.wavelength() * L / 1e-5;
    auto x = make_grid(3.0 * hint, 241);
    double peak = 0.0;
    std::vector<double> i3(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      i3[i] = approx_I3(x[i], L, s);
      peak = std::max(peak, i3[i]);
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double i2 = approx_I2(x[i], L, s);
      const double denom = std::max(i3[i], 1e-3 * peak);
      CHECK(std::abs(i2 - i3[i]) / denom < 0.02);
    }
  }

  SUBCASE("a tenth of the spreading time apart they visibly differ") {
    const double L = 0.1 * tau * s.velocity();
    const double hint = s.wavelength() * L / 1e-5;
    auto x = make_grid(3.0 * hint, 241);
    double peak = 0.0;
    std::vector<double> i3(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      i3[i] = approx_I3(x[i], L, s);
      peak = std::max(peak, i3[i]);
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double i2 = approx_I2(x[i], L, s);
      const double denom = std::max(i3[i], 1e-3 * peak);
      worst = std::max(worst, std::abs(i2 - i3[i]) / denom);
    }
    CHECK(worst > 0.10);
  }
}

TEST_CASE("closed-form Fourier route matches the generic quadrature") {
  GaussianBeamState s = testing::neutron_state();
  const double L = 5e-2;
  const double edge = 5e-6 + 12.0 * s.sigma_x;
  const auto psi0 = [&](double xi) { return s.psi_x(xi, 0.0); };
  for (double x : {0.0, 1e-4, 3.7e-4, -2.2e-4}) {
    const double direct = fraunhofer_from_initial(
        x, s.wavelength(), L, psi0, {{-edge, edge}});
    CHECK(approx_I3(x, L, s) == doctest::Approx(direct).epsilon(1e-6));
  }
}

TEST_CASE("generic Fourier route reproduces the hard-edged double slit") {
  const double lambda = 3.956e-7;
  const double L = 0.1;
  const double D = 1e-5;
  const double d = 5e-6;
  const double lamL = lambda * L;
  const double amp = 1.0 / std::sqrt(2.0 * d);
  const auto psi0 = [&](double) { return std::complex<double>(amp, 0.0); };
  const std::vector<std::pair<double, double>> slits = {
      {-D / 2 - d / 2, -D / 2 + d / 2}, {D / 2 - d / 2, D / 2 + d / 2}};

  for (double x : {1e-5, 5e-5, 1.3e-4, -2.4e-4}) {
    const double kbar = 2.0 * constants::pi * x / lamL;
    const double arg = kbar * d / 2.0;
    const double sinc = std::sin(arg) / arg;
    const double expected =
        (d / lamL) * sinc * sinc * (1.0 + std::cos(kbar * D));
    CHECK(fraunhofer_from_initial(x, lambda, L, psi0, slits) ==
          doctest::Approx(expected).epsilon(1e-8));
  }
}

TEST_CASE("time scales summarize the geometry") {
  GaussianBeamState s = testing::neutron_state();
  const double L = 5e-3;
  TimeScales ts = time_scales(s, L);
  const double span = 1e-5 + 6.0 * s.sigma_x;
  CHECK(ts.tau ==
        doctest::Approx(s.mass * span * span / constants::hbar).epsilon(1e-12));
  CHECK(ts.flight == doctest::Approx(L / s.velocity()).epsilon(1e-12));
  CHECK(ts.crossing ==
        doctest::Approx(s.sigma_y / s.velocity()).epsilon(1e-12));
}

TEST_CASE("a slow beam is flagged") {
  const double m = testing::neutron_mass;
  GaussianBeamState s = make_beam_state(m, 1e-6, 1e-3, 5e3, {0.0});
  auto x = make_grid(5e-4, 3);
  ArrivalResult res = arrival_intensity(x, 1e-4, s);
  CHECK(res.slow_beam_warning);
  CHECK(res.negative_fraction >= 0.0);
}
