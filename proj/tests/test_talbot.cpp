#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "mwi/constants.hpp"
#include "mwi/errors.hpp"
#include "mwi/talbot.hpp"
#include "test_support.hpp"

using namespace mwi;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPeriod = 1e-7;
constexpr double kSlit = 3.6e-8;

double wrap_nearest(double x, double period) {
  return x - period * std::round(x / period);
}

double shift_scan_visibility(const ApertureModel& ap, double ell_T) {
  double smax = 0.0;
  double smin = std::numeric_limits<double>::max();
  for (int i = 0; i < 33; ++i) {
    const double s = two_grating_signal(kPeriod * i / 33.0, ap, kPeriod, ell_T);
    smax = std::max(smax, s);
    smin = std::min(smin, s);
  }
  return (smax - smin) / (smax + smin);
}

}  // namespace

TEST_CASE("self-imaging distance and flight time pin the reference scales") {
  CHECK(talbot_length(1e-7, 2.5e-12) == doctest::Approx(8e-3).epsilon(1e-15));
  CHECK(talbot_time(1e-7, 2.5e-12, 1.2e-24) ==
        doctest::Approx(3.6220564311411634e-05).epsilon(1e-12));
  // time equals length over the matching de Broglie speed
  const double v = constants::h / (1.2e-24 * 2.5e-12);
  CHECK(talbot_time(1e-7, 2.5e-12, 1.2e-24) ==
        doctest::Approx(talbot_length(1e-7, 2.5e-12) / v).epsilon(1e-12));

  TalbotSetup setup = make_talbot_setup(1e-7, 2.5e-12, 1.2e-24);
  CHECK(setup.length == doctest::Approx(8e-3).epsilon(1e-15));
  CHECK(setup.time == doctest::Approx(3.6220564311411634e-05).epsilon(1e-12));
  CHECK(std::isinf(setup.ell_T));

  CHECK_THROWS_AS(make_talbot_setup(0.0, 2.5e-12, 1.2e-24), ConfigError);
  CHECK_THROWS_AS(make_talbot_setup(1e-7, 2.5e-12, 1.2e-24, 0), ConfigError);
  CHECK_THROWS_AS(make_talbot_setup(1e-7, 2.5e-12, 1.2e-24, 16, -1.0), ConfigError);
}

TEST_CASE("free image replicates a hard-edged grating exactly") {
  ApertureModel ap = ApertureModel::rectangular(kSlit);
  auto x = make_grid(2.5 * kPeriod, 2001);
  Pattern img = talbot_image_free(x, ap, kPeriod);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const bool inside = std::abs(wrap_nearest(x[i], kPeriod)) < kSlit / 2.0;
    const double expected = inside ? 1.0 : 0.0;
    // skip the two grid points that straddle an edge
    if (std::abs(std::abs(wrap_nearest(x[i], kPeriod)) - kSlit / 2.0) <
        x[1] - x[0]) {
      continue;
    }
    CHECK(std::abs(img.intensity[i] - expected) < 1e-10);
  }
}

TEST_CASE("free image is periodic and matches a wide independent sum") {
  ApertureModel ap = ApertureModel::gaussian(1.2e-8);
  auto x = make_grid(1.5 * kPeriod, 601);
  Pattern img = talbot_image_free(x, ap, kPeriod);
  for (std::size_t i = 0; i < x.size(); ++i) {
    double amp = 0.0;
    for (int j = -24; j <= 24; ++j) {
      amp += ap.value(x[i] + j * kPeriod);
    }
    CHECK(img.intensity[i] == doctest::Approx(amp * amp).epsilon(1e-12));
  }
  // periodicity on matching grid points: step is period / 200
  const std::size_t per = 200;
  for (std::size_t i = 0; i + per < x.size(); ++i) {
    CHECK(img.intensity[i] ==
          doctest::Approx(img.intensity[i + per]).epsilon(1e-10));
  }
}

TEST_CASE("free image errors when the copy sum cannot cover the grid") {
  ApertureModel ap = ApertureModel::rectangular(kSlit);
  auto x = make_grid(17.5 * kPeriod, 51);
  CHECK_THROWS_AS(talbot_image_free(x, ap, kPeriod, 16), ConfigError);
}

TEST_CASE("environmental damping fades out for long coherence lengths") {
  ApertureModel ap = ApertureModel::gaussian(1.2e-8);
  auto x = make_grid(1.0 * kPeriod, 401);
  Pattern free_img = talbot_image_free(x, ap, kPeriod);
  const double peak = pattern_peak(free_img);

  Pattern nearly_free = talbot_image_env(x, ap, kPeriod, 1e5 * kPeriod);
  for (std::size_t i = 0; i < x.size(); ++i) {
    CHECK(std::abs(nearly_free.intensity[i] - free_img.intensity[i]) <=
          1e-8 * peak);
  }

  Pattern long_ell = talbot_image_env(x, ap, kPeriod, 1e3 * kPeriod);
  for (std::size_t i = 0; i < x.size(); ++i) {
    CHECK(std::abs(long_ell.intensity[i] - free_img.intensity[i]) <=
          1e-5 * peak);
  }
}

TEST_CASE("damped image stays nonnegative and loses contrast") {
  ApertureModel ap = ApertureModel::rectangular(kSlit);
  auto x = make_grid(1.0 * kPeriod, 401);
  Pattern strong = talbot_image_env(x, ap, kPeriod, 0.5 * kPeriod);
  Pattern weak = talbot_image_env(x, ap, kPeriod, 2.0 * kPeriod);
  double strong_contrast = pattern_peak(strong);
  double weak_contrast = pattern_peak(weak);
  double strong_min = strong_contrast, weak_min = weak_contrast;
  for (std::size_t i = 0; i < x.size(); ++i) {
    CHECK(strong.intensity[i] >= -1e-12);
    strong_min = std::min(strong_min, strong.intensity[i]);
    weak_min = std::min(weak_min, weak.intensity[i]);
  }
  // more environmental localization means a flatter image
  CHECK((strong_contrast - strong_min) < (weak_contrast - weak_min));
}

TEST_CASE("hard edges cannot be reproduced at very long coherence length") {
  ApertureModel ap = ApertureModel::rectangular(kSlit);
  auto x = make_grid(0.5 * kPeriod, 11);
  CHECK_THROWS_AS(talbot_image_env(x, ap, kPeriod, 1e3 * kPeriod),
                  ConvergenceError);
}

TEST_CASE("damping conserves the period-averaged flux") {
  ApertureModel ap = ApertureModel::rectangular(kSlit);
  // the free image of the slit transmits exactly the open width
  CHECK(image_period_integral(ap, kPeriod, kInf) ==
        doctest::Approx(kSlit).epsilon(1e-9));
  for (double ell : {0.5 * kPeriod, kPeriod, 4.0 * kPeriod}) {
    CHECK(image_period_integral(ap, kPeriod, ell) ==
          doctest::Approx(kSlit).epsilon(1e-9));
  }

  // independent route: trapezoid over one period of the damped image
  auto x = make_grid(kPeriod / 2.0, 2001);
  Pattern img = talbot_image_env(x, ap, kPeriod, kPeriod);
  CHECK(trapezoid_mass(img) ==
        doctest::Approx(image_period_integral(ap, kPeriod, kPeriod))
            .epsilon(1e-6));
}

TEST_CASE("second grating at zero shift passes the free image whole") {
  ApertureModel ap = ApertureModel::rectangular(kSlit);
  CHECK(two_grating_signal(0.0, ap, kPeriod, kInf) ==
        doctest::Approx(1.0).epsilon(1e-12));
  // slit narrower than half the period: displaced copies are disjoint
  CHECK(std::abs(two_grating_signal(kPeriod / 2.0, ap, kPeriod, kInf)) < 1e-12);
}

TEST_CASE("second-grating signal is periodic and even in the shift") {
  ApertureModel ap = ApertureModel::rectangular(kSlit);
  for (double ell : {kInf, kPeriod}) {
    const double a = two_grating_signal(0.3 * kPeriod, ap, kPeriod, ell);
    CHECK(a == doctest::Approx(two_grating_signal(1.3 * kPeriod, ap, kPeriod, ell))
                   .epsilon(1e-10));
    CHECK(a == doctest::Approx(two_grating_signal(-0.3 * kPeriod, ap, kPeriod, ell))
                   .epsilon(1e-10));
  }
}

TEST_CASE("environmental localization fills in the blocked shift") {
  ApertureModel ap = ApertureModel::rectangular(kSlit);
  const double blocked = two_grating_signal(kPeriod / 2.0, ap, kPeriod, kPeriod);
  CHECK(blocked > 1e-3);
  const double open = two_grating_signal(0.0, ap, kPeriod, kPeriod);
  CHECK(open < 1.0);
  CHECK(open > blocked);
}

TEST_CASE("shift-scan contrast grows with the coherence length") {
  ApertureModel ap = ApertureModel::rectangular(kSlit);
  double prev = -1.0;
  for (double ell :
       {0.5 * kPeriod, kPeriod, 2.0 * kPeriod, 4.0 * kPeriod, 8.0 * kPeriod}) {
    const double vis = shift_scan_visibility(ap, ell);
    CHECK(vis > prev);
    prev = vis;
  }
  CHECK(prev <= 1.0);
}
