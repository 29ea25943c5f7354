#include <doctest.h>

#include <cmath>
#include <complex>

#include "mwi/aperture.hpp"
#include "mwi/constants.hpp"
#include "mwi/quadrature.hpp"
#include "test_support.hpp"

using namespace mwi;

namespace {

// Direct |FT|^2 of the amplitude for cross-checking the closed forms.
double numeric_ft_squared(const ApertureModel& ap, double k) {
  const double r = ap.support_radius();
  auto re = integrate_gk([&](double xi) { return ap.value(xi) * std::cos(k * xi); },
                         -r, r, 1e-12, 1e-16);
  auto im = integrate_gk([&](double xi) { return ap.value(xi) * std::sin(k * xi); },
                         -r, r, 1e-12, 1e-16);
  return re.value * re.value + im.value * im.value;
}

}  // namespace

TEST_CASE("rectangular slit amplitude and transform") {
  const double d = 3.6e-8;
  ApertureModel ap = ApertureModel::rectangular(d);
  CHECK(ap.value(0.0) == doctest::Approx(1.0));
  CHECK(ap.value(0.49 * d) == doctest::Approx(1.0));
  CHECK(ap.value(0.51 * d) == 0.0);
  CHECK(ap.support_radius() == doctest::Approx(d / 2.0));
  CHECK(ap.zero_mode() == doctest::Approx(d).epsilon(1e-15));
  CHECK(ap.ft_squared(0.0) == doctest::Approx(d * d).epsilon(1e-15));

  for (double k : {1e5, 1e7, 5e7, 2e8, 1e9}) {
    const double expected = numeric_ft_squared(ap, k);
    CHECK(ap.ft_squared(k) == doctest::Approx(expected).epsilon(1e-9));
  }
  // first zero at k = 2 pi / d
  CHECK(ap.ft_squared(2.0 * constants::pi / d) < 1e-30 * d * d);
}

TEST_CASE("rectangular transform is continuous through the small-argument branch") {
  ApertureModel ap = ApertureModel::rectangular(1.0);
  const double eps = 1e-8;  // at the series switch
  const double lo = ap.ft_squared(eps * 0.99);
  const double hi = ap.ft_squared(eps * 1.01);
  CHECK(testing::rel_diff(lo, hi) < 1e-12);
}

TEST_CASE("gaussian slit amplitude and transform") {
  const double sigma = 6e-9;
  ApertureModel ap = ApertureModel::gaussian(sigma);
  CHECK(ap.zero_mode() == doctest::Approx(6.0 * sigma).epsilon(1e-15));
  CHECK(ap.ft_squared(0.0) == doctest::Approx(36.0 * sigma * sigma).epsilon(1e-15));
  CHECK(ap.support_radius() == doctest::Approx(12.0 * sigma));

  // closed form vs direct integral
  for (double k : {1e6, 1e7, 5e7, 2e8}) {
    const double expected = numeric_ft_squared(ap, k);
    CHECK(ap.ft_squared(k) == doctest::Approx(expected).epsilon(1e-9));
  }
  // value is even and decreasing away from the centre
  CHECK(ap.value(1e-9) == doctest::Approx(ap.value(-1e-9)).epsilon(1e-15));
  CHECK(ap.value(2e-9) < ap.value(1e-9));
}

TEST_CASE("grating factory picks the configured profile") {
  GratingSpec g;
  g.period = 1e-7;
  g.slit_width = 3.6e-8;
  g.slit_count = 10;

  ApertureModel rect = ApertureModel::from_grating(g);
  CHECK(rect.zero_mode() == doctest::Approx(3.6e-8));

  g.shape = ApertureShape::gaussian;
  ApertureModel gauss = ApertureModel::from_grating(g);
  // default sigma = slit_width / 6 gives the same zero mode as the slit width
  CHECK(gauss.zero_mode() == doctest::Approx(3.6e-8).epsilon(1e-15));
}

TEST_CASE("divergence models are normalized characteristic functions") {
  DivergenceModel flat = DivergenceModel::collimated();
  CHECK(flat.ratio(0.0) == doctest::Approx(1.0));
  CHECK(flat.ratio(12.34) == doctest::Approx(1.0));

  const double sigma_k = 1.0 / 1.2891550390443522e-07;
  DivergenceModel g = DivergenceModel::gaussian(sigma_k);
  CHECK(g.ratio(0.0) == doctest::Approx(1.0));
  const double s = 1e-7;
  CHECK(g.ratio(s) ==
        doctest::Approx(std::exp(-0.5 * s * s * sigma_k * sigma_k)).epsilon(1e-12));
  CHECK(g.ratio(s) == doctest::Approx(g.ratio(-s)).epsilon(1e-15));

  DivergenceModel c = DivergenceModel::custom([](double v) { return std::cos(v); });
  CHECK(c.ratio(0.5) == doctest::Approx(std::cos(0.5)));
}
