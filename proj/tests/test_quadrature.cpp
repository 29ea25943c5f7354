#include <doctest.h>

#include <cmath>

#include "mwi/constants.hpp"
#include "mwi/errors.hpp"
#include "mwi/quadrature.hpp"

using namespace mwi;

TEST_CASE("gauss-legendre rule integrates polynomials exactly") {
  // n points are exact through degree 2n-1
  auto poly = [](double x) { return x * x * x * x * x - 2.0 * x * x + 1.0; };
  const double exact = 2.0 - 4.0 / 3.0;  // odd power drops over [-1, 1]
  CHECK(integrate_gl(poly, -1.0, 1.0, 3) == doctest::Approx(exact).epsilon(1e-14));
}

TEST_CASE("gauss-legendre nodes are symmetric and weights sum to the length") {
  const GaussLegendre& r = gauss_legendre(64);
  REQUIRE(r.node.size() == 64);
  double wsum = 0.0;
  for (int i = 0; i < 64; ++i) {
    CHECK(r.node[i] == doctest::Approx(-r.node[63 - i]).epsilon(1e-14));
    CHECK(r.weight[i] > 0.0);
    wsum += r.weight[i];
  }
  CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("cached rule lookup returns the same object") {
  const GaussLegendre& a = gauss_legendre(48);
  const GaussLegendre& b = gauss_legendre(48);
  CHECK(&a == &b);
}

TEST_CASE("mapped rule integrates exp over an offset interval") {
  const double got = integrate_gl([](double x) { return std::exp(x); }, 0.5, 2.5, 24);
  CHECK(got == doctest::Approx(std::exp(2.5) - std::exp(0.5)).epsilon(1e-14));
}

TEST_CASE("adaptive quadrature reaches tolerance on smooth integrands") {
  auto res = integrate_gk([](double x) { return std::sin(x); }, 0.0, constants::pi, 1e-12);
  CHECK(res.value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(res.error <= 1e-10);
}

TEST_CASE("adaptive quadrature handles an oscillatory integrand") {
  auto res = integrate_gk([](double x) { return std::cos(50.0 * x); }, 0.0, 1.0, 1e-12);
  CHECK(res.value == doctest::Approx(std::sin(50.0) / 50.0).epsilon(1e-10));
}

TEST_CASE("adaptive quadrature handles a narrow peak") {
  // Gaussian of width 1e-3 inside [-1, 1]; mass misses ~nothing
  auto f = [](double x) { return std::exp(-x * x / (2e-6)) / std::sqrt(2e-6 * constants::pi); };
  auto res = integrate_gk(f, -1.0, 1.0, 1e-10);
  CHECK(res.value == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("adaptive quadrature reports non-convergence with the achieved error") {
  auto wild = [](double x) { return std::sin(1.0 / x); };
  CHECK_THROWS_AS(integrate_gk(wild, 1e-9, 1.0, 1e-14, 0.0, 6), ConvergenceError);
  try {
    integrate_gk(wild, 1e-9, 1.0, 1e-14, 0.0, 6);
  } catch (const ConvergenceError& e) {
    CHECK(e.achieved() > 0.0);
  }
}
