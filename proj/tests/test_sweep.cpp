#include <doctest.h>

#include <cmath>

#include "mwi/constants.hpp"
#include "mwi/errors.hpp"
#include "mwi/sweep.hpp"
#include "test_support.hpp"

using namespace mwi;

namespace {

// fringe spacing of the unscaled supersonic base at its mean speed
double base_order() {
  const double lambda = 2.5098594848484848e-12;  // h / (1.2e-24 kg * 220 m/s)
  return lambda * 1.25 / 1e-7;
}

SweepSpec make_spec(SweepParameter parameter, std::vector<double> values) {
  SweepSpec spec;
  spec.parameter = parameter;
  spec.values = std::move(values);
  spec.base = testing::fullerene_supersonic_config();
  return spec;
}

}  // namespace

TEST_CASE("apply_sweep_value rebuilds exactly one knob") {
  const ExperimentConfig base = testing::fullerene_supersonic_config();

  SUBCASE("pressure multiplier") {
    ExperimentConfig c = apply_sweep_value(base, SweepParameter::pressure_multiple,
                                           2.0, MassConvention::fixed_temperature);
    CHECK(c.environment.pressure == doctest::Approx(1e-5).epsilon(1e-15));
    CHECK(c.molecule.mass == base.molecule.mass);
    CHECK(c.geometry.screen_distance == base.geometry.screen_distance);
  }

  SUBCASE("distance multiplier") {
    ExperimentConfig c = apply_sweep_value(base, SweepParameter::distance_multiple,
                                           2.0, MassConvention::fixed_temperature);
    CHECK(c.geometry.screen_distance == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(c.environment.pressure == base.environment.pressure);
  }

  SUBCASE("thermal mass scaling slows the supersonic source") {
    ExperimentConfig c = apply_sweep_value(base, SweepParameter::mass_multiple,
                                           4.0, MassConvention::fixed_temperature);
    CHECK(c.molecule.mass == doctest::Approx(4.8e-24).epsilon(1e-15));
    CHECK(c.beam.v0 == doctest::Approx(base.beam.v0 / 2.0).epsilon(1e-15));
    CHECK(c.beam.v_hat == doctest::Approx(base.beam.v_hat / 2.0).epsilon(1e-15));
  }

  SUBCASE("thermal mass scaling shortens a monochromatic wavelength") {
    ExperimentConfig mono = testing::fullerene_config();
    ExperimentConfig c = apply_sweep_value(mono, SweepParameter::mass_multiple,
                                           4.0, MassConvention::fixed_temperature);
    CHECK(c.molecule.mass == doctest::Approx(4.8e-24).epsilon(1e-15));
    // lambda = h / (M v) with v ~ 1 / sqrt(M): halves when the mass quadruples
    CHECK(c.beam.wavelength ==
          doctest::Approx(mono.beam.wavelength / 2.0).epsilon(1e-15));
  }

  SUBCASE("fixed-velocity mass scaling changes the wavelength alone") {
    ExperimentConfig mono = testing::fullerene_config();
    ExperimentConfig c = apply_sweep_value(mono, SweepParameter::mass_multiple,
                                           4.0, MassConvention::fixed_velocity);
    CHECK(c.beam.wavelength ==
          doctest::Approx(mono.beam.wavelength / 4.0).epsilon(1e-15));
    ExperimentConfig s = apply_sweep_value(base, SweepParameter::mass_multiple,
                                           4.0, MassConvention::fixed_velocity);
    CHECK(s.beam.v0 == base.beam.v0);
    CHECK(s.beam.v_hat == base.beam.v_hat);
  }

  SUBCASE("velocity selection installs a symmetric window") {
    ExperimentConfig c = apply_sweep_value(base, SweepParameter::velocity_selection,
                                           0.1, MassConvention::fixed_temperature);
    CHECK(c.beam.window_min == doctest::Approx(base.beam.v0 * 0.95).epsilon(1e-15));
    CHECK(c.beam.window_max == doctest::Approx(base.beam.v0 * 1.05).epsilon(1e-15));
    CHECK(c.beam.has_window());
  }

  SUBCASE("neutral values change nothing") {
    ExperimentConfig c = apply_sweep_value(base, SweepParameter::pressure_multiple,
                                           1.0, MassConvention::fixed_temperature);
    CHECK(c.environment.pressure == base.environment.pressure);
    ExperimentConfig w = apply_sweep_value(base, SweepParameter::velocity_selection,
                                           0.0, MassConvention::fixed_temperature);
    CHECK(!w.beam.has_window());
  }

  SUBCASE("invalid values are rejected") {
    CHECK_THROWS_AS(apply_sweep_value(base, SweepParameter::pressure_multiple,
                                      0.0, MassConvention::fixed_temperature),
                    ConfigError);
    CHECK_THROWS_AS(apply_sweep_value(base, SweepParameter::velocity_selection,
                                      -0.1, MassConvention::fixed_temperature),
                    ConfigError);
    CHECK_THROWS_AS(apply_sweep_value(base, SweepParameter::velocity_selection,
                                      2.0, MassConvention::fixed_temperature),
                    ConfigError);
    ExperimentConfig mono = testing::fullerene_config();
    CHECK_THROWS_AS(apply_sweep_value(mono, SweepParameter::velocity_selection,
                                      0.1, MassConvention::fixed_temperature),
                    ConfigError);
  }
}

TEST_CASE("sweep parameter names round-trip") {
  for (SweepParameter p :
       {SweepParameter::mass_multiple, SweepParameter::pressure_multiple,
        SweepParameter::distance_multiple, SweepParameter::velocity_selection}) {
    CHECK(sweep_parameter_from_string(to_string(p)) == p);
  }
  CHECK_THROWS_AS(sweep_parameter_from_string("granularity"), ConfigError);
}

TEST_CASE("pressure sweep degrades the fringes monotonically") {
  SweepSpec spec = make_spec(SweepParameter::pressure_multiple, {1.0, 2.0, 5.0, 10.0});
  auto x = make_grid(3.2 * base_order(), 641);
  SweepResult res = run_sweep(spec, x);

  CHECK(pattern_peak(res.base_curve) == 1.0);  // exactly, by construction
  REQUIRE(res.points.size() == 4);
  for (const SweepPoint& p : res.points) CHECK(p.ok);

  // multiplier 1 is the base case itself
  for (std::size_t i = 0; i < x.size(); ++i) {
    CHECK(res.points[0].curve.intensity[i] == res.base_curve.intensity[i]);
  }

  for (std::size_t i = 1; i < res.points.size(); ++i) {
    CHECK(res.points[i].visibility < res.points[i - 1].visibility);
  }
}

TEST_CASE("distance sweep trades contrast for fringe spacing") {
  SweepSpec spec = make_spec(SweepParameter::distance_multiple, {0.5, 1.0, 2.0, 4.0});
  auto x = make_grid(3.2 * base_order(), 641);
  SweepResult res = run_sweep(spec, x);

  REQUIRE(res.points.size() == 4);
  for (const SweepPoint& p : res.points) CHECK(p.ok);
  for (std::size_t i = 1; i < res.points.size(); ++i) {
    CHECK(res.points[i].visibility < res.points[i - 1].visibility);
  }
  // wider fringes fit fewer maxima into the same window
  CHECK(res.points[3].fringe_count < res.points[1].fringe_count);
}

TEST_CASE("heavier molecules from a thermal source lose contrast") {
  SweepSpec spec = make_spec(SweepParameter::mass_multiple, {1.0, 2.0, 4.0});
  auto x = make_grid(3.2 * base_order(), 641);
  SweepResult res = run_sweep(spec, x);

  REQUIRE(res.points.size() == 3);
  for (const SweepPoint& p : res.points) CHECK(p.ok);
  for (std::size_t i = 1; i < res.points.size(); ++i) {
    CHECK(res.points[i].visibility < res.points[i - 1].visibility);
  }
}

TEST_CASE("velocity selection recovers washed-out fringes") {
  SweepSpec spec = make_spec(SweepParameter::velocity_selection, {0.0, 0.1});
  auto x = make_grid(3.2 * base_order(), 641);
  SweepResult res = run_sweep(spec, x);

  REQUIRE(res.points.size() == 2);
  CHECK(res.points[0].ok);
  CHECK(res.points[1].ok);
  CHECK(res.points[1].fringe_count > res.points[0].fringe_count);
  CHECK(res.points[1].visibility > res.points[0].visibility);
}

TEST_CASE("a failing point does not take the sweep down") {
  SweepSpec spec = make_spec(SweepParameter::pressure_multiple, {1.0, -3.0, 2.0});
  auto x = make_grid(3.2 * base_order(), 641);
  SweepResult res = run_sweep(spec, x);

  REQUIRE(res.points.size() == 3);
  CHECK(res.points[0].ok);
  CHECK(!res.points[1].ok);
  CHECK(!res.points[1].error.empty());
  CHECK(res.points[1].curve.size() == 0);
  CHECK(res.points[2].ok);
  CHECK(res.points[2].visibility > 0.0);
}

TEST_CASE("parallel and serial sweeps are identical") {
  SweepSpec spec = make_spec(SweepParameter::pressure_multiple,
                             {1.0, 2.0, 5.0, 10.0});
  auto x = make_grid(3.2 * base_order(), 641);
  SweepResult serial = run_sweep(spec, x, 1);
  SweepResult parallel = run_sweep(spec, x, 4);

  REQUIRE(serial.points.size() == parallel.points.size());
  CHECK(serial.base_peak == parallel.base_peak);
  for (std::size_t p = 0; p < serial.points.size(); ++p) {
    CHECK(serial.points[p].visibility == parallel.points[p].visibility);
    CHECK(serial.points[p].fringe_count == parallel.points[p].fringe_count);
    REQUIRE(serial.points[p].curve.size() == parallel.points[p].curve.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      CHECK(serial.points[p].curve.intensity[i] ==
            parallel.points[p].curve.intensity[i]);
    }
  }
}
