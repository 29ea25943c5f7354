// Hot paths: the harmonic far-field pattern, its blind quadrature oracle,
// the polychromatic detector pipeline and the damped self-image.

#include <benchmark/benchmark.h>

#include <vector>

#include "mwi/aperture.hpp"
#include "mwi/beam.hpp"
#include "mwi/config.hpp"
#include "mwi/farfield.hpp"
#include "mwi/pattern.hpp"
#include "mwi/talbot.hpp"

using namespace mwi;

namespace {

ExperimentConfig reference_config() {
  ExperimentConfig cfg;
  cfg.molecule.mass = 1.2e-24;
  cfg.molecule.radius = 3.5e-10;
  cfg.molecule.dielectric_constant = 4.0;
  cfg.molecule.emissivity = 4.5e-5;
  cfg.molecule.internal_temperature = 900.0;
  cfg.molecule.vibrational_photon_rate = 400.0;
  cfg.molecule.vibrational_wavenumber = 9e5;
  cfg.environment.temperature = 300.0;
  cfg.environment.pressure = 5e-6;
  cfg.environment.gas_mass = 4.8e-26;
  cfg.environment.cross_section = 9e-18;
  cfg.collimation.aperture = 1e-5;
  cfg.collimation.separation = 1.08;
  cfg.grating.period = 1e-7;
  cfg.grating.slit_width = 3.6e-8;
  cfg.grating.slit_count = 10;
  cfg.geometry.screen_distance = 1.25;
  cfg.beam.mode = BeamMode::supersonic;
  cfg.beam.v0 = 199.6072895484169;
  cfg.beam.v_hat = 53.89396817807257;
  return cfg;
}

GratingParams reference_grating() {
  GratingParams p;
  p.wavelength = 2.5e-12;
  p.distance = 1.25;
  p.period = 1e-7;
  p.slit_count = 10;
  p.aperture = ApertureModel::rectangular(3.6e-8);
  return p;
}

void bm_grating_pattern(benchmark::State& state) {
  GratingParams p = reference_grating();
  const double order = p.lambda_L() / p.period;
  auto x = make_grid(5.0 * order, 801);
  for (auto _ : state) {
    benchmark::DoNotOptimize(grating_pattern(x, p, 1.17e-7));
  }
}
BENCHMARK(bm_grating_pattern);

void bm_oracle_point(benchmark::State& state) {
  GratingParams p = reference_grating();
  const double order = p.lambda_L() / p.period;
  std::vector<double> x = {1.5 * order};
  for (auto _ : state) {
    benchmark::DoNotOptimize(screen_intensity_oracle(x, p, 1.17e-7));
  }
}
BENCHMARK(bm_oracle_point);

void bm_detected_pattern(benchmark::State& state) {
  ValidatedConfig cfg = validate(reference_config());
  VelocityDistribution dist = VelocityDistribution::from_config(cfg->beam);
  const double order = 3.14e-5;
  auto x = make_grid(3.0 * order, 201);
  for (auto _ : state) {
    benchmark::DoNotOptimize(detected_pattern(x, cfg, dist, 0.0, 0.0));
  }
}
BENCHMARK(bm_detected_pattern);

void bm_talbot_image_env(benchmark::State& state) {
  ApertureModel ap = ApertureModel::rectangular(3.6e-8);
  auto x = make_grid(1.25e-7, 501);
  for (auto _ : state) {
    benchmark::DoNotOptimize(talbot_image_env(x, ap, 1e-7, 1e-7));
  }
}
BENCHMARK(bm_talbot_image_env);

}  // namespace

BENCHMARK_MAIN();
