#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "mwi/pattern.hpp"

namespace mwi {

/// Free-particle Gaussian packet amplitude at position x and time t.
/// Initial state (2 pi sigma^2)^(-1/4) exp(-(x-x_center)^2/(4 sigma^2)
/// + i k (x-x_center)); evolution is the exact closed form, no grid.
/// Width grows as sigma(t) = sigma sqrt(1 + (hbar t / (2 m sigma^2))^2),
/// the centre drifts at hbar k / m.
std::complex<double> evolve_gaussian_1d(double x, double t, double sigma,
                                        double k, double x_center, double mass);

/// Spatial derivative of evolve_gaussian_1d at the same point, also closed
/// form; needed for probability currents.
std::complex<double> evolve_gaussian_1d_dx(double x, double t, double sigma,
                                           double k, double x_center,
                                           double mass);

/// Product state behind a grating: a sum of identical Gaussian slit packets
/// along x (zero transverse momentum) times a single forward Gaussian along
/// y carrying momentum hbar k_y. Normalized so the full 2D state has unit
/// probability.
struct GaussianBeamState {
  double mass = 0.0;
  double sigma_x = 0.0;
  double sigma_y = 0.0;
  double k_y = 0.0;
  std::vector<double> offsets;  ///< slit centres [m]
  double norm_x = 1.0;          ///< computed by make_beam_state

  double velocity() const;    ///< forward speed hbar k_y / mass
  double wavelength() const;  ///< de Broglie wavelength 2 pi / k_y

  /// transverse support span: offset spread plus 6 sigma_x
  double transverse_span() const;

  /// x-part amplitude and its spatial derivative at time t
  std::complex<double> psi_x(double x, double t) const;
  std::complex<double> psi_x_dx(double x, double t) const;
};

/// Validates fields and computes the overlap-aware normalization constant.
GaussianBeamState make_beam_state(double mass, double sigma_x, double sigma_y,
                                  double k_y, std::vector<double> offsets);

/// |Psi(x,y,t)|^2 of the product state [m^-2].
double probability_density(double x, double y, double t,
                           const GaussianBeamState& state);

/// Probability-current components [m^-2 s^-1].
double current_jx(double x, double y, double t, const GaussianBeamState& state);
double current_jy(double x, double y, double t, const GaussianBeamState& state);

/// Time-integrated forward current through the plane y = L.
struct ArrivalResult {
  Pattern pattern;                 ///< arrival density over the x grid [m^-1]
  double negative_fraction = 0.0;  ///< |negative current| share of the total
  bool slow_beam_warning = false;  ///< k_y sigma_y too small for positivity
};

/// Integrates J_y(x, L, t) over t in (0, t_max) with t_max extended until
/// the forward packet has fully crossed the plane. Negative current values
/// are kept (the formula is exact); their share is reported.
ArrivalResult arrival_intensity(const std::vector<double>& x, double L,
                                const GaussianBeamState& state);

/// First approximation: exact transverse density averaged over the packet's
/// classical crossing-time profile.
double approx_I1(double x, double L, const GaussianBeamState& state);

/// Second approximation: transverse density frozen at the mean arrival time
/// T = L / v.
double approx_I2(double x, double L, const GaussianBeamState& state);

/// Third approximation: far-field (Fourier) intensity of the initial
/// transverse state, closed form for the Gaussian slit sum.
double approx_I3(double x, double L, const GaussianBeamState& state);

/// Far-field intensity for an arbitrary initial transverse amplitude,
/// integrated numerically over the given support segments:
///   I(x) = (1 / lambda L) |integral psi0(xi) exp(-i kbar xi) dxi|^2,
/// kbar = 2 pi x / (lambda L). Reference route for non-Gaussian apertures.
double fraunhofer_from_initial(
    double x, double wavelength, double L,
    const std::function<std::complex<double>(double)>& psi0,
    const std::vector<std::pair<double, double>>& segments);

/// Characteristic times of a near-field run.
struct TimeScales {
  double tau = 0.0;       ///< transverse spreading time M dx^2 / hbar
  double flight = 0.0;    ///< mean crossing time L / v
  double crossing = 0.0;  ///< arrival-time spread sigma_y / v
};

TimeScales time_scales(const GaussianBeamState& state, double L);

}  // namespace mwi
