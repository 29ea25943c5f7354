#pragma once

#include <functional>

#include "mwi/config.hpp"

namespace mwi {

/// Single-slit transmission profile in position space, with its Fourier
/// transform available in closed form. The amplitude is dimensionless;
/// intensities built from `ft_squared` carry the aperture area squared.
class ApertureModel {
 public:
  /// Hard-edged slit of full width `width`.
  static ApertureModel rectangular(double width);

  /// Gaussian transmission with spatial spread `sigma`. The amplitude is
  /// scaled so the zero-frequency transform equals 6*sigma, the width of
  /// the effective support used for truncation decisions.
  static ApertureModel gaussian(double sigma);

  /// Build from a grating description (shape + width or sigma).
  static ApertureModel from_grating(const GratingSpec& grating);

  /// Transmission amplitude at transverse offset `xi` from the slit centre.
  double value(double xi) const { return value_(xi); }

  /// |FT of the amplitude|^2 at wavenumber `k`, plain convention
  /// FT(k) = integral of value(xi) * exp(-i k xi) d xi.
  double ft_squared(double k) const { return ft_squared_(k); }

  /// Offset beyond which the amplitude is zero (or negligible for the
  /// Gaussian profile, where 6 sigma of tail is kept).
  double support_radius() const { return support_radius_; }

  /// Area under the amplitude; equals sqrt(ft_squared(0)).
  double zero_mode() const { return zero_mode_; }

 private:
  ApertureModel() = default;

  std::function<double(double)> value_;
  std::function<double(double)> ft_squared_;
  double support_radius_ = 0.0;
  double zero_mode_ = 0.0;
};

/// Transverse-momentum spread of the incoming beam, represented by the
/// normalized characteristic function ratio(s) = p_hat(s) / p_hat(0).
/// ratio(0) == 1 and |ratio| <= 1 for any genuine momentum distribution.
class DivergenceModel {
 public:
  /// Perfectly collimated beam: ratio(s) == 1.
  static DivergenceModel collimated();

  /// Gaussian momentum spread with standard deviation `sigma_k`.
  static DivergenceModel gaussian(double sigma_k);

  /// Arbitrary normalized characteristic function supplied by the caller.
  /// The caller guarantees ratio(0) == 1.
  static DivergenceModel custom(std::function<double(double)> ratio);

  double ratio(double s) const { return ratio_(s); }

 private:
  DivergenceModel() = default;

  std::function<double(double)> ratio_;
};

}  // namespace mwi
