#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "mwi/constants.hpp"
#include "mwi/errors.hpp"
#include "mwi/farfield.hpp"
#include "mwi/quadrature.hpp"

namespace mwi {

namespace {

using cdouble = std::complex<double>;

// One quadrature order of the two-coordinate screen integral.
//
// The initial amplitude is a sum of identical slit profiles phi centred at
// c_i. Writing both integration variables relative to slit centres turns the
// double integral into a sum over slit pairs coupled by a kernel that only
// depends on the centre separation, so the kernel matrices are cached per
// separation and reused for every screen position.
class OracleEvaluator {
 public:
  OracleEvaluator(const GratingParams& params, double ell, int order)
      : params_(params), order_(order) {
    inv_ell2_ = std::isfinite(ell) ? 1.0 / (ell * ell) : 0.0;
    const double r = params.aperture.support_radius();
    const GaussLegendre rule = gauss_legendre_on(order, -r, r);
    xi_ = rule.node;
    weight_ = rule.weight;
    const int n_slits = params.slit_count;
    centre_.resize(n_slits);
    for (int i = 0; i < n_slits; ++i) {
      centre_[i] = (2.0 * i - n_slits + 1.0) * params.period / 2.0;
    }
    // coupling kernels per centre separation m >= 0:
    //   K_m[k][k'] = exp(-((m D) + xi_k - xi_k')^2 / (2 ell^2))
    // the m < 0 kernel is the transpose.
    kernel_.resize(n_slits);
    for (int m = 0; m < n_slits; ++m) {
      kernel_[m].resize(static_cast<std::size_t>(order) * order);
      const double sep = m * params.period;
      for (int k = 0; k < order; ++k) {
        for (int kp = 0; kp < order; ++kp) {
          const double d = sep + xi_[k] - xi_[kp];
          kernel_[m][static_cast<std::size_t>(k) * order + kp] =
              std::exp(-0.5 * d * d * inv_ell2_);
        }
      }
    }
  }

  double intensity(double x) const {
    const double lamL = params_.lambda_L();
    const double pref = constants::pi / lamL;
    const int n_slits = params_.slit_count;
    const int order = order_;
    // u_i[k] = w_k phi(xi_k) exp{i pi (x0^2 - 2 x x0) / (lambda L)},
    // x0 = c_i + xi_k. The primed coordinate contributes the conjugate.
    std::vector<std::vector<cdouble>> u(n_slits);
    for (int i = 0; i < n_slits; ++i) {
      u[i].resize(order);
      for (int k = 0; k < order; ++k) {
        const double x0 = centre_[i] + xi_[k];
        const double phase = pref * (x0 * x0 - 2.0 * x * x0);
        u[i][k] = weight_[k] * params_.aperture.value(xi_[k]) *
                  cdouble(std::cos(phase), std::sin(phase));
      }
    }
    // sum_i term_ii + 2 Re sum_{i<j} term_ij, term_ij = u_i^T K_{i-j} conj(u_j)
    double total = 0.0;
    std::vector<cdouble> y(order);
    for (int i = 0; i < n_slits; ++i) {
      for (int j = i; j < n_slits; ++j) {
        const int m = j - i;
        // y = K_m^T conj(u_j); K_{i-j} = K_{-(m)} = K_m transposed
        const std::vector<double>& ker = kernel_[m];
        for (int k = 0; k < order; ++k) y[k] = cdouble(0.0, 0.0);
        for (int k = 0; k < order; ++k) {
          const cdouble uj = std::conj(u[j][k]);
          const std::size_t row = static_cast<std::size_t>(k) * order;
          for (int kp = 0; kp < order; ++kp) {
            y[kp] += ker[row + kp] * uj;
          }
        }
        cdouble term(0.0, 0.0);
        for (int k = 0; k < order; ++k) term += u[i][k] * y[k];
        total += (m == 0) ? term.real() : 2.0 * term.real();
      }
    }
    return total / lamL;
  }

 private:
  GratingParams params_;
  int order_;
  double inv_ell2_ = 0.0;
  std::vector<double> xi_, weight_, centre_;
  std::vector<std::vector<double>> kernel_;
};

}  // namespace

Pattern screen_intensity_oracle(const std::vector<double>& x,
                                const GratingParams& params, double ell,
                                double abs_tol_frac) {
  if (params.slit_count < 1 || params.slit_count > 10) {
    throw ConfigError("oracle: slit count must be between 1 and 10");
  }
  if (!(ell > 0.0)) throw ConfigError("oracle: ell must be positive");
  if (!(abs_tol_frac > 0.0)) {
    throw ConfigError("oracle: tolerance must be positive");
  }

  Pattern out;
  out.x = x;
  out.norm = Normalization::density;

  std::vector<double> prev;
  double achieved = std::numeric_limits<double>::infinity();
  for (int order = 24; order <= 384; order *= 2) {
    OracleEvaluator eval(params, ell, order);
    std::vector<double> cur(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) cur[i] = eval.intensity(x[i]);
    if (!prev.empty()) {
      double scale = 0.0;
      for (double v : cur) scale = std::max(scale, std::abs(v));
      double diff = 0.0;
      for (std::size_t i = 0; i < cur.size(); ++i) {
        diff = std::max(diff, std::abs(cur[i] - prev[i]));
      }
      achieved = (scale > 0.0) ? diff / scale : diff;
      if (achieved <= abs_tol_frac) {
        out.intensity = std::move(cur);
        return out;
      }
    }
    prev = std::move(cur);
  }
  throw ConvergenceError(
      "oracle: quadrature order cap reached before the refinement settled",
      achieved);
}

}  // namespace mwi
