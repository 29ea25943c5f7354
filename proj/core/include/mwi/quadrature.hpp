#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace mwi {

/// Nodes and weights of an n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
  std::vector<double> node;
  std::vector<double> weight;
};

/// Cached rule lookup; thread safe. Nodes are computed by Newton iteration
/// on the Legendre recurrence and are accurate to ~1e-15.
const GaussLegendre& gauss_legendre(int n);

/// Nodes and weights mapped to [a, b].
GaussLegendre gauss_legendre_on(int n, double a, double b);

/// Fixed-order Gauss-Legendre integral of f over [a, b].
double integrate_gl(const std::function<double(double)>& f, double a, double b, int n);

struct QuadratureResult {
  double value;
  double error; // estimate of the absolute error
};

/// Adaptive Gauss-Kronrod 7/15 integration with bisection.
/// Throws ConvergenceError when the tolerance cannot be met within max_depth
/// levels of subdivision.
QuadratureResult integrate_gk(const std::function<double(double)>& f, double a, double b,
                              double rel_tol, double abs_tol = 0.0, int max_depth = 40);

} // namespace mwi
