#include "mwi/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "mwi/constants.hpp"
#include "mwi/errors.hpp"

namespace mwi {

static GaussLegendre compute_gl(int n) {
  GaussLegendre r;
  r.node.resize(n);
  r.weight.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Tricomi initial guess for the i-th root of P_n, then Newton.
    double x = std::cos(constants::pi * (i + 0.75) / (n + 0.5));
    double p1 = 0.0;
    double p2 = 0.0;
    auto legendre_at = [&](double xv) {
      p1 = 1.0;
      p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * xv * p2 - j * p3) / (j + 1.0);
      }
    };
    for (int it = 0; it < 100; ++it) {
      legendre_at(x);
      double dp = n * (x * p1 - p2) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    legendre_at(x);
    double dp = n * (x * p1 - p2) / (x * x - 1.0);
    r.node[i] = -x;
    r.node[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.weight[i] = w;
    r.weight[n - 1 - i] = w;
  }
  return r;
}

const GaussLegendre& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, GaussLegendre> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gl(n)).first;
  return it->second;
}

GaussLegendre gauss_legendre_on(int n, double a, double b) {
  const GaussLegendre& base = gauss_legendre(n);
  GaussLegendre r;
  r.node.resize(n);
  r.weight.resize(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    r.node[i] = mid + half * base.node[i];
    r.weight[i] = half * base.weight[i];
  }
  return r;
}

double integrate_gl(const std::function<double(double)>& f, double a, double b, int n) {
  GaussLegendre r = gauss_legendre_on(n, a, b);
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += r.weight[i] * f(r.node[i]);
  return s;
}

namespace {

// Gauss-Kronrod 7/15 node and weight constants on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct GkEstimate {
  double kronrod;
  double error;
};

GkEstimate gk15(const std::function<double(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(mid);
  double rk = kWgk[7] * fc;
  double rg = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double fsum = f(mid - dx) + f(mid + dx);
    rk += kWgk[j] * fsum;
    if (j % 2 == 1) rg += kWg[j / 2] * fsum;
  }
  rk *= half;
  rg *= half;
  return {rk, std::abs(rk - rg)};
}

void gk_adapt(const std::function<double(double)>& f, double a, double b, double tol,
              int depth, int max_depth, double& acc, double& err_acc) {
  GkEstimate e = gk15(f, a, b);
  if (e.error <= tol || depth >= max_depth) {
    if (e.error > tol) {
      throw ConvergenceError("adaptive quadrature: subdivision limit reached", e.error);
    }
    acc += e.kronrod;
    err_acc += e.error;
    return;
  }
  const double mid = 0.5 * (a + b);
  gk_adapt(f, a, mid, tol * 0.5, depth + 1, max_depth, acc, err_acc);
  gk_adapt(f, mid, b, tol * 0.5, depth + 1, max_depth, acc, err_acc);
}

} // namespace

QuadratureResult integrate_gk(const std::function<double(double)>& f, double a, double b,
                              double rel_tol, double abs_tol, int max_depth) {
  GkEstimate whole = gk15(f, a, b);
  double tol = std::max(abs_tol, rel_tol * std::abs(whole.kronrod));
  if (tol <= 0.0) tol = abs_tol > 0.0 ? abs_tol : 1e-12;
  if (whole.error <= tol) return {whole.kronrod, whole.error};
  double acc = 0.0;
  double err = 0.0;
  const double mid = 0.5 * (a + b);
  gk_adapt(f, a, mid, tol * 0.5, 1, max_depth, acc, err);
  gk_adapt(f, mid, b, tol * 0.5, 1, max_depth, acc, err);
  return {acc, err};
}

} // namespace mwi
