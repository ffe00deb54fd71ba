#include "selschur/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace selschur {

namespace {

// Implicit-shift QL iteration for a symmetric tridiagonal matrix,
// accumulating only the first row of the eigenvector matrix (all that
// Golub-Welsch needs). d: diagonal (size n), e: subdiagonal (size n, last
// entry scratch), z: first-row components, initialized to (1,0,...,0).
void tridiag_eigen_first_row(std::vector<double>& d, std::vector<double>& e,
                             std::vector<double>& z) {
  const int n = static_cast<int>(d.size());
  const double eps = std::numeric_limits<double>::epsilon();
  if (n == 1) return;
  e[n - 1] = 0.0;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    for (;;) {
      for (m = l; m < n - 1; ++m) {
        double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (++iter > 50)
        throw std::runtime_error("tridiagonal eigen iteration failed");
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      bool underflow = false;
      for (int i = m - 1; i >= l; --i) {
        double f = s * e[i];
        double bb = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * bb;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - bb;
        f = z[i + 1];
        z[i + 1] = s * z[i] + c * f;
        z[i] = c * z[i] - s * f;
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }
}

}  // namespace

QuadratureRule gauss_jacobi_rule(double a_exp, double b_exp, int count) {
  if (!(a_exp > 0.0) || !(b_exp > 0.0))
    throw std::invalid_argument("gauss_jacobi_rule requires positive exponents");
  if (count < 1)
    throw std::invalid_argument("gauss_jacobi_rule requires count >= 1");

  // Standard-interval Jacobi weight (1-x)^alpha (1+x)^beta with
  // alpha = b_exp - 1, beta = a_exp - 1; mapped to (0,1) afterwards.
  const double al = b_exp - 1.0;
  const double be = a_exp - 1.0;
  const double ab = al + be;

  std::vector<double> d(count), e(count, 0.0), z(count, 0.0);
  z[0] = 1.0;
  d[0] = (be - al) / (ab + 2.0);
  for (int k = 1; k < count; ++k) {
    double denom = (2.0 * k + ab) * (2.0 * k + ab + 2.0);
    d[k] = (be * be - al * al) / denom;
    double e2;
    if (k == 1) {
      // k = 1 form with the (1+al+be) factor cancelled; the general
      // expression is 0/0 when al+be = -1.
      e2 = 4.0 * (al + 1.0) * (be + 1.0) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
    } else {
      e2 = 4.0 * k * (k + al) * (k + be) * (k + ab) /
           ((2.0 * k + ab) * (2.0 * k + ab) * (2.0 * k + ab + 1.0) *
            (2.0 * k + ab - 1.0));
    }
    if (!(e2 > 0.0))
      throw std::runtime_error("gauss_jacobi_rule: nonpositive recurrence term");
    e[k - 1] = std::sqrt(e2);
  }

  tridiag_eigen_first_row(d, e, z);

  const double mu0 =
      std::exp(std::lgamma(a_exp) + std::lgamma(b_exp) - std::lgamma(a_exp + b_exp));

  QuadratureRule rule;
  rule.nodes.resize(count);
  rule.weights.resize(count);
  std::vector<int> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return d[i] < d[j]; });
  for (int i = 0; i < count; ++i) {
    rule.nodes[i] = 0.5 * (d[order[i]] + 1.0);
    rule.weights[i] = mu0 * z[order[i]] * z[order[i]];
  }
  return rule;
}

}  // namespace selschur
