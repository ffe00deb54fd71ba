#include "selschur/symfunc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace selschur {

namespace {

Complex ipow(Complex base, int e) {
  Complex out = 1.0;
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

// Determinant by partial-pivot elimination; matrix is row-major n x n and
// clobbered. Degrees here never exceed N + 2, so cost is negligible.
Complex det_inplace(std::vector<Complex>& m, int n) {
  Complex det = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    double best = std::abs(m[col * n + col]);
    for (int r = col + 1; r < n; ++r) {
      double v = std::abs(m[r * n + col]);
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best == 0.0) return 0.0;
    if (pivot != col) {
      for (int c = col; c < n; ++c) std::swap(m[pivot * n + c], m[col * n + c]);
      det = -det;
    }
    det *= m[col * n + col];
    for (int r = col + 1; r < n; ++r) {
      Complex f = m[r * n + col] / m[col * n + col];
      for (int c = col; c < n; ++c) m[r * n + c] -= f * m[col * n + c];
    }
  }
  return det;
}

// Complete homogeneous polynomials h_0..h_max by the variable-by-variable
// recurrence; well-defined at coincident points.
std::vector<Complex> complete_homogeneous(const PointVector& y, int max_deg) {
  std::vector<Complex> h(max_deg + 1, Complex(0.0));
  h[0] = 1.0;
  for (int i = 0; i < y.size(); ++i)
    for (int k = 1; k <= max_deg; ++k) h[k] += y[i] * h[k - 1];
  return h;
}

}  // namespace

PointVector::PointVector(std::vector<Complex> coords)
    : coords_(std::move(coords)) {
  if (coords_.empty())
    throw std::invalid_argument("point vector must have positive length");
  for (const Complex& c : coords_)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw std::invalid_argument("point vector entries must be finite");
}

PointVector PointVector::ones(int n) {
  return PointVector(std::vector<Complex>(n, Complex(1.0)));
}

PointVector PointVector::of_real(std::span<const double> xs) {
  std::vector<Complex> c(xs.begin(), xs.end());
  return PointVector(std::move(c));
}

Complex elementary(int m, const PointVector& y) {
  if (m < 0 || m > y.size())
    throw std::invalid_argument("elementary requires 0 <= m <= N");
  std::vector<Complex> e(m + 1, Complex(0.0));
  e[0] = 1.0;
  for (int i = 0; i < y.size(); ++i)
    for (int k = std::min(m, i + 1); k >= 1; --k) e[k] += y[i] * e[k - 1];
  return e[m];
}

Complex monomial(const Partition& mu, const PointVector& y) {
  int n = y.size();
  if (mu.length() > n)
    throw std::invalid_argument("monomial requires length(mu) <= N");
  std::vector<int> expo(n, 0);
  std::copy(mu.parts().begin(), mu.parts().end(), expo.begin());
  std::sort(expo.begin(), expo.end());  // ascending start for permutations
  Complex sum = 0.0;
  do {
    Complex term = 1.0;
    for (int i = 0; i < n; ++i)
      if (expo[i] > 0) term *= ipow(y[i], expo[i]);
    sum += term;
  } while (std::next_permutation(expo.begin(), expo.end()));
  return sum;
}

Complex schur_bialternant(const Partition& lam, const PointVector& y) {
  int n = y.size();
  if (lam.length() > n)
    throw std::invalid_argument("schur requires length(lam) <= N");
  std::vector<Complex> num(static_cast<std::size_t>(n) * n);
  std::vector<Complex> den(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int shift = n - 1 - j;
      num[i * n + j] = ipow(y[i], lam.part(j + 1) + shift);
      den[i * n + j] = ipow(y[i], shift);
    }
  }
  Complex d = det_inplace(den, n);
  if (d == Complex(0.0))
    throw std::invalid_argument(
        "schur_bialternant: coincident coordinates (Vandermonde vanishes)");
  return det_inplace(num, n) / d;
}

Complex schur_jacobi_trudi(const Partition& lam, const PointVector& y) {
  int n = y.size();
  if (lam.length() > n)
    throw std::invalid_argument("schur requires length(lam) <= N");
  int rows = lam.length();
  if (rows == 0) return 1.0;
  int max_deg = lam.part(1) + rows;
  std::vector<Complex> h = complete_homogeneous(y, max_deg);
  std::vector<Complex> m(static_cast<std::size_t>(rows) * rows);
  for (int i = 1; i <= rows; ++i) {
    for (int j = 1; j <= rows; ++j) {
      int deg = lam.part(i) - i + j;
      m[(i - 1) * rows + (j - 1)] = deg < 0 ? Complex(0.0) : h[deg];
    }
  }
  return det_inplace(m, rows);
}

Complex schur(const Partition& lam, const PointVector& y) {
  int n = y.size();
  if (lam.length() > n)
    throw std::invalid_argument("schur requires length(lam) <= N");
  if (lam.empty()) return 1.0;
  if (auto shape = as_two_column(lam, n)) {
    // Dual Jacobi-Trudi 2x2 determinant in elementary polynomials: the e_k
    // recurrence has no cancellation on positive points, unlike both
    // determinant routes.
    std::vector<Complex> e(n + 2, Complex(0.0));
    e[0] = 1.0;
    for (int i = 0; i < n; ++i)
      for (int kk = std::min(n, i + 1); kk >= 1; --kk)
        e[kk] += y[i] * e[kk - 1];
    Complex s = e[shape->rows] * e[shape->twos];
    if (shape->twos >= 1)
      s -= e[shape->rows + 1] * e[shape->twos - 1];
    return s;
  }
  double max_abs = 0.0;
  for (int i = 0; i < n; ++i) max_abs = std::max(max_abs, std::abs(y[i]));
  double min_sep = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      min_sep = std::min(min_sep, std::abs(y[i] - y[j]));
  // The determinant ratio loses roughly log10(max/sep) digits per close
  // pair; below 5e-2 relative separation the h-determinant is the more
  // accurate route (and is well-defined at coincident points).
  if (n == 1 || min_sep > 5e-2 * max_abs) return schur_bialternant(lam, y);
  return schur_jacobi_trudi(lam, y);
}

double schur_inversion_residual(const Partition& lam, const PointVector& y) {
  int n = y.size();
  if (lam.length() > n)
    throw std::invalid_argument("schur requires length(lam) <= N");
  std::vector<Complex> inv(n);
  for (int i = 0; i < n; ++i) {
    if (y[i] == Complex(0.0))
      throw std::invalid_argument(
          "schur_inversion_residual requires nonzero coordinates");
    inv[i] = 1.0 / y[i];
  }
  Complex lhs = schur(lam, PointVector(std::move(inv)));
  Partition conj = n_conjugate(lam, n);
  Complex scale = 1.0;
  int e = lam.part(1) + lam.part(n);
  for (int i = 0; i < n; ++i) scale *= ipow(1.0 / y[i], e);
  Complex rhs = schur(conj, y) * scale;
  return std::abs(lhs - rhs) / (1.0 + std::abs(lhs));
}

}  // namespace selschur
