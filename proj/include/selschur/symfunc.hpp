#pragma once

#include <complex>
#include <span>
#include <vector>

#include "selschur/partitions.hpp"

namespace selschur {

using Complex = std::complex<double>;

// Evaluation point (y_1, ..., y_N); fixed positive length, finite entries.
class PointVector {
 public:
  explicit PointVector(std::vector<Complex> coords);
  static PointVector ones(int n);
  static PointVector of_real(std::span<const double> xs);

  int size() const { return static_cast<int>(coords_.size()); }
  const Complex& operator[](int i) const { return coords_[i]; }  // 0-based
  std::span<const Complex> coords() const { return coords_; }

 private:
  std::vector<Complex> coords_;
};

// Elementary symmetric polynomial e_m(y), via coefficient expansion of
// prod_i (1 + t y_i). Requires 0 <= m <= N.
Complex elementary(int m, const PointVector& y);

// Monomial symmetric polynomial m_mu(y): sum over distinct coordinate
// arrangements of the exponent multiset. Requires length(mu) <= N.
Complex monomial(const Partition& mu, const PointVector& y);

// Schur polynomial s_lam(y). Uses the bialternant determinant ratio on
// well-separated points and the Jacobi-Trudi determinant in complete
// homogeneous polynomials otherwise (stable at coincident coordinates).
Complex schur(const Partition& lam, const PointVector& y);

// The two evaluation routes, exposed for cross-checking.
Complex schur_bialternant(const Partition& lam, const PointVector& y);
Complex schur_jacobi_trudi(const Partition& lam, const PointVector& y);

// Scaled residual of the inversion identity
// s_lam(1/y) = s_(lam^N)(y) * prod_i y_i^(-lam_1-lam_N).
// Requires nonzero coordinates.
double schur_inversion_residual(const Partition& lam, const PointVector& y);

}  // namespace selschur
