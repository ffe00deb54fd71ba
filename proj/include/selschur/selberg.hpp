#pragma once

#include <complex>
#include <string>
#include <vector>

#include "selschur/partitions.hpp"

namespace selschur {

using Complex = std::complex<double>;

// Parameters of the weight prod_i y_i^(a-1)(1-y_i)^(b-1)
// prod_{i<j} |y_i-y_j|^(2 rho) on (0,1)^N, plus the derived exponents
// alpha = a/rho, beta = b/rho, gamma = 1/rho.
struct SelbergParams {
  Complex a{1.0, 0.0};
  Complex b{1.0, 0.0};
  Complex rho{1.0, 0.0};
  int n_vars = 1;

  Complex alpha() const;
  Complex beta() const;
  Complex gamma() const;
  bool is_real() const;
  void validate() const;  // n_vars >= 1

  friend bool operator==(const SelbergParams&, const SelbergParams&) = default;
};

struct ConditionViolation {
  std::string name;
  double slack;  // negative means violated

  friend bool operator==(const ConditionViolation&,
                         const ConditionViolation&) = default;
};

// Convergence report: real_ok covers the real-line integral inequalities,
// complex_ok additionally the two plane-integral inequalities. Only failed
// inequalities are listed in `violated`.
struct ConditionReport {
  bool real_ok = false;
  bool complex_ok = false;
  std::vector<ConditionViolation> violated;

  friend bool operator==(const ConditionReport&,
                         const ConditionReport&) = default;
};

ConditionReport validate_conditions(const SelbergParams& p);

// Overflow-safe (log-magnitude, phase) form of a value given its complex
// logarithm; phase reduced to (-pi, pi].
struct LogComplex {
  double log_abs;
  double arg;
};
LogComplex to_logform(Complex log_value);

// log of the N-fold beta-type product integral J(0); every gamma factor is
// evaluated in log space and summed, so large N cannot overflow.
Complex log_selberg_j0(const SelbergParams& p);
Complex selberg_j0(const SelbergParams& p);

// Integral of the elementary symmetric polynomial e_m against the weight:
// C(N,m) J(0) prod_{i<=m} (a+(N-i)rho)/(a+b+(2N-i-1)rho).
Complex aomoto(const SelbergParams& p, int m);
Complex log_aomoto(const SelbergParams& p, int m);

// rho = 1 closed form for any partition:
// s_lam(1^N) J(0) [a+N-1]_lam / [a+b+2N-2]_lam.
Complex kadell_rho1(const SelbergParams& p, const Partition& lam);
Complex log_kadell_rho1(const SelbergParams& p, const Partition& lam);

// Integral of the plain monomial y_1^2..y_n^2 y_(n+1)..y_m against the
// weight: J(0) times generalized-Pochhammer ratios times a terminating 3F2.
Complex monomial_two_column_integral(const SelbergParams& p, int n, int m);
Complex log_monomial_two_column_integral(const SelbergParams& p, int n, int m);

// Closed form of the normalized monomial integral Psi(m, n):
// sum_{k=0}^n C(N-m,k) prod_{i=1}^{n-k}
//   (a+b+(N-i-1)rho)(a+1+(N-i)rho) / (i rho (a+b+1+(2N-i-1)rho)).
Complex psi_closed_form(const SelbergParams& p, int m, int n);

// Integral of the Schur polynomial for a two-column shape:
// m_lam(1^N) J(0) times generalized-Pochhammer ratios times a terminating
// 4F3.
Complex selberg_schur(const SelbergParams& p, const TwoColumnShape& shape);
Complex log_selberg_schur(const SelbergParams& p, const TwoColumnShape& shape);

}  // namespace selschur
