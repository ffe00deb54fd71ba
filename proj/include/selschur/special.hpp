#pragma once

#include <complex>
#include <vector>

#include "selschur/partitions.hpp"

namespace selschur {

using Complex = std::complex<double>;

// Principal-branch log Gamma. Right half plane via a 13-term Lanczos
// rational approximation (g ~ 6.0247); Re(z) < 0.5 through the reflection
// formula. Throws PoleError at nonpositive integers.
Complex log_gamma(Complex z);

// sin(pi z) with argument reduction on the real part, exact zero at
// integer z.
Complex sinpi(Complex z);

// log sin(pi z), overflow-safe in the imaginary direction. Throws PoleError
// at integer z.
Complex log_sinpi(Complex z);

// Rising factorial (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1.
Complex pochhammer(Complex a, int k);

// Row-wise product prod_i (a - (i-1) rho)_(lam_i); 1 on the empty partition.
Complex gen_pochhammer(Complex a, const Partition& lam, Complex rho);

// True iff z is (numerically) a nonpositive integer.
bool is_nonpositive_integer(Complex z);

// Parameters of a pFq series evaluated at unit argument, terminating
// because some numerator parameter is a nonpositive integer.
struct HypSpec {
  std::vector<Complex> num;
  std::vector<Complex> den;

  // Smallest -p over nonpositive-integer numerator parameters p; throws
  // HypSeriesError if no such parameter exists.
  int termination_length() const;
};

// Finite sum over k = 0..termination_length() with multiplicative term
// updates and compensated accumulation. Throws HypSeriesError if a
// denominator Pochhammer vanishes before termination.
Complex hyp_terminating(const HypSpec& spec);

// C(n, k) as a double; exact while the integer path fits.
double binomial_real(int n, int k);

}  // namespace selschur
