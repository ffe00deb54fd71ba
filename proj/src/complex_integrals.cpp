#include "selschur/complex_integrals.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "selschur/errors.hpp"
#include "selschur/special.hpp"

namespace selschur {

namespace {

bool is_integer_real(Complex z) {
  double scale = 1.0 + std::abs(z.real());
  return std::abs(z.imag()) <= 1e-12 * scale &&
         std::abs(z.real() - std::nearbyint(z.real())) <= 1e-12 * scale;
}

Complex sin_denominator(Complex arg, const char* what, int index) {
  if (is_integer_real(arg)) {
    std::ostringstream os;
    os << what << " vanishes at factor i=" << index;
    throw SineZeroError(os.str(), index);
  }
  return sinpi(arg);
}

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

// log J(lam) through whichever closed form applies.
Complex log_j_closed(const SelbergParams& p, const Partition& lam) {
  if (lam.length() > p.n_vars)
    throw std::invalid_argument("partition longer than N");
  if (auto shape = as_two_column(lam, p.n_vars))
    return log_selberg_schur(p, *shape);
  if (p.rho == Complex(1.0)) return log_kadell_rho1(p, lam);
  throw UnsupportedPartitionError(
      "no closed form: partition has parts > 2 and rho != 1");
}

}  // namespace

Complex sine_factor(const SelbergParams& p) {
  p.validate();
  int N = p.n_vars;
  Complex prod = 1.0;
  for (int i = 1; i <= N; ++i) {
    double ni = N - i;
    prod *= sinpi(p.a + ni * p.rho) * sinpi(p.b + ni * p.rho) /
            sin_denominator(p.a + p.b + static_cast<double>(2 * N - i - 1) * p.rho,
                            "s(a+b+(2N-i-1)rho)", i);
    if (i >= 2) {
      // The i = 1 ratio s(rho)/s(rho) is cancelled exactly.
      prod *= sinpi(static_cast<double>(i) * p.rho) /
              sin_denominator(p.rho, "s(rho)", i);
    }
  }
  return prod;
}

Complex dotsenko_j00(const SelbergParams& p) {
  return std::exp(2.0 * log_selberg_j0(p) - log_factorial(p.n_vars)) *
         sine_factor(p);
}

Complex complex_aomoto(const SelbergParams& p, int m, int mbar) {
  if (m < 0 || m > p.n_vars || mbar < 0 || mbar > p.n_vars)
    throw std::invalid_argument("complex_aomoto requires 0 <= m, mbar <= N");
  return std::exp(log_aomoto(p, m) + log_aomoto(p, mbar) -
                  log_factorial(p.n_vars)) *
         sine_factor(p);
}

Complex complex_selberg_schur(const SelbergParams& p,
                              const ComplexPairShape& shapes) {
  return std::exp(log_j_closed(p, shapes.left) +
                  log_j_closed(p, shapes.right) - log_factorial(p.n_vars)) *
         sine_factor(p);
}

SelbergParams reflected_params(const SelbergParams& p, const Partition& lam) {
  p.validate();
  if (lam.length() > p.n_vars)
    throw std::invalid_argument("partition longer than N");
  SelbergParams out = p;
  out.a = 1.0 - p.a - p.b - 2.0 * static_cast<double>(p.n_vars - 1) * p.rho -
          static_cast<double>(lam.part(1) + lam.part(p.n_vars));
  return out;
}

Complex corollary12_ratio(const SelbergParams& p) {
  p.validate();
  int N = p.n_vars;
  Complex prod = 1.0;
  for (int i = 1; i <= N; ++i) {
    prod *= sinpi(p.a + static_cast<double>(N - i) * p.rho) /
            sin_denominator(p.a + p.b + static_cast<double>(2 * N - i - 1) * p.rho,
                            "s(a+b+(2N-i-1)rho)", i);
  }
  return prod;
}

Complex region_recursion_factor(const SelbergParams& p, int q) {
  p.validate();
  int N = p.n_vars;
  if (q < 1 || q > N)
    throw std::invalid_argument("region recursion requires 1 <= q <= N");
  Complex out = static_cast<double>(q) / static_cast<double>(N - q + 1);
  out *= sinpi(p.a + p.b + static_cast<double>(N + q - 2) * p.rho) /
         sin_denominator(p.a + static_cast<double>(q - 1) * p.rho,
                         "s(a+(q-1)rho)", q);
  if (N - q + 1 != q) {
    out *= sinpi(static_cast<double>(N - q + 1) * p.rho) /
           sin_denominator(static_cast<double>(q) * p.rho, "s(q rho)", q);
  }
  return out;
}

}  // namespace selschur
