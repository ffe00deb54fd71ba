#include "selschur/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "selschur/detail/kahan.hpp"
#include "selschur/errors.hpp"

namespace selschur {

namespace {

constexpr double kPi = std::numbers::pi;

// 13-term Lanczos rational approximation for the right half plane,
// g = 6.024680040776729583740234375. Same table as the widely used
// double-precision set; the leading numerator coefficient is sqrt(2 pi).
constexpr double kLanczosG = 6.024680040776729583740234375;
constexpr double kLanczosNum[13] = {
    23531376880.410759688572007674451636754734,
    42919803642.649098768957899047001988850926,
    35711959237.355668049440185451547166705960,
    17921034426.037209699919755754458931112671,
    6039542586.3520280050642916443072979210699,
    1439720407.3117216736632230727949123939715,
    248874557.86205415651146038641322942321632,
    31426415.585400194380614231628318205362874,
    2876370.6289353724412254090516208496135991,
    186056.26539522349504029498971604569928220,
    8071.6720023658162106380029022722506138218,
    210.82427775157934587250973392071336271166,
    2.5066282746310002701649081771338373386264,
};
constexpr double kLanczosDen[13] = {
    0.0,         39916800.0, 120543840.0, 150917976.0, 105258076.0,
    45995730.0,  13339535.0, 2637558.0,   357423.0,    32670.0,
    1925.0,      66.0,       1.0,
};

Complex lanczos_sum(Complex z) {
  if (std::abs(z) > 1e8) {
    // Evaluate in 1/z so the degree-12 powers cannot overflow.
    Complex w = 1.0 / z;
    Complex num = kLanczosNum[0];
    Complex den = kLanczosDen[0];
    for (int i = 1; i < 13; ++i) {
      num = num * w + kLanczosNum[i];
      den = den * w + kLanczosDen[i];
    }
    return num / den;
  }
  Complex num = kLanczosNum[12];
  Complex den = kLanczosDen[12];
  for (int i = 11; i >= 0; --i) {
    num = num * z + kLanczosNum[i];
    den = den * z + kLanczosDen[i];
  }
  return num / den;
}

bool is_real_nonpositive_integer(Complex z, double tol) {
  double scale = 1.0 + std::abs(z.real());
  if (std::abs(z.imag()) > tol * scale) return false;
  double r = std::nearbyint(z.real());
  return r <= 0.0 && std::abs(z.real() - r) <= tol * scale;
}

bool is_odd_integer_valued(double m) {
  return std::fmod(std::abs(m), 2.0) == 1.0;
}

}  // namespace

bool is_nonpositive_integer(Complex z) {
  return is_real_nonpositive_integer(z, 1e-9);
}

Complex log_gamma(Complex z) {
  if (is_real_nonpositive_integer(z, 1e-12))
    throw PoleError("log_gamma: pole at nonpositive integer");
  if (z.real() >= 0.5) {
    Complex zgh = z + (kLanczosG - 0.5);
    return std::log(lanczos_sum(z)) + (z - 0.5) * std::log(zgh) - zgh;
  }
  return std::log(kPi) - log_sinpi(z) - log_gamma(1.0 - z);
}

Complex sinpi(Complex z) {
  double n = std::nearbyint(z.real());
  double r = z.real() - n;  // in [-1/2, 1/2]
  double y = z.imag();
  Complex s;
  if (y == 0.0) {
    s = Complex(std::sin(kPi * r), 0.0);  // exact zero at integers
  } else {
    s = Complex(std::sin(kPi * r) * std::cosh(kPi * y),
                std::cos(kPi * r) * std::sinh(kPi * y));
  }
  return is_odd_integer_valued(n) ? -s : s;
}

Complex log_sinpi(Complex z) {
  double scale = 1.0 + std::abs(z.real());
  if (std::abs(z.imag()) <= 1e-13 * scale &&
      std::abs(z.real() - std::nearbyint(z.real())) <= 1e-13 * scale)
    throw PoleError("log_sinpi: zero of sin(pi z) at integer argument");
  if (z.imag() < 0.0) return std::conj(log_sinpi(std::conj(z)));
  double m = std::floor(z.real());
  Complex f = z - m;  // Re(f) in [0,1), Im(f) >= 0
  // sin(pi f) = (i/2) e^{-i pi f} (1 - e^{2 i pi f}); the last factor has
  // magnitude <= 1, so this form cannot overflow as Im grows.
  Complex val = std::log(Complex(0.0, 0.5)) - Complex(0.0, kPi) * f +
                std::log(1.0 - std::exp(Complex(0.0, 2.0 * kPi) * f));
  if (is_odd_integer_valued(m)) val += Complex(0.0, kPi);
  return val;
}

Complex pochhammer(Complex a, int k) {
  if (k < 0) throw std::invalid_argument("pochhammer: negative index");
  Complex out = 1.0;
  for (int i = 0; i < k; ++i) out *= a + static_cast<double>(i);
  return out;
}

Complex gen_pochhammer(Complex a, const Partition& lam, Complex rho) {
  Complex out = 1.0;
  for (int i = 1; i <= lam.length(); ++i)
    out *= pochhammer(a - static_cast<double>(i - 1) * rho, lam.part(i));
  return out;
}

int HypSpec::termination_length() const {
  int best = std::numeric_limits<int>::max();
  for (const Complex& p : num) {
    if (is_nonpositive_integer(p))
      best = std::min(best, static_cast<int>(-std::nearbyint(p.real())));
  }
  if (best == std::numeric_limits<int>::max())
    throw HypSeriesError(
        "hypergeometric series has no nonpositive-integer numerator "
        "parameter");
  return best;
}

Complex hyp_terminating(const HypSpec& spec) {
  int n = spec.termination_length();
  for (const Complex& d : spec.den) {
    if (is_nonpositive_integer(d) &&
        -std::nearbyint(d.real()) <= static_cast<double>(n - 1))
      throw HypSeriesError(
          "hypergeometric denominator Pochhammer vanishes before "
          "termination");
  }
  detail::KahanSum<Complex> acc;
  Complex term = 1.0;
  acc.add(term);
  for (int k = 0; k < n; ++k) {
    Complex ratio = 1.0 / static_cast<double>(k + 1);
    for (const Complex& a : spec.num) ratio *= a + static_cast<double>(k);
    for (const Complex& d : spec.den) ratio /= d + static_cast<double>(k);
    term *= ratio;
    acc.add(term);
  }
  return acc.sum;
}

double binomial_real(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  try {
    return static_cast<double>(binomial_ll(n, k));
  } catch (const std::overflow_error&) {
    long double r = 1.0L;
    k = std::min(k, n - k);
    for (int i = 1; i <= k; ++i)
      r *= static_cast<long double>(n - k + i) / static_cast<long double>(i);
    return static_cast<double>(r);
  }
}

}  // namespace selschur
