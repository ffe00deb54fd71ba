#include "selschur/selberg.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "selschur/detail/kahan.hpp"
#include "selschur/errors.hpp"
#include "selschur/special.hpp"

namespace selschur {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

// log m_mu(1^N); -inf when the partition is longer than N.
double log_monomial_spec(const Partition& mu, int n_vars) {
  if (mu.length() > n_vars)
    return -std::numeric_limits<double>::infinity();
  double s = log_factorial(n_vars) - log_factorial(n_vars - mu.length());
  const auto& parts = mu.parts();
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    s -= log_factorial(static_cast<int>(j - i));
    i = j;
  }
  return s;
}

// log s_lam(1^N) by the hook-content product; -inf beyond length N.
double log_schur_spec(const Partition& lam, int n_vars) {
  if (lam.length() > n_vars)
    return -std::numeric_limits<double>::infinity();
  Partition conj = lam.conjugate();
  double s = 0.0;
  for (int i = 1; i <= lam.length(); ++i) {
    for (int j = 1; j <= lam.part(i); ++j) {
      double content = static_cast<double>(j - i);
      double hook = lam.part(i) - j + conj.part(j) - i + 1;
      s += std::log(n_vars + content) - std::log(hook);
    }
  }
  return s;
}

void require_nonzero_rho(const SelbergParams& p) {
  if (p.rho == Complex(0.0))
    throw DegenerateRhoError("rho must be nonzero for this closed form");
}

// prod over rows of (top - (i-1)rho)_(lam_i) / (bot - (i-1)rho)_(lam_i),
// multiplied row by row so magnitudes stay tame for large N.
Complex gen_poch_ratio(Complex top, Complex bot, const Partition& lam,
                       Complex rho) {
  Complex out = 1.0;
  for (int i = 1; i <= lam.length(); ++i) {
    Complex shift = static_cast<double>(i - 1) * rho;
    Complex den = pochhammer(bot - shift, lam.part(i));
    if (den == Complex(0.0))
      throw EvalError("vanishing generalized Pochhammer denominator");
    out *= pochhammer(top - shift, lam.part(i)) / den;
  }
  return out;
}

// [a+b+(N-2)rho]_n / [a+b+(2N-m-2)rho]_n, the single-column ratio of the
// two-column prefactor.
Complex column_ratio(const SelbergParams& p, int n, int m) {
  Complex out = 1.0;
  for (int i = 1; i <= n; ++i) {
    Complex num = p.a + p.b + static_cast<double>(p.n_vars - i - 1) * p.rho;
    Complex den =
        p.a + p.b + static_cast<double>(2 * p.n_vars - m - i - 1) * p.rho;
    if (den == Complex(0.0))
      throw EvalError("vanishing generalized Pochhammer denominator");
    out *= num / den;
  }
  return out;
}

Complex hyp_3f2_two_column(const SelbergParams& p, int n, int m) {
  double N = p.n_vars, dn = n, dm = m;
  Complex al = p.alpha(), be = p.beta(), ga = p.gamma();
  HypSpec spec;
  spec.num = {Complex(-dn), Complex(dm - N),
              al + be + ga + (2.0 * N - dn - 1.0)};
  spec.den = {al + be + (N - dn - 1.0), al + ga + (N - dn)};
  return hyp_terminating(spec);
}

Complex hyp_4f3_two_column(const SelbergParams& p, int n, int m) {
  double N = p.n_vars, dn = n, dm = m;
  Complex al = p.alpha(), be = p.beta(), ga = p.gamma();
  HypSpec spec;
  spec.num = {Complex(-dn), Complex(dm - N),
              al + be + ga + (2.0 * N - dn - 1.0), al + (N - dn + 1.0)};
  spec.den = {al + be + (N - dn - 1.0), al + ga + (N - dn),
              Complex(dm - dn + 2.0)};
  return hyp_terminating(spec);
}

}  // namespace

Complex SelbergParams::alpha() const {
  if (rho == Complex(0.0))
    throw DegenerateRhoError("alpha undefined at rho = 0");
  return a / rho;
}

Complex SelbergParams::beta() const {
  if (rho == Complex(0.0))
    throw DegenerateRhoError("beta undefined at rho = 0");
  return b / rho;
}

Complex SelbergParams::gamma() const {
  if (rho == Complex(0.0))
    throw DegenerateRhoError("gamma undefined at rho = 0");
  return 1.0 / rho;
}

bool SelbergParams::is_real() const {
  return a.imag() == 0.0 && b.imag() == 0.0 && rho.imag() == 0.0;
}

void SelbergParams::validate() const {
  if (n_vars < 1) throw std::invalid_argument("N must be positive");
}

ConditionReport validate_conditions(const SelbergParams& p) {
  p.validate();
  ConditionReport report;
  double re_a = p.a.real();
  double re_b = p.b.real();
  double re_r = p.rho.real();
  int N = p.n_vars;

  std::vector<ConditionViolation> checks;
  checks.push_back({"Re(a) > 0", re_a});
  checks.push_back({"Re(b) > 0", re_b});
  if (N == 1) {
    checks.push_back({"Re(rho) > -1", re_r + 1.0});
  } else {
    double bound =
        std::min({1.0 / N, re_a / (N - 1), re_b / (N - 1)});
    checks.push_back({"Re(rho) > -min(1/N, Re(a)/(N-1), Re(b)/(N-1))",
                      re_r + bound});
  }
  report.real_ok = true;
  for (const auto& c : checks) {
    if (!(c.slack > 0.0)) {
      report.real_ok = false;
      report.violated.push_back(c);
    }
  }

  double c1 = 1.0 - (re_a + re_b + (N - 1) * re_r);
  double c2 = 1.0 - (re_a + re_b + (2 * N - 2) * re_r);
  report.complex_ok = report.real_ok;
  for (const ConditionViolation& c :
       {ConditionViolation{"Re(a+b+(N-1)rho) < 1", c1},
        ConditionViolation{"Re(a+b+(2N-2)rho) < 1", c2}}) {
    if (!(c.slack > 0.0)) {
      report.complex_ok = false;
      report.violated.push_back(c);
    }
  }
  return report;
}

LogComplex to_logform(Complex log_value) {
  return {log_value.real(), std::remainder(log_value.imag(), kTwoPi)};
}

Complex log_selberg_j0(const SelbergParams& p) {
  p.validate();
  Complex sum = 0.0;
  int N = p.n_vars;
  for (int i = 1; i <= N; ++i) {
    double ni = N - i;
    sum += log_gamma(p.a + ni * p.rho) + log_gamma(p.b + ni * p.rho) +
           log_gamma(static_cast<double>(i) * p.rho + 1.0) -
           log_gamma(p.a + p.b + static_cast<double>(2 * N - i - 1) * p.rho) -
           log_gamma(p.rho + 1.0);
  }
  return sum;
}

Complex selberg_j0(const SelbergParams& p) {
  return std::exp(log_selberg_j0(p));
}

namespace {

Complex aomoto_ratio(const SelbergParams& p, int m) {
  Complex out = 1.0;
  for (int i = 1; i <= m; ++i) {
    Complex den =
        p.a + p.b + static_cast<double>(2 * p.n_vars - i - 1) * p.rho;
    if (den == Complex(0.0)) throw EvalError("vanishing Aomoto denominator");
    out *= (p.a + static_cast<double>(p.n_vars - i) * p.rho) / den;
  }
  return out;
}

}  // namespace

Complex aomoto(const SelbergParams& p, int m) {
  p.validate();
  if (m < 0 || m > p.n_vars)
    throw std::invalid_argument("aomoto requires 0 <= m <= N");
  return std::exp(log_selberg_j0(p)) * binomial_real(p.n_vars, m) *
         aomoto_ratio(p, m);
}

Complex log_aomoto(const SelbergParams& p, int m) {
  p.validate();
  if (m < 0 || m > p.n_vars)
    throw std::invalid_argument("aomoto requires 0 <= m <= N");
  return log_selberg_j0(p) + std::log(binomial_real(p.n_vars, m)) +
         std::log(aomoto_ratio(p, m));
}

Complex kadell_rho1(const SelbergParams& p, const Partition& lam) {
  return std::exp(log_kadell_rho1(p, lam));
}

Complex log_kadell_rho1(const SelbergParams& p, const Partition& lam) {
  p.validate();
  if (p.rho != Complex(1.0))
    throw std::invalid_argument("kadell_rho1 requires rho = 1 exactly");
  if (lam.length() > p.n_vars)
    throw std::invalid_argument("kadell_rho1 requires length(lam) <= N");
  double N = p.n_vars;
  Complex ratio =
      gen_poch_ratio(p.a + N - 1.0, p.a + p.b + 2.0 * N - 2.0, lam, p.rho);
  return log_selberg_j0(p) + log_schur_spec(lam, p.n_vars) + std::log(ratio);
}

Complex monomial_two_column_integral(const SelbergParams& p, int n, int m) {
  return std::exp(log_monomial_two_column_integral(p, n, m));
}

Complex log_monomial_two_column_integral(const SelbergParams& p, int n,
                                         int m) {
  p.validate();
  if (n < 0 || n > m || m > p.n_vars)
    throw std::invalid_argument("requires 0 <= n <= m <= N");
  require_nonzero_rho(p);
  double N = p.n_vars;
  Partition lam = TwoColumnShape{n, m, p.n_vars}.to_partition();
  Complex ratio1 = gen_poch_ratio(p.a + (N - 1.0) * p.rho,
                                  p.a + p.b + 2.0 * (N - 1.0) * p.rho, lam,
                                  p.rho);
  Complex ratio2 = column_ratio(p, n, m);
  Complex f = hyp_3f2_two_column(p, n, m);
  return log_selberg_j0(p) + std::log(ratio1) + std::log(ratio2) +
         std::log(f);
}

Complex psi_closed_form(const SelbergParams& p, int m, int n) {
  p.validate();
  if (n < 0 || n > m || m > p.n_vars)
    throw std::invalid_argument("requires 0 <= n <= m <= N");
  require_nonzero_rho(p);
  double N = p.n_vars;
  detail::KahanSum<Complex> acc;
  for (int k = 0; k <= n; ++k) {
    Complex term = binomial_real(p.n_vars - m, k);
    if (term == Complex(0.0)) continue;
    for (int i = 1; i <= n - k; ++i) {
      Complex den = static_cast<double>(i) * p.rho *
                    (p.a + p.b + 1.0 + (2.0 * N - i - 1.0) * p.rho);
      if (den == Complex(0.0))
        throw EvalError("psi_closed_form: vanishing denominator factor");
      term *= (p.a + p.b + (N - i - 1.0) * p.rho) *
              (p.a + 1.0 + (N - i) * p.rho) / den;
    }
    acc.add(term);
  }
  return acc.sum;
}

Complex selberg_schur(const SelbergParams& p, const TwoColumnShape& shape) {
  return std::exp(log_selberg_schur(p, shape));
}

Complex log_selberg_schur(const SelbergParams& p,
                          const TwoColumnShape& shape) {
  p.validate();
  shape.validate();
  if (shape.n_vars != p.n_vars)
    throw std::invalid_argument("shape and params disagree on N");
  require_nonzero_rho(p);
  int n = shape.twos, m = shape.rows;
  double N = p.n_vars;
  Partition lam = shape.to_partition();
  Complex ratio1 = gen_poch_ratio(p.a + (N - 1.0) * p.rho,
                                  p.a + p.b + 2.0 * (N - 1.0) * p.rho, lam,
                                  p.rho);
  Complex ratio2 = column_ratio(p, n, m);
  Complex f = hyp_4f3_two_column(p, n, m);
  return log_selberg_j0(p) + log_monomial_spec(lam, p.n_vars) +
         std::log(ratio1) + std::log(ratio2) + std::log(f);
}

}  // namespace selschur
