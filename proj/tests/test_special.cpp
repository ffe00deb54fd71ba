#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "selschur/errors.hpp"
#include "selschur/special.hpp"
#include "test_helpers.hpp"

using namespace selschur;

namespace {
constexpr double kPi = std::numbers::pi;

double rel_err(Complex got, Complex want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}
}  // namespace

TEST_CASE("log_gamma reference points") {
  CHECK(std::abs(log_gamma(Complex(1.0))) < 1e-14);
  CHECK(std::abs(log_gamma(Complex(2.0))) < 1e-14);
  CHECK(rel_err(log_gamma(Complex(0.5)), Complex(std::log(std::sqrt(kPi)))) <
        1e-13);
  // Gamma(5) = 24
  CHECK(rel_err(std::exp(log_gamma(Complex(5.0))), Complex(24.0)) < 1e-14);
  CHECK_THROWS_AS(log_gamma(Complex(-1.0)), PoleError);
  CHECK_THROWS_AS(log_gamma(Complex(0.0)), PoleError);
  // Gamma(-1.5) = 4 sqrt(pi) / 3, principal branch is real there.
  Complex g = log_gamma(Complex(-1.5));
  CHECK(rel_err(std::exp(g), Complex(4.0 * std::sqrt(kPi) / 3.0)) < 1e-12);
}

TEST_CASE("log_gamma recurrence on random complex points") {
  auto rng = testing::fixed_rng(17);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  int tested = 0;
  while (tested < 200) {
    Complex z(u(rng), u(rng));
    if (std::abs(z.imag()) < 0.1 && z.real() < 0.5) continue;  // near poles
    Complex lhs = std::exp(log_gamma(z + 1.0));
    Complex rhs = z * std::exp(log_gamma(z));
    CHECK(rel_err(lhs, rhs) < 1e-12);
    ++tested;
  }
}

TEST_CASE("reflection formula") {
  auto rng = testing::fixed_rng(23);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  int tested = 0;
  while (tested < 200) {
    Complex z(u(rng), u(rng));
    if (std::abs(z.real() - std::nearbyint(z.real())) < 0.05 &&
        std::abs(z.imag()) < 0.05)
      continue;
    Complex prod = std::exp(log_gamma(z)) * std::exp(log_gamma(1.0 - z)) *
                   sinpi(z) / kPi;
    CHECK(rel_err(prod, Complex(1.0)) < 1e-11);
    ++tested;
  }
}

TEST_CASE("sinpi") {
  CHECK(sinpi(Complex(0.5)).real() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(sinpi(Complex(3.0)) == Complex(0.0));
  CHECK(sinpi(Complex(-7.0)) == Complex(0.0));
  CHECK(rel_err(sinpi(Complex(0.25)), Complex(std::sqrt(2.0) / 2.0)) < 1e-15);
  // Large imaginary part stays finite in log form.
  Complex ls = log_sinpi(Complex(0.3, 50.0));
  CHECK(std::isfinite(ls.real()));
  CHECK(rel_err(std::exp(log_sinpi(Complex(0.3, 2.0))), sinpi(Complex(0.3, 2.0))) <
        1e-13);
  CHECK(std::abs(log_sinpi(Complex(-1.5))) < 1e-13);  // sin(-1.5 pi) = 1
  CHECK_THROWS_AS(log_sinpi(Complex(2.0)), PoleError);
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(Complex(2.0), 3) == Complex(24.0));
  CHECK(pochhammer(Complex(-1.0), 3) == Complex(0.0));
  CHECK(pochhammer(Complex(0.5), 2) == Complex(0.75));
  CHECK(pochhammer(Complex(3.7), 0) == Complex(1.0));
}

TEST_CASE("generalized pochhammer") {
  CHECK(gen_pochhammer(Complex(4.0), Partition{2}, Complex(1.0)) ==
        Complex(20.0));
  CHECK(gen_pochhammer(Complex(2.5), Partition{}, Complex(0.3)) ==
        Complex(1.0));
  CHECK(gen_pochhammer(Complex(2.0), Partition{2, 1}, Complex(1.0)) ==
        Complex(6.0));
  // Single-column shorthand: product of one-term factors.
  auto rng = testing::fixed_rng(5);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int rep = 0; rep < 20; ++rep) {
    Complex a(u(rng), u(rng));
    Complex rho(u(rng), u(rng));
    int n = 1 + rep % 5;
    std::vector<int> ones(n, 1);
    Complex direct = 1.0;
    for (int i = 0; i < n; ++i) direct *= a - static_cast<double>(i) * rho;
    CHECK(rel_err(gen_pochhammer(a, Partition(std::span<const int>(ones)), rho),
                  direct) < 1e-14);
  }
}

TEST_CASE("terminating hypergeometric sums") {
  // 2F1[-2, 1; 3] at unit argument.
  HypSpec f21{{Complex(-2.0), Complex(1.0)}, {Complex(3.0)}};
  CHECK(rel_err(hyp_terminating(f21), Complex(0.5)) < 1e-15);

  // A zero numerator parameter keeps only the k = 0 term.
  HypSpec zero{{Complex(0.0), Complex(2.3), Complex(1.1), Complex(4.0)},
               {Complex(2.0), Complex(3.0), Complex(2.0)}};
  CHECK(hyp_terminating(zero) == Complex(1.0));

  // 4F3[-1,-1,5,3; 2,3,2] = 1 + 15/12.
  HypSpec f43{{Complex(-1.0), Complex(-1.0), Complex(5.0), Complex(3.0)},
              {Complex(2.0), Complex(3.0), Complex(2.0)}};
  CHECK(rel_err(hyp_terminating(f43), Complex(2.25)) < 1e-15);

  HypSpec nonterminating{{Complex(1.5), Complex(2.5)}, {Complex(3.0)}};
  CHECK_THROWS_AS(hyp_terminating(nonterminating), HypSeriesError);

  // Denominator Pochhammer vanishing before termination.
  HypSpec bad{{Complex(-3.0), Complex(1.0)}, {Complex(-1.0)}};
  CHECK_THROWS_AS(hyp_terminating(bad), HypSeriesError);

  // Vanishing at the termination boundary or later is fine.
  HypSpec ok{{Complex(-2.0), Complex(1.0)}, {Complex(-2.0)}};
  CHECK_NOTHROW(hyp_terminating(ok));
}

TEST_CASE("chu-vandermonde identity") {
  auto rng = testing::fixed_rng(31);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  int tested = 0;
  while (tested < 96) {
    int n = tested % 13;
    Complex b(u(rng), u(rng));
    Complex c(u(rng) + 4.0, u(rng));  // keep (c)_n away from zero
    HypSpec spec{{Complex(-n), b}, {c}};
    // Guard against intrinsically ill-conditioned draws: when the
    // alternating sum cancels to far below its largest term, double
    // precision cannot resolve the identity to 1e-12.
    double term_mag = 1.0, mag_sum = 1.0;
    for (int kk = 0; kk < n; ++kk) {
      term_mag *= std::abs(Complex(-n) + Complex(kk)) * std::abs(b + Complex(kk)) /
                  (std::abs(c + Complex(kk)) * (kk + 1));
      mag_sum += term_mag;
    }
    Complex want = pochhammer(c - b, n) / pochhammer(c, n);
    if (std::abs(want) < 1e-3 * mag_sum) continue;
    Complex got = hyp_terminating(spec);
    CHECK(rel_err(got, want) < 1e-12);
    ++tested;
  }
}

TEST_CASE("saalschutz identity for the balanced 3F2") {
  // 3F2[-n, -N+m, a+b+2N-n; a+b+N-n-1, m-n+2] =
  //   (N-n+2)_n/(m-n+2)_n * G(a+b+N-n-1) G(a+b+2N-m-1)
  //                          / (G(a+b+N-1) G(a+b+2N-m-n-1)).
  auto rng = testing::fixed_rng(47);
  std::uniform_real_distribution<double> u(0.1, 2.5);
  for (int N = 1; N <= 6; ++N) {
    for (int m = 1; m <= N; ++m) {
      for (int n = 0; n <= m; ++n) {
        double a = u(rng), b = u(rng);
        HypSpec spec{{Complex(-n), Complex(m - N), Complex(a + b + 2 * N - n)},
                     {Complex(a + b + N - n - 1), Complex(m - n + 2)}};
        Complex got = hyp_terminating(spec);
        Complex want = pochhammer(Complex(N - n + 2), n) /
                       pochhammer(Complex(m - n + 2), n) *
                       std::exp(log_gamma(Complex(a + b + N - n - 1)) +
                                log_gamma(Complex(a + b + 2 * N - m - 1)) -
                                log_gamma(Complex(a + b + N - 1)) -
                                log_gamma(Complex(a + b + 2 * N - m - n - 1)));
        CHECK(rel_err(got, want) < 1e-11);
      }
    }
  }
}

TEST_CASE("binomial_real") {
  CHECK(binomial_real(6, 2) == 15.0);
  CHECK(binomial_real(200, 100) ==
        doctest::Approx(9.0548514656103281e+58).epsilon(1e-12));
}
