#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "selschur/complex_integrals.hpp"
#include "selschur/errors.hpp"
#include "selschur/oracle.hpp"
#include "selschur/symfunc.hpp"
#include "test_helpers.hpp"

using namespace selschur;

namespace {

double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

double rel_err_c(Complex got, Complex want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

SelbergParams real_params(double a, double b, double rho, int n) {
  return SelbergParams{{a, 0.0}, {b, 0.0}, {rho, 0.0}, n};
}

double beta_fn(double x, double y) {
  return std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y));
}

QuadratureSpec nodes(int c) {
  QuadratureSpec spec;
  spec.nodes_per_dim = c;
  return spec;
}

}  // namespace

TEST_CASE("polynomial cases are reproduced to machine accuracy") {
  SelbergParams p = real_params(1, 1, 1, 2);
  QuadratureSpec spec = nodes(12);
  CHECK(rel_err(integrate_selberg(p, TensorIntegrand{}, spec), 1.0 / 6.0) <
        1e-14);
  CHECK(rel_err(integrate_selberg(
                    p, TensorIntegrand::from_schur(Partition{2}), spec),
                3.0 / 20.0) < 1e-14);
  CHECK(rel_err(integrate_selberg(
                    p, TensorIntegrand::from_monomial_shape(1, 2), spec),
                1.0 / 60.0) < 1e-14);
}

TEST_CASE("oracle gates") {
  QuadratureSpec spec = nodes(8);
  CHECK_THROWS_AS(
      integrate_selberg(real_params(-0.1, 1, 1, 2), TensorIntegrand{}, spec),
      ConvergenceError);
  CHECK_THROWS_AS(
      integrate_selberg(real_params(1, 1, -0.1, 2), TensorIntegrand{}, spec),
      ConvergenceError);
  SelbergParams complex_a{{1.0, 0.5}, {1.0, 0.0}, {1.0, 0.0}, 2};
  CHECK_THROWS_AS(integrate_selberg(complex_a, TensorIntegrand{}, spec),
                  std::invalid_argument);
  QuadratureSpec tiny = nodes(500);
  tiny.budget = 1000;
  CHECK_THROWS_AS(
      integrate_selberg(real_params(1, 1, 1, 2), TensorIntegrand{}, tiny),
      BudgetError);
  QuadratureSpec one = nodes(1);
  CHECK_THROWS_AS(
      integrate_selberg(real_params(1, 1, 1, 2), TensorIntegrand{}, one),
      std::invalid_argument);
}

TEST_CASE("tensor sweep matches separate integrations bit for bit") {
  SelbergParams p = real_params(1.5, 0.7, 0.6, 2);
  QuadratureSpec spec = nodes(48);
  std::vector<TensorIntegrand> fs = {
      TensorIntegrand{},
      TensorIntegrand::from_schur(Partition{2, 1}),
      TensorIntegrand::from_monomial_shape(1, 2),
  };
  std::vector<double> multi = integrate_selberg_multi(p, fs, spec);
  for (std::size_t i = 0; i < fs.size(); ++i)
    CHECK(multi[i] == integrate_selberg(p, fs[i], spec));
}

TEST_CASE("worker count does not change the bits") {
  SelbergParams p = real_params(1.5, 0.7, 0.6, 3);
  QuadratureSpec s1 = nodes(24);
  QuadratureSpec s4 = nodes(24);
  s4.workers = 4;
  TensorIntegrand f = TensorIntegrand::from_schur(Partition{2, 1});
  CHECK(integrate_selberg(p, f, s1) == integrate_selberg(p, f, s4));
}

TEST_CASE("identical runs are bit-identical") {
  SelbergParams p = real_params(1.1, 0.9, 0.8, 2);
  QuadratureSpec spec = nodes(96);
  TensorIntegrand f = TensorIntegrand::from_schur(Partition{2, 2});
  CHECK(integrate_selberg(p, f, spec) == integrate_selberg(p, f, spec));
}

TEST_CASE("axis relabeling leaves the sum stable") {
  // The weight and pair factor are symmetric, so rearranging which axis
  // carries which monomial exponent permutes the same grid terms.
  SelbergParams p = real_params(1.3, 0.8, 0.7, 3);
  QuadratureSpec spec = nodes(40);
  TensorIntegrand f1, f2;
  f1.axis_powers = {2, 1, 0};
  f2.axis_powers = {0, 1, 2};
  double v1 = integrate_selberg(p, f1, spec);
  double v2 = integrate_selberg(p, f2, spec);
  CHECK(rel_err(v1, v2) < 1e-14);
}

TEST_CASE("quadrature converges under node doubling") {
  // Non-integer 2 rho: algebraic convergence ~ c^-(2 rho+1), monotone.
  SelbergParams p = real_params(1.5, 0.7, 0.6, 2);
  double want = selberg_schur(p, {1, 2, 2}).real();
  TensorIntegrand f = TensorIntegrand::from_schur(Partition{2, 1});
  double e100 = rel_err(integrate_selberg(p, f, nodes(100)), want);
  double e200 = rel_err(integrate_selberg(p, f, nodes(200)), want);
  double e400 = rel_err(integrate_selberg(p, f, nodes(400)), want);
  CHECK(e200 < e100);
  CHECK(e400 < e200);
  CHECK(e400 < 5e-6);
  // The smooth-tier recommendation reaches the 1e-6 target.
  int rec = oracle_tier(p).recommended_nodes;
  CHECK(rel_err(integrate_selberg(p, f, nodes(rec)), want) < 1e-6);
}

TEST_CASE("schur node evaluation matches the reference evaluator") {
  // The engine's two-column elementary-determinant route against the
  // module-level Schur evaluation on random nodes.
  auto rng = testing::fixed_rng(57);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  for (int N = 2; N <= 5; ++N)
    for (int m = 0; m <= N; ++m)
      for (int n = 0; n <= m; ++n) {
        Partition lam = TwoColumnShape{n, m, N}.to_partition();
        std::vector<Complex> pts(N);
        for (auto& z : pts) z = Complex(u(rng), 0.0);
        // bialternant reference
        Complex ref = lam.empty() ? Complex(1.0)
                                  : schur_bialternant(lam, PointVector(pts));
        Complex via_dispatch = schur(lam, PointVector(pts));
        CHECK(rel_err_c(via_dispatch, ref) < 1e-10);
      }
}

TEST_CASE("non-two-column schur factors integrate correctly") {
  // rho = 1 closed form for lam = (3) at N = 3 against the general path.
  SelbergParams p = real_params(1.2, 0.8, 1.0, 3);
  TensorIntegrand f = TensorIntegrand::from_schur(Partition{3});
  double got = integrate_selberg(p, f, nodes(16));
  double want = kadell_rho1(p, Partition{3}).real();
  CHECK(rel_err(got, want) < 1e-12);
}

TEST_CASE("region integrals at N = 1 are beta values") {
  SelbergParams p = real_params(0.3, 0.4, 0.5, 1);
  QuadratureSpec spec = nodes(48);
  CHECK(rel_err(integrate_region(p, Partition{}, 1, spec), beta_fn(0.3, 0.4)) <
        1e-13);
  CHECK(rel_err(integrate_region(p, Partition{}, 0, spec), beta_fn(0.3, 0.4)) <
        1e-13);  // B(1-a-b, b) = B(0.3, 0.4) at these parameters
  double j1 = integrate_region(p, Partition{}, 1, spec);
  double j0 = integrate_region(p, Partition{}, 0, spec);
  CHECK(rel_err_c(Complex(j1 / j0), region_recursion_factor(p, 1)) < 1e-8);
}

TEST_CASE("region integral with a monomial fold at N = 1") {
  // J_1((k)) = B(a+k, b); J_0((k)) diverges for k >= 1 since a+b+k >= 1.
  SelbergParams p = real_params(0.2, 0.3, 0.5, 1);
  QuadratureSpec spec = nodes(48);
  CHECK(rel_err(integrate_region(p, Partition{1}, 1, spec), beta_fn(1.2, 0.3)) <
        1e-13);
  CHECK_THROWS_AS(integrate_region(p, Partition{1}, 0, spec),
                  ConvergenceError);
}

TEST_CASE("reflected parameters reproduce the tail integral at N = 1") {
  // The tail region integral J_0 equals the unit-interval integral at the
  // reflected parameter a' = 1-a-b times the sine ratio, i.e.
  // J'(0) = J(0) * corollary12_ratio.
  QuadratureSpec spec = nodes(48);
  for (double a : {0.2, 0.3}) {
    for (double b : {0.3, 0.4}) {
      SelbergParams p = real_params(a, b, 0.5, 1);
      SelbergParams reflected = reflected_params(p, Partition{});
      double j_reflected =
          integrate_selberg(reflected, TensorIntegrand{}, spec);
      double j_plain = integrate_selberg(p, TensorIntegrand{}, spec);
      Complex want = j_plain * corollary12_ratio(p);
      CHECK(rel_err_c(Complex(j_reflected), want) < 1e-12);
      // And J_0 from the region oracle is the same number.
      CHECK(rel_err(integrate_region(p, Partition{}, 0, spec), j_reflected) <
            1e-12);
    }
  }
}

TEST_CASE("region recursion verified at N = 2") {
  // J_2 / J_1 against the q = 2 factor, smooth tier.
  SelbergParams p = real_params(0.2, 0.25, 0.11, 2);
  QuadratureSpec spec = nodes(400);
  double j2 = integrate_region(p, Partition{}, 2, spec);
  double j1 = integrate_region(p, Partition{}, 1, spec);
  CHECK(rel_err_c(Complex(j2 / j1), region_recursion_factor(p, 2)) < 5e-3);
}

TEST_CASE("plane oracle against closed forms at N = 1") {
  QuadratureSpec spec = nodes(96);
  SelbergParams p = real_params(0.3, 0.3, 0.5, 1);
  Complex closed = dotsenko_j00(p);
  Complex got = integrate_complex_n1(p, 0, 0, spec);
  CHECK(rel_err_c(got, closed) < 1e-3);
  CHECK(std::abs(got.imag()) < 1e-10 * std::abs(got.real()));

  // k != kbar still yields a real value by conjugation symmetry.
  Complex skew = integrate_complex_n1(real_params(0.2, 0.3, 0.5, 1), 1, 0,
                                      spec);
  CHECK(std::abs(skew.imag()) < 1e-10 * std::max(1.0, std::abs(skew.real())));

  SelbergParams p22 = real_params(0.2, 0.2, 0.5, 1);
  Complex closed11 =
      complex_selberg_schur(p22, {Partition{1}, Partition{1}});
  CHECK(rel_err_c(integrate_complex_n1(p22, 1, 1, spec), closed11) < 1e-3);

  CHECK_THROWS_AS(
      integrate_complex_n1(real_params(0.6, 0.5, 0.5, 1), 0, 0, spec),
      ConvergenceError);
}

TEST_CASE("lemma residuals vanish in the polynomial tier") {
  SelbergParams p2 = real_params(1, 1, 1, 2);
  SelbergParams p3 = real_params(1, 1, 1, 3);
  QuadratureSpec spec = nodes(16);
  for (const SelbergParams& p : {p2, p3}) {
    int N = p.n_vars;
    for (int m = 1; m <= N; ++m)
      for (int n = 0; n < m; ++n) {
        for (int id : {1, 3})
          for (int k = 2; k <= N; ++k) {
            VerificationReport rep = check_lemma(id, p, n, m, k, spec);
            CHECK(rep.pass);
            CHECK(rep.abs_error <= 1e-12 * std::max(
                                       {std::abs(rep.closed_form),
                                        std::abs(rep.oracle_value), 1.0}));
          }
        VerificationReport l2 = check_lemma(2, p, n, m, std::nullopt, spec);
        CHECK(l2.pass);
        VerificationReport l4 = check_lemma(4, p, n, m, std::nullopt, spec);
        CHECK(l4.pass);
      }
  }
}

TEST_CASE("lemma 4 worked example") {
  // At N=2, n=0, m=1, a=b=rho=1: 4 * I(y1) = 2 * J(0), i.e. I(y1) = 1/12.
  SelbergParams p = real_params(1, 1, 1, 2);
  VerificationReport rep = check_lemma(4, p, 0, 1, std::nullopt, nodes(12));
  CHECK(rel_err_c(rep.closed_form, Complex(4.0 / 12.0)) < 1e-13);
  CHECK(rel_err_c(rep.oracle_value, Complex(2.0 / 6.0)) < 1e-13);
  CHECK(rep.pass);
}

TEST_CASE("lemma checks in the smooth tier") {
  SelbergParams p = real_params(1.5, 1.7, 0.6, 2);
  QuadratureSpec spec = nodes(400);
  for (int id : {1, 3}) {
    VerificationReport rep = check_lemma(id, p, 0, 1, 2, spec);
    CHECK(rep.rel_error < 1e-6);
  }
  VerificationReport l2 = check_lemma(2, p, 0, 1, std::nullopt, spec);
  CHECK(l2.rel_error < 1e-5);
  VerificationReport l4 = check_lemma(4, p, 0, 1, std::nullopt, spec);
  CHECK(l4.rel_error < 1e-6);
  // b below 1 makes the lemma-2 boundary integrals diverge: refused.
  CHECK_THROWS_AS(
      check_lemma(2, real_params(1.5, 0.7, 0.6, 2), 0, 1, std::nullopt, spec),
      ConvergenceError);
}

TEST_CASE("psi recurrence from oracle integrals") {
  SelbergParams p = real_params(1, 1, 1, 2);
  VerificationReport rep = check_psi_recurrence(p, 2, 1, nodes(16));
  CHECK(rep.pass);
  CHECK(rep.abs_error < 1e-12);
  // Psi(2,1) itself is 6/5 at these parameters.
  CHECK(rel_err_c(rep.oracle_value, Complex(6.0 / 5.0)) < 1e-12);

  VerificationReport boundary = check_psi_recurrence(p, 2, 0, nodes(16));
  CHECK(boundary.pass);
  CHECK(rel_err_c(boundary.oracle_value, Complex(1.0)) < 1e-12);

  SelbergParams rough = real_params(1.5, 0.7, 0.6, 3);
  VerificationReport r3 = check_psi_recurrence(rough, 2, 1, nodes(120));
  CHECK(r3.rel_error < 1e-3);
  CHECK(r3.pass);
}

TEST_CASE("monte carlo fallback is consistent at N = 4") {
  SelbergParams p = real_params(1.2, 1.1, 0.7, 4);
  QuadratureSpec spec;
  spec.mc_samples = 60'000;
  spec.seed = 99;
  double err = 0.0;
  TensorIntegrand f = TensorIntegrand::from_schur(Partition{2, 1});
  double got = mc_integrate_selberg(p, f, spec, &err);
  double want = selberg_schur(p, {1, 2, 4}).real();
  CHECK(std::abs(got - want) <= 3.0 * err);
  // Deterministic for a fixed seed.
  CHECK(got == mc_integrate_selberg(p, f, spec, nullptr));
}
