#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "selschur/partitions.hpp"
#include "selschur/quadrature.hpp"
#include "selschur/selberg.hpp"

namespace selschur {

struct QuadratureSpec {
  int nodes_per_dim = 64;
  long long budget = 10'000'000;  // maximum total grid nodes
  int workers = 1;                // block-parallel; any count gives identical bits
  unsigned long long seed = 12345;         // Monte Carlo fallback only
  std::optional<long long> mc_samples;     // enables the advisory MC path

  friend bool operator==(const QuadratureSpec&, const QuadratureSpec&) = default;
};

// Integrand on the tensor grid: per-axis powers times an optional Schur
// factor; the pair factor prod_{i<j} |y_i-y_j|^(2 rho) is always applied.
struct TensorIntegrand {
  std::vector<int> axis_powers;  // exponent of y_i; entries beyond size are 0
  std::optional<Partition> schur_factor;

  // y_1^2 .. y_twos^2 y_(twos+1) .. y_rows
  static TensorIntegrand from_monomial_shape(int twos, int rows);
  static TensorIntegrand from_schur(Partition lam);
};

// Deterministic tensor Gauss-Jacobi integration of f(y) * pair factor
// against the weight on (0,1)^N. Requires real parameters, the real-line
// convergence conditions, and rho > 0.
double integrate_selberg(const SelbergParams& p, const TensorIntegrand& f,
                         const QuadratureSpec& spec);

// Same sweep evaluated for several integrands at once (one grid pass).
// Results are bit-identical to separate integrate_selberg calls.
std::vector<double> integrate_selberg_multi(const SelbergParams& p,
                                            std::span<const TensorIntegrand> fs,
                                            const QuadratureSpec& spec);

// Region integral with q variables on (0,1) and N-q on (1,inf); the outer
// variables are mapped by t = 1/y onto (0,1] and their power-law part is
// folded into the axis weight. |1-y|^(b-1) is taken as the absolute value.
double integrate_region(const SelbergParams& p, const Partition& lam, int q,
                        const QuadratureSpec& spec);

// Plane integral at N = 1 of z^k conj(z)^kbar |z|^(2a-2) |1-z|^(2b-2),
// via polar charts around 0 and 1, an annular chart, and an exterior chart
// mapped by inversion whose radial power integrals are evaluated in the
// analytically continued (finite-part) sense.
Complex integrate_complex_n1(const SelbergParams& p, int k, int kbar,
                             const QuadratureSpec& spec);

// Advisory Monte Carlo estimate (beta importance sampling per coordinate);
// returns the estimate and, optionally, its standard error.
double mc_integrate_selberg(const SelbergParams& p, const TensorIntegrand& f,
                            const QuadratureSpec& spec,
                            double* standard_error = nullptr);

struct VerificationReport {
  std::string formula;
  SelbergParams params;
  std::string shape;  // partition / (n,m) description, empty if n/a
  Complex closed_form{};
  Complex oracle_value{};
  double abs_error = 0.0;
  double rel_error = 0.0;
  long long node_count = 0;
  std::string region = "unit-cube";  // unit-cube | mixed(q) | plane-N1
  std::string tier;
  bool pass = false;
  ConditionReport conditions;
  int nodes_per_dim = 0;
  unsigned long long seed = 0;

  friend bool operator==(const VerificationReport&,
                         const VerificationReport&) = default;
};

struct TierInfo {
  std::string name;
  double tolerance;
  int recommended_nodes;
};

// exact: 2 rho a nonnegative even integer (polynomial integrand);
// smooth: N <= 2; rough: N = 3; advisory beyond.
TierInfo oracle_tier(const SelbergParams& p, int degree_hint = 8);

// Residual checks of the four integral identities behind the two-column
// recurrence. Lemmas 1 and 3 take the transposition case index k; their
// singular integrands are reduced by the exact symmetrized polynomial
// quotient, so only plain monomial integrals are evaluated.
VerificationReport check_lemma(int id, const SelbergParams& p, int n, int m,
                               std::optional<int> k,
                               const QuadratureSpec& spec);

// Residual of Psi(m,n) - Psi(m-1,n) + Psi(m,n-1) with every Psi assembled
// from oracle integrals (including the oracle J(0)); n = 0 checks the
// Psi(m,0) = 1 boundary instead.
VerificationReport check_psi_recurrence(const SelbergParams& p, int m, int n,
                                        const QuadratureSpec& spec);

namespace detail {

// Low-level tensor sum with explicit per-axis rules; used by the lemma
// checks to absorb modified axis weights.
std::vector<double> tensor_integral_multi(std::span<const QuadratureRule> rules,
                                          double two_rho,
                                          std::span<const TensorIntegrand> fs,
                                          int workers, long long budget);

}  // namespace detail

}  // namespace selschur
