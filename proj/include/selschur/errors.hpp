#pragma once

#include <stdexcept>
#include <string>

namespace selschur {

// Runtime evaluation failures: poles, vanishing denominators, unsupported
// parameter regions. Precondition violations on the call itself use
// std::invalid_argument instead, and integer overflow uses
// std::overflow_error.
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Gamma function evaluated at a nonpositive integer.
class PoleError : public EvalError {
 public:
  using EvalError::EvalError;
};

// sin(pi z) vanishing in a denominator; carries the 1-based product index
// of the offending factor.
class SineZeroError : public EvalError {
 public:
  SineZeroError(const std::string& what, int factor_index)
      : EvalError(what), factor_index_(factor_index) {}
  int factor_index() const { return factor_index_; }

 private:
  int factor_index_;
};

// Terminating hypergeometric series with a denominator Pochhammer that
// vanishes before the termination index, or a spec that does not terminate.
class HypSeriesError : public EvalError {
 public:
  using EvalError::EvalError;
};

// rho = 0 requested in a formula whose parameters alpha, beta, gamma are
// undefined there.
class DegenerateRhoError : public EvalError {
 public:
  using EvalError::EvalError;
};

// No closed form available for the requested partition.
class UnsupportedPartitionError : public EvalError {
 public:
  using EvalError::EvalError;
};

// Oracle node budget exceeded.
class BudgetError : public EvalError {
 public:
  using EvalError::EvalError;
};

// Oracle asked to integrate outside its convergence domain.
class ConvergenceError : public EvalError {
 public:
  using EvalError::EvalError;
};

}  // namespace selschur
