#pragma once

#include <vector>

namespace selschur {

struct QuadratureRule {
  std::vector<double> nodes;    // ascending, interior to (0,1)
  std::vector<double> weights;  // positive; sum equals B(a_exp, b_exp)
};

// count-point rule on (0,1) for the weight y^(a_exp-1) (1-y)^(b_exp-1),
// exact on polynomials of degree <= 2*count-1. Built by Golub-Welsch:
// eigen-decomposition of the symmetric tridiagonal recurrence matrix.
QuadratureRule gauss_jacobi_rule(double a_exp, double b_exp, int count);

}  // namespace selschur
