#pragma once

#include "selschur/selberg.hpp"

namespace selschur {

// Holomorphic/antiholomorphic partition pair of a plane integral.
struct ComplexPairShape {
  Partition left;   // attached to s(z)
  Partition right;  // attached to s(z conjugate)
};

// N-fold product of sine factors relating the plane integral to the squared
// real-line integral:
// prod_i s(a+(N-i)rho) s(b+(N-i)rho) s(i rho) / (s(a+b+(2N-i-1)rho) s(rho)).
// The i = 1 factor s(rho)/s(rho) cancels structurally; any remaining
// vanishing denominator raises SineZeroError naming the factor.
Complex sine_factor(const SelbergParams& p);

// Plane integral of the bare weight: J(0)^2 sine_factor / N!.
Complex dotsenko_j00(const SelbergParams& p);

// Plane integral of e_m(z) e_mbar(z conj): J(1^m) J(1^mbar) sine_factor / N!.
Complex complex_aomoto(const SelbergParams& p, int m, int mbar);

// Plane integral of s_left(z) s_right(z conj): factorizes as
// J(left) J(right) sine_factor / N!. Each one-sided factor is evaluated by
// the two-column closed form, or by the rho = 1 closed form for taller
// partitions; otherwise UnsupportedPartitionError.
Complex complex_selberg_schur(const SelbergParams& p,
                              const ComplexPairShape& shapes);

// Parameter reflection a -> 1 - a - b - 2(N-1)rho - lam_1 - lam_N attached
// to the rotated-complement partition.
SelbergParams reflected_params(const SelbergParams& p, const Partition& lam);

// prod_i s(a+(N-i)rho) / s(a+b+(2N-i-1)rho), the factor relating the
// reflected integral of the rotated complement to the original.
Complex corollary12_ratio(const SelbergParams& p);

// Scalar factor in the region recursion
// J_q = (q/(N-q+1)) J_(q-1) s(a+b+(N+q-2)rho) s((N-q+1)rho)
//       / (s(a+(q-1)rho) s(q rho)),   1 <= q <= N.
Complex region_recursion_factor(const SelbergParams& p, int q);

}  // namespace selschur
