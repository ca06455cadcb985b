#pragma once

#include "qvol/moments.hpp"
#include "qvol/polynomial.hpp"

namespace qvol {

// Parameters of a little q-Jacobi family; the model uses a = q^{-2N},
// b = q^{2N}, which is non-standard in that A_{2N-1} = 0.
struct QJacobiParams {
    Rational a, b, q;
    int n = 0;
};

// Monic polynomials orthogonal to z^k (k < n) against the weight
// prod (1 + q^j/z) on a contour around the origin, by three routes.
// All require n < 2N and rational q > 1.

// Closed-form Hankel-ratio coefficients.
ExactPoly op_via_hankel(int n, int N, const Rational& q);

// Little q-Jacobi transform P_n(z) = (-q^{2N+1})^n J_n(-z/q^{2N+1}; q^{-2N}, q^{2N} | q).
ExactPoly op_via_qjacobi(int n, int N, const Rational& q);

// Monic J_n(x; a, b | q) built by the three-term recurrence.
// Throws (naming the index) if a recurrence denominator vanishes.
ExactPoly monic_qjacobi_recurrence(const QJacobiParams& p);

// Recurrence route mapped back to P_n.
ExactPoly op_via_recurrence(int n, int N, const Rational& q);

// Recurrence coefficients A_n, C_n of the monic little q-Jacobi family.
Rational qjacobi_A(long n, const Rational& a, const Rational& b, const Rational& q);
Rational qjacobi_C(long n, const Rational& a, const Rational& b, const Rational& q);

// Norming constant kappa_n as a multiple of 2*pi*i, by exact residue of
// P_n^2 * weight. Throws if the result is zero for n < 2N.
Rational kappa(const ExactPoly& pn, int n, const MomentTable& mt);

// Same constant via kappa'_n = mu'_0 * prod_{m=1}^{n} q^{2(2N+1)} A_{m-1} C_m
// (the z P_n recurrence norms); independent of the residue route.
Rational kappa_via_recurrence(int n, int N, const Rational& q);

// Log-signed coefficient list of P_n at q = e^{logq} (the e^{c/2N} regime),
// via the same closed-form Hankel ratios evaluated in the log domain.
LogPoly op_coeffs_log(int n, int N, double logq);

// log kappa'_n by the recurrence-product route.
LogReal kappa_log(int n, int N, double logq);

}  // namespace qvol
