#pragma once

#include "qvol/logreal.hpp"
#include "qvol/rational.hpp"

namespace qvol {

// (a; q)_k = prod_{j=1}^{k} (1 - a q^{j-1}); empty product is 1.
Rational q_pochhammer(const Rational& a, const Rational& q, long k);

// Gaussian binomial [n choose m]_q = (q^{n-m+1}; q)_m / (q; q)_m.
// m > n or m < 0 returns 0; q = 1 falls back to the classical binomial.
Rational q_binomial(long n, long m, const Rational& q);

// Log-signed variants for q = e^{logq} with logq real (used in the
// q = e^{c/2N} regime where magnitudes overflow doubles).
//
// (a; q)_k with a = sign_a * e^{log|a|} * q^{shift}: factors 1 - a q^{j-1}.
LogReal q_pochhammer_log(const LogReal& a, double logq, long k);
LogReal q_binomial_log(long n, long m, double logq);

// q^e as a LogReal, e integer (exact in the log domain).
inline LogReal q_power_log(double logq, long e) { return LogReal(1, logq * static_cast<double>(e)); }

}  // namespace qvol
