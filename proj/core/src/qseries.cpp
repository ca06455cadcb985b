#include "qvol/qseries.hpp"

#include <cmath>
#include <stdexcept>

namespace qvol {

Rational q_pochhammer(const Rational& a, const Rational& q, long k) {
    if (k < 0) throw std::invalid_argument("q_pochhammer: k < 0");
    Rational prod(1), aq = a;
    for (long j = 0; j < k; ++j) {
        prod *= (Rational(1) - aq);
        aq *= q;
    }
    return prod;
}

Rational q_binomial(long n, long m, const Rational& q) {
    if (m < 0 || m > n) return Rational(0);
    if (m == 0 || m == n) return Rational(1);
    if (q == 1) {
        // classical binomial limit
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(m));
        return Rational(b);
    }
    // (q^{n-m+1}; q)_m / (q; q)_m, both products exact
    Rational num = q_pochhammer(rational_pow(q, n - m + 1), q, m);
    Rational den = q_pochhammer(q, q, m);
    if (den == 0) throw std::domain_error("q_binomial: (q;q)_m vanishes");
    return num / den;
}

LogReal q_pochhammer_log(const LogReal& a, double logq, long k) {
    if (k < 0) throw std::invalid_argument("q_pochhammer_log: k < 0");
    LogReal prod = LogReal::one();
    for (long j = 0; j < k; ++j) {
        LogReal aqj = a * LogReal(1, logq * static_cast<double>(j));
        LogReal factor;
        if (aqj.sign == 0) {
            factor = LogReal::one();
        } else if (aqj.logmag > 0.0) {
            // |aq^j| > 1: 1 - aq^j = -aq^j (1 - 1/(aq^j))
            double corr = std::log1p(-static_cast<double>(aqj.sign) * std::exp(-aqj.logmag));
            factor = LogReal(-aqj.sign, aqj.logmag + corr);
        } else {
            double v = 1.0 - static_cast<double>(aqj.sign) * std::exp(aqj.logmag);
            factor = LogReal::from_double(v);
        }
        prod = prod * factor;
    }
    return prod;
}

LogReal q_binomial_log(long n, long m, double logq) {
    if (m < 0 || m > n) return LogReal::zero();
    if (m == 0 || m == n) return LogReal::one();
    LogReal num = q_pochhammer_log(LogReal(1, logq * static_cast<double>(n - m + 1)), logq, m);
    LogReal den = q_pochhammer_log(LogReal(1, logq), logq, m);
    return num / den;
}

}  // namespace qvol
