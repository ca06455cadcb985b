#include "qvol/orthopoly.hpp"

#include <stdexcept>
#include <string>

namespace qvol {

namespace {

void check_range(int n, int N) {
    if (N < 1) throw std::invalid_argument("orthopoly: N < 1");
    if (n < 0 || n >= 2 * N)
        throw std::invalid_argument("orthopoly: need 0 <= n < 2N, got n=" + std::to_string(n) +
                                    " N=" + std::to_string(N));
}

}  // namespace

ExactPoly op_via_hankel(int n, int N, const Rational& q) {
    check_range(n, N);
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    if (n == 0) return ExactPoly(std::move(c));
    // Delta_{n,k} / Delta_{n,n} as products of q-Pochhammers
    const Rational common = q_pochhammer(rational_pow(q, -2 * N + 1), q, n) *
                            q_pochhammer(q, q, n) /
                            (q_pochhammer(rational_pow(q, n + 1), q, n) *
                             q_pochhammer(rational_pow(q, -n), q, n));
    const Rational mq2N = -rational_pow(q, 2 * N);
    for (long k = 0; k < n; ++k) {
        Rational num = q_pochhammer(rational_pow(q, n + 1), q, k) *
                       q_pochhammer(rational_pow(q, -n), q, k);
        Rational den = q_pochhammer(rational_pow(q, -2 * N + 1), q, k) * q_pochhammer(q, q, k);
        c[k] = rational_pow(mq2N, n - k) * num / den * common;
    }
    return ExactPoly(std::move(c));
}

ExactPoly op_via_qjacobi(int n, int N, const Rational& q) {
    check_range(n, N);
    const Rational a = rational_pow(q, -2 * N);
    const Rational b = rational_pow(q, 2 * N);
    // j_n(x) = 2phi1(q^{-n}, abq^{n+1}; aq | q; qx), terminating at k = n
    const Rational A = rational_pow(q, -n);
    const Rational B = a * b * rational_pow(q, n + 1);
    const Rational C = a * q;
    std::vector<Rational> j(n + 1);
    Rational term(1);
    j[0] = term;
    Rational qk(1);
    for (long k = 0; k < n; ++k) {
        Rational den = (Rational(1) - C * qk) * (Rational(1) - rational_pow(q, k + 1));
        if (den == 0)
            throw std::domain_error("op_via_qjacobi: vanishing 2phi1 denominator at k=" +
                                    std::to_string(k));
        term *= (Rational(1) - A * qk) * (Rational(1) - B * qk) / den;
        qk *= q;
        j[k + 1] = term;  // coefficient of (qx)^{k+1}
    }
    // j_n as poly in x: multiply k-th coefficient by q^k
    for (long k = 0; k <= n; ++k) j[k] *= rational_pow(q, k);
    // monic normalization J_n = (-1)^n q^{binom(n,2)} (aq;q)_n / (abq^{n+1};q)_n j_n
    Rational norm = rational_pow(q, static_cast<long>(n) * (n - 1) / 2) *
                    q_pochhammer(a * q, q, n) / q_pochhammer(B, q, n);
    if (n % 2 != 0) norm = -norm;
    // P_n(z) = (-q^{2N+1})^n J_n(-z/q^{2N+1})
    std::vector<Rational> c(n + 1);
    for (long k = 0; k <= n; ++k) {
        Rational f = rational_pow(q, (2 * N + 1) * (n - k));
        if ((n - k) % 2 != 0) f = -f;
        c[k] = norm * j[k] * f;
    }
    return ExactPoly(std::move(c));
}

Rational qjacobi_A(long n, const Rational& a, const Rational& b, const Rational& q) {
    const Rational ab = a * b;
    Rational den = (Rational(1) - ab * rational_pow(q, 2 * n + 1)) *
                   (Rational(1) - ab * rational_pow(q, 2 * n + 2));
    if (den == 0)
        throw std::domain_error("qjacobi_A: vanishing denominator at index " + std::to_string(n));
    return rational_pow(q, n) * (Rational(1) - a * rational_pow(q, n + 1)) *
           (Rational(1) - ab * rational_pow(q, n + 1)) / den;
}

Rational qjacobi_C(long n, const Rational& a, const Rational& b, const Rational& q) {
    if (n == 0) return Rational(0);  // multiplies J_{-1}; 0/0 in the formula when ab = 1
    const Rational ab = a * b;
    Rational den = (Rational(1) - ab * rational_pow(q, 2 * n)) *
                   (Rational(1) - ab * rational_pow(q, 2 * n + 1));
    if (den == 0)
        throw std::domain_error("qjacobi_C: vanishing denominator at index " + std::to_string(n));
    return a * rational_pow(q, n) * (Rational(1) - rational_pow(q, n)) *
           (Rational(1) - b * rational_pow(q, n)) / den;
}

ExactPoly monic_qjacobi_recurrence(const QJacobiParams& p) {
    if (p.n < 0) throw std::invalid_argument("monic_qjacobi_recurrence: n < 0");
    ExactPoly jm1;                         // J_{-1} = 0
    ExactPoly j0 = ExactPoly::constant(1);  // J_0 = 1
    if (p.n == 0) return j0;
    const ExactPoly x = ExactPoly::monomial(1);
    for (long m = 0; m < p.n; ++m) {
        // J_{m+1} = (x - A_m - C_m) J_m - A_{m-1} C_m J_{m-1}
        Rational am = qjacobi_A(m, p.a, p.b, p.q);
        Rational cm = qjacobi_C(m, p.a, p.b, p.q);
        ExactPoly next = x * j0 - (ExactPoly::constant(am + cm) * j0);
        if (m >= 1) {
            Rational am1 = qjacobi_A(m - 1, p.a, p.b, p.q);
            next = next - ExactPoly::constant(am1 * cm) * jm1;
        }
        jm1 = j0;
        j0 = next;
    }
    return j0;
}

ExactPoly op_via_recurrence(int n, int N, const Rational& q) {
    check_range(n, N);
    QJacobiParams p{rational_pow(q, -2 * N), rational_pow(q, 2 * N), q, n};
    ExactPoly jn = monic_qjacobi_recurrence(p);
    std::vector<Rational> c(n + 1);
    for (long k = 0; k <= n; ++k) {
        Rational f = rational_pow(q, (2 * N + 1) * (n - k));
        if ((n - k) % 2 != 0) f = -f;
        c[k] = jn.coeff(k) * f;
    }
    return ExactPoly(std::move(c));
}

Rational kappa(const ExactPoly& pn, int n, const MomentTable& mt) {
    check_range(n, mt.N());
    Rational acc(0);
    for (int i = 0; i <= pn.degree(); ++i)
        for (int j = 0; j <= pn.degree(); ++j)
            acc += pn.coeff(i) * pn.coeff(j) * mt.mu_prime(i + j);
    if (acc == 0)
        throw std::domain_error("kappa: vanished for n=" + std::to_string(n) +
                                " (orthogonality degenerate)");
    return acc;
}

Rational kappa_via_recurrence(int n, int N, const Rational& q) {
    check_range(n, N);
    const Rational a = rational_pow(q, -2 * N);
    const Rational b = rational_pow(q, 2 * N);
    // kappa'_0 = mu'_0; kappa'_m / kappa'_{m-1} = q^{2(2N+1)} A_{m-1} C_m
    Rational acc = rational_pow(q, 1) * q_binomial(2 * N, 1, q);  // mu'_0 = q [2N 1]_q
    const Rational t = rational_pow(q, 2 * (2 * N + 1));
    for (long m = 1; m <= n; ++m)
        acc *= t * qjacobi_A(m - 1, a, b, q) * qjacobi_C(m, a, b, q);
    return acc;
}

LogPoly op_coeffs_log(int n, int N, double logq) {
    check_range(n, N);
    LogPoly p;
    p.c.assign(n + 1, LogReal::zero());
    p.c[n] = LogReal::one();
    if (n == 0) return p;
    const LogReal common =
        q_pochhammer_log(q_power_log(logq, -2 * N + 1), logq, n) *
        q_pochhammer_log(q_power_log(logq, 1), logq, n) /
        (q_pochhammer_log(q_power_log(logq, n + 1), logq, n) *
         q_pochhammer_log(q_power_log(logq, -n), logq, n));
    const LogReal mq2N(-1, logq * 2.0 * N);
    for (long k = 0; k < n; ++k) {
        LogReal num = q_pochhammer_log(q_power_log(logq, n + 1), logq, k) *
                      q_pochhammer_log(q_power_log(logq, -n), logq, k);
        LogReal den = q_pochhammer_log(q_power_log(logq, -2 * N + 1), logq, k) *
                      q_pochhammer_log(q_power_log(logq, 1), logq, k);
        p.c[k] = mq2N.pow_int(n - k) * num / den * common;
    }
    return p;
}

LogReal kappa_log(int n, int N, double logq) {
    check_range(n, N);
    // mu'_0 = q [2N 1]_q
    LogReal acc = q_power_log(logq, 1) * q_binomial_log(2 * N, 1, logq);
    const LogReal t = q_power_log(logq, 2 * (2 * N + 1));
    auto A = [&](long m) {
        LogReal den = (LogReal::one() - q_power_log(logq, 2 * m + 1)) *
                      (LogReal::one() - q_power_log(logq, 2 * m + 2));
        return q_power_log(logq, m) * (LogReal::one() - q_power_log(logq, m + 1 - 2 * N)) *
               (LogReal::one() - q_power_log(logq, m + 1)) / den;
    };
    auto C = [&](long m) {
        LogReal den = (LogReal::one() - q_power_log(logq, 2 * m)) *
                      (LogReal::one() - q_power_log(logq, 2 * m + 1));
        return q_power_log(logq, m - 2 * N) * (LogReal::one() - q_power_log(logq, m)) *
               (LogReal::one() - q_power_log(logq, m + 2 * N)) / den;
    };
    for (long m = 1; m <= n; ++m) acc = acc * t * A(m - 1) * C(m);
    return acc;
}

}  // namespace qvol
