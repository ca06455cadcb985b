#include "qvol/dilog.hpp"

#include <gmpxx.h>

#include <cmath>
#include <vector>

namespace qvol {

namespace {

using Cplx = std::complex<double>;
constexpr double kPi = 3.14159265358979323846;
constexpr double kZeta2 = kPi * kPi / 6.0;

// c_k = B_k / (k+1)! for the series Li_2(z) = sum c_k u^{k+1}, u = -log(1-z).
// Bernoulli numbers generated exactly (Akiyama-Tanigawa) once.
const std::vector<double>& u_series_coeffs() {
    static const std::vector<double> coeffs = [] {
        const int K = 80;
        std::vector<mpq_class> row(K + 1), bern(K + 1);
        for (int m = 0; m <= K; ++m) {
            row[m] = mpq_class(1, m + 1);
            for (int j = m; j >= 1; --j) row[j - 1] = mpq_class(j) * (row[j - 1] - row[j]);
            bern[m] = row[0];  // B_m (with B_1 = +1/2 in this convention)
        }
        bern[1] = mpq_class(-1, 2);  // series wants B_1 = -1/2
        std::vector<double> c(K + 1);
        mpz_class fact(1);
        for (int k = 0; k <= K; ++k) {
            fact *= (k + 1);  // (k+1)!
            c[k] = mpq_class(bern[k] / mpq_class(fact)).get_d();
        }
        return c;
    }();
    return coeffs;
}

Cplx dilog_power_series(Cplx z) {
    // |z| <= 1/2
    Cplx term = z, acc = z;
    for (int k = 2; k < 64; ++k) {
        term *= z;
        Cplx add = term / static_cast<double>(k * k);
        acc += add;
        if (std::abs(add) < 1e-17 * std::abs(acc)) break;
    }
    return acc;
}

Cplx dilog_u_series(Cplx z) {
    const auto& c = u_series_coeffs();
    const Cplx u = -std::log(1.0 - z);
    Cplx up = u, acc(0.0, 0.0);
    for (size_t k = 0; k < c.size(); ++k) {
        if (c[k] != 0.0) {
            Cplx add = c[k] * up;
            acc += add;
            if (std::abs(add) < 1e-17 * std::abs(acc) && k > 4) break;
        }
        up *= u;
    }
    return acc;
}

}  // namespace

Cplx dilog(Cplx z) {
    if (z == Cplx(0.0, 0.0)) return {0.0, 0.0};
    if (z == Cplx(1.0, 0.0)) return {kZeta2, 0.0};
    // boundary values on the cut from above
    if (z.imag() == 0.0 && z.real() > 1.0) z = Cplx(z.real(), +0.0);

    const double az = std::abs(z);
    if (az > 1.0) {
        // Li2(z) = -pi^2/6 - log^2(-z)/2 - Li2(1/z)
        Cplx lm = std::log(-z);
        if (z.imag() == 0.0 && z.real() > 1.0) lm = Cplx(std::log(z.real()), -kPi);
        return -kZeta2 - 0.5 * lm * lm - dilog(1.0 / z);
    }
    if (std::abs(1.0 - z) < 0.5) {
        // Li2(z) = pi^2/6 - log(z) log(1-z) - Li2(1-z)
        return kZeta2 - std::log(z) * std::log(1.0 - z) - dilog(1.0 - z);
    }
    if (az <= 0.5) return dilog_power_series(z);
    return dilog_u_series(z);
}

}  // namespace qvol
