#include "qvol/moments.hpp"

#include <stdexcept>

namespace qvol {

ExactPoly weight_laurent(int N, const Rational& q) {
    if (N < 1) throw std::invalid_argument("weight_laurent: N < 1");
    std::vector<Rational> c(2 * N + 1);
    for (long j = 0; j <= 2 * N; ++j)
        c[j] = q_binomial(2 * N, j, q) * rational_pow(q, j * (j + 1) / 2);
    return ExactPoly(std::move(c));
}

MomentTable::MomentTable(int N, Rational q) : N_(N), q_(std::move(q)) {
    if (N < 1) throw std::invalid_argument("MomentTable: N < 1");
    mu_.resize(2 * N);
    for (long k = 0; k < 2 * N; ++k)
        mu_[k] = rational_pow(q_, (k + 1) * (k + 2) / 2) * q_binomial(2 * N_, k + 1, q_);
}

Rational MomentTable::mu_prime(long k) const {
    if (k < 0) throw std::invalid_argument("MomentTable: negative moment index");
    if (k >= 2 * N_) return Rational(0);  // [2N choose k+1]_q vanishes
    return mu_[k];
}

Rational residue_pairing(const ExactPoly& p, long k, const MomentTable& mt) {
    // z^k * sum_i p_i z^i * sum_j c_j z^{-j}: the z^{-1} coefficient picks
    // j = k + i + 1, i.e. sum_i p_i mu'_{k+i}.
    Rational acc(0);
    for (int i = 0; i <= p.degree(); ++i) acc += p.coeff(i) * mt.mu_prime(k + i);
    return acc;
}

}  // namespace qvol
