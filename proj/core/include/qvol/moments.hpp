#pragma once

#include <vector>

#include "qvol/polynomial.hpp"
#include "qvol/qseries.hpp"

namespace qvol {

// Laurent expansion of the orthogonality weight
//   prod_{j=1}^{2N} (1 + q^j / z) = sum_{j=0}^{2N} c_j z^{-j},
// stored as coefficients c_0..c_{2N} of z^{-j}.
ExactPoly weight_laurent(int N, const Rational& q);

// Moments mu_k = oint z^k * weight dz = 2*pi*i * mu'_k; the 2*pi*i is kept
// symbolic and only mu'_k = q^{(k+1)(k+2)/2} [2N choose k+1]_q is stored.
// mu'_k = 0 for k >= 2N.
class MomentTable {
  public:
    MomentTable(int N, Rational q);

    int N() const { return N_; }
    const Rational& q() const { return q_; }
    // mu'_k for any k >= -1 (k = -1 and k >= 2N give 0... k=-1 not used);
    // negative k throws.
    Rational mu_prime(long k) const;
    const std::vector<Rational>& table() const { return mu_; }

  private:
    int N_;
    Rational q_;
    std::vector<Rational> mu_;  // k = 0 .. 2N-1
};

// Residue pairing <z^k, P> = z^{-1}-coefficient of z^k P(z) * weight, as a
// multiple of 2*pi*i. This is the exact orthogonality functional.
Rational residue_pairing(const ExactPoly& p, long k, const MomentTable& mt);

}  // namespace qvol
