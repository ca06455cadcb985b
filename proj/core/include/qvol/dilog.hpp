#pragma once

#include <complex>

namespace qvol {

// Principal-branch dilogarithm Li_2(z), cut along [1, inf); boundary values
// on the cut are taken from above. Power series inside |z| <= 1/2, the
// log-argument (Bernoulli) series on the unit annulus, inversion and
// reflection identities elsewhere. Relative accuracy ~1e-14.
std::complex<double> dilog(std::complex<double> z);

}  // namespace qvol
