#pragma once

#include <complex>
#include <vector>

#include "qvol/arc_geometry.hpp"

namespace qvol {

using Cplx = std::complex<double>;

// c-parametrized equilibrium machinery around the arc gamma_0. Construction
// fixes the g-anchor (far on the positive real axis) and the constant ell.
class Equilibrium {
  public:
    explicit Equilibrium(double c);

    const ArcGeometry& geo() const { return geo_; }
    double c() const { return geo_.c; }

    // density building blocks
    Cplx psi(Cplx z) const;                 // (1/c) R(z) (h(z) - h1/z), closed form
    Cplx h(Cplx z) const;                   // closed form via a^2 logs
    Cplx h_quadrature(Cplx z) const;        // defining integral (oracle)
    double h1_closed() const, h2_closed() const;
    double h1_quadrature() const, h2_quadrature() const;

    // external field and its derivative (dilog branch)
    Cplx V(Cplx z) const;
    Cplx Vprime(Cplx z) const;
    Cplx nu(Cplx z) const;

    // g-function via anchored path quadrature of g' = V'/2 + psi along paths
    // avoiding Gamma = (-inf, -e^{c/2}] u {e^{c/2} e^{i th}, th in [-pi, theta_c]}
    Cplx g(Cplx z) const;
    Cplx g_prime(Cplx z) const { return 0.5 * Vprime(z) + psi(z); }
    double ell() const { return ell_; }
    Cplx phi(Cplx z) const;  // g - V/2 + ell/2

    // derivatives of psi via (c z psi)' = -R(-e^c)/(R(z)(z+e^c)) + R(-1)/(R(z)(z+1))
    Cplx czpsi(Cplx z) const;        // c z psi(z), finite at z = 0 (limit -c)
    Cplx czpsi_prime(Cplx z) const;  // closed form
    Cplx czpsi_second(Cplx z) const;

    // Szego function and its limit at infinity
    Cplx szego(Cplx z) const;
    Cplx szego_inf() const;

    // boundary density z psi_-(z) at arc angle th (real, positive inside)
    double zpsi_minus(double th) const;

    // moments of the equilibrium measure m_k = int t^k dmu(t)
    Cplx measure_moment(int k) const;

    // path from the anchor to z avoiding the cuts (polyline)
    std::vector<Cplx> anchor_path(Cplx z) const;

  private:
    ArcGeometry geo_;
    Cplx anchor_;       // far point on the positive real axis
    Cplx g_anchor_;     // g at the anchor from the log expansion
    double ell_ = 0.0;
    Cplx m1_, m2_, m3_;
    Cplx szego_inf_ = {1.0, 0.0};
};

struct MeasureReport {
    double mass = 0.0;
    double mass_error = 0.0;   // |mass - 1|
    double min_density = 0.0;  // min over the interior grid of z psi_-
    double worst_theta = 0.0;  // grid angle of the minimum
    bool pass = false;
};

// mass via Gauss-Legendre in the angle with a square-root substitution at the
// endpoints; positivity on an m-point interior grid; tol on |mass - 1|
MeasureReport equilibrium_measure_check(const Equilibrium& eq, int m, double tol = 1e-8);

}  // namespace qvol
