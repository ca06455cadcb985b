#pragma once

#include <complex>
#include <functional>

namespace qvol {

// Support arc data for the c-scaling limit: endpoints z+- = e^{c/2} e^{+-i theta_c}
// with cos(theta_c) = -cosh(c/2) / (1 + cosh(c/2)), theta_c in [pi/2, pi].
// The zero-accumulation arc is gamma_0 = { e^{c/2} e^{i th} : |th| < theta_c }.
struct ArcGeometry {
    double c = 0.0;
    double theta_c = 0.0;
    std::complex<double> z_plus, z_minus;
    double ec = 0.0;   // e^c
    double ec2 = 0.0;  // e^{c/2}

    // a^2(z) = sqrt((z - z+)/(z - z-)), branch analytic off gamma_0, -> 1 at inf
    std::complex<double> a2(std::complex<double> z) const;
    // R(z) = sqrt((z - z-)(z - z+)) = (z - z-) a^2(z); R(z) ~ z at inf
    std::complex<double> R(std::complex<double> z) const;
    // a(z) = ((z - z+)/(z - z-))^{1/4}, -> 1 at inf
    std::complex<double> a(std::complex<double> z) const;

    // cached constants
    std::complex<double> a2_m1;   // a^2(-1)
    std::complex<double> a2_mec;  // a^2(-e^c)

    // point on gamma_0 (or its closure) at angle th
    std::complex<double> arc_point(double th) const { return ec2 * std::polar(1.0, th); }
    // true when z lies within dist of the closed arc
    bool near_arc(std::complex<double> z, double dist) const;
    // distance to the closed arc gamma_0 (radial/angular decomposition)
    double arc_distance(std::complex<double> z) const;
};

// Throws for c < 0.
ArcGeometry arc_geometry(double c);

// Evaluation side for boundary values on a cut.
enum class Side { interior, plus_boundary, minus_boundary };

// One-sided boundary value p at z on gamma_0: evaluates f at z*(1 -+ eps)
// (plus side is the interior of the circle) with Richardson extrapolation.
std::complex<double> boundary_value(const std::function<std::complex<double>(std::complex<double>)>& f,
                                    std::complex<double> z, Side side, double eps = 1e-7);

}  // namespace qvol
