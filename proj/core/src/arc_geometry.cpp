#include "qvol/arc_geometry.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace qvol {

namespace {

constexpr double kPi = 3.14159265358979323846;

// sqrt with the branch cut along the ray arg(w) = cut_angle; the argument is
// reduced to (cut_angle, cut_angle + 2*pi].
std::complex<double> sqrt_cut(std::complex<double> w, double cut_angle) {
    double th = std::arg(w);
    while (th <= cut_angle) th += 2.0 * kPi;
    while (th > cut_angle + 2.0 * kPi) th -= 2.0 * kPi;
    return std::sqrt(std::abs(w)) * std::polar(1.0, 0.5 * th);
}

}  // namespace

std::complex<double> ArcGeometry::a2(std::complex<double> z) const {
    // image of gamma_0 under (z - z+)/(z - z-) is the ray at angle theta_c - pi
    return sqrt_cut((z - z_plus) / (z - z_minus), theta_c - kPi);
}

std::complex<double> ArcGeometry::R(std::complex<double> z) const { return (z - z_minus) * a2(z); }

std::complex<double> ArcGeometry::a(std::complex<double> z) const {
    // quarter root: sqrt of a^2 with branch continuous off gamma_0 and -> 1 at
    // infinity; a^2 never crosses the negative real axis off the cut, so the
    // principal sqrt is the right branch.
    return std::sqrt(a2(z));
}

bool ArcGeometry::near_arc(std::complex<double> z, double dist) const {
    return arc_distance(z) < dist;
}

double ArcGeometry::arc_distance(std::complex<double> z) const {
    const double th = std::arg(z);
    if (std::fabs(th) <= theta_c) return std::fabs(std::abs(z) - ec2);
    return std::min(std::abs(z - z_plus), std::abs(z - z_minus));
}

ArcGeometry arc_geometry(double c) {
    if (c < 0.0) throw std::invalid_argument("arc_geometry: c < 0");
    ArcGeometry g;
    g.c = c;
    const double ch = std::cosh(0.5 * c);
    g.theta_c = std::acos(-ch / (1.0 + ch));
    g.ec = std::exp(c);
    g.ec2 = std::exp(0.5 * c);
    g.z_plus = g.ec2 * std::polar(1.0, g.theta_c);
    g.z_minus = std::conj(g.z_plus);
    g.a2_m1 = g.a2({-1.0, 0.0});
    g.a2_mec = g.a2({-g.ec, 0.0});
    return g;
}

std::complex<double> boundary_value(
    const std::function<std::complex<double>(std::complex<double>)>& f, std::complex<double> z,
    Side side, double eps) {
    if (side == Side::interior) return f(z);
    const double s = (side == Side::plus_boundary) ? -1.0 : 1.0;  // plus side = inside the circle
    const std::complex<double> z1 = z * (1.0 + s * eps), z2 = z * (1.0 + 2.0 * s * eps);
    return 2.0 * f(z1) - f(z2);
}

}  // namespace qvol
