#include "qvol/equilibrium.hpp"

#include <cmath>
#include <stdexcept>

#include "qvol/dilog.hpp"
#include "qvol/quadrature.hpp"

namespace qvol {

namespace {

constexpr double kPi = 3.14159265358979323846;
const Cplx kI(0.0, 1.0);

// minus-side (exterior) boundary value of a^2 on gamma_0 at angle th
Cplx a2_minus_on_arc(const ArcGeometry& g, double th) {
    const double ratio = std::sin(0.5 * (g.theta_c - th)) / std::sin(0.5 * (g.theta_c + th));
    return std::polar(1.0, 0.5 * (g.theta_c + kPi)) * std::sqrt(ratio);
}

}  // namespace

Equilibrium::Equilibrium(double c) : geo_(arc_geometry(c)) {
    if (c <= 0.0) throw std::invalid_argument("Equilibrium: needs c > 0");
    // measure moments m_k = (1/pi) int t^k (t psi_-(t)) dth, sqrt substitution
    auto moment = [&](int k) {
        auto f = [&](double s) -> Cplx {
            const double th = geo_.theta_c * std::sin(0.5 * kPi * s);
            const double jac = geo_.theta_c * 0.5 * kPi * std::cos(0.5 * kPi * s);
            const Cplx t = geo_.arc_point(th);
            return std::pow(t, k) * zpsi_minus(th) * jac;
        };
        return gl_segment_adaptive(f, -1.0, 1.0, 1e-13) / kPi;
    };
    m1_ = moment(1);
    m2_ = moment(2);
    m3_ = moment(3);

    const double mass = moment(0).real();
    if (std::fabs(mass - 1.0) > 1e-6)
        throw std::runtime_error("Equilibrium: measure mass off (" + std::to_string(mass) + ")");

    anchor_ = Cplx(1e7 * geo_.ec2, 0.0);
    g_anchor_ = std::log(anchor_) - m1_ / anchor_ - m2_ / (2.0 * anchor_ * anchor_) -
                m3_ / (3.0 * anchor_ * anchor_ * anchor_);

    // ell = -2 g(z+) + V(z+); real for the Schwarz-symmetric data
    ell_ = 0.0;
    const Cplx lv = V(geo_.z_plus) - 2.0 * g(geo_.z_plus);
    if (std::fabs(lv.imag()) > 1e-8)
        throw std::runtime_error("Equilibrium: ell came out non-real");
    ell_ = lv.real();

    szego_inf_ = szego_inf();
}

Cplx Equilibrium::czpsi(Cplx z) const {
    const Cplx a2z = geo_.a2(z);
    const Cplx la = std::log(-kI * (a2z - geo_.a2_m1) / (a2z + geo_.a2_m1));
    const Cplx lb = std::log(-kI * (a2z - geo_.a2_mec) / (a2z + geo_.a2_mec));
    return la - lb;
}

Cplx Equilibrium::psi(Cplx z) const {
    if (std::abs(z) < 1e-12)
        throw std::domain_error("psi: simple pole at z = 0");
    return czpsi(z) / (geo_.c * z);
}

double Equilibrium::h1_closed() const {
    // h1 = c / R(0) with R(0) = -e^{c/2}
    return -geo_.c / geo_.ec2;
}

double Equilibrium::h2_closed() const {
    // eq. pair with K = +i and the branch positive on the upper unit circle
    const Cplx la = std::log(kI * (1.0 - geo_.a2_m1) / (1.0 + geo_.a2_m1));
    const Cplx lb = std::log(kI * (1.0 - geo_.a2_mec) / (1.0 + geo_.a2_mec));
    return (la - lb).real();
}

double Equilibrium::h1_quadrature() const {
    auto f = [&](double t) -> Cplx { return -1.0 / (t * geo_.R({t, 0.0}).real()); };
    return gl_segment_adaptive(f, -geo_.ec, -1.0, 1e-12).real();
}

double Equilibrium::h2_quadrature() const {
    auto f = [&](double t) -> Cplx { return -1.0 / geo_.R({t, 0.0}).real(); };
    return gl_segment_adaptive(f, -geo_.ec, -1.0, 1e-12).real();
}

Cplx Equilibrium::h(Cplx z) const {
    const Cplx Rz = geo_.R(z);
    return (czpsi(z) / 1.0 + h1_closed() * Rz) / (z * Rz);
}

Cplx Equilibrium::h_quadrature(Cplx z) const {
    auto f = [&](double t) -> Cplx {
        const Cplx tc(t, 0.0);
        return 1.0 / (tc * geo_.R(tc) * (tc - z));
    };
    return gl_segment_adaptive(f, -geo_.ec, -1.0, 1e-12);
}

Cplx Equilibrium::V(Cplx z) const {
    return (2.0 / geo_.c) * (dilog(-geo_.ec / z) - dilog(-1.0 / z));
}

Cplx Equilibrium::Vprime(Cplx z) const {
    return (2.0 / (geo_.c * z)) * (std::log(1.0 + geo_.ec / z) - std::log(1.0 + 1.0 / z));
}

Cplx Equilibrium::nu(Cplx z) const {
    return 0.5 * (std::log(1.0 + geo_.ec / z) - std::log(1.0 + 1.0 / z));
}

Cplx Equilibrium::czpsi_prime(Cplx z) const {
    const Cplx Rz = geo_.R(z);
    const double Rm1 = geo_.R({-1.0, 0.0}).real();
    const double Rmec = geo_.R({-geo_.ec, 0.0}).real();
    return -Rmec / (Rz * (z + geo_.ec)) + Rm1 / (Rz * (z + 1.0));
}

Cplx Equilibrium::czpsi_second(Cplx z) const {
    const Cplx Rz = geo_.R(z);
    const Cplx Rp = (z - geo_.z_plus.real()) / Rz;  // R R' = z - Re(z+)
    const double Rm1 = geo_.R({-1.0, 0.0}).real();
    const double Rmec = geo_.R({-geo_.ec, 0.0}).real();
    auto ddz = [&](double Ra, double aa) {
        // d/dz [ Ra / (R(z)(z+aa)) ]
        return -Ra * (Rp * (z + aa) + Rz) / (Rz * Rz * (z + aa) * (z + aa));
    };
    return -ddz(Rmec, geo_.ec) + ddz(Rm1, 1.0);
}

std::vector<Cplx> Equilibrium::anchor_path(Cplx z) const {
    const double r = std::abs(z);
    double th = std::arg(z);
    const double RA = std::abs(anchor_);
    std::vector<Cplx> pts{anchor_};
    auto sweep = [&](double radius, double from, double to) {
        const int steps = std::max(1, static_cast<int>(std::ceil(std::fabs(to - from) / (kPi / 8))));
        for (int k = 1; k <= steps; ++k)
            pts.push_back(std::polar(radius, from + (to - from) * k / steps));
    };
    if (r >= geo_.ec2) {
        // outside: big sweep, then radial
        if (th == kPi) th = kPi * (1.0 - 1e-12);
        sweep(RA, 0.0, th);
        pts.push_back(z);
    } else {
        // inside: through the gap (theta_c, pi) in the cut circle
        const double gate = 0.5 * (geo_.theta_c + kPi);
        const double rin = std::max(r, 0.05 * geo_.ec2);
        sweep(RA, 0.0, gate);
        pts.push_back(std::polar(rin, gate));
        sweep(rin, gate, th);
        pts.push_back(z);
    }
    return pts;
}

Cplx Equilibrium::g(Cplx z) const {
    auto path = anchor_path(z);
    Cplx acc = g_anchor_;
    acc += gl_polyline([&](Cplx s) { return g_prime(s); }, path, 1e-12);
    return acc;
}

Cplx Equilibrium::phi(Cplx z) const { return g(z) - 0.5 * V(z) + 0.5 * ell_; }

double Equilibrium::zpsi_minus(double th) const {
    const Cplx a2m = a2_minus_on_arc(geo_, th);
    return (2.0 / geo_.c) * std::log(std::abs((a2m - geo_.a2_m1) / (a2m + geo_.a2_m1)));
}

Cplx Equilibrium::measure_moment(int k) const {
    switch (k) {
        case 1: return m1_;
        case 2: return m2_;
        case 3: return m3_;
        default: break;
    }
    auto f = [&](double s) -> Cplx {
        const double th = geo_.theta_c * std::sin(0.5 * kPi * s);
        const double jac = geo_.theta_c * 0.5 * kPi * std::cos(0.5 * kPi * s);
        return std::pow(geo_.arc_point(th), k) * zpsi_minus(th) * jac;
    };
    return gl_segment_adaptive(f, -1.0, 1.0, 1e-13) / kPi;
}

namespace {

// int_{gamma_0} dx / (x - z) with the branch following the arc (adaptive
// chord refinement keeps each argument increment small)
Cplx arc_cauchy_log(const ArcGeometry& g, Cplx z) {
    Cplx acc(0.0, 0.0);
    struct Seg {
        double a, b;
    };
    std::vector<Seg> stack{{-g.theta_c, g.theta_c}};
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        const Cplx xa = g.arc_point(a) - z, xb = g.arc_point(b) - z;
        const Cplx ratio = xb / xa;
        if (std::abs(std::arg(ratio)) > 1.5 && b - a > 1e-12) {
            stack.push_back({a, 0.5 * (a + b)});
            stack.push_back({0.5 * (a + b), b});
            continue;
        }
        acc += std::log(ratio);
    }
    return acc;
}

}  // namespace

Cplx Equilibrium::szego(Cplx z) const {
    const auto& g = geo_;
    auto F = [&](double th) -> Cplx {
        const Cplx x = g.arc_point(th);
        const Cplx Rm = (x - g.z_minus) * a2_minus_on_arc(g, th);
        return nu(x) / Rm;
    };
    const bool near = g.arc_distance(z) < 0.1 * g.ec2 && std::fabs(std::arg(z)) < g.theta_c + 0.2;
    Cplx integral;
    if (!near) {
        auto f = [&](double s) -> Cplx {
            const double th = g.theta_c * std::sin(0.5 * kPi * s);
            const double jac = g.theta_c * 0.5 * kPi * std::cos(0.5 * kPi * s);
            const Cplx x = g.arc_point(th);
            return F(th) * kI * x * jac / (x - z);
        };
        integral = gl_segment_adaptive(f, -1.0, 1.0, 1e-12);
    } else {
        // singularity subtraction at the nearest arc angle
        const double th0 = std::clamp(std::arg(z), -g.theta_c * (1.0 - 1e-9),
                                      g.theta_c * (1.0 - 1e-9));
        const Cplx F0 = F(th0);
        auto f = [&](double s) -> Cplx {
            const double th = g.theta_c * std::sin(0.5 * kPi * s);
            const double jac = g.theta_c * 0.5 * kPi * std::cos(0.5 * kPi * s);
            const Cplx x = g.arc_point(th);
            return (F(th) - F0) * kI * x * jac / (x - z);
        };
        integral = gl_segment_adaptive(f, -1.0, 1.0, 1e-11) + F0 * arc_cauchy_log(g, z);
    }
    return std::exp(g.R(z) / (2.0 * kPi * kI) * integral);
}

Cplx Equilibrium::szego_inf() const {
    const auto& g = geo_;
    auto f = [&](double s) -> Cplx {
        const double th = g.theta_c * std::sin(0.5 * kPi * s);
        const double jac = g.theta_c * 0.5 * kPi * std::cos(0.5 * kPi * s);
        const Cplx x = g.arc_point(th);
        const Cplx Rm = (x - g.z_minus) * a2_minus_on_arc(g, th);
        return nu(x) / Rm * kI * x * jac;
    };
    const Cplx integral = gl_segment_adaptive(f, -1.0, 1.0, 1e-12);
    return std::exp(-integral / (2.0 * kPi * kI));
}

MeasureReport equilibrium_measure_check(const Equilibrium& eq, int m, double tol) {
    if (m < 8) throw std::invalid_argument("equilibrium_measure_check: m < 8");
    MeasureReport rep;
    rep.mass = eq.measure_moment(0).real();
    rep.mass_error = std::fabs(rep.mass - 1.0);
    rep.min_density = std::numeric_limits<double>::infinity();
    const double thc = eq.geo().theta_c;
    for (int i = 0; i < m; ++i) {
        // interior grid, endpoints excluded
        const double th = -thc + (i + 1) * (2.0 * thc) / (m + 1);
        const double u = eq.zpsi_minus(th);
        if (u < rep.min_density) {
            rep.min_density = u;
            rep.worst_theta = th;
        }
    }
    rep.pass = rep.mass_error <= tol && rep.min_density > 0.0;
    return rep;
}

}  // namespace qvol
