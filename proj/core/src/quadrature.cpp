#include "qvol/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace qvol {

const GaussLegendre& gauss_legendre(int n) {
    static std::map<int, GaussLegendre> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lk(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    GaussLegendre gl;
    gl.x.resize(n);
    gl.w.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Newton from the Chebyshev-like initial guess
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it2 = 0; it2 < 100; ++it2) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-16) break;
        }
        gl.x[i] = -x;
        gl.x[n - 1 - i] = x;
        gl.w[i] = 2.0 / ((1.0 - x * x) * pp * pp);
        gl.w[n - 1 - i] = gl.w[i];
    }
    return cache.emplace(n, std::move(gl)).first->second;
}

Cplx gl_segment(const std::function<Cplx(double)>& f, double a, double b, int order) {
    const auto& gl = gauss_legendre(order);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    Cplx acc(0.0, 0.0);
    for (int i = 0; i < order; ++i) acc += gl.w[i] * f(mid + half * gl.x[i]);
    return acc * half;
}

Cplx gl_segment_adaptive(const std::function<Cplx(double)>& f, double a, double b, double tol,
                         int max_doublings) {
    int panels = 1;
    Cplx prev(0.0, 0.0);
    bool have_prev = false;
    for (int d = 0; d <= max_doublings; ++d) {
        Cplx acc(0.0, 0.0);
        const double h = (b - a) / panels;
        for (int p = 0; p < panels; ++p) acc += gl_segment(f, a + p * h, a + (p + 1) * h, 24);
        if (have_prev && std::abs(acc - prev) <= tol * std::max(1.0, std::abs(acc))) return acc;
        prev = acc;
        have_prev = true;
        panels *= 2;
    }
    return prev;
}

Cplx gl_line(const std::function<Cplx(Cplx)>& f, Cplx za, Cplx zb, double tol) {
    const Cplx d = zb - za;
    return d * gl_segment_adaptive([&](double t) { return f(za + t * d); }, 0.0, 1.0, tol);
}

Cplx gl_polyline(const std::function<Cplx(Cplx)>& f, const std::vector<Cplx>& pts, double tol) {
    Cplx acc(0.0, 0.0);
    for (size_t i = 0; i + 1 < pts.size(); ++i) acc += gl_line(f, pts[i], pts[i + 1], tol);
    return acc;
}

Cplx trapezoid_circle(const std::function<Cplx(Cplx)>& f, Cplx center, double radius, int n) {
    Cplx acc(0.0, 0.0);
    for (int k = 0; k < n; ++k) {
        const double th = 2.0 * M_PI * k / n;
        const Cplx e(std::cos(th), std::sin(th));
        acc += f(center + radius * e) * e;
    }
    return acc * Cplx(0.0, 1.0) * (radius * 2.0 * M_PI / static_cast<double>(n));
}

Cplx trapezoid_circle_adaptive(const std::function<Cplx(Cplx)>& f, Cplx center, double radius,
                               double tol, int n0, int nmax) {
    Cplx prev = trapezoid_circle(f, center, radius, n0);
    for (int n = 2 * n0; n <= nmax; n *= 2) {
        Cplx cur = trapezoid_circle(f, center, radius, n);
        if (std::abs(cur - prev) <= tol * std::max(1.0, std::abs(cur))) return cur;
        prev = cur;
    }
    throw std::runtime_error("trapezoid_circle_adaptive: no convergence at node cap");
}

}  // namespace qvol
