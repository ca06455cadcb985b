#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace qvol {

using Cplx = std::complex<double>;

// Gauss-Legendre nodes/weights on [-1, 1], cached per order.
struct GaussLegendre {
    std::vector<double> x, w;
};
const GaussLegendre& gauss_legendre(int n);

// integral of f over [a, b] (real parameters, complex values), fixed order
Cplx gl_segment(const std::function<Cplx(double)>& f, double a, double b, int order = 40);

// composite panels with node doubling until |I_k - I_{k-1}| < tol
Cplx gl_segment_adaptive(const std::function<Cplx(double)>& f, double a, double b,
                         double tol = 1e-11, int max_doublings = 12);

// complex line integral along the straight segment [za, zb]
Cplx gl_line(const std::function<Cplx(Cplx)>& f, Cplx za, Cplx zb, double tol = 1e-11);

// complex line integral along a polyline
Cplx gl_polyline(const std::function<Cplx(Cplx)>& f, const std::vector<Cplx>& pts,
                 double tol = 1e-11);

// oint f dz over the circle |z - center| = radius with n trapezoid nodes
// (spectrally accurate for integrands analytic in an annulus)
Cplx trapezoid_circle(const std::function<Cplx(Cplx)>& f, Cplx center, double radius, int n);

// node doubling until relative change < tol; starts at n0 nodes
Cplx trapezoid_circle_adaptive(const std::function<Cplx(Cplx)>& f, Cplx center, double radius,
                               double tol = 1e-9, int n0 = 64, int nmax = 1 << 16);

}  // namespace qvol
