#include "qvol/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace qvol {

ExactPoly ExactPoly::monomial(int deg, const Rational& v) {
    std::vector<Rational> c(deg + 1, Rational(0));
    c[deg] = v;
    return ExactPoly(std::move(c));
}

ExactPoly ExactPoly::operator+(const ExactPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return ExactPoly(std::move(r));
}

ExactPoly ExactPoly::operator-(const ExactPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return ExactPoly(std::move(r));
}

ExactPoly ExactPoly::operator*(const ExactPoly& o) const {
    if (is_zero() || o.is_zero()) return ExactPoly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return ExactPoly(std::move(r));
}

ExactPoly& ExactPoly::operator*=(const Rational& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
}

Rational ExactPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::complex<double> ExactPoly::eval(std::complex<double> x) const {
    std::complex<double> acc(0.0, 0.0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

ExactPoly ExactPoly::derivative() const {
    if (c_.size() <= 1) return ExactPoly();
    std::vector<Rational> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return ExactPoly(std::move(r));
}

void LogPoly::mul_linear(const LogReal& t) {
    if (c.empty()) return;
    std::vector<LogReal> r(c.size() + 1);
    r[0] = c[0];
    for (size_t i = 1; i < c.size(); ++i) r[i] = c[i] + c[i - 1] * t;
    r[c.size()] = c.back() * t;
    c = std::move(r);
}

LogComplex LogPoly::eval_log(std::complex<double> z) const {
    if (c.empty()) return LogComplex::zero();
    const double lz = (z == std::complex<double>(0.0, 0.0))
                          ? -std::numeric_limits<double>::infinity()
                          : std::log(std::abs(z));
    const double az = std::arg(z);
    // reference scale = max_k (log|c_k| + k log|z|)
    double ref = -std::numeric_limits<double>::infinity();
    for (size_t k = 0; k < c.size(); ++k)
        if (c[k].sign != 0) ref = std::max(ref, c[k].logmag + static_cast<double>(k) * lz);
    if (ref == -std::numeric_limits<double>::infinity()) return LogComplex::zero();
    std::complex<double> acc(0.0, 0.0);
    for (size_t k = 0; k < c.size(); ++k) {
        if (c[k].sign == 0) continue;
        double lm = c[k].logmag + static_cast<double>(k) * lz - ref;
        double ph = static_cast<double>(k) * az;
        acc += static_cast<double>(c[k].sign) * std::exp(lm) *
               std::complex<double>(std::cos(ph), std::sin(ph));
    }
    if (acc == std::complex<double>(0.0, 0.0)) return LogComplex::zero();
    return LogComplex(ref + std::log(std::abs(acc)), std::arg(acc));
}

LogPoly LogPoly::from_exact(const ExactPoly& p) {
    LogPoly r;
    r.c.reserve(p.coeffs().size());
    for (const auto& q : p.coeffs()) {
        if (q == 0) {
            r.c.push_back(LogReal::zero());
        } else {
            int s = sgn(q) > 0 ? 1 : -1;
            // log|p/q| = log|p| - log|q| via mpz sizes to avoid overflow
            mpz_class num = q.get_num(), den = q.get_den();
            signed long ne, de;
            double nd = mpz_get_d_2exp(&ne, num.get_mpz_t());
            double dd = mpz_get_d_2exp(&de, den.get_mpz_t());
            const double ln2 = 0.6931471805599453;
            double lm = std::log(std::fabs(nd)) + ne * ln2 - (std::log(std::fabs(dd)) + de * ln2);
            r.c.push_back(LogReal(s, lm));
        }
    }
    return r;
}

ConvCoeff product_coefficient(const LogPoly& a, const LogPoly& b, int m) {
    double ref = -std::numeric_limits<double>::infinity();
    const int klo = std::max(0, m - b.degree());
    const int khi = std::min(a.degree(), m);
    for (int k = klo; k <= khi; ++k) {
        const LogReal &x = a.c[k], &y = b.c[m - k];
        if (x.sign != 0 && y.sign != 0) ref = std::max(ref, x.logmag + y.logmag);
    }
    if (ref == -std::numeric_limits<double>::infinity())
        return {LogReal::zero(), ref};
    Kahan acc;
    for (int k = klo; k <= khi; ++k) {
        const LogReal &x = a.c[k], &y = b.c[m - k];
        if (x.sign == 0 || y.sign == 0) continue;
        acc.add(static_cast<double>(x.sign * y.sign) * std::exp(x.logmag + y.logmag - ref));
    }
    double v = acc.value();
    if (v == 0.0) return {LogReal::zero(), ref};
    return {LogReal(v > 0 ? 1 : -1, ref + std::log(std::fabs(v))), ref};
}

}  // namespace qvol
