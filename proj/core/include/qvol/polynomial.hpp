#pragma once

#include <complex>
#include <vector>

#include "qvol/logreal.hpp"
#include "qvol/rational.hpp"

namespace qvol {

// Dense polynomial with exact rational coefficients, ascending degree.
// Leading coefficient is nonzero unless the polynomial is zero.
class ExactPoly {
  public:
    ExactPoly() = default;
    explicit ExactPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static ExactPoly constant(const Rational& v) { return ExactPoly({v}); }
    static ExactPoly monomial(int deg, const Rational& v = Rational(1));

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero poly
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rational(0);
    }

    ExactPoly operator+(const ExactPoly& o) const;
    ExactPoly operator-(const ExactPoly& o) const;
    ExactPoly operator*(const ExactPoly& o) const;
    ExactPoly& operator*=(const Rational& s);
    bool operator==(const ExactPoly& o) const { return c_ == o.c_; }

    Rational eval(const Rational& x) const;
    std::complex<double> eval(std::complex<double> x) const;
    ExactPoly derivative() const;

  private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

// Dense polynomial with log-signed real coefficients (ascending degree).
// Used when magnitudes exceed double range (q = e^{c/2N} regime).
struct LogPoly {
    std::vector<LogReal> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    LogReal coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c.size())) ? c[k] : LogReal::zero();
    }
    // multiply by (1 + t*z) in place
    void mul_linear(const LogReal& t);
    // value at complex z as a LogComplex (terms combined at a common scale)
    LogComplex eval_log(std::complex<double> z) const;
    static LogPoly from_exact(const ExactPoly& p);
};

// Middle coefficient of the product a*b: sum_k a_k b_{m-k}. Returns the
// coefficient together with the largest term magnitude for cancellation
// monitoring.
struct ConvCoeff {
    LogReal value;
    double max_term_log;
};
ConvCoeff product_coefficient(const LogPoly& a, const LogPoly& b, int m);

}  // namespace qvol
