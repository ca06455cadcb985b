#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace qvol {

// Signed real number stored as (sign, log|x|). Survives magnitudes far
// beyond double range; exact zero has sign 0.
struct LogReal {
    int sign = 0;          // -1, 0, +1
    double logmag = -std::numeric_limits<double>::infinity();

    LogReal() = default;
    LogReal(int s, double lm) : sign(s), logmag(s == 0 ? -std::numeric_limits<double>::infinity() : lm) {}

    static LogReal zero() { return LogReal(); }
    static LogReal one() { return LogReal(1, 0.0); }

    static LogReal from_double(double x) {
        if (x == 0.0) return zero();
        return LogReal(x > 0 ? 1 : -1, std::log(std::fabs(x)));
    }
    // exp(t), sign +1
    static LogReal from_log(double t) { return LogReal(1, t); }

    double to_double() const {
        if (sign == 0) return 0.0;
        return sign * std::exp(logmag);
    }
    bool is_zero() const { return sign == 0; }

    LogReal operator*(const LogReal& o) const {
        if (sign == 0 || o.sign == 0) return zero();
        return LogReal(sign * o.sign, logmag + o.logmag);
    }
    LogReal operator/(const LogReal& o) const {
        if (o.sign == 0) throw std::domain_error("LogReal: division by zero");
        if (sign == 0) return zero();
        return LogReal(sign * o.sign, logmag - o.logmag);
    }
    LogReal operator-() const { return LogReal(-sign, logmag); }

    LogReal operator+(const LogReal& o) const {
        if (sign == 0) return o;
        if (o.sign == 0) return *this;
        double a = logmag, b = o.logmag;
        if (a < b) return o + *this;
        // a >= b
        double d = std::exp(b - a);
        double s = (sign == o.sign) ? 1.0 + d : 1.0 - d;
        if (s == 0.0) return zero();
        int rs = sign * (s > 0 ? 1 : -1);
        return LogReal(rs, a + std::log(std::fabs(s)));
    }
    LogReal operator-(const LogReal& o) const { return *this + (-o); }

    LogReal pow_int(long e) const {
        if (e == 0) return one();
        if (sign == 0) return zero();
        int s = (sign < 0 && (e % 2 != 0)) ? -1 : 1;
        return LogReal(s, logmag * static_cast<double>(e));
    }
};

// Complex number stored as log-magnitude + phase: value = exp(lm) * exp(i*ph).
struct LogComplex {
    double logmag = -std::numeric_limits<double>::infinity();
    double phase = 0.0;
    bool zero_flag = true;

    LogComplex() = default;
    LogComplex(double lm, double ph) : logmag(lm), phase(ph), zero_flag(false) {}

    static LogComplex zero() { return LogComplex(); }
    static LogComplex from(std::complex<double> z) {
        if (z == std::complex<double>(0.0, 0.0)) return zero();
        return LogComplex(std::log(std::abs(z)), std::arg(z));
    }
    static LogComplex from_log(std::complex<double> logz) {
        return LogComplex(logz.real(), logz.imag());
    }
    static LogComplex from_logreal(const LogReal& x) {
        if (x.sign == 0) return zero();
        return LogComplex(x.logmag, x.sign > 0 ? 0.0 : 3.14159265358979323846);
    }

    bool is_zero() const { return zero_flag; }
    std::complex<double> to_complex() const {
        if (zero_flag) return {0.0, 0.0};
        return std::exp(logmag) * std::complex<double>(std::cos(phase), std::sin(phase));
    }
    // value / exp(ref): safe once a reference log-scale has been subtracted
    std::complex<double> to_complex_scaled(double ref) const {
        if (zero_flag) return {0.0, 0.0};
        return std::exp(logmag - ref) * std::complex<double>(std::cos(phase), std::sin(phase));
    }

    LogComplex operator*(const LogComplex& o) const {
        if (zero_flag || o.zero_flag) return zero();
        return LogComplex(logmag + o.logmag, phase + o.phase);
    }
    LogComplex operator/(const LogComplex& o) const {
        if (o.zero_flag) throw std::domain_error("LogComplex: division by zero");
        if (zero_flag) return zero();
        return LogComplex(logmag - o.logmag, phase - o.phase);
    }
};

// Neumaier compensated accumulator for sums with cancellation.
struct Kahan {
    double sum = 0.0, comp = 0.0;
    void add(double x) {
        double t = sum + x;
        if (std::fabs(sum) >= std::fabs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

}  // namespace qvol
