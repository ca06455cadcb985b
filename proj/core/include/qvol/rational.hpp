#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace qvol {

// Exact rational scalar, canonical reduced form with positive denominator.
using Rational = mpq_class;

inline Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("rational_from_string: cannot parse '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string rational_to_string(const Rational& r) { return r.get_str(); }

inline Rational rational_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw std::domain_error("rational_pow: 0 to negative power");
        return Rational(0);
    }
    mpz_class num = base.get_num(), den = base.get_den();
    if (e < 0) {
        std::swap(num, den);
        e = -e;
        if (den < 0) { den = -den; num = -num; }
    }
    mpz_class rn, rd;
    mpz_pow_ui(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(e));
    Rational r(rn, rd);
    r.canonicalize();
    return r;
}

// Parses "p/q" or a decimal string ("0.125") into an exact rational.
inline std::optional<Rational> parse_exact(const std::string& s) {
    if (s.find('/') != std::string::npos || s.find('.') == std::string::npos) {
        Rational r;
        if (r.set_str(s, 10) != 0) return std::nullopt;
        r.canonicalize();
        return r;
    }
    auto dot = s.find('.');
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (fp.empty()) fp = "0";
    bool neg = !ip.empty() && ip[0] == '-';
    if (neg) ip = ip.substr(1);
    if (ip.empty()) ip = "0";
    for (char ch : ip + fp)
        if (ch < '0' || ch > '9') return std::nullopt;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    mpz_class v = mpz_class(ip) * scale + mpz_class(fp);
    Rational r(neg ? -v : v, scale);
    r.canonicalize();
    return r;
}

}  // namespace qvol
