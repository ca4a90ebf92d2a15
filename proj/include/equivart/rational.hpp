#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace equivart {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline Integer rational_num(const Rational& q) { return Integer(numerator(q)); }
inline Integer rational_den(const Rational& q) { return Integer(denominator(q)); }

// Floor of a rational; denominators are positive in canonical GMP form.
inline Integer rational_floor(const Rational& q) {
    Integer num = rational_num(q);
    Integer den = rational_den(q);
    Integer f = num / den;
    if (num < 0 && f * den != num) f -= 1;
    return f;
}

/// Formats as "num/den", always including the denominator ("0/1", "3/1", "1/2").
inline std::string format_rational(const Rational& q) {
    return rational_num(q).str() + "/" + rational_den(q).str();
}

/// Parses "p/q" or a bare integer "p". Throws std::invalid_argument on malformed input.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_int(s)) throw std::invalid_argument("malformed rational: " + s);
        return Rational(Integer(s));
    }
    std::string p = s.substr(0, slash);
    std::string q = s.substr(slash + 1);
    if (!is_int(p) || !is_int(q)) throw std::invalid_argument("malformed rational: " + s);
    Integer den(q);
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rational(Integer(p), den);
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// Smallest-denominator rational in the closed interval [lo, hi].
inline Rational simplest_rational_in(const Rational& lo, const Rational& hi) {
    if (lo > hi) throw std::invalid_argument("empty interval");
    if (lo == hi) return lo;
    Integer fl = rational_floor(lo);
    Rational a = lo - fl;
    Rational b = hi - fl;
    if (a == 0) return Rational(fl);
    if (b >= 1) return Rational(fl + 1);
    // 0 < a <= b < 1: recurse on the reciprocal interval
    return Rational(fl) + 1 / simplest_rational_in(1 / b, 1 / a);
}

inline Rational exact_rational_from_double(double x) {
    // Doubles are dyadic rationals; mpq_class-style exact conversion via GMP.
    mpq_t tmp;
    mpq_init(tmp);
    mpq_set_d(tmp, x);
    Rational r(tmp);
    mpq_clear(tmp);
    return r;
}

}  // namespace equivart
