#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ratmle {

// Exact arithmetic carrier types. mpq_class keeps values canonical
// (lowest terms, positive denominator, 0 == 0/1), which is exactly the
// invariant set we need.
using Integer = mpz_class;
using Rational = mpq_class;

struct DivisionByZero : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotDivisible : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PoleAtInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

// x^e for integer e; negative e inverts (throws on x == 0).
inline Rational pow_rational(const Rational& x, long e) {
    if (e == 0) return Rational(1);
    if (x == 0) {
        if (e > 0) return Rational(0);
        throw DivisionByZero("0 raised to a negative power");
    }
    bool invert = e < 0;
    unsigned long n = invert ? static_cast<unsigned long>(-(e + 1)) + 1UL
                             : static_cast<unsigned long>(e);
    Rational r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(x.get_mpq_t()), n);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(x.get_mpq_t()), n);
    r.canonicalize();
    if (invert) return Rational(1) / r;
    return r;
}

// Serialization convention: "p/q", or just "p" when q == 1.
inline std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational parse_rational(const std::string& s) {
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("invalid rational literal: '" + s + "'");
    if (q.get_den() == 0) throw DivisionByZero("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

// 10-significant-digit decimal rendering for human-facing output.
std::string to_decimal(const Rational& q, int significant_digits = 10);

}  // namespace ratmle
