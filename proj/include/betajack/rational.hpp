#pragma once

#include <gmpxx.h>

#include <string>

#include "betajack/errors.hpp"

namespace betajack {

// Arbitrary-precision rational; GMP keeps it canonical (reduced, positive
// denominator, zero is 0/1).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw DivisionByZero();
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "-p", "p/q".
inline Rational rat_parse(const std::string& text) {
    try {
        Rational r(text);
        if (r.get_den() == 0) throw DivisionByZero();
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal '" + text + "'");
    }
}

inline std::string rat_str(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace betajack
