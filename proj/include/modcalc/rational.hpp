#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "modcalc/errors.hpp"

namespace modcalc {

// Arbitrary-precision rational, kept canonical (coprime, positive
// denominator) by GMP.
using Rational = mpq_class;

inline Rational rational_from_string(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw SyntaxError("bad rational literal '" + text + "'");
    q.canonicalize();
    return q;
}

inline Rational rational_pow(const Rational& base, unsigned long exp) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exp);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exp);
    return out;
}

inline Rational rational_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// gcd(|a|,|b|) over the numerators combined with lcm of denominators:
/// the unique positive c such that a/c and b/c are coprime integers
/// when a, b are integers; extended multiplicatively to rationals.
inline Rational rational_gcd(const Rational& a, const Rational& b) {
    if (a == 0) return rational_abs(b);
    if (b == 0) return rational_abs(a);
    Rational out;
    mpz_gcd(out.get_num_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
    mpz_lcm(out.get_den_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
    out.canonicalize();
    return out;
}

inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

using Point = std::vector<Rational>;

} // namespace modcalc
