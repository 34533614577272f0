#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace puritydyn {

// Exact arithmetic backing for the "rational" numeric mode. GMP keeps values
// canonical (gcd(num, den) = 1, den > 0) through all arithmetic.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rational_pow(const Rational& base, long e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("rational_pow: 0^negative");
        return 1 / rational_pow(base, -e);
    }
    Rational out;
    mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(base.get_mpq_t()), static_cast<unsigned long>(e));
    mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(base.get_mpq_t()), static_cast<unsigned long>(e));
    // num/den stay coprime when the base is canonical
    return out;
}

inline BigInt bigint_pow(const BigInt& base, unsigned long e) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

inline double to_double(const Rational& r) { return r.get_d(); }

inline std::string to_string(const Rational& r) { return r.get_str(); }

// Parses "p/q" or "p". Throws on malformed input.
inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("parse_rational: bad input '" + s + "'");
    r.canonicalize();
    return r;
}

}  // namespace puritydyn
