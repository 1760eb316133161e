#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qcube {

/// Arbitrary-precision integer. All core values are exact; the library has no
/// floating point anywhere.
using Int = mpz_class;

/// Arbitrary-precision rational, always kept canonical (lowest terms,
/// positive denominator).
using Rat = mpq_class;

/// Thrown when a requested computation exceeds a configured size cap.
struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e >= 0) {
        Rat r;
        mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
        return r;  // already canonical: powers of coprime values stay coprime
    }
    if (base == 0) throw std::invalid_argument("rat_pow: negative power of zero");
    return rat_pow(Rat(1) / base, -e);
}

/// k(k-1)/2 as an exact integer; the exponent of the level weights.
inline Int choose2(long k) {
    Int kk(k);
    return kk * (kk - 1) / 2;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

/// Canonical rational rendering: "n" for integers, "n/d" otherwise.
inline std::string to_string(const Rat& v) { return v.get_str(); }

inline Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("parse_rat: bad rational '" + s + "'");
    r.canonicalize();
    return r;
}

}  // namespace qcube
