#ifndef FROBKIT_BIGINT_HPP
#define FROBKIT_BIGINT_HPP

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace frobkit {

// All counts, lengths and matrix entries in the library are exact.
// BigInt/BigRat are GMP-backed; a BigRat is always canonical
// (positive denominator, coprime to the numerator).
using BigInt = mpz_class;
using BigRat = mpq_class;

// Thrown on malformed or out-of-contract input (CLI exit code 2).
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an enumeration would exceed the configured budget.
struct BudgetError : InputError {
    explicit BudgetError(const std::string& what) : InputError(what) {}
};

inline BigInt big_pow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

// floor(a / b); b > 0.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// a mod b in [0, b); b > 0.
inline BigInt floor_mod(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigRat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw InputError("rational with zero denominator");
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

// floor of a rational.
inline BigInt rat_floor(const BigRat& r) {
    return floor_div(r.get_num(), r.get_den());
}

inline bool fits_int64(const BigInt& v) {
    return v.fits_slong_p() != 0;  // long is 64-bit on this target
}

inline BigInt parse_bigint(const std::string& s) {
    BigInt v;
    if (mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
        throw InputError("not a decimal integer: '" + s + "'");
    return v;
}

using IntVec = std::vector<BigInt>;

inline BigInt dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw InputError("dot: dimension mismatch");
    BigInt s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline BigInt content(const IntVec& v) {
    BigInt g = 0;
    for (const auto& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

// v / gcd(v); the zero vector is returned unchanged.
inline IntVec primitive(IntVec v) {
    BigInt g = content(v);
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

}  // namespace frobkit

#endif
