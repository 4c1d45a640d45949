#ifndef IGUSA_NUMERIC_HPP
#define IGUSA_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace igusa {

using Integer = mpz_class;
using Rational = mpq_class;

// Small integer vectors: exponent vectors, facet normals, cone generators,
// torus/lattice points. All entries exact.
using IVec = std::vector<Integer>;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rational_from_string(const std::string& num, const std::string& den) {
    return make_rational(Integer(num), Integer(den));
}

// base^e for integer base >= 2 and any integer exponent (negative gives 1/base^|e|).
inline Rational rational_pow(const Integer& base, long e) {
    if (base == 0 && e <= 0) throw std::domain_error("0^e for e <= 0");
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? Rational(p) : make_rational(1, p);
}

inline Integer integer_pow(const Integer& base, unsigned long e) {
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), e);
    return p;
}

static_assert(sizeof(long) == sizeof(long long), "64-bit long expected");

inline Integer to_integer(long long v) { return Integer(static_cast<long>(v)); }

inline long long to_longlong(const Integer& z) {
    if (!z.fits_slong_p())
        throw std::overflow_error("integer too large: " + z.get_str());
    return static_cast<long long>(z.get_si());
}

inline bool is_prime(const Integer& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

inline Integer vec_sum(const IVec& v) {
    Integer s = 0;
    for (const auto& x : v) s += x;
    return s;
}

inline Integer dot(const IVec& a, const IVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Integer s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Divide by the gcd of the nonzero entries; zero vector stays zero.
inline IVec primitive(IVec v) {
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, x);
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

inline bool is_zero_vec(const IVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline std::string vec_to_string(const IVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    s += ")";
    return s;
}

inline std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

}  // namespace igusa

#endif
