#ifndef IGUSA_TEST_FIXTURES_HPP
#define IGUSA_TEST_FIXTURES_HPP

#include <random>
#include <string>
#include <vector>

#include "igusa/geometry.hpp"
#include "igusa/parser.hpp"
#include "igusa/zeta.hpp"

namespace fx {

using namespace igusa;

struct Fixture {
    std::string name;
    std::string poly;
    std::vector<std::string> vars;
};

// The recurring mappings. cusp_line is the running two-variable example,
// space_curves the three-variable one with a noncompact-facet count.
inline Fixture cusp_line() { return {"cusp_line", "x^3 - x*y; y", {"x", "y"}}; }
inline Fixture space_curves() {
    return {"space_curves", "y^2 - x^3; y^2 - z^2", {"x", "y", "z"}};
}
inline Fixture twisted_pair() {
    return {"twisted_pair", "y^2 - x^3; x^2 - y^3", {"x", "y"}};
}
inline Fixture linear_pair() { return {"linear_pair", "x; x + 2*y", {"x", "y"}}; }
inline Fixture quadric_sextuple() {
    return {"quadric_sextuple", "x^2; y^2; z^2; x*y; x*z; y*z", {"x", "y", "z"}};
}
// Single polynomial whose Newton polyhedron has a vertex on four facets, so
// the normal fan is not simplicial.
inline Fixture pyramid() { return {"pyramid", "z^2 + x^3 + y^3 + x*y", {"x", "y", "z"}}; }

inline Mapping mapping(const Fixture& f) { return parse_mapping(f.poly, f.vars); }

inline IVec iv(std::initializer_list<long> xs) {
    IVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline ZetaFunction make_zf(long long q, std::vector<Rational> num,
                            std::vector<std::pair<long long, long long>> factors) {
    ZetaFunction z(q);
    z.set_numerator(std::move(num));
    for (auto [v, N] : factors) z.push_factor(v, N);
    return z;
}

inline Rational qpow(long long q, long e) { return rational_pow(to_integer(q), e); }

inline Rational rq(long long v) { return Rational(to_integer(v)); }

// Deterministic rational sample in [0, hi] with denominator <= den.
inline Rational random_rational(std::mt19937_64& rng, long hi = 20, long den = 5) {
    std::uniform_int_distribution<long> num_d(0, hi), den_d(1, den);
    return make_rational(num_d(rng), den_d(rng));
}

}  // namespace fx

#endif
