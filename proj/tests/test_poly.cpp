#include <doctest.h>

#include "fixtures.hpp"
#include "igusa/errors.hpp"
#include "igusa/parser.hpp"
#include "igusa/poly.hpp"

using namespace igusa;
using fx::iv;

TEST_CASE("parse: terms are expanded and collected exactly") {
    Polynomial f = parse_polynomial("x^3 - x*y", {"x", "y"});
    REQUIRE(f.terms().size() == 2);
    CHECK(f.terms().at(iv({3, 0})) == 1);
    CHECK(f.terms().at(iv({1, 1})) == -1);

    Polynomial g = parse_polynomial("y", {"x", "y"});
    CHECK(g.terms().size() == 1);
    CHECK(g.terms().at(iv({0, 1})) == 1);

    Polynomial h = parse_polynomial("y^2 - x^3", {"x", "y", "z"});
    CHECK(h.terms().at(iv({0, 2, 0})) == 1);
    CHECK(h.terms().at(iv({3, 0, 0})) == -1);
}

TEST_CASE("parse: expansion, rationals, error positions") {
    Polynomial f = parse_polynomial("(x + y)^2 - 2*x*y", {"x", "y"});
    CHECK(f.terms().size() == 2);
    CHECK(f.terms().at(iv({2, 0})) == 1);
    CHECK(f.terms().at(iv({0, 2})) == 1);

    Polynomial g = parse_polynomial("x/2 + 3/4*y", {"x", "y"});
    CHECK(g.terms().at(iv({1, 0})) == make_rational(1, 2));
    CHECK(g.terms().at(iv({0, 1})) == make_rational(3, 4));

    CHECK_THROWS_AS(parse_polynomial("x + ", {"x"}), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x * w", {"x", "y"}), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x^-2", {"x"}), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x/(x)", {"x"}), ParseError);
    try {
        parse_polynomial("x + %", {"x"});
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("parse o print is the identity") {
    std::vector<std::string> vars{"x", "y", "z"};
    std::vector<std::string> inputs{
        "x^3 - x*y", "y", "y^2 - x^3", "x*y*z - 7*z^2 + 1/3*x", "2 - x", "0",
        "x^2*y^3*z - z^4 + 5"};
    for (const auto& s : inputs) {
        Polynomial f = parse_polynomial(s, vars);
        Polynomial g = parse_polynomial(f.to_string(vars), vars);
        CHECK(f == g);
    }
}

TEST_CASE("support is the key set") {
    Polynomial f = parse_polynomial("x^3 - x*y", {"x", "y"});
    auto s = f.support();
    CHECK(s == std::set<IVec>{iv({3, 0}), iv({1, 1})});
    CHECK(parse_polynomial("y", {"x", "y"}).support() == std::set<IVec>{iv({0, 1})});
    CHECK(Polynomial::zero(2).support().empty());
}

TEST_CASE("mapping invariants") {
    CHECK_THROWS(parse_mapping("x + 1; y", {"x", "y"}));   // f(0) != 0
    CHECK_THROWS(parse_mapping("0; 0", {"x", "y"}));       // identically zero
    Mapping f = fx::mapping(fx::cusp_line());
    CHECK(f.l() == 2);
    CHECK(f.nvars() == 2);
}

TEST_CASE("reduce_mod_p") {
    Polynomial f = parse_polynomial("x^3 - x*y", {"x", "y"});
    auto g = reduce_mod_p(f, 5);
    auto m = g.term_map();
    CHECK(m.at(iv({3, 0})) == 1);
    CHECK(m.at(iv({1, 1})) == 4);

    auto h = reduce_mod_p(parse_polynomial("5*x + y", {"x", "y"}), 5);
    CHECK(h.term_map() == std::map<IVec, long long>{{iv({0, 1}), 1}});

    CHECK_THROWS_AS(reduce_mod_p(parse_polynomial("x/2", {"x"}), 2), std::domain_error);
}

TEST_CASE("reduce_mod_p is a ring homomorphism on samples") {
    std::mt19937_64 rng(7);
    std::vector<std::string> vars{"x", "y"};
    auto random_poly = [&]() {
        Polynomial f(2);
        std::uniform_int_distribution<int> e(0, 3), c(-6, 6);
        for (int t = 0; t < 4; ++t) {
            IVec ev = iv({e(rng), e(rng)});
            f = f + Polynomial::monomial(2, ev, c(rng));
        }
        return f;
    };
    for (int rep = 0; rep < 25; ++rep) {
        Polynomial a = random_poly(), b = random_poly();
        auto lhs = reduce_mod_p(a * b, 7).term_map();
        // multiply the reductions back over Z and reduce again
        Polynomial ar(2), br(2);
        for (auto& [ev, c] : reduce_mod_p(a, 7).term_map())
            ar = ar + Polynomial::monomial(2, ev, Rational(to_integer(c)));
        for (auto& [ev, c] : reduce_mod_p(b, 7).term_map())
            br = br + Polynomial::monomial(2, ev, Rational(to_integer(c)));
        auto rhs = reduce_mod_p(ar * br, 7).term_map();
        CHECK(lhs == rhs);
    }
}

TEST_CASE("jacobian_rank_at") {
    // The face system of (x^2-y^2, x^3, y^3) on its compact facet is
    // (x^2-y^2, 0, 0); at the common torus zero (1,1) mod 5 the rank is 1.
    std::vector<PrimeFieldPolynomial> g;
    for (const char* s : {"x^2 - y^2", "0", "0"})
        g.push_back(reduce_mod_p(parse_polynomial(s, {"x", "y"}), 5));
    CHECK(jacobian_rank_at(g, {1, 1}) == 1);

    std::vector<PrimeFieldPolynomial> id;
    for (const char* s : {"x", "y"}) id.push_back(reduce_mod_p(parse_polynomial(s, {"x", "y"}), 5));
    CHECK(jacobian_rank_at(id, {2, 3}) == 2);

    std::vector<PrimeFieldPolynomial> cusp;
    for (const char* s : {"x^3 - x*y", "y"})
        cusp.push_back(reduce_mod_p(parse_polynomial(s, {"x", "y"}), 5));
    CHECK(jacobian_rank_at(cusp, {1, 1}) == 2);  // ((2,4),(0,1)) over F_5

    CHECK_THROWS_AS(jacobian_rank_at(id, {0, 1}), std::domain_error);
}

TEST_CASE("jacobian rank never exceeds min(l, n)") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> e(0, 3), c(-5, 5), zd(1, 6);
    for (int rep = 0; rep < 40; ++rep) {
        int l = 1 + rep % 4;
        std::vector<PrimeFieldPolynomial> g;
        for (int i = 0; i < l; ++i) {
            Polynomial f(2);
            for (int t = 0; t < 3; ++t)
                f = f + Polynomial::monomial(2, iv({e(rng), e(rng)}), c(rng));
            g.push_back(reduce_mod_p(f, 7));
        }
        std::vector<long long> z{zd(rng), zd(rng)};
        CHECK(jacobian_rank_at(g, z) <= std::min(l, 2));
    }
}
