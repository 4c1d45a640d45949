#include <doctest.h>

#include "fixtures.hpp"
#include "igusa/errors.hpp"
#include "igusa/nondegen.hpp"

using namespace igusa;
using fx::iv;

TEST_CASE("strong non-degeneracy of the running example") {
    Mapping f = fx::mapping(fx::cusp_line());
    auto g = NewtonPolyhedron::from_mapping(f);
    for (long long p : {3, 5, 7}) {
        auto v = check_strong(f, g, p, false, kDefaultBudget);
        CHECK(v.holds);
        CHECK_FALSE(v.witness.has_value());
        CHECK(check_strong(f, g, p, true, kDefaultBudget).holds);
    }
}

TEST_CASE("the square-difference triple fails strong-at-origin with the edge witness") {
    Mapping f = parse_mapping("x^2 - y^2; x^3; y^3", {"x", "y"});
    auto g = NewtonPolyhedron::from_mapping(f);
    auto v = check_strong(f, g, 5, true, kDefaultBudget);
    REQUIRE_FALSE(v.holds);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->face_key == "(0,2)-(2,0)");
    CHECK(v.witness->point == std::vector<long long>{1, 1});
    CHECK(v.witness->rank == 1);
    CHECK_FALSE(check_strong(f, g, 5, false, kDefaultBudget).holds);
}

TEST_CASE("monomial mappings are vacuously non-degenerate") {
    for (const char* text : {"x^2*y; y^3", "x^4"}) {
        Mapping f = parse_mapping(text, {"x", "y"});
        auto g = NewtonPolyhedron::from_mapping(f);
        CHECK(check_strong(f, g, 3, false, kDefaultBudget).holds);
        CHECK(check_strong(f, g, 3, true, kDefaultBudget).holds);
        for (size_t id = 0; id < g.faces().size(); ++id)
            CHECK(card_D_tau(f, g, static_cast<int>(id), 3, kDefaultBudget) == 0);
    }
}

TEST_CASE("card_D_tau") {
    Mapping cusp = fx::mapping(fx::cusp_line());
    auto g = NewtonPolyhedron::from_mapping(cusp);
    for (size_t id = 0; id < g.faces().size(); ++id)
        CHECK(card_D_tau(cusp, g, static_cast<int>(id), 5, kDefaultBudget) == 0);

    Mapping sc = fx::mapping(fx::space_curves());
    auto g3 = NewtonPolyhedron::from_mapping(sc);
    int facet_face = g3.first_meet_locus(iv({2, 3, 3}));
    CHECK(card_D_tau(sc, g3, facet_face, 5, kDefaultBudget) == 8);  // 2(q-1)
    CHECK(card_D_tau(sc, g3, facet_face, 7, kDefaultBudget) == 12);
}

TEST_CASE("card on the full polyhedron counts the full system") {
    // direct full-system enumeration as the oracle
    Mapping sc = fx::mapping(fx::space_curves());
    auto g3 = NewtonPolyhedron::from_mapping(sc);
    long long p = 5;
    std::vector<PrimeFieldPolynomial> sys;
    for (const auto& fi : sc.components()) sys.push_back(reduce_mod_p(fi, p));
    Integer direct = 0;
    for (long long x = 1; x < p; ++x)
        for (long long y = 1; y < p; ++y)
            for (long long z = 1; z < p; ++z) {
                bool all = true;
                for (const auto& s : sys)
                    if (s.evaluate({x, y, z}) != 0) all = false;
                if (all) direct += 1;
            }
    CHECK(card_D_tau(sc, g3, g3.gamma_face_id(), p, kDefaultBudget) == direct);
}

TEST_CASE("saia verdicts") {
    Mapping cusp = fx::mapping(fx::cusp_line());
    auto g = NewtonPolyhedron::from_mapping(cusp);
    CHECK(check_saia(cusp, g, 5, kDefaultBudget).holds);

    Mapping sc = fx::mapping(fx::space_curves());
    auto g3 = NewtonPolyhedron::from_mapping(sc);
    auto v = check_saia(sc, g3, 5, kDefaultBudget);
    CHECK_FALSE(v.holds);

    Mapping mono = parse_mapping("x^2*y; y^3", {"x", "y"});
    auto gm = NewtonPolyhedron::from_mapping(mono);
    CHECK(check_saia(mono, gm, 5, kDefaultBudget).holds);
}

TEST_CASE("khovanskii verdicts") {
    CHECK(check_khovanskii(parse_mapping("x^2 - y^2; x^3; y^3", {"x", "y"}), 5,
                           kDefaultBudget)
              .holds);
    CHECK(check_khovanskii(fx::mapping(fx::cusp_line()), 5, kDefaultBudget).holds);
    CHECK(check_khovanskii(parse_mapping("x; y", {"x", "y"}), 3, kDefaultBudget).holds);
}

TEST_CASE("strong-at-origin implies khovanskii on the fixture corpus") {
    for (const auto& fixture :
         {fx::cusp_line(), fx::space_curves(), fx::twisted_pair(), fx::linear_pair(),
          fx::quadric_sextuple(), fx::pyramid()}) {
        Mapping f = fx::mapping(fixture);
        auto g = NewtonPolyhedron::from_mapping(f);
        for (long long p : {3, 5}) {
            auto strong = check_strong(f, g, p, true, kDefaultBudget);
            if (strong.holds) {
                auto kh = check_khovanskii(f, p, kDefaultBudget);
                CHECK(kh.holds);
            }
        }
    }
}

TEST_CASE("budget errors") {
    Mapping f = fx::mapping(fx::cusp_line());
    auto g = NewtonPolyhedron::from_mapping(f);
    CHECK_THROWS_AS(check_strong(f, g, 5, false, 3), BudgetError);
    CHECK_THROWS_AS(card_D_tau(f, g, 0, 5, 3), BudgetError);
}

TEST_CASE("verdicts are deterministic") {
    Mapping f = parse_mapping("x^2 - y^2; x^3; y^3", {"x", "y"});
    auto g = NewtonPolyhedron::from_mapping(f);
    auto a = check_strong(f, g, 5, true, kDefaultBudget);
    auto b = check_strong(f, g, 5, true, kDefaultBudget);
    REQUIRE((a.witness.has_value() && b.witness.has_value()));
    CHECK(a.witness->face_key == b.witness->face_key);
    CHECK(a.witness->point == b.witness->point);
    CHECK(a.witness->rank == b.witness->rank);
}
