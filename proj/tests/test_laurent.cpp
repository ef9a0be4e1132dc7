#include <catch2/catch_amalgamated.hpp>

#include "cy/catalog.hpp"
#include "cy/laurent.hpp"

#include <sstream>

using namespace cy;

TEST_CASE("constant term basics") {
    LaurentPoly S;
    S.dim = 1;
    S.add_term({1, 0, 0, 0}, 1);
    S.add_term({-1, 0, 0, 0}, 1);  // x + 1/x
    CHECK(ct_power(S, 0) == 1);
    CHECK(ct_power(S, 1) == 0);
    CHECK(ct_power(S, 2) == 2);
    CHECK(ct_power(S, 6) == 20);  // C(6,3)
    CHECK_THROWS_AS(ct_power(S, -1), std::domain_error);

    // signed variant: c.t.((x - 1/x)^2) = -2
    LaurentPoly T;
    T.dim = 1;
    T.add_term({1, 0, 0, 0}, 1);
    T.add_term({-1, 0, 0, 0}, -1);
    CHECK(ct_power(T, 2) == -2);

    // zero coefficients are never stored
    LaurentPoly U;
    U.dim = 1;
    U.add_term({1, 0, 0, 0}, 3);
    U.add_term({1, 0, 0, 0}, -3);
    CHECK(U.terms.empty());
}

TEST_CASE("2D polytope sequence matches the closed binomial sum") {
    LaurentPoly S = laurent_poly2d();
    for (long n = 0; n <= 20; ++n) {
        CHECK(Q(ct_power(S, n)) == apoly2d(n));
        // pruning must not change the answer
        CHECK(ct_power(S, n, false) == ct_power(S, n, true));
    }
}

TEST_CASE("elimination plan validation") {
    LaurentPoly S4 = laurent_325();
    EliminationPlan plan = make_plan(S4, 3);
    CHECK_FALSE(plan.u.terms.empty());
    CHECK_FALSE(plan.v.terms.empty());
    // v must be independent of the eliminated variable
    for (auto& [e, c] : plan.v.terms) CHECK(e[3] == 0);

    LaurentPoly bad;
    bad.dim = 2;
    bad.add_term({2, 0, 0, 0}, 1);
    bad.add_term({-1, 0, 0, 0}, 1);
    CHECK_THROWS_AS(make_plan(bad, 0), std::invalid_argument);

    LaurentPoly missing;
    missing.dim = 2;
    missing.add_term({0, 1, 0, 0}, 1);
    CHECK_THROWS_AS(make_plan(missing, 0), std::invalid_argument);
}

TEST_CASE("eliminated and direct constant terms agree") {
    LaurentPoly S4 = laurent_325();
    EliminationPlan plan = make_plan(S4, 3);
    std::vector<Q> fast = a325_terms(8);
    for (long n = 0; n <= 8; ++n) {
        Z direct = ct_power(S4, 2 * n);
        CHECK(ct_eliminated(plan, n) == direct);
        CHECK(Q(direct) == fast[n]);
    }
}

TEST_CASE("modular constant term with CRT") {
    LaurentPoly S = laurent_poly2d();
    Z exact = ct_power(S, 10);
    CHECK(ct_modular(S, 10, {1000003, 1000033, 1000037}, zpow(10, 8)) == exact);

    // negative values reconstruct through the symmetric representative
    LaurentPoly T;
    T.dim = 1;
    T.add_term({1, 0, 0, 0}, 1);
    T.add_term({-1, 0, 0, 0}, -1);
    CHECK(ct_modular(T, 2, {10007, 10009}, Z(1000)) == -2);

    CHECK_THROWS_AS(ct_modular(S, 10, {10007}, zpow(10, 8)),
                    std::invalid_argument);
}

TEST_CASE("polytope file parsing") {
    std::istringstream in(
        "dim=2\n"
        "# the 2D reflexive polygon\n"
        "1 2 -1\n"
        "1 0 1\n"
        "1 -1 0\n"
        "1 -1 -1\n");
    LaurentPoly S = read_polytope(in);
    CHECK(S.dim == 2);
    CHECK(S.terms == laurent_poly2d().terms);

    std::istringstream bad1("rows=2\n");
    CHECK_THROWS_AS(read_polytope(bad1), std::invalid_argument);
    std::istringstream bad2("dim=9\n");
    CHECK_THROWS_AS(read_polytope(bad2), std::invalid_argument);
    std::istringstream bad3("dim=2\n1 4\n");
    CHECK_THROWS_AS(read_polytope(bad3), std::invalid_argument);
}
