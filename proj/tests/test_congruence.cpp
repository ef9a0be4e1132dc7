#include <catch2/catch_amalgamated.hpp>

#include "cy/catalog.hpp"
#include "cy/congruence.hpp"

using namespace cy;

TEST_CASE("base-p digits") {
    CHECK(base_p_digits(Z(0), 5).empty());
    CHECK(base_p_digits(Z(7), 2) == std::vector<long>{1, 1, 1});
    CHECK(base_p_digits(Z(125), 5) == std::vector<long>{0, 0, 0, 1});
    CHECK_THROWS_AS(base_p_digits(Z(-1), 2), std::domain_error);
}

TEST_CASE("digit-product congruence passes on catalog sequences") {
    {
        std::vector<Q> s = catalog_entry("15").gen(124);
        DworkReport rep = dwork_check(s, 5, 3);
        CHECK(rep.tested == 125);
        CHECK(rep.pass());
    }
    {
        std::vector<Q> s = catalog_entry("366").gen(26);
        DworkReport rep = dwork_check(s, 3, 3);
        CHECK(rep.pass());
    }
    {
        std::vector<Q> s = catalog_entry("eta").gen(7);
        CHECK(dwork_check(s, 2, 3).pass());
    }
}

TEST_CASE("digit-product congruence reports witnesses") {
    // A_n = n + 1 fails at n = 2 for p = 2: A_2 = 3 = 1, but A_0 A_1 = 2 = 0
    std::vector<Q> s{1, 2, 3, 4};
    DworkReport rep = dwork_check(s, 2, 2);
    CHECK_FALSE(rep.pass());
    REQUIRE_FALSE(rep.violations.empty());
    CHECK(rep.violations[0] == 2);

    CHECK_THROWS_AS(dwork_check({1, 2}, 2, 2), std::domain_error);
    CHECK_THROWS_AS(dwork_check({1, frac(1, 2), 1, 1}, 2, 2),
                    std::domain_error);
}

TEST_CASE("binomial digit congruence") {
    CHECK(lucas_check(2, 32));
    CHECK(lucas_check(3, 27));
    CHECK(lucas_check(5, 30));
}

TEST_CASE("identity suite hand values") {
    // n = 2: both sides of the first identity equal 15
    Z l1 = 0, r1 = 0;
    for (long k = 0; k <= 2; ++k) {
        Z b = binom(2, k);
        l1 += b * b * binom(Z(3 * k), Z(4));
        r1 += b * b * binom(Z(2 * k), Z(k));
    }
    CHECK(l1 == 15);
    CHECK(r1 == 15);

    // n = 2, l = 1 of the alternating convolution identity
    Z s3 = 0;
    for (long k = 0; k <= 2; ++k) {
        Z sgn = ((k + 1) % 2 == 0) ? 1 : -1;
        s3 += sgn * binom(Z(2), Z(k)) * binom(Z(2), Z(2 - k));
    }
    CHECK(s3 == binom(2, 1));

    // n = 1, k = 0 of the doubling identity
    Z s4 = 0;
    for (long l = 0; l <= 1; ++l) {
        Z sgn = ((1 + l) % 2 == 0) ? 1 : -1;
        s4 += sgn * binom(Z(1), Z(l)) * binom(Z(2 * l), Z(1)) *
              binom(Z(2 - 2 * l), Z(0));
    }
    CHECK(s4 == 2);
}

TEST_CASE("identity suite") {
    IdentitySuiteReport rep = identity_suite(25);
    CHECK(rep.id1);
    CHECK(rep.id2);
    CHECK(rep.id3);
    CHECK(rep.id4);
    CHECK(rep.pass());
}
