#include <catch2/catch_amalgamated.hpp>

#include "cy/catalog.hpp"
#include "cy/pullback.hpp"

using namespace cy;

TEST_CASE("wronskian pair structure") {
    FrobeniusBasis b = frobenius(op_14(), 25);
    WronskianPair p = wronskians(b);
    CHECK(p.w0.log_degree() == 0);
    CHECK(p.w0.part(0)[0] == 1);
    CHECK(p.w1.log_degree() == 1);
    CHECK(p.w1.part(1)[0] == 1);

    FrobeniusBasis b3 = frobenius(op_eta(), 10);
    CHECK_THROWS_AS(wronskians(b3), std::domain_error);
}

TEST_CASE("trivial pair theta^4 / theta^5") {
    ThetaOperator t4 = parse_operator("theta-operator order=4 degree=0\n0 0 0 0 1\n");
    ThetaOperator t5 =
        parse_operator("theta-operator order=5 degree=0\n0 0 0 0 0 1\n");
    CHECK(verify_pullback_pair(t4, t5, 10));
    FrobeniusBasis b = frobenius(t4, 15);
    CHECK(double_wronskian_check(b, t4, 12));
}

TEST_CASE("printed pullback pairs verify") {
    CHECK(verify_pullback_pair(op4_pullback_32(), op5_zudilin(), 25));
    CHECK(verify_pullback_pair(op4_pullback_hyper(), op5_hyper(), 25));
}

TEST_CASE("pair verification preconditions") {
    CHECK_THROWS_AS(verify_pullback_pair(op_eta(), op5_zudilin(), 10),
                    std::domain_error);
    CHECK_THROWS_AS(verify_pullback_pair(op_bessel_raw(), op5_zudilin(), 10),
                    std::domain_error);
    // order-5 operator violating the coefficient identity is rejected
    ThetaOperator bad5;
    bad5.P = {Poly{0, 0, 0, 0, 0, 1}, Poly{0, 0, 1}};
    CHECK_THROWS_AS(verify_pullback_pair(op4_pullback_32(), bad5, 10),
                    std::domain_error);
}

TEST_CASE("double-wronskian identity on catalog operators") {
    for (const char* id : {"14", "34", "133", "366"}) {
        const auto& e = catalog_entry(id);
        FrobeniusBasis b = frobenius(*e.op, 40);
        INFO("entry " << id);
        CHECK(double_wronskian_check(b, *e.op, 30));
    }
}

TEST_CASE("reverse derivation recovers the printed pullbacks") {
    FitResult d1 = derive_pullback(op5_zudilin(), 60);
    REQUIRE(d1.success());
    CHECK(*d1.op == op4_pullback_32());

    FitResult d2 = derive_pullback(op5_hyper(), 60);
    REQUIRE(d2.success());
    CHECK(*d2.op == op4_pullback_hyper());

    CHECK_THROWS_AS(derive_pullback(op_14(), 30), std::domain_error);
}

TEST_CASE("normalized wronskian satisfies an order-5 equation of its own") {
    // fit the annihilator of the normalized w0 for the degree-2 pullback:
    // it must be the order-5 hypergeometric operator, which passes the
    // order-5 coefficient identity
    FrobeniusBasis b = frobenius(op4_pullback_hyper(), 30);
    WronskianPair p = wronskians(b);
    Series g = pullback_normalizer(op4_pullback_hyper(), frac(3, 8), 30);
    LogSeries t0 = g * p.w0;
    REQUIRE(t0.log_degree() == 0);
    std::vector<Q> seq(t0.part(0).c.begin(), t0.part(0).c.end());
    FitSpec spec;
    spec.order = 5;
    spec.degree = 1;
    FitResult res = fit(seq, spec);
    REQUIRE(res.success());
    CHECK(*res.op == op5_hyper());
    CHECK(cond2_5_check(*res.op));
}
