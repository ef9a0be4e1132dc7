#include <catch2/catch_amalgamated.hpp>

#include "cy/catalog.hpp"
#include "cy/frobenius.hpp"
#include "cy/mirror.hpp"

using namespace cy;

TEST_CASE("jet arithmetic") {
    Jet a = Jet::constant(2, 3);
    a.c[1] = 1;  // 2 + rho
    Jet sq = jet_mul(a, a);
    CHECK(sq.c == std::vector<Q>{4, 4, 1});
    Jet inv = jet_inv(a);
    Jet one = jet_mul(a, inv);
    CHECK(one.c == std::vector<Q>{1, 0, 0});
    CHECK_THROWS_AS(jet_inv(Jet(3)), std::domain_error);

    // P(n + rho) for P = theta^2 at n = 3
    Jet e = jet_eval(Poly{0, 0, 1}, 3, 3);
    CHECK(e.c == std::vector<Q>{9, 6, 1});
}

TEST_CASE("frobenius basis normal form") {
    FrobeniusBasis b = frobenius(op_14(), 20);
    REQUIRE(b.order() == 4);
    CHECK(b.analytic()[0] == 1);
    for (size_t m = 1; m < 4; ++m) CHECK(b.parts[m][0] == 0);

    // y_k has log-degree k and its top part is the analytic solution
    for (size_t k = 0; k < 4; ++k) {
        LogSeries y = b.y(k);
        CHECK(y.log_degree() == static_cast<long>(k));
        CHECK(y.part(k) == b.analytic());
    }

    // every basis element is annihilated to truncation
    for (size_t k = 0; k < 4; ++k)
        CHECK(apply(op_14(), b.y(k)).is_zero(20));
    CHECK_THROWS_AS(frobenius(op_bessel_raw(), 10), std::domain_error);
}

TEST_CASE("frobenius analytic part matches the recurrence solution") {
    for (const ThetaOperator& op : {op_eta(), op_34(), op_366()}) {
        FrobeniusBasis b = frobenius(op, 15);
        std::vector<Q> seq = series_from_operator(op, 14);
        for (size_t n = 0; n < 15; ++n) CHECK(b.analytic()[n] == seq[n]);
    }
}

TEST_CASE("wronskian condition follows from the coefficient identity") {
    for (const char* id : {"14", "34", "133", "193", "198", "325", "366"}) {
        const auto& e = catalog_entry(id);
        REQUIRE(e.op.has_value());
        REQUIRE(e.op->order() == 4);
        REQUIRE(cond2_check(*e.op));
        FrobeniusBasis b = frobenius(*e.op, 35);
        CHECK(wronskian_cond_check(b, 30));
    }
    FrobeniusBasis b3 = frobenius(op_eta(), 10);
    CHECK_THROWS_AS(wronskian_cond_check(b3, 8), std::domain_error);
}

TEST_CASE("mirror map and Yukawa basics") {
    FrobeniusBasis b = frobenius(op_14(), 40);
    Series q = mirror_map_q(b);
    CHECK(q[0] == 0);
    CHECK(q[1] == 1);
    // mirror-map round trip q(x(q)) = q
    Series xq = revert(q);
    Series round = compose(q, xq);
    for (size_t i = 0; i < 35; ++i) CHECK(round[i] == Series::x(40)[i]);

    Series K = yukawa(b);
    CHECK(K[0] == 1);
    std::vector<Q> inst = instantons(K, 8);
    CHECK(inst[0] == 678816);
    CHECK(inst[1] == Q(Z("137685060720")));

    // Lambert re-summation reproduces K on the trusted range
    Series resum = lambert_resum(inst, 9);
    for (size_t m = 0; m <= 8; ++m) CHECK(resum[m] == K[m]);
}

TEST_CASE("integrality report") {
    IntegralityReport rep = integrality_report(op_14(), 40, 8);
    CHECK(rep.mum);
    CHECK(rep.a3);
    CHECK(rep.b3);
    CHECK(rep.c3);
    REQUIRE(rep.N0.has_value());
    CHECK(*rep.N0 == 1);

    // theta^4 + x(theta + 1/2): A_1 = -1/2, so 3a fails
    ThetaOperator frac_op;
    frac_op.P = {Poly{0, 0, 0, 0, 1}, Poly{frac(1, 2), 1}};
    IntegralityReport bad = integrality_report(frac_op, 5, 2);
    CHECK(bad.mum);
    CHECK_FALSE(bad.a3);

    IntegralityReport nm = integrality_report(op_bessel_raw(), 5, 2);
    CHECK_FALSE(nm.mum);
}
