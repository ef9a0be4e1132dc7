#include <catch2/catch_amalgamated.hpp>

#include "cy/catalog.hpp"
#include "cy/d_op.hpp"
#include "cy/theta_op.hpp"

using namespace cy;

TEST_CASE("canonical form") {
    // fractional rows canonicalize to coprime integer rows, P0 leading > 0
    ThetaOperator op;
    op.P = {Q(-1, 2) * Poly{0, 0, 1}, Poly{frac(1, 3), frac(5, 6)}};
    op.canonicalize();
    CHECK(op.P[0] == Poly{0, 0, 3});
    CHECK(op.P[1] == Poly{-2, -5});
    CHECK(op.canonical() == op);  // idempotent

    ThetaOperator trail;
    trail.P = {Poly{0, 1}, Poly{}, Poly{}};
    trail.canonicalize();
    CHECK(trail.degree() == 0);
}

TEST_CASE("text format round trip") {
    for (const ThetaOperator& op : {op_eta(), op_193(), op_349(), op_366()})
        CHECK(parse_operator(format_operator(op)) == op);
    ThetaOperator eta = op_eta();
    std::string text = format_operator(eta);
    CHECK(text.substr(0, 31) == "theta-operator order=3 degree=2");

    CHECK_THROWS_AS(parse_operator("bogus header\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_operator("theta-operator order=2 degree=1\n1 2 3\n"),
                    std::invalid_argument);
}

TEST_CASE("series from operator") {
    std::vector<Q> head = series_from_operator(op_eta(), 8);
    std::vector<Q> expect{1,       5,      35,      275,     2275,
                          19255,   163925, 1385725, Q(Z("11483875"))};
    CHECK(head == expect);
    CHECK(cy::apply(op_eta(), head)[5] == 0);

    // vanishing pivot: P0 = theta - 1 kills the n=1 step
    ThetaOperator bad;
    bad.P = {Poly{-1, 1}, Poly{1}};
    CHECK_THROWS_AS(series_from_operator(bad, 4), std::domain_error);
}

TEST_CASE("operator / recurrence round trip") {
    for (const ThetaOperator& op :
         {op_eta(), op_34(), op_349(), op_366(), op_poly2d()}) {
        CHECK(recurrence_to_operator(operator_to_recurrence(op)) == op);
    }
}

TEST_CASE("recurrence correspondence is the shifted coefficient") {
    // c_i(n) = P_i(n + p - i)
    ThetaOperator op = op_eta();
    Recurrence rec = operator_to_recurrence(op);
    long p = op.degree();
    for (long i = 0; i <= p; ++i)
        for (long n = 0; n <= 6; ++n)
            CHECK(rec.c[i].eval(Q(n)) == op.P[i].eval(Q(n + p - i)));
}

TEST_CASE("MUM check") {
    CHECK(mum_check(op_eta()));
    CHECK(mum_check(op_14()));
    CHECK(mum_check(op_349()));
    CHECK_FALSE(mum_check(op_bessel_raw()));
    ThetaOperator nm;
    nm.P = {Poly{0, 1, 0, 1}, Poly{1}};
    CHECK_FALSE(mum_check(nm));
}

TEST_CASE("mirror at infinity") {
    CHECK(mirror_at_infinity(op_193(), -1) == op_198());
    CHECK(mirror_at_infinity(op_bessel_raw(), 900) == op_34());
    // applying the transform twice with the same scale is the identity
    CHECK(mirror_at_infinity(mirror_at_infinity(op_193(), -1), -1) == op_193());
    CHECK(suggest_scale(op_bessel_raw()) == 900);
    CHECK(suggest_scale(op_193()) == 1);
}

TEST_CASE("theta to d/dx and back") {
    for (const ThetaOperator& op : {op_eta(), op_14(), op_34(), op_133()}) {
        DOperator d = theta_to_d(op);
        CHECK(d.order() == op.order());
        CHECK(d_to_theta(d) == op);
    }
}

TEST_CASE("subleading coefficient expansion") {
    // for a MUM operator of order 4 the pole part of a3 is 6/x
    auto [c14, h14] = top_coeff_expansion(op_14(), 10);
    CHECK(c14 == 6);
    auto [c34, h34] = top_coeff_expansion(op_34(), 10);
    CHECK(c34 == 6);
    auto [ceta, heta] = top_coeff_expansion(op_eta(), 10);
    CHECK(ceta == 3);
}

TEST_CASE("order-4 coefficient identity") {
    CHECK(cond2_check(op_34()));
    CHECK(cond2_check(op_14()));
    // theta^4 - x(2theta+1)^4 satisfies it; theta^4 + x*theta does not
    ThetaOperator good;
    good.P = {Poly{0, 0, 0, 0, 1},
              Q(-1) * (Poly{1, 2} * Poly{1, 2} * Poly{1, 2} * Poly{1, 2})};
    CHECK(cond2_check(good));
    ThetaOperator badop;
    badop.P = {Poly{0, 0, 0, 0, 1}, Poly{0, 1}};
    CHECK_FALSE(cond2_check(badop));
    CHECK_THROWS_AS(cond2_check(op_eta()), std::domain_error);
}

TEST_CASE("order-5 coefficient identity") {
    CHECK(cond2_5_check(op5_zudilin()));
    CHECK(cond2_5_check(op5_hyper()));
    // a perturbation of the D^2 coefficient breaks the identity (a D^1
    // perturbation like x*theta would not: b1 is unconstrained)
    ThetaOperator bad5;
    bad5.P = {Poly{0, 0, 0, 0, 0, 1}, Poly{0, 0, 1}};
    CHECK_FALSE(cond2_5_check(bad5));
    CHECK_THROWS_AS(cond2_5_check(op_14()), std::domain_error);
}

TEST_CASE("Zagier-type operators") {
    ZagierParams p2{2, 11, 3, -1};
    std::vector<Q> s2 = zagier_seq(p2, 3);
    CHECK(s2 == std::vector<Q>{1, 3, 19, 147});
    ZagierParams p3{3, 11, 5, 125};
    std::vector<Q> s3 = zagier_seq(p3, 4);
    CHECK(s3 == std::vector<Q>{1, 5, 35, 275, 2275});
    CHECK(zagier_operator(p3).canonical() == op_eta());
    CHECK_THROWS_AS(zagier_operator(ZagierParams{4, 1, 1, 1}),
                    std::invalid_argument);
}
