#include <catch2/catch_amalgamated.hpp>

#include "cy/logseries.hpp"
#include "cy/poly.hpp"
#include "cy/rational.hpp"
#include "cy/series.hpp"

using namespace cy;

static bool eq(const Series& a, const Series& b, size_t n) {
    for (size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

TEST_CASE("binomial conventions") {
    CHECK(binom(5, 2) == 10);
    CHECK(binom(5, 0) == 1);
    CHECK(binom(5, 5) == 1);
    CHECK(binom(5, -1) == 0);
    CHECK(binom(5, 7) == 0);
    CHECK(binom(Z(40), Z(20)) == Z("137846528820"));
    CHECK(binom(Z(7), Z(9)) == 0);
    CHECK_THROWS_AS(binom(-3, 1), std::domain_error);
    CHECK_THROWS_AS(binom(Z(-3), Z(1)), std::domain_error);
}

TEST_CASE("factorial and powers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(zpow(12, 6) == 2985984);
    CHECK(qpow(frac(2, 3), -2) == frac(9, 4));
    CHECK(qpow(Q(0), 3) == 0);
    CHECK_THROWS_AS(qpow(Q(0), -1), std::domain_error);
}

TEST_CASE("harmonic numbers") {
    CHECK(harmonic(0) == 0);
    CHECK(harmonic(-2) == 0);
    CHECK(harmonic(1) == 1);
    CHECK(harmonic(3) == frac(11, 6));
}

TEST_CASE("fraction canonicalization") {
    CHECK(frac(70, 2) == 35);
    CHECK(is_integer(frac(70, 2)));
    CHECK(to_string(frac(-6, 4)) == "-3/2");
    CHECK(parse_rational("22/7") == frac(22, 7));
    CHECK(parse_rational("-15/5") == -3);
    CHECK_THROWS_AS(parse_rational("zebra"), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic") {
    Poly p{1, 2, 1};  // (1+x)^2
    CHECK(p.degree() == 2);
    CHECK(p.eval(Q(3)) == 16);
    CHECK(p.shift(Q(1)) == Poly{4, 4, 1});         // p(x+1) = (2+x)^2
    CHECK(p.compose_affine(-1, -1) == Poly{0, 0, 1});  // p(-x-1) = x^2
    CHECK(p.derivative() == Poly{2, 2});
    CHECK(Poly{0, 1} * Poly{0, 1} == Poly{0, 0, 1});

    auto [q, r] = divmod(Poly{-1, 0, 0, 1}, Poly{-1, 1});  // x^3-1 by x-1
    CHECK(q == Poly{1, 1, 1});
    CHECK(r.is_zero());

    Poly g = poly_gcd(Poly{-1, 0, 1}, Poly{-1, 1});
    CHECK(g == Poly{-1, 1});  // monic
}

TEST_CASE("series ring basics") {
    size_t N = 16;
    Series one = Series::one(N), x = Series::x(N);
    Series geo = one / (one - x);
    for (size_t i = 0; i < N; ++i) CHECK(geo[i] == 1);
    CHECK(((one - x) * geo - one).is_zero());

    Series t = theta(geo);
    CHECK(t[5] == 5);
    Series d = derivative(geo);
    CHECK(d[4] == 5);
    CHECK(integral(d)[5] == 1);
}

TEST_CASE("series transcendental round trips") {
    size_t N = 14;
    Series x = Series::x(N);
    CHECK(eq(exp(log(Series::one(N) + x)), Series::one(N) + x, N));

    Series s(N);
    s.at(1) = 3;
    s.at(2) = frac(-7, 2);
    s.at(5) = frac(1, 9);
    CHECK(eq(log(exp(s)), s, N));

    Series u = Series::one(N) + s;
    Series r = sqrt(u);
    CHECK(eq(r * r, u, N));
}

TEST_CASE("series reversion round trip") {
    size_t N = 12;
    Series q(N);
    q.at(1) = 1;
    q.at(2) = 2;
    q.at(3) = -5;
    q.at(7) = frac(3, 4);
    Series inv = revert(q);
    CHECK(eq(compose(q, inv), Series::x(N), N));
    CHECK(eq(compose(inv, q), Series::x(N), N));
}

TEST_CASE("log-series structure") {
    size_t N = 8;
    // L = log x  (parts[1] = 1, normalization parts[j] * log^j x / j!)
    LogSeries L({Series(N), Series::one(N)});
    LogSeries tL = theta(L);
    CHECK(tL.log_degree() == 0);
    CHECK(tL.part(0)[0] == 1);

    // (log x)^2 = 2 * (log^2 x / 2!)
    LogSeries sq = L * L;
    CHECK(sq.log_degree() == 2);
    CHECK(sq.part(2)[0] == 2);

    // theta(f * log) product rule, f = 1/(1-x)
    Series f = Series::one(N) / (Series::one(N) - Series::x(N));
    LogSeries fl = f * L;
    LogSeries lhs = theta(fl);
    LogSeries rhs = theta(f) * L + LogSeries::from_series(f);
    CHECK(lhs.equal_to(rhs, N));
}
