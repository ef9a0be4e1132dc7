#pragma once
// d/dx-form operators, theta <-> d/dx conversion via Stirling numbers, and
// the order-4 / order-5 Calabi-Yau coefficient identities checked exactly
// over the rational-function field.

#include "cy/theta_op.hpp"

#include <vector>

namespace cy {

// rational function num/den over Q[x], normalized: den monic, gcd divided out
struct RatFun {
    Poly num, den;

    RatFun() : num{}, den{1} {}
    RatFun(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) { reduce(); }
    static RatFun from_poly(Poly p) { return RatFun(std::move(p), Poly{1}); }

    void reduce() {
        if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
        if (num.is_zero()) {
            den = Poly{1};
            return;
        }
        Poly g = poly_gcd(num, den);
        if (g.degree() > 0) {
            num = divmod(num, g).first;
            den = divmod(den, g).first;
        }
        Q lead = den.leading();
        if (lead != 1) {
            for (auto& q : num.c) q /= lead;
            for (auto& q : den.c) q /= lead;
        }
    }
    bool is_zero() const { return num.is_zero(); }
    bool operator==(const RatFun& o) const { return num == o.num && den == o.den; }

    RatFun derivative() const {
        return RatFun(num.derivative() * den - num * den.derivative(), den * den);
    }
};

inline RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num * b.den + b.num * a.den, a.den * b.den);
}
inline RatFun operator-(const RatFun& a, const RatFun& b) {
    return RatFun(a.num * b.den - b.num * a.den, a.den * b.den);
}
inline RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num * b.num, a.den * b.den);
}
inline RatFun operator*(const Q& s, const RatFun& a) {
    return RatFun(a.num * s, a.den);
}

struct DOperator {
    // monic: y^(r) + a[r-1] y^(r-1) + ... + a[0] y
    std::vector<RatFun> a;  // size r

    long order() const { return static_cast<long>(a.size()); }
};

// Stirling numbers of the second kind up to row n
inline std::vector<std::vector<Z>> stirling2(long n) {
    std::vector<std::vector<Z>> S(n + 1);
    S[0] = {1};
    for (long i = 1; i <= n; ++i) {
        S[i].assign(i + 1, 0);
        for (long k = 1; k <= i; ++k)
            S[i][k] = (k - 1 <= i - 1 ? S[i - 1][k - 1] : Z(0)) +
                      Z(k) * (k <= i - 1 ? S[i - 1][k] : Z(0));
    }
    return S;
}

// theta^k = sum_j S(k,j) x^j D^j: returns polynomial coefficients q_j(x) of D^j
inline std::vector<Poly> theta_to_d_polys(const ThetaOperator& op) {
    long r = op.order();
    auto S = stirling2(r);
    std::vector<Poly> q(r + 1);
    for (size_t i = 0; i < op.P.size(); ++i)
        for (long k = 0; k <= op.P[i].degree(); ++k) {
            const Q& c = op.P[i][k];
            if (c == 0) continue;
            if (k == 0) {
                q[0].coeff(i) += c;
            } else {
                for (long j = 1; j <= k; ++j)
                    if (S[k][j] != 0) q[j].coeff(i + j) += c * Q(S[k][j]);
            }
        }
    for (auto& p : q) p.normalize();
    return q;
}

inline DOperator theta_to_d(const ThetaOperator& op) {
    auto q = theta_to_d_polys(op);
    long r = op.order();
    if (q[r].is_zero()) throw std::domain_error("leading D-coefficient vanishes");
    DOperator d;
    for (long j = 0; j < r; ++j) d.a.push_back(RatFun(q[j], q[r]));
    return d;
}

// Inverse conversion: multiply by the common denominator, then rewrite
// x^m D^j with the falling factorials x^j D^j = theta(theta-1)...(theta-j+1),
// left-multiplying by a power of x when m < j.
inline ThetaOperator d_to_theta(const DOperator& d) {
    long r = d.order();
    Poly den{1};
    for (const auto& f : d.a) den = divmod(den * f.den, poly_gcd(den, f.den)).first;
    // b_j(x) = polynomial coefficient of D^j after clearing denominators
    std::vector<Poly> b(r + 1);
    b[r] = den;
    for (long j = 0; j < r; ++j) {
        Poly q = divmod(den, d.a[j].den).first;
        b[j] = d.a[j].num * q;
    }
    // needed left x-power
    long s = 0;
    for (long j = 0; j <= r; ++j) {
        if (b[j].is_zero()) continue;
        long v = 0;
        while (b[j][v] == 0) ++v;  // lowest x-degree
        s = std::max(s, j - v);
    }
    ThetaOperator op;
    for (long j = 0; j <= r; ++j) {
        if (b[j].is_zero()) continue;
        Poly fall{1};
        for (long t = 0; t < j; ++t) fall = fall * Poly{Q(-t), 1};
        for (long m = 0; m <= b[j].degree(); ++m) {
            if (b[j][m] == 0) continue;
            long shift = s + m - j;
            if (shift < 0)
                throw std::domain_error("d_to_theta: non-convertible coefficients");
            Poly add = b[j][m] * fall;
            for (long k = 0; k <= add.degree(); ++k)
                op.P.resize(std::max<size_t>(op.P.size(), shift + 1)),
                    op.P[shift].coeff(k) += add[k];
        }
    }
    for (auto& p : op.P) p.normalize();
    op.canonicalize();
    return op;
}

// order-4 Calabi-Yau coefficient identity
// a1 = (1/2)a2 a3 - (1/8)a3^3 + a2' - (3/4)a3 a3' - (1/2)a3''
inline bool cond2_check(const ThetaOperator& op) {
    if (op.order() != 4) throw std::domain_error("cond2_check requires order 4");
    DOperator d = theta_to_d(op);
    const RatFun &a1 = d.a[1], &a2 = d.a[2], &a3 = d.a[3];
    RatFun rhs = Q(1, 2) * (a2 * a3) - Q(1, 8) * (a3 * a3 * a3) +
                 a2.derivative() - Q(3, 4) * (a3 * a3.derivative()) -
                 Q(1, 2) * a3.derivative().derivative();
    return (a1 - rhs).is_zero();
}

// order-5 analogue
// b2 = (3/5)b3 b4 - (4/25)b4^3 + (3/2)b3' - (6/5)b4 b4' - b4''
inline bool cond2_5_check(const ThetaOperator& op) {
    if (op.order() != 5) throw std::domain_error("cond2_5_check requires order 5");
    DOperator d = theta_to_d(op);
    const RatFun &b2 = d.a[2], &b3 = d.a[3], &b4 = d.a[4];
    RatFun rhs = Q(3, 5) * (b3 * b4) - Q(4, 25) * (b4 * b4 * b4) +
                 Q(3, 2) * b3.derivative() - Q(6, 5) * (b4 * b4.derivative()) -
                 b4.derivative().derivative();
    return (b2 - rhs).is_zero();
}

// Expansion of the top subleading d/dx coefficient a_{r-1} = c/x + h(x)
// around x = 0: returns {c, h as a Series of length N}.  Non-checkable
// (deeper pole) reported by throwing.
inline std::pair<Q, Series> top_coeff_expansion(const ThetaOperator& op, size_t N) {
    auto q = theta_to_d_polys(op);
    long r = op.order();
    const Poly &num = q[r - 1], &den = q[r];
    long vden = 0, vnum = 0;
    while (vden <= den.degree() && den[vden] == 0) ++vden;
    while (vnum <= num.degree() && num[vnum] == 0) ++vnum;
    if (num.is_zero()) return {0, Series(N)};
    if (vnum < vden - 1)
        throw std::domain_error("top coefficient has a pole of order > 1");
    // num/den = x^{vnum-vden} * unit series
    Series ns = Series::from_poly(Poly(std::vector<Q>(num.c.begin() + vnum, num.c.end())), N + 2);
    Series ds = Series::from_poly(Poly(std::vector<Q>(den.c.begin() + vden, den.c.end())), N + 2);
    Series quot = ns / ds;
    if (vnum == vden - 1) {
        Q c = quot[0];
        Series h(N);
        for (size_t i = 0; i < N; ++i) h.at(i) = quot[i + 1];
        return {c, h};
    }
    // analytic (no pole): shift by x^{vnum-vden}
    Series h(N);
    for (size_t i = 0; i < N; ++i) {
        long src = static_cast<long>(i) - (vnum - vden);
        if (src >= 0 && static_cast<size_t>(src) < quot.trunc())
            h.at(i) = quot[src];
    }
    return {0, h};
}

}  // namespace cy
