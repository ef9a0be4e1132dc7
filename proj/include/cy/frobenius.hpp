#pragma once
// Frobenius basis at a MUM point.  The solutions are computed with
// rho-jet arithmetic (truncated polynomials mod rho^r): substituting
// x^{n+rho} turns the operator into division by P0(n+rho) = c(n+rho)^r,
// and the rho^m coefficient of A_n supplies the log^m part.

#include "cy/d_op.hpp"
#include "cy/theta_op.hpp"

#include <vector>

namespace cy {

// truncated polynomial in rho, mod rho^r (fixed length r)
struct Jet {
    std::vector<Q> c;

    explicit Jet(size_t r) : c(r, Q(0)) {}
    static Jet constant(const Q& q, size_t r) {
        Jet j(r);
        j.c[0] = q;
        return j;
    }
};

inline Jet jet_mul(const Jet& a, const Jet& b) {
    size_t r = a.c.size();
    Jet out(r);
    for (size_t i = 0; i < r; ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; i + j < r; ++j)
            if (b.c[j] != 0) out.c[i + j] += a.c[i] * b.c[j];
    }
    return out;
}

inline Jet jet_add(const Jet& a, const Jet& b) {
    Jet out = a;
    for (size_t i = 0; i < out.c.size(); ++i) out.c[i] += b.c[i];
    return out;
}

inline Jet jet_inv(const Jet& a) {
    if (a.c.empty() || a.c[0] == 0)
        throw std::domain_error("jet inverse of non-unit");
    size_t r = a.c.size();
    Jet out(r);
    out.c[0] = 1 / a.c[0];
    for (size_t n = 1; n < r; ++n) {
        Q acc = 0;
        for (size_t j = 1; j <= n; ++j) acc += a.c[j] * out.c[n - j];
        out.c[n] = -acc / a.c[0];
    }
    return out;
}

// P(n + rho) as a jet
inline Jet jet_eval(const Poly& p, const Q& n, size_t r) {
    Jet out(r);
    // Horner with jet "x" = n + rho
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) {
        Jet next(r);
        for (size_t i = 0; i < r; ++i) {
            next.c[i] += out.c[i] * n;
            if (i + 1 < r) next.c[i + 1] += out.c[i];
        }
        next.c[0] += *it;
        out = next;
    }
    return out;
}

struct FrobeniusBasis {
    // parts[m][n] = coefficient of x^n in f_m; solution y_k = sum_{j<=k}
    // log^j x / j! * f_{k-j}; f_0 = y0 with constant term 1, f_m(0) = 0 for m>0
    std::vector<Series> parts;

    size_t order() const { return parts.size(); }
    size_t trunc() const { return parts.empty() ? 0 : parts[0].trunc(); }

    LogSeries y(size_t k) const {
        LogSeries L;
        for (size_t j = 0; j <= k; ++j) L.parts.push_back(parts[k - j]);
        return L;
    }
    const Series& analytic() const { return parts[0]; }
};

inline FrobeniusBasis frobenius(const ThetaOperator& op, size_t N) {
    if (!mum_check(op)) throw std::domain_error("frobenius requires a MUM operator");
    size_t r = static_cast<size_t>(op.order());
    std::vector<Jet> A;
    A.push_back(Jet::constant(1, r));
    for (size_t n = 1; n < N; ++n) {
        Jet s(r);
        for (size_t i = 1; i < op.P.size() && i <= n; ++i) {
            Jet t = jet_mul(jet_eval(op.P[i], Q(static_cast<long>(n - i)), r),
                            A[n - i]);
            for (size_t m = 0; m < r; ++m) s.c[m] += t.c[m];
        }
        Jet piv = jet_eval(op.P[0], Q(static_cast<long>(n)), r);
        Jet a = jet_mul(jet_inv(piv), s);
        for (auto& q : a.c) q = -q;
        A.push_back(a);
    }
    FrobeniusBasis b;
    b.parts.assign(r, Series(N));
    for (size_t n = 0; n < N; ++n)
        for (size_t m = 0; m < r; ++m) b.parts[m].at(n) = A[n].c[m];
    return b;
}

// |y0 y3; y0' y3'| = |y1 y2; y1' y2'| as log-series to order N
inline bool wronskian_cond_check(const FrobeniusBasis& b, size_t N) {
    if (b.order() != 4)
        throw std::domain_error("wronskian condition requires order 4");
    auto w = [](const LogSeries& u, const LogSeries& v) {
        return u * theta(v) - v * theta(u);
    };
    LogSeries lhs = w(b.y(0), b.y(3)), rhs = w(b.y(1), b.y(2));
    return (lhs - rhs).is_zero(N);
}

}  // namespace cy
