#pragma once
// Wronskian bridge between 4th- and 5th-order equations: the wronskian
// pair w0 = x W(y0,y1), w1 = x W(y0,y2), the double-wronskian identity,
// verification of pullback pairs, and a best-effort reverse derivation.
//
// The subleading d/dx coefficient of a MUM operator of order r expands as
// a_{r-1} = r(r-1)/(2x) + h(x).  The wronskians of the order-4 basis
// solve the order-5 equation only after the algebraic normalization
// w ~> w * exp((3/8) int h4 dx); dually, the order-4 analytic solution is
// recovered from the order-5 wronskian u via y0^2 = u * exp(-(2/5) int h5 dx).

#include "cy/d_op.hpp"
#include "cy/fit.hpp"
#include "cy/frobenius.hpp"

#include <stdexcept>

namespace cy {

struct WronskianPair {
    LogSeries w0;  // log-free, constant term 1
    LogSeries w1;  // log-degree exactly 1
};

inline WronskianPair wronskians(const FrobeniusBasis& b) {
    if (b.order() != 4)
        throw std::domain_error("wronskians requires an order-4 basis");
    auto w = [](const LogSeries& u, const LogSeries& v) {
        return u * theta(v) - v * theta(u);
    };
    WronskianPair p;
    p.w0 = w(b.y(0), b.y(1));
    p.w1 = w(b.y(0), b.y(2));
    p.w0.normalize();
    p.w1.normalize();
    return p;
}

// |w0 w1; w0' w1'| = x^2 y0^2 exp(-1/2 int a3 dx).  With a3 = c/x + h(x)
// the right side is x^{3 - c/2} y0^2 exp(-1/2 int h dx) after multiplying
// out the leading 1/x of the bare wronskian determinant.
inline bool double_wronskian_check(const FrobeniusBasis& b,
                                   const ThetaOperator& op4, size_t N) {
    if (!cond2_check(op4))
        throw std::domain_error("double_wronskian_check requires cond2");
    WronskianPair p = wronskians(b);
    LogSeries lhs = p.w0 * theta(p.w1) - p.w1 * theta(p.w0);
    auto [c, h] = top_coeff_expansion(op4, b.trunc());
    Q e = Q(3) - c / 2;
    if (!is_integer(e))
        throw std::domain_error(
            "double_wronskian_check: pole of a3 not absorbable, non-checkable");
    long k = static_cast<long>(e.get_num().get_si());
    Series rhs = b.analytic() * b.analytic() *
                 exp(Q(-1, 2) * integral(h.truncated(b.trunc())));
    LogSeries L = lhs;
    if (k >= 0) rhs = xshift(rhs, k);
    else L = xshift(L, static_cast<size_t>(-k));
    LogSeries R;
    R.parts.push_back(rhs);
    return (L - R).is_zero(N);
}

// normalization factor exp(beta * int h dx) for a MUM operator
inline Series pullback_normalizer(const ThetaOperator& op, const Q& beta,
                                  size_t N) {
    auto [c, h] = top_coeff_expansion(op, N);
    (void)c;
    return exp(beta * integral(h));
}

inline bool verify_pullback_pair(const ThetaOperator& op4,
                                 const ThetaOperator& op5, size_t N) {
    if (op4.order() != 4 || !mum_check(op4))
        throw std::domain_error("verify_pullback_pair: op4 must be MUM of order 4");
    if (op5.order() != 5 || !cond2_5_check(op5))
        throw std::domain_error(
            "verify_pullback_pair: op5 must have order 5 and satisfy the "
            "order-5 coefficient identity");
    FrobeniusBasis b = frobenius(op4, N + 8);
    WronskianPair p = wronskians(b);
    Series g = pullback_normalizer(op4, Q(3, 8), b.trunc());
    LogSeries t0 = g * p.w0, t1 = g * p.w1;
    return apply(op5, t0).is_zero(N) && apply(op5, t1).is_zero(N);
}

// Best-effort reverse derivation: from the order-5 operator, reconstruct
// the analytic solution of the order-4 pullback as
//   y0 = sqrt( u * exp(-(2/5) int h5 dx) ),  u = analytic part of x W(z0, z1),
// then search an annihilator of order 4 over a degree grid.
inline FitResult derive_pullback(const ThetaOperator& op5, size_t N,
                                 long p_max = 6, long margin = 5) {
    if (op5.order() != 5 || !mum_check(op5))
        throw std::domain_error("derive_pullback: op5 must be MUM of order 5");
    FrobeniusBasis b = frobenius(op5, N);
    auto w = [](const LogSeries& u, const LogSeries& v) {
        return u * theta(v) - v * theta(u);
    };
    LogSeries wl = w(b.y(0), b.y(1));
    wl.normalize();
    if (wl.log_degree() != 0)
        throw std::domain_error("derive_pullback: wronskian not log-free");
    Series u = wl.parts[0];
    Series g = pullback_normalizer(op5, Q(-2, 5), N);
    Series y0 = sqrt(u * g);
    std::vector<Q> seq(y0.c.begin(), y0.c.end());
    FitResult best;
    for (long p = 1; p <= p_max; ++p) {
        FitSpec spec;
        spec.order = 4;
        spec.degree = p;
        spec.margin = margin;
        if (static_cast<long>(seq.size()) < spec.unknowns() + margin) break;
        FitResult res = fit(seq, spec);
        if (res.success()) return res;
        best = res;
    }
    if (best.message.empty()) best.message = "degree grid exhausted";
    return best;
}

}  // namespace cy
