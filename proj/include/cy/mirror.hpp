#pragma once
// Mirror map, Yukawa coupling, instanton numbers, and the integrality
// certificates.  The log x inside t = y1/y0 is handled structurally:
// t - log x = f1/f0 is a genuine power series and q = x*exp(t - log x).

#include "cy/frobenius.hpp"

#include <optional>
#include <vector>

namespace cy {

struct MirrorData {
    Series t_minus_logx;        // f1/f0
    Series q_of_x;              // q = x + c2 x^2 + ...
    Series x_of_q;              // series reversion
    Series K_of_q;              // Yukawa coupling, K(0) = 1
    std::vector<Q> instanton;   // n_1..n_D
    std::optional<Z> N0;        // least N0 <= bound with N0*n_d integral
};

inline Series mirror_map_q(const FrobeniusBasis& b) {
    Series sigma = b.parts[1] / b.parts[0];  // t - log x
    // q = x * exp(sigma)
    return xshift(exp(sigma), 1);
}

// K(q) = 1 + (q d/dq)^2 g(q) with g = f2/f0 - sigma^2/2 re-expanded in q
inline Series yukawa(const FrobeniusBasis& b) {
    if (b.order() < 3) throw std::domain_error("yukawa requires order >= 3");
    Series sigma = b.parts[1] / b.parts[0];
    Series g = b.parts[2] / b.parts[0] - Q(1, 2) * (sigma * sigma);
    Series q = mirror_map_q(b);
    Series xq = revert(q);
    Series gq = compose(g, xq);
    Series K = theta(theta(gq));
    K.at(0) = 1;
    return K;
}

// Lambert-expansion inversion: [q^m](K-1) = sum_{d|m} n_d d^3
inline std::vector<Q> instantons(const Series& K, size_t D) {
    if (K.trunc() <= D) throw std::domain_error("instantons: K truncation too small");
    std::vector<Q> n(D + 1, Q(0));
    for (size_t m = 1; m <= D; ++m) {
        Q acc = K[m];
        for (size_t d = 1; d < m; ++d)
            if (m % d == 0) acc -= n[d] * Q(static_cast<long>(d * d * d));
        n[m] = acc / Q(static_cast<long>(m * m * m));
    }
    return std::vector<Q>(n.begin() + 1, n.end());
}

// re-sum sum n_d d^3 q^d/(1-q^d); used for the Lambert consistency property
inline Series lambert_resum(const std::vector<Q>& n, size_t trunc) {
    Series s(trunc);
    for (size_t d = 1; d <= n.size(); ++d) {
        Q f = n[d - 1] * Q(static_cast<long>(d * d * d));
        for (size_t m = d; m < trunc; m += d) s.at(m) += f;
    }
    if (trunc) s.at(0) += 1;
    return s;
}

inline std::optional<Z> find_N0(const std::vector<Q>& inst, const Z& bound) {
    Z N0 = 1;
    for (const auto& q : inst) N0 = lcm(N0, q.get_den());
    if (N0 > bound) return std::nullopt;
    return N0;
}

struct IntegralityReport {
    bool mum = false;
    bool a3 = false;            // y0 coefficients integral to N
    bool b3 = false;            // q coefficients integral to N
    bool c3 = false;            // N0 found for d <= D
    std::optional<Z> N0;
    std::vector<Q> instanton;   // n_1..n_D
};

inline IntegralityReport integrality_report(const ThetaOperator& op, size_t N,
                                            size_t D,
                                            const Z& bound = Z(1000000)) {
    IntegralityReport rep;
    rep.mum = mum_check(op);
    if (!rep.mum) return rep;
    size_t trunc = std::max(N + 1, D + 2);
    FrobeniusBasis b = frobenius(op, trunc);
    rep.a3 = true;
    for (size_t n = 0; n <= N && n < b.trunc(); ++n)
        if (!is_integer(b.analytic()[n])) rep.a3 = false;
    Series q = mirror_map_q(b);
    rep.b3 = true;
    for (size_t n = 0; n <= N && n < q.trunc(); ++n)
        if (!is_integer(q[n])) rep.b3 = false;
    if (b.order() >= 3) {
        Series K = yukawa(b);
        rep.instanton = instantons(K, D);
        rep.N0 = find_N0(rep.instanton, bound);
        rep.c3 = rep.N0.has_value();
    }
    return rep;
}

}  // namespace cy
