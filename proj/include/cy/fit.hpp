#pragma once
// Annihilating-operator search by exact linear algebra: set up the linear
// system sum_{i,k} c_{i,k} (n-i)^k A_{n-i} = 0 over a window of n, compute
// the exact rational nullspace, and verify against held-out terms.

#include "cy/theta_op.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace cy {

struct FitSpec {
    long order = 0;
    long degree = 0;  // x-degree of the resulting theta-form operator
    long margin = 5;  // extra equations beyond unknowns
    // Optional staircase in derivative form: windows[d] = {lo, hi} is the
    // admitted x-degree range for the coefficient of d^d/dx^d, with lo >= d
    // (x^m d^d/dx^d = x^{m-d} theta(theta-1)...(theta-d+1) stays polynomial).
    // Empty = fit directly in theta form over the full grid; the default
    // staircase [d .. degree+d] spans exactly the same operator space.
    std::vector<std::pair<long, long>> windows;

    long unknowns() const {
        if (windows.empty()) return (order + 1) * (degree + 1);
        long u = 0;
        for (auto& [lo, hi] : windows) u += hi - lo + 1;
        return u;
    }
    std::pair<long, long> window(long d) const {
        if (windows.empty()) return {d, degree + d};
        return windows[d];
    }
};

struct FitResult {
    std::optional<ThetaOperator> op;
    long nullity = 0;
    size_t consumed = 0;
    std::string message;
    bool success() const { return op.has_value(); }
};

inline bool verify(const ThetaOperator& op, const std::vector<Q>& seq) {
    for (const Q& r : apply(op, seq))
        if (r != 0) return false;
    return true;
}

inline FitResult fit(const std::vector<Q>& seq, const FitSpec& spec) {
    if (!spec.windows.empty()) {
        if (static_cast<long>(spec.windows.size()) != spec.order + 1)
            throw std::invalid_argument("fit: need one window per derivative");
        for (long d = 0; d <= spec.order; ++d) {
            auto [lo, hi] = spec.window(d);
            if (lo < d || hi < lo)
                throw std::invalid_argument(
                    "fit: window must satisfy d <= lo <= hi");
        }
    }
    FitResult res;
    bool all_zero = std::all_of(seq.begin(), seq.end(),
                                [](const Q& q) { return q == 0; });
    if (all_zero) {
        res.message = "degenerate: all-zero sequence";
        return res;
    }
    long ncols = spec.unknowns();
    long rows = ncols + spec.margin;
    if (static_cast<long>(seq.size()) < rows) {
        res.message = "insufficient coefficients";
        return res;
    }
    res.consumed = seq.size();
    bool dform = !spec.windows.empty();
    // columns: theta form (x-row i, theta^k) or derivative form (d^d, x^m)
    std::vector<std::pair<long, long>> cols;
    if (dform) {
        for (long d = 0; d <= spec.order; ++d) {
            auto [lo, hi] = spec.window(d);
            for (long m = lo; m <= hi; ++m) cols.emplace_back(d, m);
        }
    } else {
        for (long i = 0; i <= spec.degree; ++i)
            for (long k = 0; k <= spec.order; ++k) cols.emplace_back(i, k);
    }
    std::vector<std::vector<Q>> M(rows, std::vector<Q>(ncols, Q(0)));
    for (long n = 0; n < rows; ++n)
        for (long c = 0; c < ncols; ++c) {
            if (dform) {
                // x^m (d/dx)^d sends A_t x^t to t(t-1)...(t-d+1) A_t x^{t-d+m}
                auto [d, m] = cols[c];
                long t = n - m + d;  // t <= n since m >= d
                if (t < 0) continue;
                Q fall = 1;
                for (long u = 0; u < d; ++u) fall *= t - u;
                M[n][c] = fall * seq[t];
            } else {
                auto [i, k] = cols[c];
                if (n - i >= 0) M[n][c] = qpow(Q(n - i), k) * seq[n - i];
            }
        }
    // reduced row echelon form
    std::vector<long> piv;
    long rr = 0;
    for (long c = 0; c < ncols && rr < rows; ++c) {
        long pr = -1;
        for (long ri = rr; ri < rows; ++ri)
            if (M[ri][c] != 0) {
                pr = ri;
                break;
            }
        if (pr < 0) continue;
        std::swap(M[rr], M[pr]);
        Q inv = 1 / M[rr][c];
        for (auto& q : M[rr]) q *= inv;
        for (long ri = 0; ri < rows; ++ri) {
            if (ri == rr || M[ri][c] == 0) continue;
            Q f = M[ri][c];
            for (long cc = 0; cc < ncols; ++cc) M[ri][cc] -= f * M[rr][cc];
        }
        piv.push_back(c);
        ++rr;
    }
    std::vector<long> freecols;
    for (long c = 0; c < ncols; ++c)
        if (std::find(piv.begin(), piv.end(), c) == piv.end())
            freecols.push_back(c);
    res.nullity = static_cast<long>(freecols.size());
    if (freecols.empty()) {
        res.message = "no annihilator in this (order, degree) window";
        return res;
    }
    // deterministic representative: first free column = 1
    long fc = freecols[0];
    std::vector<Q> v(ncols, Q(0));
    v[fc] = 1;
    for (size_t ri = 0; ri < piv.size(); ++ri) v[piv[ri]] = -M[ri][fc];
    ThetaOperator op;
    if (dform) {
        long top = 0;
        for (auto& [d, m] : cols) top = std::max(top, m - d);
        op.P.resize(top + 1);
        for (long c = 0; c < ncols; ++c) {
            auto [d, m] = cols[c];
            if (v[c] == 0) continue;
            Poly fall{1};  // theta(theta-1)...(theta-d+1)
            for (long u = 0; u < d; ++u) fall = fall * Poly{Q(-u), Q(1)};
            op.P[m - d] = op.P[m - d] + v[c] * fall;
        }
    } else {
        op.P.resize(spec.degree + 1);
        for (long c = 0; c < ncols; ++c) {
            auto [i, k] = cols[c];
            if (v[c] != 0) op.P[i].coeff(k) = v[c];
        }
    }
    for (auto& p : op.P) p.normalize();
    op.canonicalize();
    if (!verify(op, seq)) {
        res.message = "candidate failed verification on held-out terms";
        return res;
    }
    res.op = op;
    return res;
}

// scan (r, p) minimizing r first, then p; first success wins
inline FitResult search(const std::vector<Q>& seq, long r_max, long p_max,
                        long margin = 5) {
    FitResult last;
    for (long r = 1; r <= r_max; ++r)
        for (long p = 1; p <= p_max; ++p) {
            FitSpec spec;
            spec.order = r;
            spec.degree = p;
            spec.margin = margin;
            if (static_cast<long>(seq.size()) < spec.unknowns() + margin)
                continue;
            FitResult res = fit(seq, spec);
            if (res.success()) return res;
            last = res;
        }
    if (last.message.empty()) last.message = "grid exhausted";
    else last.message = "grid exhausted: " + last.message;
    return last;
}

// Default staircase generalizing the order-4, degree-12 shape: the
// coefficient of the d-th derivative runs over x-degrees [d .. p+d], so the
// top derivative starts at x^r and ends at x^{p+r}.  This spans exactly the
// full (r, p) theta-form grid with (r+1)(p+1) unknowns.
inline FitSpec staircase_spec(long r, long p, long margin = 5) {
    FitSpec spec;
    spec.order = r;
    spec.degree = p;
    spec.margin = margin;
    for (long d = 0; d <= r; ++d) spec.windows.emplace_back(d, p + d);
    return spec;
}

}  // namespace cy
