#pragma once
// Truncated power series over Q. A series tracks coefficients of x^0..x^{N-1}
// where N is the truncation; arithmetic never claims coefficients beyond the
// minimum truncation of its operands.

#include "cy/poly.hpp"
#include "cy/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace cy {

struct Series {
    std::vector<Q> c;  // size = truncation

    Series() = default;
    explicit Series(size_t trunc) : c(trunc, Q(0)) {}
    explicit Series(std::vector<Q> v) : c(std::move(v)) {}

    size_t trunc() const { return c.size(); }
    const Q& operator[](size_t i) const {
        static const Q zero = 0;
        return i < c.size() ? c[i] : zero;
    }
    Q& at(size_t i) { return c.at(i); }
    bool is_zero() const {
        return std::all_of(c.begin(), c.end(), [](const Q& q) { return q == 0; });
    }
    bool operator==(const Series& o) const { return c == o.c; }

    Series truncated(size_t n) const {
        Series r(*this);
        if (r.c.size() > n) r.c.resize(n);
        return r;
    }

    static Series one(size_t trunc) {
        Series s(trunc);
        if (trunc) s.c[0] = 1;
        return s;
    }
    static Series x(size_t trunc) {
        Series s(trunc);
        if (trunc > 1) s.c[1] = 1;
        return s;
    }
    static Series from_poly(const Poly& p, size_t trunc) {
        Series s(trunc);
        for (size_t i = 0; i < p.c.size() && i < trunc; ++i) s.c[i] = p.c[i];
        return s;
    }
};

inline size_t min_trunc(const Series& a, const Series& b) {
    return std::min(a.trunc(), b.trunc());
}

inline Series operator+(const Series& a, const Series& b) {
    Series r(min_trunc(a, b));
    for (size_t i = 0; i < r.trunc(); ++i) r.c[i] = a[i] + b[i];
    return r;
}

inline Series operator-(const Series& a, const Series& b) {
    Series r(min_trunc(a, b));
    for (size_t i = 0; i < r.trunc(); ++i) r.c[i] = a[i] - b[i];
    return r;
}

inline Series operator-(const Series& a) {
    Series r = a;
    for (auto& q : r.c) q = -q;
    return r;
}

inline Series operator*(const Series& a, const Series& b) {
    Series r(min_trunc(a, b));
    for (size_t i = 0; i < r.trunc(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; i + j < r.trunc(); ++j)
            if (b[j] != 0) r.c[i + j] += a[i] * b[j];
    }
    return r;
}

inline Series operator*(const Series& a, const Q& s) {
    Series r = a;
    for (auto& q : r.c) q *= s;
    return r;
}
inline Series operator*(const Q& s, const Series& a) { return a * s; }

inline Series operator/(const Series& a, const Series& b) {
    if (b.trunc() == 0 || b[0] == 0)
        throw std::domain_error("series division by zero constant term");
    Series r(min_trunc(a, b));
    for (size_t n = 0; n < r.trunc(); ++n) {
        Q acc = a[n];
        for (size_t j = 1; j <= n; ++j) acc -= b[j] * r.c[n - j];
        r.c[n] = acc / b[0];
    }
    return r;
}

// a(b(x)); requires b constant term zero
inline Series compose(const Series& a, const Series& b) {
    if (b.trunc() > 0 && b[0] != 0)
        throw std::domain_error("series composition with nonzero constant term");
    size_t N = min_trunc(a, b);
    Series r(N);
    // Horner on truncated series
    for (size_t i = a.trunc(); i-- > 0;) {
        Series nr = (r * b).truncated(N);
        if (N) nr.c[0] += a[i];
        r = nr;
    }
    return r;
}

// theta = x d/dx
inline Series theta(const Series& a) {
    Series r(a.trunc());
    for (size_t i = 0; i < a.trunc(); ++i) r.c[i] = Q(i) * a[i];
    return r;
}

inline Series derivative(const Series& a) {
    if (a.trunc() == 0) return a;
    Series r(a.trunc() - 1);
    for (size_t i = 0; i + 1 < a.trunc(); ++i) r.c[i] = Q(i + 1) * a[i + 1];
    return r;
}

// term-by-term integral with constant 0 (keeps the same truncation)
inline Series integral(const Series& a) {
    Series r(a.trunc());
    for (size_t i = 1; i < a.trunc(); ++i) r.c[i] = a[i - 1] / Q(i);
    return r;
}

// multiply by x^k (shifting coefficients up, same truncation)
inline Series xshift(const Series& a, size_t k) {
    Series r(a.trunc());
    for (size_t i = k; i < a.trunc(); ++i) r.c[i] = a[i - k];
    return r;
}

inline Series exp(const Series& a) {
    if (a.trunc() > 0 && a[0] != 0)
        throw std::domain_error("series exp requires zero constant term");
    Series r(a.trunc());
    if (r.trunc() == 0) return r;
    r.c[0] = 1;
    // r' = a' r  =>  n r_n = sum_{j=1}^{n} j a_j r_{n-j}
    for (size_t n = 1; n < r.trunc(); ++n) {
        Q acc = 0;
        for (size_t j = 1; j <= n; ++j) acc += Q(j) * a[j] * r.c[n - j];
        r.c[n] = acc / Q(n);
    }
    return r;
}

inline Series log(const Series& a) {
    if (a.trunc() == 0 || a[0] != 1)
        throw std::domain_error("series log requires constant term 1");
    // log(a) = integral(a'/a)
    Series r(a.trunc());
    for (size_t n = 1; n < r.trunc(); ++n) {
        Q acc = Q(n) * a[n];
        for (size_t j = 1; j < n; ++j) acc -= Q(j) * r.c[j] * a[n - j];
        r.c[n] = acc / Q(n);
    }
    return r;
}

inline Series sqrt(const Series& a) {
    if (a.trunc() == 0 || a[0] != 1)
        throw std::domain_error("series sqrt requires constant term 1");
    Series r(a.trunc());
    r.c[0] = 1;
    for (size_t n = 1; n < r.trunc(); ++n) {
        Q acc = a[n];
        for (size_t j = 1; j < n; ++j) acc -= r.c[j] * r.c[n - j];
        r.c[n] = acc / 2;
    }
    return r;
}

// compositional inverse of a = x + O(x^2): a(revert(a)) = x
inline Series revert(const Series& a) {
    if (a.trunc() < 2 || a[0] != 0 || a[1] != 1)
        throw std::domain_error("series reversion requires a = x + O(x^2)");
    size_t N = a.trunc();
    Series r(N);
    r.c[1] = 1;
    // successive substitution: fix coefficients order by order
    for (size_t n = 2; n < N; ++n) {
        // compute a(r) to order n with current r (r_n = 0 so far)
        Series comp = compose(a.truncated(n + 1), r.truncated(n + 1));
        // a(r)_n = r_n + (terms from current r); want a(r) = x
        r.c[n] = -comp[n];
    }
    return r;
}

}  // namespace cy
