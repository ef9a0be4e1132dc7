#pragma once
// Dense univariate polynomials over Q, canonical form = no trailing zeros.

#include "cy/rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <vector>

namespace cy {

struct Poly {
    std::vector<Q> c;  // c[i] = coefficient of x^i; empty = zero polynomial

    Poly() = default;
    Poly(std::initializer_list<Q> init) : c(init) { normalize(); }
    explicit Poly(std::vector<Q> v) : c(std::move(v)) { normalize(); }
    static Poly constant(const Q& q) { return q == 0 ? Poly{} : Poly{q}; }
    static Poly x() { return Poly{0, 1}; }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    // degree of the zero polynomial is -1 by convention
    long degree() const { return static_cast<long>(c.size()) - 1; }
    const Q& operator[](size_t i) const {
        static const Q zero = 0;
        return i < c.size() ? c[i] : zero;
    }
    Q& coeff(size_t i) {
        if (i >= c.size()) c.resize(i + 1, Q(0));
        return c[i];
    }
    Q leading() const { return c.empty() ? Q(0) : c.back(); }

    bool operator==(const Poly& o) const { return c == o.c; }

    Q eval(const Q& x) const {
        Q r = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
        return r;
    }

    Poly derivative() const {
        Poly r;
        for (size_t i = 1; i < c.size(); ++i) r.c.push_back(Q(i) * c[i]);
        r.normalize();
        return r;
    }

    // p(x + s)
    Poly shift(const Q& s) const {
        Poly r;
        for (size_t k = 0; k < c.size(); ++k) {
            Q term = c[k];
            // add c[k] * (x+s)^k via binomial expansion
            Q spow = 1;
            for (long j = static_cast<long>(k); j >= 0; --j) {
                r.coeff(j) += term * Q(binom(static_cast<long>(k), j)) * spow;
                spow *= s;
            }
        }
        r.normalize();
        return r;
    }

    // p(a*x + b)
    Poly compose_affine(const Q& a, const Q& b) const {
        Poly r;
        for (auto it = c.rbegin(); it != c.rend(); ++it) {
            // r = r*(a x + b) + *it
            Poly nr;
            nr.c.assign(r.c.size() + 1, Q(0));
            for (size_t i = 0; i < r.c.size(); ++i) {
                nr.c[i + 1] += r.c[i] * a;
                nr.c[i] += r.c[i] * b;
            }
            if (nr.c.empty()) nr.c.push_back(*it);
            else nr.c[0] += *it;
            nr.normalize();
            r = nr;
        }
        return r;
    }
};

inline Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Q(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.normalize();
    return r;
}

inline Poly operator-(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Q(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.normalize();
    return r;
}

inline Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& q : r.c) q = -q;
    return r;
}

inline Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Q(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.normalize();
    return r;
}

inline Poly operator*(const Poly& a, const Q& s) {
    if (s == 0) return {};
    Poly r = a;
    for (auto& q : r.c) q *= s;
    return r;
}
inline Poly operator*(const Q& s, const Poly& a) { return a * s; }

// Quotient and remainder of exact division over Q.
inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("poly division by zero");
    Poly rem = a, quot;
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        long d = rem.degree() - b.degree();
        Q f = rem.leading() / b.leading();
        quot.coeff(d) += f;
        for (size_t i = 0; i < b.c.size(); ++i) rem.c[i + d] -= f * b.c[i];
        rem.normalize();
    }
    quot.normalize();
    return {quot, rem};
}

inline Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = b;
        b = r;
    }
    if (!a.is_zero()) {
        Q lead = a.leading();
        for (auto& q : a.c) q /= lead;  // monic gcd
    }
    return a;
}

// product of linear factors (u0 + u1*theta) given as {u0, u1} pairs
inline Poly linprod(std::initializer_list<std::pair<Q, Q>> factors) {
    Poly r{1};
    for (auto& [u0, u1] : factors) r = r * Poly{u0, u1};
    return r;
}

}  // namespace cy
