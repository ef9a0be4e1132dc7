#pragma once
// Exact arithmetic kernel: big rationals/integers on top of GMP, plus the
// combinatorial primitives used by every sequence evaluator.

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cy {

using Z = mpz_class;
using Q = mpq_class;

inline Z zpow(const Z& b, unsigned long e) {
    Z r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline Q qpow(const Q& b, long e) {
    if (e < 0) {
        if (b == 0) throw std::domain_error("qpow: zero to negative power");
        Q inv = 1 / b;
        return qpow(inv, -e);
    }
    Q r = 1, x = b;
    long n = e;
    while (n) {
        if (n & 1) r *= x;
        x *= x;
        n >>= 1;
    }
    return r;
}

inline Z factorial(long n) {
    if (n < 0) throw std::domain_error("factorial of negative");
    Z r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// binom(n, k) with the out-of-range convention binom(n, k) = 0 for k < 0 or
// k > n; this is what makes the empty-sum evaluators total functions.
inline Z binom(long n, long k) {
    if (n < 0) throw std::domain_error("binom: negative upper index");
    if (k < 0 || k > n) return 0;
    Z r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

inline Z binom(const Z& n, const Z& k) {
    if (n < 0) throw std::domain_error("binom: negative upper index");
    if (k < 0 || k > n) return 0;
    Z r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), mpz_get_ui(k.get_mpz_t()));
    return r;
}

// H_n = sum_{j=1}^{n} 1/j, with H_n = 0 for n <= 0.
inline Q harmonic(long n) {
    if (n <= 0) return 0;
    Q h = 0;
    for (long j = 1; j <= n; ++j) h += Q(1, j);
    return h;
}

inline bool is_integer(const Q& q) { return q.get_den() == 1; }

// reduced fraction (the two-argument mpq_class constructor does not
// canonicalize on its own)
inline Q frac(const Z& num, const Z& den) {
    Q q(num, den);
    q.canonicalize();
    return q;
}
inline Q frac(long num, long den) { return frac(Z(num), Z(den)); }

inline std::string to_string(const Q& q) { return q.get_str(); }
inline std::string to_string(const Z& z) { return z.get_str(); }

// Parse "num" or "num/den" (arbitrary precision).
inline Q parse_rational(const std::string& s) {
    Q q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

inline Z lcm(const Z& a, const Z& b) {
    Z r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Z gcd(const Z& a, const Z& b) {
    Z r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace cy
