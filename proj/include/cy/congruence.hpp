#pragma once
// Dwork and Lucas congruences, and the exact binomial-identity suite.

#include "cy/rational.hpp"

#include <stdexcept>
#include <vector>

namespace cy {

inline std::vector<long> base_p_digits(Z n, long p) {
    if (n < 0) throw std::domain_error("base_p_digits: negative argument");
    std::vector<long> d;
    while (n > 0) {
        d.push_back(mpz_fdiv_ui(n.get_mpz_t(), p));
        n /= p;
    }
    return d;
}

struct DworkReport {
    long p = 0;
    long K = 0;
    long tested = 0;                 // all n < p^K
    std::vector<long> violations;    // witnesses
    bool pass() const { return violations.empty(); }
};

// A_n == prod_i A_{n_i}  (mod p), digits of n in base p; empty product = 1
inline DworkReport dwork_check(const std::vector<Q>& seq, long p, long K) {
    DworkReport rep;
    rep.p = p;
    rep.K = K;
    long bound = 1;
    for (long i = 0; i < K; ++i) bound *= p;
    rep.tested = bound;
    if (static_cast<long>(seq.size()) < bound)
        throw std::domain_error("dwork_check: sequence shorter than p^K");
    std::vector<long> res(bound);
    for (long n = 0; n < bound; ++n) {
        if (!is_integer(seq[n]))
            throw std::domain_error("dwork_check: non-integer entry");
        res[n] = mpz_fdiv_ui(seq[n].get_num().get_mpz_t(), p);
    }
    for (long n = 0; n < bound; ++n) {
        long prod = 1 % p;
        for (long d : base_p_digits(Z(n), p)) prod = (prod * res[d]) % p;
        if (res[n] % p != prod) rep.violations.push_back(n);
    }
    return rep;
}

// binom(n,k) == prod_i binom(n_i, k_i)  (mod p) for all 0 <= k <= n <= bound
inline bool lucas_check(long p, long bound) {
    for (long n = 0; n <= bound; ++n)
        for (long k = 0; k <= n; ++k) {
            long lhs = mpz_fdiv_ui(binom(Z(n), Z(k)).get_mpz_t(), p);
            auto nd = base_p_digits(Z(n), p);
            auto kd = base_p_digits(Z(k), p);
            long rhs = 1 % p;
            for (size_t i = 0; i < nd.size(); ++i) {
                long ki = i < kd.size() ? kd[i] : 0;
                rhs = (rhs * mpz_fdiv_ui(binom(Z(nd[i]), Z(ki)).get_mpz_t(), p)) % p;
            }
            if (lhs != rhs) return false;
        }
    return true;
}

// the four exact binomial identities, checked for all n (and the free
// second index, where present) up to bound
struct IdentitySuiteReport {
    bool id1 = true;  // sum_k C(n,k)^2 C(3k,2n) = sum_k C(n,k)^2 C(2k,k)
    bool id2 = true;  // sum_k (-1)^{n+k} C(n,k) C(n+k,n)^2 = sum_k C(n,k)^2 C(n+k,n)
    bool id3 = true;  // sum_k (-1)^{k+l} C(n,k) C(n,2l-k) = C(n,l)
    bool id4 = true;  // sum_l (-1)^{n+k+l} C(n,l) C(2l,n-k) C(2n-2l,k) = 2^n C(n,k)
    bool pass() const { return id1 && id2 && id3 && id4; }
};

inline IdentitySuiteReport identity_suite(long bound) {
    IdentitySuiteReport rep;
    for (long n = 0; n <= bound; ++n) {
        Z l1 = 0, r1 = 0, l2 = 0, r2 = 0;
        for (long k = 0; k <= n; ++k) {
            Z b = binom(Z(n), Z(k));
            l1 += b * b * binom(Z(3 * k), Z(2 * n));
            r1 += b * b * binom(Z(2 * k), Z(k));
            Z c = binom(Z(n + k), Z(n));
            Z sgn = ((n + k) % 2 == 0) ? 1 : -1;
            l2 += sgn * b * c * c;
            r2 += b * b * c;
        }
        if (l1 != r1) rep.id1 = false;
        if (l2 != r2) rep.id2 = false;
        for (long l = 0; l <= n; ++l) {
            Z s3 = 0;
            for (long k = 0; k <= n; ++k) {
                Z sgn = ((k + l) % 2 == 0) ? 1 : -1;
                s3 += sgn * binom(Z(n), Z(k)) * binom(Z(n), Z(2 * l - k));
            }
            if (s3 != binom(Z(n), Z(l))) rep.id3 = false;
        }
        for (long k = 0; k <= n; ++k) {
            Z s4 = 0;
            for (long l = 0; l <= n; ++l) {
                Z sgn = ((n + k + l) % 2 == 0) ? 1 : -1;
                s4 += sgn * binom(Z(n), Z(l)) * binom(Z(2 * l), Z(n - k)) *
                      binom(Z(2 * n - 2 * l), Z(k));
            }
            if (s4 != zpow(2, n) * binom(Z(n), Z(k))) rep.id4 = false;
        }
    }
    return rep;
}

}  // namespace cy
