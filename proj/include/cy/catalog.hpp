#pragma once
// The sequence/operator catalog: evaluators for the closed-form coefficient
// sequences, the empty-sum parameter families, Hadamard products, Zagier-type
// recurrences, and the embedded theta-operators of the catalog entries.

#include "cy/laurent.hpp"
#include "cy/theta_op.hpp"

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cy {

// (3k)!/k!^3 as a product of binomials
inline Z ff3(long k) { return binom(Z(2 * k), Z(k)) * binom(Z(3 * k), Z(k)); }
// (4k)!/k!^4
inline Z ff4(long k) {
    return binom(Z(2 * k), Z(k)) * binom(Z(3 * k), Z(k)) * binom(Z(4 * k), Z(k));
}

inline Q qbinom(long n, long k) { return Q(binom(Z(n), Z(k))); }

// ---- eta: the three printed forms --------------------------------------

inline Q eta_zudilin1(long n) {
    if (n == 0) return 1;
    Q s = 0;
    for (long k = 0; k <= n / 5; ++k) {
        Q t = frac(n - 2 * k, 4 * n - 5 * k) * qpow(qbinom(n, k), 3) *
              Q(binom(Z(4 * n - 5 * k), Z(3 * n)));
        s += (k % 2 == 0) ? t : -t;
    }
    return 5 * s;
}

inline Q eta_zudilin2(long n) {
    if (n == 0) return 1;
    Q s = 0;
    for (long k = 0; k <= n / 5; ++k) {
        Q t = qpow(qbinom(n, k), 3) *
              Q(binom(Z(4 * n - 5 * k - 1), Z(3 * n)) +
                binom(Z(4 * n - 5 * k), Z(3 * n)));
        s += (k % 2 == 0) ? t : -t;
    }
    return s;
}

inline Q eta_original(long n) {
    if (n == 0) return 1;
    Q s = 0;
    for (long k = 0; k <= n / 5; ++k) {
        Q t = frac(n - 2 * k, 4 * n - 5 * k) / qpow(qbinom(n, k), 2) *
              qbinom(n, 5 * k) / Q(binom(Z(5 * n - 5 * k), Z(n))) *
              Q(factorial(5 * k)) / qpow(Q(factorial(k)), 5) *
              Q(factorial(5 * n - 5 * k)) / qpow(Q(factorial(n - k)), 5);
        s += (k % 2 == 0) ? t : -t;
    }
    return 5 / (qbinom(2 * n, n) * qbinom(3 * n, n)) * s;
}

// ---- closed-sum evaluators ---------------------------------------------

inline Q a15(long n) {
    Q s = 0;
    for (long k = 0; k <= n; ++k) s += qpow(qbinom(n, k), 3);
    return Q(ff3(n)) * s;
}

inline Q a22(long n) {
    Q s = 0;
    for (long k = 0; k <= n; ++k) s += qpow(qbinom(n, k), 5);
    return s;
}

inline Q a27h(long n) {
    Q s = 0;
    for (long k = 0; k <= n; ++k)
        s += qpow(qbinom(n, k), 7) *
             (1 + Q(k) * (-7 * harmonic(k) + 7 * harmonic(n - k)));
    return s;
}

inline Q a193(long n) {
    Q s = 0;
    for (long k = 0; k <= n; ++k)
        for (long l = 0; l <= n; ++l)
            s += qpow(qbinom(n, k), 2) * qpow(qbinom(n, l), 2) *
                 qbinom(k + l, l) * Q(binom(Z(n + k + l), Z(n)));
    return s;
}

inline Q a198(long n) {
    Q s = 0;
    for (long k = 0; k <= n; ++k)
        for (long l = 0; l <= n; ++l)
            s += qpow(qbinom(n, k), 2) * qpow(qbinom(n, l), 2) *
                 qbinom(k + l, l) * Q(binom(Z(2 * n - k), Z(n)));
    return s;
}

inline Q a264(long n) {
    Q b1 = 0;
    for (long k = 0; k <= n; ++k) {
        Q t = qbinom(n, k) * qbinom(2 * k, k) * qbinom(2 * n - 2 * k, n - k) *
              qpow(Q(binom(Z(2 * n + 2 * k), Z(n + k))), 2) *
              qpow(Q(binom(Z(4 * n - 2 * k), Z(2 * n - k))), 2) /
              qbinom(2 * n, k) / qbinom(2 * n, n - k);
        Q h = 1 + Q(k) * (-2 * harmonic(k) + 2 * harmonic(n - k) -
                          3 * harmonic(n + k) + 3 * harmonic(2 * n - k) +
                          2 * harmonic(2 * k) - 2 * harmonic(2 * n - 2 * k) +
                          4 * harmonic(2 * n + 2 * k) - 4 * harmonic(4 * n - 2 * k));
        b1 += t * h;
    }
    Q b2 = 0;
    for (long k = 1; k <= n; ++k)
        b2 += frac(n + 2 * k, k) * Q(binom(Z(2 * n + k), Z(2 * n))) *
              Q(binom(Z(2 * n + 2 * k), Z(n + k))) *
              qpow(qbinom(2 * n - 2 * k, n - k), 2) *
              qpow(Q(binom(Z(4 * n + 2 * k), Z(2 * n + k))), 2) /
              qbinom(2 * k, k) / Q(binom(Z(n + k), Z(n))) /
              qbinom(2 * n, n + k);
    return qpow(qbinom(2 * n, n), 2) / qpow(Q(16), n) * (b1 + b2);
}

inline Q a347(long n) {
    if (n == 0) return 1;
    Q s = 0;
    for (long k = 0; k <= n / 6; ++k)
        s += frac(n - 2 * k, 5 * n - 6 * k) * qpow(qbinom(n, k), 2) *
             Q(binom(Z(5 * n - 6 * k), Z(3 * n)));
    return 6 * qpow(qbinom(2 * n, n), 2) * s;
}

inline Q a349(long n) {
    Q s = 0;
    for (long k = 0; k <= n / 3; ++k)
        for (long l = 0; l <= n; ++l) {
            Q t = zpow(3, n - 3 * k) * qbinom(n, 3 * k) * Q(ff3(k)) *
                  qbinom(n, l) * qbinom(2 * k, n - l) * qbinom(2 * l, n);
            s += ((n + k) % 2 == 0) ? t : -t;
        }
    return s;
}

inline Q a360(long n) {
    Q s = 0;
    for (long k = 0; k <= n; ++k) {
        Q t = qbinom(n, k) * Q(binom(Z(n + 3 * k), Z(n))) *
              Q(binom(Z(4 * n - 3 * k), Z(n))) * Q(ff3(k)) * Q(ff3(n - k));
        Q h = 1 + Q(k) * (-4 * harmonic(k) + 4 * harmonic(n - k) +
                          3 * harmonic(n + 3 * k) - 3 * harmonic(4 * n - 3 * k));
        s += t * h;
    }
    return s;
}

inline Q apoly2d(long n) {
    Q s = 0;
    for (long k = 0; k <= n; ++k)
        s += qbinom(n, 3 * k) * qbinom(3 * k, k) * qbinom(2 * k, n - 4 * k);
    return s;
}

// symmetric pre-sum sum_k (n-2k) C(n,k)^m; identically zero since the
// weight is antisymmetric under k -> n-k
inline Q symmetric_zero_sum(long n, long m) {
    Q s = 0;
    for (long k = 0; k <= n; ++k) s += Q(n - 2 * k) * qpow(qbinom(n, k), m);
    return s;
}

// ---- convolution sequences (nested binomial-square products) -----------

// t rounds of A_m <- sum_j C(m,j)^2 A_{m-j}; t = 4 gives the five-fold
// multinomial-square sum, t = 5 the six-fold one
inline std::vector<Q> multinomial_square_terms(size_t N, int rounds) {
    std::vector<Q> A(N + 1, Q(1));
    for (int t = 0; t < rounds; ++t) {
        std::vector<Q> B(N + 1, Q(0));
        for (size_t m = 0; m <= N; ++m)
            for (size_t j = 0; j <= m; ++j)
                B[m] += qpow(qbinom(m, j), 2) * A[m - j];
        A = std::move(B);
    }
    return A;
}

// ---- Hadamard products and Zagier-type recurrences ---------------------

inline std::vector<Q> hadamard(const std::vector<Q>& u, const std::vector<Q>& v) {
    if (u.size() != v.size())
        throw std::invalid_argument("hadamard: length mismatch");
    std::vector<Q> r(u.size());
    for (size_t i = 0; i < u.size(); ++i) r[i] = u[i] * v[i];
    return r;
}

struct ZagierParams {
    int order = 2;  // 2 or 3
    Z a, b, c;
};

inline ThetaOperator zagier_operator(const ZagierParams& p) {
    ThetaOperator op;
    if (p.order == 2) {
        // theta^2 - x(a theta^2 + a theta + b) + c x^2 (theta+1)^2
        op.P = {Poly{0, 0, 1}, Poly{-Q(p.b), -Q(p.a), -Q(p.a)},
                Q(p.c) * (Poly{1, 1} * Poly{1, 1})};
    } else if (p.order == 3) {
        // theta^3 - x(2theta+1)(a theta^2 + a theta + b) + c x^2 (theta+1)^3
        op.P = {Poly{0, 0, 0, 1},
                Q(-1) * (Poly{1, 2} * Poly{Q(p.b), Q(p.a), Q(p.a)}),
                Q(p.c) * (Poly{1, 1} * Poly{1, 1} * Poly{1, 1})};
    } else {
        throw std::invalid_argument("zagier_operator: order must be 2 or 3");
    }
    return op;
}

inline std::vector<Q> zagier_seq(const ZagierParams& p, size_t N) {
    ThetaOperator op = zagier_operator(p);
    // leading recurrence coefficient is (n+1)^order -- never zero
    return series_from_operator(op, N);
}

inline std::vector<Q> central_binomial_sq(size_t N) {
    std::vector<Q> r(N + 1);
    for (size_t n = 0; n <= N; ++n) r[n] = qpow(qbinom(2 * n, n), 2);
    return r;
}

// ---- empty-sum parameter families --------------------------------------

struct EmptySumFamily {
    std::string id;
    int radix = 3;
    int a = 0;
    std::function<Q(long)> C;
    std::function<Q(long, long)> E;
};

inline EmptySumFamily empty_sum_family(const std::string& id) {
    // note the explicit -> Q: gmpxx expressions must not outlive the lambda
    auto one_c = [](long) -> Q { return Q(1); };
    auto one_e = [](long, long) -> Q { return Q(1); };
    auto c2sq = [](long n) -> Q { return qpow(qbinom(2 * n, n), 2); };
    auto c2 = [](long n) -> Q { return qbinom(2 * n, n); };
    auto inv2 = [](long n, long k) -> Q {
        return 1 / (qbinom(2 * n, k) * qbinom(2 * n, n - k));
    };
    auto cc = [](long n, long k) -> Q {
        return qbinom(2 * k, k) * qbinom(2 * n - 2 * k, n - k);
    };
    auto cc_over = [cc](long n, long k) -> Q {
        return cc(n, k) / qbinom(2 * n, 2 * k);
    };
    EmptySumFamily f;
    f.id = id;
    if (id == "133") { f.radix = 3; f.a = -1; f.C = c2sq; f.E = one_e; }
    else if (id == "279") { f.radix = 3; f.a = 1; f.C = one_c; f.E = one_e; }
    else if (id == "334") { f.radix = 3; f.a = 1; f.C = c2sq; f.E = inv2; }
    else if (id == "281") { f.radix = 3; f.a = 2; f.C = c2sq; f.E = inv2; }
    else if (id == "363") {
        f.radix = 3; f.a = -3;
        f.C = [](long n) -> Q {
            return qbinom(2 * n, n) * Q(binom(Z(4 * n), Z(2 * n)));
        };
        f.E = [](long n, long k) -> Q {
            return qbinom(2 * n, k) * qbinom(2 * n, n - k);
        };
    }
    else if (id == "352") { f.radix = 3; f.a = -1; f.C = one_c; f.E = cc; }
    else if (id == "253") { f.radix = 3; f.a = 0; f.C = c2; f.E = cc_over; }
    else if (id == "353") { f.radix = 3; f.a = -1; f.C = c2; f.E = cc_over; }
    else if (id == "350") {
        f.radix = 3; f.a = -2;
        f.C = [](long n) -> Q { return qpow(qbinom(2 * n, n), 3); };
        f.E = [cc](long n, long k) -> Q {
            return cc(n, k) / Q(binom(Z(n + k), Z(n))) / qbinom(2 * n - k, n);
        };
    }
    else if (id == "300") {
        f.radix = 4; f.a = -2;
        f.C = [](long n) -> Q { return Q(ff3(n)) * Q(binom(Z(5 * n), Z(2 * n))); };
        f.E = [](long n, long k) -> Q {
            return 1 / (Q(binom(Z(n + k), Z(n))) * qbinom(2 * n - k, n));
        };
    }
    else if (id == "36") { f.radix = 4; f.a = -2; f.C = c2; f.E = one_e; }
    else if (id == "364") { f.radix = 4; f.a = -1; f.C = one_c; f.E = one_e; }
    else if (id == "357") {
        f.radix = 4; f.a = 0;
        f.C = [](long n) -> Q { return 1 / qbinom(2 * n, n); };
        f.E = one_e;
    }
    else if (id == "205") {
        f.radix = 4; f.a = 0; f.C = one_c;
        f.E = [](long n, long k) -> Q { return 1 / qbinom(2 * n, 2 * k); };
    }
    else if (id == "365") { f.radix = 4; f.a = -3; f.C = one_c; f.E = cc; }
    else if (id == "354") { f.radix = 5; f.a = -3; f.C = one_c; f.E = one_e; }
    else if (id == "b-eta") { f.radix = 5; f.a = -2; f.C = one_c; f.E = one_e; }
    else if (id == "347") { f.radix = 6; f.a = -4; f.C = one_c; f.E = one_e; }
    else throw std::invalid_argument("empty_sum_family: unknown row " + id);
    return f;
}

inline Q empty_sum_eval(const EmptySumFamily& f, long n) {
    if (n == 0) return 1;
    Q s = 0;
    switch (f.radix) {
        case 3:
            for (long k = 0; k <= n / 3; ++k) {
                Q t = frac(n - 2 * k, 2 * n - 3 * k) * qpow(qbinom(n, k), 3 + f.a) *
                      f.E(n, k) * Q(binom(Z(2 * n - 3 * k), Z(n)));
                s += (k % 2 == 0) ? t : -t;
            }
            return 3 * f.C(n) * s;
        case 4:
            for (long k = 0; k <= n / 4; ++k)
                s += frac(n - 2 * k, 3 * n - 4 * k) * qpow(qbinom(n, k), 4 + f.a) *
                     f.E(n, k) * Q(binom(Z(3 * n - 4 * k), Z(2 * n)));
            return 4 * qbinom(2 * n, n) * f.C(n) * s;
        case 5:
            for (long k = 0; k <= n / 5; ++k) {
                Q t = frac(n - 2 * k, 4 * n - 5 * k) * qpow(qbinom(n, k), 5 + f.a) *
                      f.E(n, k) * Q(binom(Z(4 * n - 5 * k), Z(3 * n)));
                s += (k % 2 == 0) ? t : -t;
            }
            return 5 * qbinom(2 * n, n) * Q(binom(Z(3 * n), Z(n))) * f.C(n) * s;
        case 6:
            for (long k = 0; k <= n / 6; ++k)
                s += frac(n - 2 * k, 5 * n - 6 * k) * qpow(qbinom(n, k), 6 + f.a) *
                     f.E(n, k) * Q(binom(Z(5 * n - 6 * k), Z(3 * n)));
            return 6 * qpow(qbinom(2 * n, n), 2) * f.C(n) * s;
        default:
            throw std::invalid_argument("empty_sum_eval: bad radix");
    }
}

// ---- constant-term generators ------------------------------------------

// S = x^2/y + y + 1/x + 1/(xy)
inline LaurentPoly laurent_poly2d() {
    LaurentPoly S;
    S.dim = 2;
    S.add_term({2, -1}, 1);
    S.add_term({0, 1}, 1);
    S.add_term({-1, 0}, 1);
    S.add_term({-1, -1}, 1);
    return S;
}

// S = 1/x + y/x + x/y + z/x + x/z + yz/x + x/(yz)
//     + (t/x)(1 + y + yz) + (x/t)(1 + 1/y + 1/(yz));  variables (x,y,z,t)
inline LaurentPoly laurent_325() {
    LaurentPoly S;
    S.dim = 4;
    S.add_term({-1, 0, 0, 0}, 1);
    S.add_term({-1, 1, 0, 0}, 1);
    S.add_term({1, -1, 0, 0}, 1);
    S.add_term({-1, 0, 1, 0}, 1);
    S.add_term({1, 0, -1, 0}, 1);
    S.add_term({-1, 1, 1, 0}, 1);
    S.add_term({1, -1, -1, 0}, 1);
    S.add_term({-1, 0, 0, 1}, 1);
    S.add_term({-1, 1, 0, 1}, 1);
    S.add_term({-1, 1, 1, 1}, 1);
    S.add_term({1, 0, 0, -1}, 1);
    S.add_term({1, -1, 0, -1}, 1);
    S.add_term({1, -1, -1, -1}, 1);
    return S;
}

// Fast two-variable route for the even-power constant terms of laurent_325():
// eliminating t splits S = u + p + q with v = pq free of both t and x, and
// the x-dependence of u is a bare x^{+-1} whose parity contributes the
// central binomial:
//   A_n = sum_j (2n)!/(j!^2 (2n-2j)!) C(2n-2j, n-j) ct( (AB)^{n-j} V^j )
// over (y,z), with A = (1+y)(1+z), B = (1 + 1/y + 1/(yz))/y... spelled below.
inline std::vector<Q> a325_terms(size_t N) {
    LaurentPoly A2, B2, V;
    A2.dim = B2.dim = V.dim = 2;
    // u = (1/x)(1+y)(1+z) + x*(1/(yz))(1+y+yz)
    A2.add_term({0, 0}, 1);
    A2.add_term({1, 0}, 1);
    A2.add_term({0, 1}, 1);
    A2.add_term({1, 1}, 1);
    B2.add_term({-1, -1}, 1);
    B2.add_term({0, -1}, 1);
    B2.add_term({-1, 0}, 1);
    // v = (1 + y + yz)(1 + 1/y + 1/(yz))
    V.add_term({0, 0}, 3);
    V.add_term({1, 0}, 1);
    V.add_term({-1, 0}, 1);
    V.add_term({0, 1}, 1);
    V.add_term({0, -1}, 1);
    V.add_term({1, 1}, 1);
    V.add_term({-1, -1}, 1);
    LaurentPoly AB = mul_pruned(A2, B2, -1);
    std::vector<LaurentPoly> abp(N + 1), vp(N + 1);
    abp[0].dim = vp[0].dim = 2;
    abp[0].add_term({}, 1);
    vp[0].add_term({}, 1);
    for (size_t i = 1; i <= N; ++i) {
        abp[i] = mul_pruned(abp[i - 1], AB, -1);
        vp[i] = mul_pruned(vp[i - 1], V, -1);
    }
    auto dot = [](const LaurentPoly& a, const LaurentPoly& b) {
        const LaurentPoly& s = a.terms.size() < b.terms.size() ? a : b;
        const LaurentPoly& l = a.terms.size() < b.terms.size() ? b : a;
        Z ct = 0;
        for (auto& [e, c] : s.terms) {
            LaurentPoly::Exp neg{};
            for (int d = 0; d < 2; ++d) neg[d] = -e[d];
            auto it = l.terms.find(neg);
            if (it != l.terms.end()) ct += c * it->second;
        }
        return ct;
    };
    std::vector<Q> out(N + 1);
    for (size_t n = 0; n <= N; ++n) {
        Z f2n = factorial(2 * n), s = 0;
        for (size_t j = 0; j <= n; ++j) {
            Z coef = f2n / (factorial(j) * factorial(j) * factorial(2 * n - 2 * j));
            coef *= binom(Z(2 * n - 2 * j), Z(n - j));
            s += coef * dot(abp[n - j], vp[j]);
        }
        out[n] = Q(s);
    }
    return out;
}

// ---- embedded operators ------------------------------------------------

inline ThetaOperator op_from_rows(std::vector<std::vector<long>> rows) {
    ThetaOperator op;
    for (auto& r : rows) {
        Poly p;
        for (size_t k = 0; k < r.size(); ++k) p.coeff(k) = r[k];
        p.normalize();
        op.P.push_back(p);
    }
    op.canonicalize();
    return op;
}

inline ThetaOperator op_eta() {
    ThetaOperator op;
    op.P = {Poly{0, 0, 0, 1}, Q(-1) * (Poly{1, 2} * Poly{5, 11, 11}),
            Q(125) * (Poly{1, 1} * Poly{1, 1} * Poly{1, 1})};
    op.canonicalize();
    return op;
}

inline ThetaOperator op_14() {
    ThetaOperator op;
    op.P = {Poly{0, 0, 0, 0, 1},
            Q(-zpow(12, 6)) * (Poly{Q(1, 12), 1} * Poly{Q(5, 12), 1} *
                               Poly{Q(7, 12), 1} * Poly{Q(11, 12), 1})};
    op.canonicalize();
    return op;
}

inline ThetaOperator op_15() {
    Recurrence rec;
    rec.c ={Poly{2, 1} * Poly{2, 1} * Poly{2, 1} * Poly{2, 1},
             Q(-3) * (Poly{4, 3} * Poly{5, 3} * Poly{16, 21, 7}),
             Q(-72) * (Poly{1, 3} * Poly{2, 3} * Poly{4, 3} * Poly{5, 3})};
    return recurrence_to_operator(rec);
}

inline ThetaOperator op_22() {
    return op_from_rows({{0, 0, 0, 0, 49},
                         {-98, -637, -1638, -2002, -1085},
                         {-15736, -66094, -102261, -68044, -16105},
                         {3808, 30072, 72568, 68712, 21000},
                         {-2944, -12896, -23024, -20256, -7440},
                         {512, 2048, 3072, 2048, 512}});
}

inline ThetaOperator op_34() {
    ThetaOperator op;
    op.P = {Poly{0, 0, 0, 0, 1}, Q(-1) * Poly{5, 28, 63, 70, 35},
            Poly{1, 2, 1} * Poly{285, 518, 259},
            Q(-225) * (Poly{1, 2, 1} * Poly{4, 4, 1})};
    op.canonicalize();
    return op;
}

inline ThetaOperator op_133() {
    ThetaOperator op;
    op.P = {Poly{0, 0, 0, 0, 1},
            Q(-12) * (Poly{1, 2} * Poly{1, 2} * Poly{1, 3, 3}),
            Q(432) * (Poly{1, 2} * Poly{1, 2} * Poly{3, 2} * Poly{3, 2})};
    op.canonicalize();
    return op;
}

inline ThetaOperator op_193() {
    ThetaOperator op;
    op.P = {Q(49) * Poly{0, 0, 0, 0, 1},
            Q(-7) * Poly{77, 581, 1683, 2204, 1135},
            Poly{-896, -1337, 13260, 40708, 28723},
            Q(-1) * Poly{1806, 10731, 26511, 38514, 32126},
            Q(77) * Poly{8, 65, 192, 254, 130},
            Q(121) * (Poly{1, 1} * Poly{1, 1} * Poly{1, 1} * Poly{1, 1})};
    op.canonicalize();
    return op;
}

inline ThetaOperator op_198() {
    return op_from_rows({{0, 0, 0, 0, 121},
                         {-847, -5929, -16170, -20482, -10010},
                         {-11198, -55253, -103725, -89990, -32126},
                         {-1716, -20625, -63474, -74184, -28723},
                         {-770, -4991, -13167, -16352, -7945},
                         {-49, -196, -294, -196, -49}});
}

inline ThetaOperator op_325() {
    return op_from_rows(
        {{0, 0, 0, 0, 361},
         {-4332, -31768, -90782, -118028, -82327},
         {530556, 2802424, 6216406, 7600484, 4307495},
         {-25260804, -125748612, -236037196, -213316800, -93729369},
         {554043972, 2527211236, 4165791036, 3114116800, 963255200},
         {-5695684920, -24053635196, -34776054452, -21082870240, -4664766064},
         {21739838760, 84785371164, 106525209924, 52175613024, 8695935504}});
}

inline ThetaOperator op_349() {
    return op_from_rows(
        {{0, 0, 0, 0, 49},
         {294, 1764, 4284, 5040, 4662},
         {53928, 250152, 461568, 408096, 201924},
         {2012472, 8464554, 14258673, 11876706, 4820931},
         {28074384, 119953116, 208154394, 185689692, 73172862},
         {109107648, 700408296, 1646581932, 1849651848, 779725764},
         {-944270784, 464052240, 8294972184, 12880940112, 6091350984},
         {-9916826112, -9484185024, 34683510528, 63733075776, 34814054016},
         {-32812978176, -31621010688, 113222634624, 212938357248, 141787304064},
         {-102174400512, -197321287680, 96705570816, 469781876736, 376126488576},
         {-506625933312, -1299619676160, -793316229120, 401172922368,
          445353541632},
         {-1625330810880, -4767637045248, -4999827161088, -2198066429952,
          -340545503232},
         {-2972033482752, -8916100448256, -9659108818944, -4458050224128,
          -743008370688}});
}

inline ThetaOperator op_366() {
    ThetaOperator op;
    op.P = {Poly{0, 0, 0, 0, 1},
            Poly{0, 1} * Poly{-4, -19, -30, 39},
            Q(2) * Poly{-192, -676, -1057, -1070, 16},
            Q(-36) * (Poly{2, 3} * Poly{316, 600, 566, 171}),
            Q(-864) * Poly{702, 2173, 2635, 1542, 384},
            Q(-1728) * (Poly{1, 1} * Poly{4584, 8378, 5571, 1393}),
            Q(-zpow(2, 10) * zpow(3, 5)) *
                (Poly{1, 1} * Poly{2, 1} * Poly{98, 105, 31}),
            Q(-zpow(2, 12) * zpow(3, 7)) *
                (Poly{1, 1} * Poly{2, 1} * Poly{2, 1} * Poly{3, 1})};
    op.canonicalize();
    return op;
}

inline ThetaOperator op_poly2d() {
    ThetaOperator op;
    op.P = {Poly{0, 0, 5},
            Poly{0, -1, 11},
            Poly{0, 0, 6},
            Poly{0, -9, 13},
            Q(-1) * Poly{960, 1636, 298},
            Q(-4) * Poly{2391, 3510, 726},
            Q(-8) * Poly{3519, 4752, 917},
            Q(-32) * Poly{1077, 1372, 256},
            Q(-32) * Poly{528, 810, 327},
            Q(-576) * Poly{29, 78, 54},
            Q(-128) * (Poly{1, 1} * Poly{417, 355}),
            Q(-23808) * (Poly{1, 1} * Poly{2, 1})};
    op.canonicalize();
    return op;
}

inline ThetaOperator op_bessel_raw() {
    ThetaOperator op;
    Poly th2{0, 0, 1};
    op.P = {th2 * (Poly{-1, 1} * Poly{-1, 1}),
            Q(-4) * (th2 * Poly{26, 0, 259}),
            Q(3600) * Poly{5, 28, 63, 70, 35},
            Q(-3240000) * (Poly{1, 1} * Poly{1, 1} * Poly{1, 1} * Poly{1, 1})};
    op.canonicalize();
    return op;
}

// order-5 operators and their order-4 pullbacks
inline ThetaOperator op5_zudilin() {
    ThetaOperator op;
    op.P = {Poly{0, 0, 0, 0, 0, 1},
            Q(-3) * (Poly{1, 2} * Poly{1, 3, 3} * Poly{4, 15, 15}),
            Q(-3) * (Poly{1, 1} * Poly{1, 1} * Poly{1, 1} * Poly{2, 3} *
                     Poly{4, 3})};
    op.canonicalize();
    return op;
}

inline ThetaOperator op5_hyper() {
    ThetaOperator op;
    op.P = {Poly{0, 0, 0, 0, 0, 1},
            Q(-4 * zpow(12, 6)) *
                (Poly{Q(1, 2), 1} * Poly{Q(1, 12), 1} * Poly{Q(5, 12), 1} *
                 Poly{Q(7, 12), 1} * Poly{Q(11, 12), 1})};
    op.canonicalize();
    return op;
}

inline ThetaOperator op4_pullback_32() {
    auto sq = [](const Poly& p) { return p * p; };
    auto p4 = [&](const Poly& p) { return sq(p) * sq(p); };
    Poly half{Q(1, 2), 1}, one1{1, 1}, th{Q(3, 2), 1};
    ThetaOperator op;
    op.P = {Poly{0, 0, 0, 0, 1},
            Q(-1) * (Q(540) * p4(half) + Q(486) * sq(half) + Poly{Q(57, 4)}),
            Q(72846) * p4(one1) + Q(6915, 2) * sq(one1) + Poly{Q(3, 4)},
            Q(14580) * p4(th) + Q(12717) * sq(th) + Poly{324},
            Q(9, 16) * (sq(Poly{11, 6}) * sq(Poly{13, 6}))};
    op.canonicalize();
    return op;
}

inline ThetaOperator op4_pullback_hyper() {
    ThetaOperator op;
    op.P = {Poly{0, 0, 0, 0, 1},
            Q(-144) * Poly{47711, 220608, 386496, 331776, 165888},
            Q(zpow(2, 22) * zpow(3, 10)) *
                (Poly{3, 4} * Poly{5, 4} * Poly{5, 6} * Poly{7, 6})};
    op.canonicalize();
    return op;
}

// ---- catalog -----------------------------------------------------------

struct CatalogEntry {
    std::string id;
    std::string kind;  // closed-sum | recurrence | hadamard | constant-term | stub
    std::string description;
    std::function<std::vector<Q>(size_t)> gen;  // A_0..A_N; null for stubs
    std::optional<ThetaOperator> op;
};

inline std::vector<Q> pointwise(Q (*f)(long), size_t N) {
    std::vector<Q> r(N + 1);
    for (size_t n = 0; n <= N; ++n) r[n] = f(static_cast<long>(n));
    return r;
}

inline const std::map<std::string, CatalogEntry>& catalog() {
    static const std::map<std::string, CatalogEntry> store = [] {
        std::map<std::string, CatalogEntry> m;
        auto add = [&](CatalogEntry e) { m[e.id] = std::move(e); };
        add({"eta", "closed-sum", "order-3 equation of the introduction",
             [](size_t N) { return pointwise(eta_zudilin1, N); }, op_eta()});
        add({"14", "recurrence", "hypergeometric 12^6 case",
             [](size_t N) { return series_from_operator(op_14(), N); }, op_14()});
        add({"15", "closed-sum", "(3n)!/n!^3 times sum of C(n,k)^3",
             [](size_t N) { return pointwise(a15, N); }, op_15()});
        add({"22", "closed-sum", "sum of C(n,k)^5",
             [](size_t N) { return pointwise(a22, N); }, op_22()});
        add({"27h", "closed-sum", "harmonic-weighted sum over C(n,k)^7",
             [](size_t N) { return pointwise(a27h, N); }, std::nullopt});
        add({"34", "closed-sum", "five-fold multinomial-square sum",
             [](size_t N) { return multinomial_square_terms(N, 4); }, op_34()});
        add({"117", "stub", "no generating formula available", nullptr,
             std::nullopt});
        add({"130", "closed-sum", "six-fold multinomial-square sum",
             [](size_t N) { return multinomial_square_terms(N, 5); },
             std::nullopt});
        add({"133", "hadamard", "central-binomial-square Hadamard product",
             [](size_t N) {
                 return hadamard(central_binomial_sq(N),
                                 zagier_seq({2, 9, 3, 27}, N));
             },
             op_133()});
        add({"193", "closed-sum", "double binomial sum with C(n+k+l,n)",
             [](size_t N) { return pointwise(a193, N); }, op_193()});
        add({"198", "closed-sum", "double binomial sum with C(2n-k,n)",
             [](size_t N) { return pointwise(a198, N); }, op_198()});
        add({"264", "closed-sum", "two-block harmonic formula",
             [](size_t N) { return pointwise(a264, N); }, std::nullopt});
        add({"325", "constant-term", "4D polytope, even powers, t eliminated",
             [](size_t N) { return a325_terms(N); }, op_325()});
        add({"347", "closed-sum", "radix-6 empty-sum formula",
             [](size_t N) { return pointwise(a347, N); }, std::nullopt});
        add({"349", "closed-sum", "signed radix-3 double sum",
             [](size_t N) { return pointwise(a349, N); }, op_349()});
        add({"360", "closed-sum", "harmonic-weighted factorial-ratio sum",
             [](size_t N) { return pointwise(a360, N); }, std::nullopt});
        add({"366", "recurrence", "degree-7 operator, no closed formula",
             [](size_t N) { return series_from_operator(op_366(), N); },
             op_366()});
        add({"poly2d", "constant-term", "2D reflexive polygon",
             [](size_t N) { return pointwise(apoly2d, N); }, op_poly2d()});
        add({"bessel-raw", "recurrence",
             "Bessel-moment operator (not MUM; no series at 0)", nullptr,
             op_bessel_raw()});
        return m;
    }();
    return store;
}

inline const CatalogEntry& catalog_entry(const std::string& id) {
    auto it = catalog().find(id);
    if (it == catalog().end())
        throw std::out_of_range("catalog: unknown id " + id);
    return it->second;
}

inline std::vector<std::string> catalog_ids() {
    std::vector<std::string> ids;
    for (auto& [id, e] : catalog()) ids.push_back(id);
    return ids;
}

inline Q catalog_eval(const CatalogEntry& e, long n) {
    if (!e.gen)
        throw std::domain_error("catalog entry " + e.id + " has no generator");
    return e.gen(n)[n];
}

}  // namespace cy
