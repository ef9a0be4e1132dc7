#pragma once
// Sparse integer Laurent polynomials in up to 4 variables and constant
// terms of their powers, with exponent-box pruning, the declared-plan
// variable elimination, and a modular/CRT variant.

#include "cy/rational.hpp"

#include <array>
#include <cstdlib>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cy {

struct LaurentPoly {
    using Exp = std::array<int, 4>;  // unused trailing dimensions stay 0
    int dim = 0;
    std::map<Exp, Z> terms;  // no zero coefficients stored

    void add_term(const Exp& e, const Z& c) {
        if (c == 0) return;
        auto it = terms.find(e);
        if (it == terms.end()) terms.emplace(e, c);
        else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }
    int max_abs_exponent() const {
        int m = 0;
        for (auto& [e, c] : terms)
            for (int d = 0; d < dim; ++d) m = std::max(m, std::abs(e[d]));
        return m;
    }
};

inline LaurentPoly mul_pruned(const LaurentPoly& a, const LaurentPoly& b,
                              long box) {
    LaurentPoly r;
    r.dim = a.dim;
    for (auto& [e1, c1] : a.terms)
        for (auto& [e2, c2] : b.terms) {
            LaurentPoly::Exp e{};
            bool keep = true;
            for (int d = 0; d < a.dim; ++d) {
                e[d] = e1[d] + e2[d];
                if (box >= 0 && std::abs(e[d]) > box) {
                    keep = false;
                    break;
                }
            }
            if (keep) r.add_term(e, c1 * c2);
        }
    return r;
}

// constant term of S^n by repeated multiplication; pruning drops monomials
// whose exponents cannot return to zero within the remaining multiplications
inline Z ct_power(const LaurentPoly& S, long n, bool prune = true) {
    if (n < 0) throw std::domain_error("ct_power: negative power");
    LaurentPoly cur;
    cur.dim = S.dim;
    cur.add_term({}, 1);
    long step = S.max_abs_exponent();
    for (long k = 0; k < n; ++k) {
        long remaining = n - k - 1;
        long box = prune ? remaining * step : -1;
        cur = mul_pruned(cur, S, box);
    }
    auto it = cur.terms.find({});
    return it == cur.terms.end() ? Z(0) : it->second;
}

// Elimination plan for S = u + p + q where p, q carry the eliminated
// variable with exponents +1 / -1 and v = p*q is independent of it.
// Then c.t.(S^{2n}) = c.t.( sum_j (2n)!/(j!^2 (2n-2j)!) u^{2n-2j} v^j ).
struct EliminationPlan {
    LaurentPoly u;  // eliminated variable removed (dim reduced by treating it as absent)
    LaurentPoly v;  // p*q with the eliminated variable cancelled
};

// Validate the split of S along `var` and build the plan.  Every term with
// exponent +1 in var belongs to p, -1 to q, 0 to u; other exponents are
// malformed.
inline EliminationPlan make_plan(const LaurentPoly& S, int var) {
    LaurentPoly u, p, q;
    u.dim = p.dim = q.dim = S.dim;
    for (auto& [e, c] : S.terms) {
        if (e[var] == 0) u.add_term(e, c);
        else if (e[var] == 1) p.add_term(e, c);
        else if (e[var] == -1) q.add_term(e, c);
        else
            throw std::invalid_argument(
                "elimination plan: eliminated variable has exponent beyond +-1");
    }
    if (p.terms.empty() || q.terms.empty())
        throw std::invalid_argument("elimination plan: eliminated variable missing");
    auto strip = [&](LaurentPoly in) {
        LaurentPoly out;
        out.dim = in.dim;
        for (auto& [e, c] : in.terms) {
            LaurentPoly::Exp f = e;
            f[var] = 0;
            out.add_term(f, c);
        }
        return out;
    };
    EliminationPlan plan;
    plan.u = strip(u);
    plan.v = mul_pruned(strip(p), strip(q), -1);
    return plan;
}

inline Z ct_eliminated(const EliminationPlan& plan, long n) {
    // A_n = sum_{j=0}^{n} (2n)!/(j!^2 (2n-2j)!) * c.t.(u^{2n-2j} v^j)
    Z total = 0;
    long step = std::max(plan.u.max_abs_exponent(), plan.v.max_abs_exponent());
    // powers of u with pruning box sized for the largest remaining product
    std::vector<LaurentPoly> vpow(n + 1);
    vpow[0].dim = plan.v.dim;
    vpow[0].add_term({}, 1);
    for (long j = 1; j <= n; ++j)
        vpow[j] = mul_pruned(vpow[j - 1], plan.v, 2 * n * step);
    LaurentPoly upow;
    upow.dim = plan.u.dim;
    upow.add_term({}, 1);
    std::vector<LaurentPoly> upows{upow};
    for (long i = 1; i <= 2 * n; ++i)
        upows.push_back(mul_pruned(upows.back(), plan.u, 2 * n * step));
    Z f2n = factorial(2 * n);
    for (long j = 0; j <= n; ++j) {
        Z coef = f2n / (factorial(j) * factorial(j) * factorial(2 * n - 2 * j));
        const LaurentPoly& up = upows[2 * n - 2 * j];
        // constant term of up * v^j
        Z ct = 0;
        const LaurentPoly &small = vpow[j].terms.size() < up.terms.size() ? vpow[j] : up;
        const LaurentPoly &big = vpow[j].terms.size() < up.terms.size() ? up : vpow[j];
        for (auto& [e, c] : small.terms) {
            LaurentPoly::Exp neg{};
            for (int d = 0; d < plan.u.dim; ++d) neg[d] = -e[d];
            auto it = big.terms.find(neg);
            if (it != big.terms.end()) ct += c * it->second;
        }
        total += coef * ct;
    }
    return total;
}

// modular variant: compute c.t.(S^n) mod each prime, reconstruct by CRT; the
// caller supplies a magnitude bound, checked via the residue of an extra prime
inline Z ct_modular(const LaurentPoly& S, long n, const std::vector<long>& primes,
                    const Z& bound) {
    Z prod = 1;
    for (long p : primes) prod *= p;
    if (prod <= 2 * bound)
        throw std::invalid_argument("ct_modular: prime product below 2*bound");
    auto ct_mod = [&](long p) -> long {
        std::map<LaurentPoly::Exp, long> cur;
        cur[{}] = 1 % p;
        long step = S.max_abs_exponent();
        for (long k = 0; k < n; ++k) {
            long box = (n - k - 1) * step;
            std::map<LaurentPoly::Exp, long> next;
            for (auto& [e1, c1] : cur)
                for (auto& [e2, c2] : S.terms) {
                    LaurentPoly::Exp e{};
                    bool keep = true;
                    for (int d = 0; d < S.dim; ++d) {
                        e[d] = e1[d] + e2[d];
                        if (std::abs(e[d]) > box) {
                            keep = false;
                            break;
                        }
                    }
                    if (!keep) continue;
                    long c2m = mpz_fdiv_ui(c2.get_mpz_t(), p);
                    next[e] = (next[e] + c1 * c2m) % p;
                }
            cur = std::move(next);
        }
        auto it = cur.find({});
        return it == cur.end() ? 0 : it->second;
    };
    // CRT over the listed primes
    Z x = 0, m = 1;
    for (long p : primes) {
        long r = ct_mod(p);
        // solve x' = x mod m, x' = r mod p
        Z minv;
        Z pz = p;
        if (mpz_invert(minv.get_mpz_t(), m.get_mpz_t(), pz.get_mpz_t()) == 0)
            throw std::invalid_argument("ct_modular: primes not coprime");
        Z t = ((Z(r) - x) * minv) % pz;
        if (t < 0) t += pz;
        x += m * t;
        m *= pz;
    }
    // symmetric representative
    if (x > m / 2) x -= m;
    return x;
}

// polytope file: line 1 "dim=<d>"; then coefficient + d exponents per line
inline LaurentPoly read_polytope(std::istream& is) {
    std::string line;
    if (!std::getline(is, line))
        throw std::invalid_argument("polytope file: missing header");
    std::istringstream hs(line);
    std::string tag;
    hs >> tag;
    if (tag.rfind("dim=", 0) != 0)
        throw std::invalid_argument("polytope file: expected dim=<d>");
    int d = std::stoi(tag.substr(4));
    if (d < 1 || d > 4)
        throw std::invalid_argument("polytope file: dimension out of range");
    LaurentPoly S;
    S.dim = d;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string ctok;
        if (!(ls >> ctok)) continue;
        Z coef(ctok);
        LaurentPoly::Exp e{};
        for (int i = 0; i < d; ++i)
            if (!(ls >> e[i]))
                throw std::invalid_argument("polytope file: truncated term line");
        S.add_term(e, coef);
    }
    return S;
}

}  // namespace cy
