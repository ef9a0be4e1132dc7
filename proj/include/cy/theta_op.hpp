#pragma once
// Theta-form differential operators  L = sum_i x^i P_i(theta),  their
// recurrence correspondence, canonical form, MUM check, and the
// mirror-at-infinity transform.

#include "cy/logseries.hpp"
#include "cy/poly.hpp"
#include "cy/series.hpp"

#include <istream>
#include <ostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cy {

struct ThetaOperator {
    std::vector<Poly> P;  // P[i] = coefficient of x^i, a polynomial in theta

    ThetaOperator() = default;
    explicit ThetaOperator(std::vector<Poly> rows) : P(std::move(rows)) {}

    long degree() const { return static_cast<long>(P.size()) - 1; }
    long order() const {
        long r = 0;
        for (const auto& p : P) r = std::max(r, p.degree());
        return r;
    }
    bool operator==(const ThetaOperator& o) const { return P == o.P; }

    // canonical form: clear rational denominators, divide by integer content,
    // make P0's leading coefficient positive; trailing zero rows dropped
    void canonicalize() {
        while (!P.empty() && P.back().is_zero()) P.pop_back();
        if (P.empty()) return;
        Z den = 1;
        for (const auto& p : P)
            for (const auto& q : p.c) den = lcm(den, q.get_den());
        Z content = 0;
        for (const auto& p : P)
            for (const auto& q : p.c) content = gcd(content, Z(q * Q(den)));
        if (content == 0) content = 1;
        Q f = Q(den) / Q(content);
        if (P[0].is_zero() ? false : P[0].leading() * f < 0) f = -f;
        else if (P[0].is_zero()) {
            // degenerate (P0 zero is non-canonical anyway); fix sign by first row
            for (const auto& p : P)
                if (!p.is_zero()) {
                    if (p.leading() * f < 0) f = -f;
                    break;
                }
        }
        for (auto& p : P) p = p * f;
    }

    ThetaOperator canonical() const {
        ThetaOperator r = *this;
        r.canonicalize();
        return r;
    }
};

struct Recurrence {
    // c[i](n) multiplies A_{n+q-i} where q = order; i.e. the relation is
    // sum_i c_i(n) A_{n+q-i} = 0 with q = c.size()-1
    std::vector<Poly> c;

    long order() const { return static_cast<long>(c.size()) - 1; }
    bool operator==(const Recurrence& o) const { return c == o.c; }

    void canonicalize() {
        Z den = 1;
        for (const auto& p : c)
            for (const auto& q : p.c) den = lcm(den, q.get_den());
        Z content = 0;
        for (const auto& p : c)
            for (const auto& q : p.c) content = gcd(content, Z(q * Q(den)));
        if (content == 0) content = 1;
        Q f = Q(den) / Q(content);
        for (const auto& p : c)
            if (!p.is_zero()) {
                if (p.leading() * f < 0) f = -f;
                break;
            }
        for (auto& p : c) p = p * f;
    }
};

// L(sum A_n x^n): coefficient of x^n is sum_i P_i(n-i) A_{n-i}
inline std::vector<Q> apply(const ThetaOperator& op, const std::vector<Q>& seq) {
    std::vector<Q> out(seq.size(), Q(0));
    for (size_t n = 0; n < seq.size(); ++n)
        for (size_t i = 0; i < op.P.size() && i <= n; ++i)
            out[n] += op.P[i].eval(Q(static_cast<long>(n - i))) * seq[n - i];
    return out;
}

inline Series apply(const ThetaOperator& op, const Series& y) {
    Series out(y.trunc());
    for (size_t i = 0; i < op.P.size(); ++i) {
        // P_i(theta) y, then shift by x^i
        Series acc(y.trunc()), cur = y;
        for (size_t k = 0; k < op.P[i].c.size(); ++k) {
            if (op.P[i].c[k] != 0) acc = acc + cur * op.P[i].c[k];
            cur = theta(cur);
        }
        out = out + xshift(acc, i);
    }
    return out;
}

inline LogSeries apply(const ThetaOperator& op, const LogSeries& y) {
    LogSeries out;
    for (size_t i = 0; i < op.P.size(); ++i) {
        LogSeries acc, cur = y;
        for (size_t k = 0; k < op.P[i].c.size(); ++k) {
            if (op.P[i].c[k] != 0) {
                LogSeries scaled = cur;
                for (auto& p : scaled.parts) p = p * op.P[i].c[k];
                acc = acc.parts.empty() ? scaled : acc + scaled;
            }
            cur = theta(cur);
        }
        if (!acc.parts.empty()) {
            LogSeries sh = xshift(acc, i);
            out = out.parts.empty() ? sh : out + sh;
        }
    }
    out.normalize();
    return out;
}

// advance the recurrence image of op from A_0 = 1; requires P0(n) != 0 for n >= 1
inline std::vector<Q> series_from_operator(const ThetaOperator& op, size_t N) {
    if (op.P.empty()) throw std::domain_error("empty operator");
    std::vector<Q> A{1};
    for (size_t n = 1; n <= N; ++n) {
        Q s = 0;
        for (size_t i = 1; i < op.P.size() && i <= n; ++i)
            s += op.P[i].eval(Q(static_cast<long>(n - i))) * A[n - i];
        Q p0 = op.P[0].eval(Q(static_cast<long>(n)));
        if (p0 == 0)
            throw std::domain_error("recurrence pivot vanishes at n=" +
                                    std::to_string(n));
        A.push_back(-s / p0);
    }
    return A;
}

// P_i(theta) = c_i(theta - p + i)  <=>  c_i(n) = P_i(n + p - i)
inline Recurrence operator_to_recurrence(const ThetaOperator& op) {
    Recurrence r;
    long p = op.degree();
    for (long i = 0; i <= p; ++i)
        r.c.push_back(op.P[i].shift(Q(p - i)));
    r.canonicalize();
    return r;
}

inline ThetaOperator recurrence_to_operator(const Recurrence& rec) {
    ThetaOperator op;
    long p = rec.order();
    for (long i = 0; i <= p; ++i)
        op.P.push_back(rec.c[i].shift(Q(i - p)));
    op.canonicalize();
    return op;
}

// MUM: P0(theta) = c * theta^r
inline bool mum_check(const ThetaOperator& op) {
    if (op.P.empty() || op.P[0].is_zero()) return false;
    long r = op.order();
    if (op.P[0].degree() != r) return false;
    for (long k = 0; k < r; ++k)
        if (op.P[0][k] != 0) return false;
    return true;
}

// substitute theta -> -theta - shift and x -> a/x, clear x powers, canonicalize
inline ThetaOperator mirror_at_infinity(const ThetaOperator& op, const Q& a,
                                        const Q& shift = 1) {
    ThetaOperator out;
    long p = op.degree();
    Q apow = 1;
    for (long j = 0; j <= p; ++j) {
        out.P.push_back(apow * op.P[p - j].compose_affine(-1, -shift));
        apow *= a;
    }
    out.canonicalize();
    return out;
}

// Smallest positive rational a such that the a-scaled transform has an
// integral solution sequence (probed on the first `terms` coefficients).
// The transform with scale a has solution B_n = a^n * C_n where C is the
// solution of the unscaled transform.
inline Q suggest_scale(const ThetaOperator& op, const Q& shift = 1,
                       size_t terms = 24) {
    ThetaOperator t = mirror_at_infinity(op, 1, shift);
    std::vector<Q> C = series_from_operator(t, terms);
    // For each prime q dividing some denominator, a needs q-valuation
    // max_n ceil(v_q(den C_n) / n).  The denominators met here have small
    // prime factors, so trial division suffices.
    std::map<unsigned long, long> val;
    for (size_t n = 1; n < C.size(); ++n) {
        Z d = C[n].get_den();
        for (unsigned long f = 2; d > 1 && Z(f) * Z(f) <= d;
             f += (f == 2 ? 1 : 2)) {
            long e = 0;
            while (d % f == 0) {
                d /= f;
                ++e;
            }
            if (e) {
                long need = (e + static_cast<long>(n) - 1) / static_cast<long>(n);
                if (need > val[f]) val[f] = need;
            }
        }
        if (d > 1) {
            unsigned long f = mpz_get_ui(d.get_mpz_t());
            if (1 > val[f]) val[f] = 1;
        }
    }
    Q a = 1;
    for (auto& [q, e] : val) a *= qpow(Q(static_cast<long>(q)), e);
    return a;
}

// --- text format ---------------------------------------------------------
// line 1: "theta-operator order=<r> degree=<p>"
// then p+1 lines of r+1 whitespace-separated integers (theta^0..theta^r)

inline void write_operator(std::ostream& os, const ThetaOperator& op) {
    ThetaOperator c = op.canonical();
    long r = c.order(), p = c.degree();
    os << "theta-operator order=" << r << " degree=" << p << "\n";
    for (long i = 0; i <= p; ++i) {
        for (long k = 0; k <= r; ++k) {
            if (k) os << ' ';
            os << Z(c.P[i][k]).get_str();
        }
        os << "\n";
    }
}

inline std::string format_operator(const ThetaOperator& op) {
    std::ostringstream os;
    write_operator(os, op);
    return os.str();
}

inline ThetaOperator read_operator(std::istream& is) {
    std::string header;
    if (!std::getline(is, header))
        throw std::invalid_argument("operator file: missing header");
    long r = -1, p = -1;
    {
        std::istringstream hs(header);
        std::string tag;
        hs >> tag;
        if (tag != "theta-operator")
            throw std::invalid_argument("operator file: bad header tag");
        std::string kv;
        while (hs >> kv) {
            auto eq = kv.find('=');
            if (eq == std::string::npos) continue;
            std::string key = kv.substr(0, eq);
            long val = std::stol(kv.substr(eq + 1));
            if (key == "order") r = val;
            else if (key == "degree") p = val;
        }
    }
    if (r < 0 || p < 0)
        throw std::invalid_argument("operator file: missing order/degree");
    ThetaOperator op;
    for (long i = 0; i <= p; ++i) {
        Poly row;
        for (long k = 0; k <= r; ++k) {
            std::string tok;
            if (!(is >> tok))
                throw std::invalid_argument("operator file: truncated rows");
            row.coeff(k) = parse_rational(tok);
        }
        row.normalize();
        op.P.push_back(row);
    }
    op.canonicalize();
    return op;
}

inline ThetaOperator parse_operator(const std::string& text) {
    std::istringstream is(text);
    return read_operator(is);
}

}  // namespace cy
