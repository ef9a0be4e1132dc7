#pragma once
// LogSeries: sum_j (log^j x / j!) * f_j(x) with truncated series parts.
// Houses Frobenius solutions and their wronskians.

#include "cy/series.hpp"

#include <vector>

namespace cy {

struct LogSeries {
    std::vector<Series> parts;  // parts[j] multiplies log^j x / j!

    LogSeries() = default;
    explicit LogSeries(std::vector<Series> p) : parts(std::move(p)) {}
    static LogSeries from_series(Series s) { return LogSeries({std::move(s)}); }

    size_t trunc() const { return parts.empty() ? 0 : parts[0].trunc(); }
    // log-degree: index of topmost nonzero part, -1 if zero
    long log_degree() const {
        for (long j = static_cast<long>(parts.size()) - 1; j >= 0; --j)
            if (!parts[j].is_zero()) return j;
        return -1;
    }
    const Series& part(size_t j) const {
        static const Series empty;
        return j < parts.size() ? parts[j] : empty;
    }
    bool is_zero(size_t upto) const {
        for (const auto& p : parts)
            for (size_t i = 0; i < std::min(upto, p.trunc()); ++i)
                if (p[i] != 0) return false;
        return true;
    }
    // drop zero top parts
    void normalize() {
        while (!parts.empty() && parts.back().is_zero()) parts.pop_back();
    }
    bool equal_to(const LogSeries& o, size_t upto) const {
        size_t m = std::max(parts.size(), o.parts.size());
        for (size_t j = 0; j < m; ++j) {
            const Series &a = part(j), &b = o.part(j);
            for (size_t i = 0; i < upto; ++i)
                if (a[i] != b[i]) return false;
        }
        return true;
    }
};

// theta(log^j/j! f) = log^j/j! theta(f) + log^{j-1}/(j-1)! f
inline LogSeries theta(const LogSeries& L) {
    LogSeries r;
    r.parts.resize(L.parts.size());
    for (size_t j = 0; j < L.parts.size(); ++j) {
        r.parts[j] = theta(L.parts[j]);
        if (j + 1 < L.parts.size()) r.parts[j] = r.parts[j] + L.parts[j + 1];
    }
    r.normalize();
    return r;
}

inline LogSeries operator+(const LogSeries& a, const LogSeries& b) {
    LogSeries r;
    size_t m = std::max(a.parts.size(), b.parts.size());
    size_t N = std::min(a.trunc() ? a.trunc() : b.trunc(),
                        b.trunc() ? b.trunc() : a.trunc());
    for (size_t j = 0; j < m; ++j) {
        // a missing part is zero, not "truncated at 0"
        Series s(N);
        for (size_t i = 0; i < N; ++i) s.at(i) = a.part(j)[i] + b.part(j)[i];
        r.parts.push_back(std::move(s));
    }
    r.normalize();
    return r;
}

inline LogSeries operator-(const LogSeries& a, const LogSeries& b) {
    LogSeries r;
    size_t m = std::max(a.parts.size(), b.parts.size());
    size_t N = std::min(a.trunc() ? a.trunc() : b.trunc(),
                        b.trunc() ? b.trunc() : a.trunc());
    for (size_t j = 0; j < m; ++j) {
        Series s(N);
        for (size_t i = 0; i < N; ++i) s.at(i) = a.part(j)[i] - b.part(j)[i];
        r.parts.push_back(std::move(s));
    }
    r.normalize();
    return r;
}

// product; coefficient of log^k/k! picks up binom(k, i) f_i g_{k-i}
inline LogSeries operator*(const LogSeries& a, const LogSeries& b) {
    if (a.parts.empty() || b.parts.empty()) return {};
    LogSeries r;
    r.parts.resize(a.parts.size() + b.parts.size() - 1,
                   Series(std::min(a.trunc(), b.trunc())));
    for (size_t i = 0; i < a.parts.size(); ++i)
        for (size_t j = 0; j < b.parts.size(); ++j) {
            Series prod = a.parts[i] * b.parts[j];
            Q bc = Q(binom(static_cast<long>(i + j), static_cast<long>(i)));
            r.parts[i + j] = r.parts[i + j] + prod * bc;
        }
    r.normalize();
    return r;
}

inline LogSeries operator*(const Series& s, const LogSeries& a) {
    LogSeries r;
    for (const auto& p : a.parts) r.parts.push_back(s * p);
    r.normalize();
    return r;
}

inline LogSeries xshift(const LogSeries& a, size_t k) {
    LogSeries r;
    for (const auto& p : a.parts) r.parts.push_back(xshift(p, k));
    return r;
}

}  // namespace cy
