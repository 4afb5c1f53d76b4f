#ifndef ARRTOP_RATIONAL_HPP
#define ARRTOP_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <vector>

#include "arrtop/error.hpp"

namespace arrtop {

using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

// GMP does not canonicalize rationals read from strings ("3/6" stays 3/6 and
// breaks comparisons downstream), so every rational that enters from text must
// come through here.
inline Rat parse_rational(const std::string& text) {
    if (text.empty()) fail(ErrorKind::Parse, "empty rational literal");
    std::size_t pos = (text[0] == '+' || text[0] == '-') ? 1 : 0;
    bool seen_digit = false, seen_slash = false;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c >= '0' && c <= '9') { seen_digit = true; continue; }
        if (c == '/' && seen_digit && !seen_slash) { seen_slash = true; seen_digit = false; continue; }
        fail(ErrorKind::Parse, "bad rational literal '" + text + "'");
    }
    if (!seen_digit) fail(ErrorKind::Parse, "bad rational literal '" + text + "'");
    Rat r;
    try {
        r = Rat(text);
    } catch (const std::exception&) {
        fail(ErrorKind::Parse, "bad rational literal '" + text + "'");
    }
    if (denominator(r) == 0) fail(ErrorKind::Parse, "zero denominator in '" + text + "'");
    mpq_canonicalize(r.backend().data());
    return r;
}

inline std::string rational_to_string(const Rat& r) { return r.str(); }

inline int sign_of(const Rat& r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

inline Rat dot(const RatVec& a, const RatVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool is_zero_vec(const RatVec& v) {
    for (const Rat& x : v) if (x != 0) return false;
    return true;
}

// Row-reduces a copy of m and returns its rank.
inline std::size_t matrix_rank(RatMat m) {
    std::size_t rows = m.size();
    if (rows == 0) return 0;
    std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            Rat f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

// Basis of { x : m x = 0 }, via reduced row echelon form; each basis vector is
// scaled to integer entries so callers can sample integer combinations.
inline std::vector<RatVec> nullspace_basis(RatMat m) {
    if (m.empty()) return {};
    std::size_t rows = m.size(), cols = m[0].size();
    std::vector<std::ptrdiff_t> pivot_of_col(cols, -1);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        Rat inv = m[rank][c];
        for (std::size_t k = c; k < cols; ++k) m[rank][k] /= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            Rat f = m[r][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        pivot_of_col[c] = static_cast<std::ptrdiff_t>(rank);
        ++rank;
    }
    std::vector<RatVec> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (pivot_of_col[free_col] >= 0) continue;
        RatVec v(cols, Rat(0));
        v[free_col] = 1;
        for (std::size_t c = 0; c < cols; ++c) {
            if (pivot_of_col[c] >= 0)
                v[c] = -m[static_cast<std::size_t>(pivot_of_col[c])][free_col];
        }
        Int lcm_den = 1;
        for (const Rat& x : v) lcm_den = lcm(lcm_den, Int(denominator(x)));
        for (Rat& x : v) x *= Rat(lcm_den);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline RatMat mat_identity(std::size_t n) {
    RatMat m(n, RatVec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline RatVec mat_vec(const RatMat& m, const RatVec& x) {
    RatVec out(m.size(), Rat(0));
    for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], x);
    return out;
}

inline RatMat mat_mul(const RatMat& a, const RatMat& b) {
    std::size_t rows = a.size(), inner = b.size(), cols = b.empty() ? 0 : b[0].size();
    RatMat out(rows, RatVec(cols, Rat(0)));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

inline RatMat mat_transpose(const RatMat& m) {
    if (m.empty()) return {};
    RatMat out(m[0].size(), RatVec(m.size(), Rat(0)));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[0].size(); ++j) out[j][i] = m[i][j];
    return out;
}

inline RatMat mat_inverse(RatMat m) {
    std::size_t n = m.size();
    RatMat inv = mat_identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m[pivot][c] == 0) ++pivot;
        if (pivot == n) fail(ErrorKind::Invalid, "singular matrix");
        std::swap(m[c], m[pivot]);
        std::swap(inv[c], inv[pivot]);
        Rat d = m[c][c];
        for (std::size_t j = 0; j < n; ++j) { m[c][j] /= d; inv[c][j] /= d; }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Rat f = m[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                m[r][j] -= f * m[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

// True when b == c * a for some c != 0 (a, b nonzero).
inline bool proportional(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) return false;
    std::size_t lead = a.size();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) { lead = i; break; }
    if (lead == a.size()) return false;
    if (b[lead] == 0) return false;
    Rat c = b[lead] / a[lead];
    for (std::size_t i = 0; i < a.size(); ++i)
        if (b[i] != c * a[i]) return false;
    return true;
}

} // namespace arrtop

#endif
