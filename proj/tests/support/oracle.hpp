#pragma once

// Independent reference computations for tests. Plain textbook Gaussian
// elimination with rational division and brute-force word enumeration;
// nothing here calls into the library's elimination or search code.

#include <algorithm>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "surfhom/linalg.hpp"

namespace oracle {

using QRow = std::vector<mpq_class>;
using QMat = std::vector<QRow>;
using ZMat = std::vector<std::vector<mpz_class>>;

inline QMat from(const surfhom::RationalMatrix& m)
{
    QMat out(m.rows(), QRow(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out[r][c] = m(r, c);
    return out;
}

inline QMat from(const surfhom::IntegerMatrix& m)
{
    QMat out(m.rows(), QRow(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out[r][c] = m(r, c);
    return out;
}

inline ZMat zfrom(const surfhom::IntegerMatrix& m)
{
    ZMat out(m.rows(), std::vector<mpz_class>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out[r][c] = m(r, c);
    return out;
}

inline std::size_t cols_of(const QMat& m, std::size_t fallback = 0)
{
    return m.empty() ? fallback : m.front().size();
}

/// Row-reduces in place (not normalized); returns pivot columns.
inline std::vector<std::size_t> eliminate(QMat& m)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    const std::size_t cols = cols_of(m);
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            mpq_class f = m[i][c] / m[r][c];
            for (std::size_t j = 0; j < cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(QMat m)
{
    return eliminate(m).size();
}

/// Some basis of {x : m x = 0}; `cols` is needed when m has no rows.
inline QMat nullspace(QMat m, std::size_t cols)
{
    auto pivots = eliminate(m);
    QMat basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (std::find(pivots.begin(), pivots.end(), f) != pivots.end())
            continue;
        QRow v(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -m[i][f] / m[i][pivots[i]];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline QMat transpose(const QMat& m, std::size_t cols)
{
    QMat t(cols, QRow(m.size()));
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c)
            t[c][r] = m[r][c];
    return t;
}

inline QMat stack(QMat a, const QMat& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

/// Row spans equal.
inline bool same_span(const QMat& a, const QMat& b)
{
    const auto ra = rank(a);
    return ra == rank(b) && ra == rank(stack(a, b));
}

/// U ∩ V as Ann(Ann(U) + Ann(V)), with Ann(S) = nullspace of S's rows.
inline QMat intersect(const QMat& u, const QMat& v, std::size_t n)
{
    QMat ann_u = nullspace(u, n);
    QMat ann_v = nullspace(v, n);
    return nullspace(stack(ann_u, ann_v), n);
}

inline QMat mul(const QMat& a, const QMat& b)
{
    const std::size_t inner = b.size();
    const std::size_t cols = cols_of(b);
    QMat out(a.size(), QRow(cols));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k)
            for (std::size_t j = 0; j < cols; ++j)
                out[i][j] += a[i][k] * b[k][j];
    return out;
}

inline ZMat zmul(const ZMat& a, const ZMat& b)
{
    ZMat out(a.size(), std::vector<mpz_class>(b.front().size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < b.front().size(); ++j)
                out[i][j] += a[i][k] * b[k][j];
    return out;
}

inline ZMat zidentity(std::size_t n)
{
    ZMat out(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        out[i][i] = 1;
    return out;
}

/// Naive Gauss-Jordan inverse; entries rounded back to integers, which is
/// exact for unimodular input.
inline ZMat zinverse(const ZMat& m)
{
    const std::size_t n = m.size();
    QMat aug(n, QRow(2 * n));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug[r][c] = m[r][c];
        aug[r][n + r] = 1;
    }
    eliminate(aug);
    ZMat out(n, std::vector<mpz_class>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            mpq_class x = aug[r][n + c] / aug[r][r];
            out[r][c] = x.get_num();
        }
    return out;
}

/// Every freely reduced nonempty word of length ≤ max_len over
/// {g_i, g_i^-1}, multiplied out (leftmost letter acts first); distinct
/// products only.
inline std::set<ZMat> exhaustive_products(const std::vector<ZMat>& gens, std::size_t max_len)
{
    std::vector<ZMat> letters;
    for (const auto& g : gens) {
        letters.push_back(g);
        letters.push_back(zinverse(g));
    }
    std::set<ZMat> out;
    struct Item {
        ZMat product;
        std::size_t last;
    };
    std::vector<Item> level;
    for (std::size_t x = 0; x < letters.size(); ++x)
        level.push_back({letters[x], x});
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<Item> next;
        for (const auto& it : level) {
            out.insert(it.product);
            if (len == max_len)
                continue;
            for (std::size_t x = 0; x < letters.size(); ++x)
                if (x != (it.last ^ 1U))
                    next.push_back({zmul(letters[x], it.product), x});
        }
        level = std::move(next);
    }
    return out;
}

/// Laplace-free determinant via rational elimination.
inline mpq_class det(QMat m)
{
    const std::size_t n = m.size();
    mpq_class d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            mpq_class f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j)
                m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

} // namespace oracle
