#include "surfhom/linalg.hpp"

#include <algorithm>
#include <utility>

namespace surfhom {

template <typename T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size())
{
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("ragged matrix literal");
        for (long x : r)
            data_.emplace_back(x);
    }
}

template <typename T>
Matrix<T> Matrix<T>::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

template <typename T>
std::vector<T> Matrix<T>::column(std::size_t c) const
{
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out.push_back((*this)(r, c));
    return out;
}

template <typename T>
Matrix<T> Matrix<T>::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product: shape mismatch");
    Matrix<T> out(a.rows(), b.cols());
    T tmp;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const T& x = a(i, k);
            if (sgn(x) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (sgn(b(k, j)) == 0)
                    continue;
                tmp = x * b(k, j);
                out(i, j) += tmp;
            }
        }
    }
    return out;
}

template <typename T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix sum: shape mismatch");
    Matrix<T> out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j) + b(i, j);
    return out;
}

template <typename T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix difference: shape mismatch");
    Matrix<T> out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j) - b(i, j);
    return out;
}

template <typename T>
Matrix<T> operator-(const Matrix<T>& a)
{
    Matrix<T> out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = -a(i, j);
    return out;
}

template <typename T>
std::vector<T> operator*(const Matrix<T>& a, std::span<const T> v)
{
    if (a.cols() != v.size())
        throw std::invalid_argument("matrix-vector product: length mismatch");
    std::vector<T> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            out[i] += a(i, k) * v[k];
    return out;
}

template <typename T>
Matrix<T> vstack(std::span<const Matrix<T>> blocks)
{
    if (blocks.empty())
        return {};
    std::size_t cols = blocks.front().cols();
    std::size_t rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols)
            throw std::invalid_argument("vstack: column count mismatch");
        rows += b.rows();
    }
    Matrix<T> out(rows, cols);
    std::size_t r0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < cols; ++c)
                out(r0 + r, c) = b(r, c);
        r0 += b.rows();
    }
    return out;
}

template <typename T>
Matrix<T> hstack(std::span<const Matrix<T>> blocks)
{
    if (blocks.empty())
        return {};
    std::size_t rows = blocks.front().rows();
    std::size_t cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != rows)
            throw std::invalid_argument("hstack: row count mismatch");
        cols += b.cols();
    }
    Matrix<T> out(rows, cols);
    std::size_t c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < b.cols(); ++c)
                out(r, c0 + c) = b(r, c);
        c0 += b.cols();
    }
    return out;
}

template class Matrix<Integer>;
template class Matrix<Rational>;
template IntegerMatrix operator*(const IntegerMatrix&, const IntegerMatrix&);
template RationalMatrix operator*(const RationalMatrix&, const RationalMatrix&);
template IntegerMatrix operator+(const IntegerMatrix&, const IntegerMatrix&);
template RationalMatrix operator+(const RationalMatrix&, const RationalMatrix&);
template IntegerMatrix operator-(const IntegerMatrix&, const IntegerMatrix&);
template RationalMatrix operator-(const RationalMatrix&, const RationalMatrix&);
template IntegerMatrix operator-(const IntegerMatrix&);
template RationalMatrix operator-(const RationalMatrix&);
template IntegerVector operator*(const IntegerMatrix&, std::span<const Integer>);
template RationalVector operator*(const RationalMatrix&, std::span<const Rational>);
template IntegerMatrix vstack(std::span<const IntegerMatrix>);
template RationalMatrix vstack(std::span<const RationalMatrix>);
template IntegerMatrix hstack(std::span<const IntegerMatrix>);
template RationalMatrix hstack(std::span<const RationalMatrix>);

RationalMatrix to_rational(const IntegerMatrix& m)
{
    std::vector<Rational> data(m.data().begin(), m.data().end());
    return RationalMatrix(m.rows(), m.cols(), std::move(data));
}

RationalVector to_rational(std::span<const Integer> v)
{
    return RationalVector(v.begin(), v.end());
}

namespace {

// Scales a rational row to a primitive-free integer row (clears
// denominators; the common factor does not matter for elimination).
IntegerVector clear_denominators(std::span<const Rational> row)
{
    Integer lcm = 1;
    for (const auto& x : row)
        if (sgn(x) != 0)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    IntegerVector out;
    out.reserve(row.size());
    for (const auto& x : row)
        out.emplace_back(x.get_num() * (lcm / x.get_den()));
    return out;
}

// Bareiss forward elimination in place. Returns pivot columns; rows
// [0, pivots.size()) hold the echelon rows afterwards.
std::vector<std::size_t> bareiss_forward(std::vector<IntegerVector>& rows, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && sgn(rows[p][c]) == 0)
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[r], rows[p]);
        const Integer& piv = rows[r][c];
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            Integer factor = rows[i][c];
            for (std::size_t j = c; j < cols; ++j) {
                Integer v = piv * rows[i][j] - factor * rows[r][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                rows[i][j] = std::move(v);
            }
        }
        prev = rows[r][c];
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

} // namespace

EchelonForm rref_rows(std::size_t cols, std::span<const RationalVector> input)
{
    std::vector<IntegerVector> rows;
    rows.reserve(input.size());
    for (const auto& v : input) {
        if (v.size() != cols)
            throw std::invalid_argument("rref: row length mismatch");
        rows.push_back(clear_denominators(v));
    }

    EchelonForm form;
    form.cols = cols;
    form.pivots = bareiss_forward(rows, cols);

    form.rows.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Integer& lead = rows[i][form.pivots[i]];
        RationalVector v(cols);
        for (std::size_t j = form.pivots[i]; j < cols; ++j) {
            v[j] = Rational(rows[i][j], lead);
            v[j].canonicalize();
        }
        form.rows.push_back(std::move(v));
    }
    // Back substitution, bottom-up.
    for (std::size_t i = form.rows.size(); i-- > 0;) {
        std::size_t pc = form.pivots[i];
        for (std::size_t k = 0; k < i; ++k) {
            Rational f = form.rows[k][pc];
            if (sgn(f) == 0)
                continue;
            for (std::size_t j = pc; j < cols; ++j)
                form.rows[k][j] -= f * form.rows[i][j];
        }
    }
    return form;
}

EchelonForm rref(const RationalMatrix& m)
{
    std::vector<RationalVector> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto row = m.row(r);
        rows.emplace_back(row.begin(), row.end());
    }
    return rref_rows(m.cols(), rows);
}

std::size_t rank(const RationalMatrix& m)
{
    return rref(m).pivots.size();
}

std::size_t rank(const IntegerMatrix& m)
{
    std::vector<IntegerVector> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto row = m.row(r);
        rows.emplace_back(row.begin(), row.end());
    }
    return bareiss_forward(rows, m.cols()).size();
}

Integer determinant(const IntegerMatrix& m)
{
    if (!m.is_square())
        throw std::invalid_argument("determinant: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    std::vector<IntegerVector> a;
    a.reserve(n);
    for (std::size_t r = 0; r < n; ++r) {
        auto row = m.row(r);
        a.emplace_back(row.begin(), row.end());
    }
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a[k][k]) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(a[p][k]) == 0)
                ++p;
            if (p == n)
                return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = std::move(v);
            }
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

RationalMatrix inverse(const RationalMatrix& m)
{
    if (!m.is_square())
        throw std::invalid_argument("inverse: matrix is not square");
    const std::size_t n = m.rows();
    std::vector<RationalVector> aug(n, RationalVector(2 * n));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug[r][c] = m(r, c);
        aug[r][n + r] = 1;
    }
    EchelonForm form = rref_rows(2 * n, aug);
    if (form.pivots.size() < n || form.pivots[n - 1] != n - 1)
        throw std::domain_error("inverse: matrix is singular");
    RationalMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv(r, c) = form.rows[r][n + c];
    return inv;
}

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b)
{
    return a * b * inverse(a) * inverse(b);
}

Subspace::Subspace(std::size_t ambient_dim, EchelonForm form)
    : ambient_dim_(ambient_dim), basis_(std::move(form.rows)), pivots_(std::move(form.pivots))
{
}

Subspace Subspace::zero(std::size_t ambient_dim)
{
    return Subspace(ambient_dim);
}

Subspace Subspace::full(std::size_t ambient_dim)
{
    EchelonForm form;
    form.cols = ambient_dim;
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        RationalVector e(ambient_dim);
        e[i] = 1;
        form.rows.push_back(std::move(e));
        form.pivots.push_back(i);
    }
    return Subspace(ambient_dim, std::move(form));
}

Subspace Subspace::span(std::size_t ambient_dim, std::span<const RationalVector> generators)
{
    return Subspace(ambient_dim, rref_rows(ambient_dim, generators));
}

RationalVector Subspace::reduce(std::span<const Rational> v) const
{
    if (v.size() != ambient_dim_)
        throw std::invalid_argument("subspace: vector length does not match ambient dimension");
    RationalVector out(v.begin(), v.end());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        Rational f = out[pivots_[i]];
        if (sgn(f) == 0)
            continue;
        for (std::size_t j = pivots_[i]; j < ambient_dim_; ++j)
            out[j] -= f * basis_[i][j];
    }
    return out;
}

bool Subspace::contains(std::span<const Rational> v) const
{
    auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const Rational& x) { return sgn(x) == 0; });
}

bool Subspace::contains(const Subspace& other) const
{
    if (other.ambient_dim_ != ambient_dim_)
        throw std::invalid_argument("subspace: ambient dimension mismatch");
    return std::all_of(other.basis_.begin(), other.basis_.end(),
                       [this](const RationalVector& v) { return contains(v); });
}

Subspace kernel_basis(const RationalMatrix& m)
{
    EchelonForm form = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : form.pivots)
        is_pivot[p] = true;
    std::vector<RationalVector> gens;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        RationalVector v(n);
        v[f] = 1;
        for (std::size_t i = 0; i < form.rows.size(); ++i)
            v[form.pivots[i]] = -form.rows[i][f];
        gens.push_back(std::move(v));
    }
    return Subspace::span(n, gens);
}

Subspace image_basis(const RationalMatrix& m)
{
    std::vector<RationalVector> cols;
    cols.reserve(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
        cols.push_back(m.column(c));
    return Subspace::span(m.rows(), cols);
}

Subspace subspace_sum(std::span<const Subspace> spaces)
{
    if (spaces.empty())
        throw std::invalid_argument("subspace_sum: empty list");
    const std::size_t n = spaces.front().ambient_dim();
    std::vector<RationalVector> gens;
    for (const auto& s : spaces) {
        if (s.ambient_dim() != n)
            throw std::invalid_argument("subspace_sum: ambient dimension mismatch");
        gens.insert(gens.end(), s.basis().begin(), s.basis().end());
    }
    return Subspace::span(n, gens);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b)
{
    const Subspace both[] = {a, b};
    return subspace_sum(both);
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b)
{
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("subspace_intersection: ambient dimension mismatch");
    const std::size_t n = a.ambient_dim();
    // Zassenhaus: rows (u | u) for u in a, (v | 0) for v in b. After
    // echelonization the rows whose left half vanishes span a ∩ b in the
    // right half.
    std::vector<RationalVector> rows;
    rows.reserve(a.dim() + b.dim());
    for (const auto& u : a.basis()) {
        RationalVector r(2 * n);
        std::copy(u.begin(), u.end(), r.begin());
        std::copy(u.begin(), u.end(), r.begin() + static_cast<std::ptrdiff_t>(n));
        rows.push_back(std::move(r));
    }
    for (const auto& v : b.basis()) {
        RationalVector r(2 * n);
        std::copy(v.begin(), v.end(), r.begin());
        rows.push_back(std::move(r));
    }
    EchelonForm form = rref_rows(2 * n, rows);
    std::vector<RationalVector> gens;
    for (std::size_t i = 0; i < form.rows.size(); ++i) {
        if (form.pivots[i] < n)
            continue;
        gens.emplace_back(form.rows[i].begin() + static_cast<std::ptrdiff_t>(n), form.rows[i].end());
    }
    return Subspace::span(n, gens);
}

Subspace subspace_intersection(std::span<const Subspace> spaces)
{
    if (spaces.empty())
        throw std::invalid_argument("subspace_intersection: empty list");
    Subspace acc = spaces.front();
    for (std::size_t i = 1; i < spaces.size(); ++i)
        acc = subspace_intersection(acc, spaces[i]);
    return acc;
}

bool membership(std::span<const Rational> v, const Subspace& s)
{
    return s.contains(v);
}

std::vector<RationalVector> quotient_representatives(const Subspace& space, const Subspace& sub)
{
    if (space.ambient_dim() != sub.ambient_dim())
        throw std::invalid_argument("quotient: ambient dimension mismatch");
    if (!space.contains(sub))
        throw std::invalid_argument("quotient: subspace is not contained in the space");
    std::vector<RationalVector> reduced;
    reduced.reserve(space.dim());
    for (const auto& v : space.basis())
        reduced.push_back(sub.reduce(v));
    return Subspace::span(space.ambient_dim(), reduced).basis();
}

std::size_t IntegerMatrixHash::operator()(const IntegerMatrix& m) const noexcept
{
    std::size_t h = std::hash<std::size_t>{}(m.rows() * 1000003u + m.cols());
    auto mix = [&h](std::size_t x) { h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    for (const auto& x : m.data()) {
        const mpz_srcptr z = x.get_mpz_t();
        mix(static_cast<std::size_t>(z->_mp_size));
        const std::size_t limbs = mpz_size(z);
        for (std::size_t i = 0; i < limbs; ++i)
            mix(static_cast<std::size_t>(mpz_getlimbn(z, static_cast<mp_size_t>(i))));
    }
    return h;
}

} // namespace surfhom
