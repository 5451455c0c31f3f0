#pragma once

// Exact linear algebra over Z and Q.
//
// Every homology dimension in this library reduces to ranks, kernels,
// images, sums and intersections of subspaces of Q^n. All arithmetic is
// exact (GMP integers and rationals); there is no floating point anywhere.

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace surfhom {

using Integer = mpz_class;
using Rational = mpq_class;
using IntegerVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

/// Dense row-major matrix over an exact scalar type.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data))
    {
        if (data_.size() != rows_ * cols_)
            throw std::invalid_argument("matrix data size does not match shape");
    }
    Matrix(std::initializer_list<std::initializer_list<long>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::vector<T> column(std::size_t c) const;
    const std::vector<T>& data() const { return data_; }

    Matrix transpose() const;

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b);
template <typename T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b);
template <typename T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b);
template <typename T>
Matrix<T> operator-(const Matrix<T>& a);
template <typename T>
std::vector<T> operator*(const Matrix<T>& a, std::span<const T> v);

inline IntegerMatrix mat_mul(const IntegerMatrix& a, const IntegerMatrix& b) { return a * b; }
inline RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b) { return a * b; }

RationalMatrix to_rational(const IntegerMatrix& m);
RationalVector to_rational(std::span<const Integer> v);

/// Stacks matrices with equal column counts on top of each other.
template <typename T>
Matrix<T> vstack(std::span<const Matrix<T>> blocks);
/// Places matrices with equal row counts side by side.
template <typename T>
Matrix<T> hstack(std::span<const Matrix<T>> blocks);

/// Result of Gauss-Jordan reduction: the nonzero rows of the reduced row
/// echelon form and their pivot columns (strictly increasing).
struct EchelonForm {
    std::size_t cols = 0;
    std::vector<RationalVector> rows;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Forward elimination is fraction-free
/// (Bareiss) on integer-cleared rows; back substitution normalizes pivots
/// to 1. The output depends only on the row space of the input.
EchelonForm rref(const RationalMatrix& m);
EchelonForm rref_rows(std::size_t cols, std::span<const RationalVector> rows);

std::size_t rank(const RationalMatrix& m);
std::size_t rank(const IntegerMatrix& m);

/// Fraction-free (Bareiss) determinant of a square integer matrix.
Integer determinant(const IntegerMatrix& m);

/// Exact inverse via Gauss-Jordan on [A | I]. Throws std::domain_error when
/// the matrix is singular.
RationalMatrix inverse(const RationalMatrix& m);
inline RationalMatrix mat_inverse(const RationalMatrix& m) { return inverse(m); }

/// a * b * a^-1 * b^-1
RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b);

/// A linear subspace of Q^n in canonical form: basis rows in reduced row
/// echelon form, pivots ascending. Two equal subspaces compare equal
/// structurally.
class Subspace {
public:
    /// The zero subspace of Q^0.
    Subspace() = default;

    static Subspace zero(std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim);
    /// Span of arbitrary generators (may be dependent, may be empty).
    static Subspace span(std::size_t ambient_dim, std::span<const RationalVector> generators);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return basis_.size(); }
    bool is_zero() const { return basis_.empty(); }
    const std::vector<RationalVector>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivot_cols() const { return pivots_; }

    /// Clears the pivot coordinates of v using the basis. The result is
    /// zero iff v lies in the subspace.
    RationalVector reduce(std::span<const Rational> v) const;
    bool contains(std::span<const Rational> v) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}
    Subspace(std::size_t ambient_dim, EchelonForm form);

    std::size_t ambient_dim_ = 0;
    std::vector<RationalVector> basis_;
    std::vector<std::size_t> pivots_;
};

/// Right kernel {x : m x = 0}.
Subspace kernel_basis(const RationalMatrix& m);
/// Column space of m.
Subspace image_basis(const RationalMatrix& m);

Subspace subspace_sum(std::span<const Subspace> spaces);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
/// Zassenhaus intersection, folded left over the list. An empty list is
/// rejected since the ambient dimension would be unknown.
Subspace subspace_intersection(std::span<const Subspace> spaces);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);

bool membership(std::span<const Rational> v, const Subspace& s);

/// Basis of the quotient `space / sub` (sub must be contained in space):
/// the basis of `space` reduced modulo `sub`, re-echelonized. Vectors are
/// supported on the non-pivot coordinates of `sub`.
std::vector<RationalVector> quotient_representatives(const Subspace& space, const Subspace& sub);

/// Hash of an integer matrix's shape and entries, for deduplication.
struct IntegerMatrixHash {
    std::size_t operator()(const IntegerMatrix& m) const noexcept;
};

} // namespace surfhom
