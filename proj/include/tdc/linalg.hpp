#pragma once

#include "tdc/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tdc::linalg {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    /// Matrix whose columns are the given vectors (all of length `rows`).
    static Matrix from_columns(std::size_t rows, std::span<const Vector> columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;

    Matrix transposed() const;
    bool is_zero() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& v);
    friend bool operator==(const Matrix&, const Matrix&) = default;

    /// Block matrix [[a, 0], [0, b]].
    static Matrix direct_sum(const Matrix& a, const Matrix& b);
    /// [a | b] (same row count).
    static Matrix hstack(const Matrix& a, const Matrix& b);
    /// [a ; b] (same column count).
    static Matrix vstack(const Matrix& a, const Matrix& b);

    /// Rows separated by newlines, entries by single spaces.
    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Reduced row echelon form. Pivoting takes the first nonzero entry at or
/// below the current row, so the result depends only on the input matrix.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivot_columns;
    std::size_t rank() const { return pivot_columns.size(); }
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of ker(m) as vectors of length m.cols(). Each basis vector has a 1
/// at its free column and 0 at the other free columns.
struct Kernel {
    std::vector<Vector> basis;
    std::vector<std::size_t> free_columns;

    std::size_t dimension() const { return basis.size(); }
    /// Coordinates of v (assumed in the kernel) in `basis`.
    Vector coordinates(const Vector& v) const;
};

Kernel kernel(const Matrix& m);

/// The quotient target / im(m), where m maps into a space of dimension
/// m.rows(). The complement is spanned by unit vectors at the non-pivot
/// coordinates of rref(m^T), in increasing index order.
class Cokernel {
public:
    explicit Cokernel(const Matrix& m);

    std::size_t dimension() const { return complement_.size(); }
    std::size_t ambient_dimension() const { return ambient_; }
    /// Indices i whose unit vectors e_i represent the quotient basis.
    const std::vector<std::size_t>& complement() const { return complement_; }
    /// Coordinates of the class of v in the quotient basis.
    Vector coordinates(const Vector& v) const;
    /// True when v lies in im(m).
    bool contains_image(const Vector& v) const;

private:
    std::size_t ambient_ = 0;
    Matrix image_rows_;  // rref rows of m^T spanning im(m)
    std::vector<std::size_t> pivots_;
    std::vector<std::size_t> complement_;
};

/// Some x with a x = b, or nullopt when the system is inconsistent. Free
/// variables are set to zero.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector scaled(const Vector& v, const Rational& s);
Rational dot(const Vector& a, const Vector& b);

}  // namespace tdc::linalg
