#include "tdc/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace tdc::linalg {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(std::size_t rows, std::span<const Vector> columns) {
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw std::invalid_argument("from_columns: length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (sgn(x) != 0) return false;
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (sgn(b(k, j)) != 0) p(i, j) += aik * b(k, j);
            }
        }
    }
    return p;
}

Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
    Vector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k)
            if (sgn(a(i, k)) != 0 && sgn(v[k]) != 0) out[i] += a(i, k) * v[k];
    return out;
}

Matrix Matrix::direct_sum(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t c = 0; c < a.cols_; ++c) m(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows_; ++r)
        for (std::size_t c = 0; c < b.cols_; ++c) m(a.rows_ + r, a.cols_ + c) = b(r, c);
    return m;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) throw std::invalid_argument("hstack: row count mismatch");
    Matrix m(a.rows_, a.cols_ + b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t c = 0; c < a.cols_; ++c) m(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols_; ++c) m(r, a.cols_ + c) = b(r, c);
    }
    return m;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.cols_) throw std::invalid_argument("vstack: column count mismatch");
    Matrix m(a.rows_ + b.rows_, a.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t c = 0; c < a.cols_; ++c) m(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows_; ++r)
        for (std::size_t c = 0; c < b.cols_; ++c) m(a.rows_ + r, c) = b(r, c);
    return m;
}

std::string Matrix::to_string() const {
    std::ostringstream out;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) out << ' ';
            out << tdc::to_string((*this)(r, c));
        }
        out << '\n';
    }
    return out.str();
}

Echelon rref(Matrix m) {
    Echelon e;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && sgn(m(pivot, col)) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row)
            for (std::size_t c = col; c < m.cols(); ++c) swap(m(pivot, c), m(row, c));

        const Rational inv = 1 / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;

        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || sgn(m(r, col)) == 0) continue;
            const Rational factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (sgn(m(row, c)) != 0) m(r, c) -= factor * m(row, c);
        }
        e.pivot_columns.push_back(col);
        ++row;
    }
    e.reduced = std::move(m);
    return e;
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

Vector Kernel::coordinates(const Vector& v) const {
    Vector c(free_columns.size());
    for (std::size_t i = 0; i < free_columns.size(); ++i) c[i] = v.at(free_columns[i]);
    return c;
}

Kernel kernel(const Matrix& m) {
    const Echelon e = rref(m);
    Kernel k;
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivot_columns) is_pivot[p] = true;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) v[e.pivot_columns[i]] = -e.reduced(i, f);
        k.basis.push_back(std::move(v));
        k.free_columns.push_back(f);
    }
    return k;
}

Cokernel::Cokernel(const Matrix& m) : ambient_(m.rows()) {
    Echelon e = rref(m.transposed());
    pivots_ = e.pivot_columns;
    image_rows_ = Matrix(pivots_.size(), ambient_);
    for (std::size_t r = 0; r < pivots_.size(); ++r)
        for (std::size_t c = 0; c < ambient_; ++c) image_rows_(r, c) = e.reduced(r, c);
    std::vector<bool> is_pivot(ambient_, false);
    for (auto p : pivots_) is_pivot[p] = true;
    for (std::size_t i = 0; i < ambient_; ++i)
        if (!is_pivot[i]) complement_.push_back(i);
}

Vector Cokernel::coordinates(const Vector& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("cokernel coordinates: length mismatch");
    Vector reduced = v;
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
        const Rational factor = reduced[pivots_[r]];
        if (sgn(factor) == 0) continue;
        for (std::size_t c = 0; c < ambient_; ++c)
            if (sgn(image_rows_(r, c)) != 0) reduced[c] -= factor * image_rows_(r, c);
    }
    Vector coords(complement_.size());
    for (std::size_t i = 0; i < complement_.size(); ++i) coords[i] = reduced[complement_[i]];
    return coords;
}

bool Cokernel::contains_image(const Vector& v) const { return is_zero(coordinates(v)); }

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: length mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    const Echelon e = rref(std::move(aug));
    if (!e.pivot_columns.empty() && e.pivot_columns.back() == a.cols()) return std::nullopt;
    Vector x(a.cols());
    for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) x[e.pivot_columns[i]] = e.reduced(i, a.cols());
    return x;
}

bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

Vector add(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector add: length mismatch");
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vector scaled(const Vector& v, const Rational& s) {
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
    return out;
}

Rational dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace tdc::linalg
