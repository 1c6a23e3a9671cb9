#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace hva {

/// Row vector of exact rationals, dimension >= 1.
class QVector {
public:
    QVector() : entries_(1) {}
    QVector(std::initializer_list<Rational> entries) : QVector(std::vector<Rational>(entries)) {}
    explicit QVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
        if (entries_.empty())
            throw DimensionError("vector dimension must be positive");
    }

    static QVector filled(std::size_t dim, const Rational& value) { return QVector(std::vector<Rational>(dim, value)); }
    static QVector ones(std::size_t dim) { return filled(dim, 1); }

    std::size_t dim() const { return entries_.size(); }
    const Rational& operator[](std::size_t i) const { return entries_[i]; }
    Rational& operator[](std::size_t i) { return entries_[i]; }
    std::span<const Rational> entries() const { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    bool operator==(const QVector&) const = default;

    std::size_t hash() const {
        std::size_t h = entries_.size();
        for (const auto& e : entries_)
            h ^= e.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

    /// "[2,3]" form; also used for "1/2" entries.
    std::string to_string() const {
        std::string out = "[";
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i)
                out += ',';
            out += entries_[i].to_string();
        }
        return out + "]";
    }

    /// Concatenation [a b].
    friend QVector concat(const QVector& a, const QVector& b) {
        std::vector<Rational> e(a.entries_);
        e.insert(e.end(), b.entries_.begin(), b.entries_.end());
        return QVector(std::move(e));
    }

private:
    std::vector<Rational> entries_;
};

/// Dense square matrix of exact rationals, stored row-major.
class QMatrix {
public:
    QMatrix() : QMatrix(1) {}
    explicit QMatrix(std::size_t dim) : dim_(dim), cells_(dim * dim) {
        if (dim == 0)
            throw DimensionError("matrix dimension must be positive");
    }
    QMatrix(std::initializer_list<std::initializer_list<Rational>> rows) : QMatrix(rows.size()) {
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != dim_)
                throw DimensionError("matrix must be square");
            std::size_t j = 0;
            for (const auto& x : row)
                (*this)(i, j++) = x;
            ++i;
        }
    }

    static QMatrix identity(std::size_t dim) {
        QMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t dim() const { return dim_; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return cells_[i * dim_ + j]; }
    Rational& operator()(std::size_t i, std::size_t j) { return cells_[i * dim_ + j]; }

    bool is_identity() const {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                if ((*this)(i, j) != Rational(i == j ? 1 : 0))
                    return false;
        return true;
    }

    bool operator==(const QMatrix&) const = default;

    std::string to_string() const {
        std::string out = "[";
        for (std::size_t i = 0; i < dim_; ++i) {
            out += i ? ",[" : "[";
            for (std::size_t j = 0; j < dim_; ++j) {
                if (j)
                    out += ',';
                out += (*this)(i, j).to_string();
            }
            out += ']';
        }
        return out + "]";
    }

private:
    std::size_t dim_;
    std::vector<Rational> cells_;
};

/// v * M with v on the left: result[j] = sum_i v[i] * M(i, j).
inline QVector vec_mul_mat(const QVector& v, const QMatrix& m) {
    if (v.dim() != m.dim())
        throw DimensionError("vector of dimension " + std::to_string(v.dim()) + " times matrix of dimension " +
                             std::to_string(m.dim()));
    const std::size_t n = m.dim();
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Rational& vi = v[i];
        if (vi.is_zero())
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& mij = m(i, j);
            if (mij.is_zero())
                continue;
            out[j] += mij.is_one() ? vi : vi * mij;
        }
    }
    return QVector(std::move(out));
}

inline QMatrix mat_mul(const QMatrix& a, const QMatrix& b) {
    if (a.dim() != b.dim())
        throw DimensionError("matrix product of dimensions " + std::to_string(a.dim()) + " and " +
                             std::to_string(b.dim()));
    const std::size_t n = a.dim();
    QMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a(i, k).is_zero())
                continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!b(k, j).is_zero())
                    c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

inline QMatrix operator*(const QMatrix& a, const QMatrix& b) { return mat_mul(a, b); }
inline QVector operator*(const QVector& v, const QMatrix& m) { return vec_mul_mat(v, m); }

/// Exact Gauss-Jordan inverse. Throws SingularMatrixError when det = 0.
inline QMatrix mat_inverse(const QMatrix& m) {
    const std::size_t n = m.dim();
    QMatrix a = m;
    QMatrix inv = QMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero())
            ++pivot;
        if (pivot == n)
            throw SingularMatrixError("matrix is singular");
        if (pivot != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        const Rational scale = a(col, col).reciprocal();
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) *= scale;
            inv(col, j) *= scale;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a(row, col).is_zero())
                continue;
            const Rational factor = a(row, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(row, j) -= factor * a(col, j);
                inv(row, j) -= factor * inv(col, j);
            }
        }
    }
    return inv;
}

inline Rational determinant(const QMatrix& m) {
    const std::size_t n = m.dim();
    QMatrix a = m;
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero())
            ++pivot;
        if (pivot == n)
            return 0;
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(pivot, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t row = col + 1; row < n; ++row) {
            if (a(row, col).is_zero())
                continue;
            const Rational factor = a(row, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j)
                a(row, j) -= factor * a(col, j);
        }
    }
    return det;
}

/// A in the top-left block, B in the bottom-right, zeros elsewhere.
inline QMatrix block_diag(const QMatrix& a, const QMatrix& b) {
    const std::size_t ka = a.dim();
    QMatrix c(ka + b.dim());
    for (std::size_t i = 0; i < ka; ++i)
        for (std::size_t j = 0; j < ka; ++j)
            c(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            c(ka + i, ka + j) = b(i, j);
    return c;
}

} // namespace hva

template <>
struct std::hash<hva::QVector> {
    std::size_t operator()(const hva::QVector& v) const noexcept { return v.hash(); }
};
