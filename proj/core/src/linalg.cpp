#include "wrat/linalg.hpp"

#include "wrat/errors.hpp"

#include <utility>

namespace wrat {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

void Matrix::append_row(std::span<const Rational> values) {
    if (rows_ == 0 && cols_ == 0)
        cols_ = values.size();
    if (values.size() != cols_)
        throw Error(ErrorKind::DimensionMismatch, "append_row: width mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::operator*(const Matrix &rhs) const {
    if (cols_ != rhs.rows_)
        throw Error(ErrorKind::DimensionMismatch, "matrix product: shape mismatch");
    Matrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational &a = (*this)(r, k);
            if (sgn(a) == 0)
                continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c)
                if (sgn(rhs(k, c)) != 0)
                    out(r, c) += a * rhs(k, c);
        }
    return out;
}

Matrix Matrix::operator+(const Matrix &rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw Error(ErrorKind::DimensionMismatch, "matrix sum: shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] += rhs.data_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix &rhs) const { return *this + (-rhs); }

Matrix Matrix::operator-() const { return scaled(-1); }

Matrix Matrix::scaled(const Rational &s) const {
    Matrix out = *this;
    for (auto &x : out.data_)
        x *= s;
    return out;
}

Vector Matrix::apply(std::span<const Rational> v) const {
    if (v.size() != cols_)
        throw Error(ErrorKind::DimensionMismatch, "matrix-vector product: shape mismatch");
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (sgn((*this)(r, c)) != 0 && sgn(v[c]) != 0)
                out[r] += (*this)(r, c) * v[c];
    return out;
}

bool Matrix::is_zero() const {
    for (const auto &x : data_)
        if (sgn(x) != 0)
            return false;
    return true;
}

Echelon rref(Matrix m) {
    Echelon e;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
        std::size_t r = pivot_row;
        while (r < rows && sgn(m(r, c)) == 0)
            ++r;
        if (r == rows)
            continue;
        if (r != pivot_row)
            for (std::size_t k = 0; k < cols; ++k)
                std::swap(m(r, k), m(pivot_row, k));

        Rational inv = 1 / m(pivot_row, c);
        for (std::size_t k = c; k < cols; ++k)
            if (sgn(m(pivot_row, k)) != 0)
                m(pivot_row, k) *= inv;

        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pivot_row || sgn(m(i, c)) == 0)
                continue;
            Rational factor = m(i, c);
            for (std::size_t k = c; k < cols; ++k)
                if (sgn(m(pivot_row, k)) != 0)
                    m(i, k) -= factor * m(pivot_row, k);
        }
        e.pivots.push_back(c);
        ++pivot_row;
    }
    e.reduced = std::move(m);
    return e;
}

std::size_t rank(const Matrix &m) { return rref(m).rank(); }

std::vector<std::size_t> free_columns(const Matrix &m) {
    auto e = rref(m);
    std::vector<std::size_t> out;
    std::size_t p = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (p < e.pivots.size() && e.pivots[p] == c)
            ++p;
        else
            out.push_back(c);
    }
    return out;
}

std::vector<Vector> nullspace(const Matrix &m) {
    auto e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots)
        is_pivot[c] = true;

    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vector v(m.cols());
        v[free] = 1;
        for (std::size_t k = 0; k < e.pivots.size(); ++k)
            v[e.pivots[k]] = -e.reduced(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> solve(const Matrix &m, std::span<const Rational> b) {
    if (b.size() != m.rows())
        throw Error(ErrorKind::DimensionMismatch, "solve: right-hand side length mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    auto e = rref(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == m.cols())
        return std::nullopt;
    Vector x(m.cols());
    for (std::size_t k = 0; k < e.pivots.size(); ++k)
        x[e.pivots[k]] = e.reduced(k, m.cols());
    return x;
}

} // namespace wrat
