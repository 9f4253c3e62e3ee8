#pragma once

#include "wrat/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace wrat {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    void append_row(std::span<const Rational> values);

    Matrix transpose() const;
    Matrix operator*(const Matrix &rhs) const;
    Matrix operator+(const Matrix &rhs) const;
    Matrix operator-(const Matrix &rhs) const;
    Matrix operator-() const;
    Matrix scaled(const Rational &s) const;
    Vector apply(std::span<const Rational> v) const;

    bool is_zero() const;
    bool operator==(const Matrix &rhs) const = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Reduced row echelon form; pivots[k] is the pivot column of row k.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

Echelon rref(Matrix m);

std::size_t rank(const Matrix &m);

/// Basis of {x : m x = 0}. Vector k has a 1 at the k-th free column and zeros
/// at the other free columns, so coordinates of a kernel vector in this basis
/// are read off at the free columns.
std::vector<Vector> nullspace(const Matrix &m);

/// Columns that are not pivots of rref(m), in increasing order.
std::vector<std::size_t> free_columns(const Matrix &m);

/// One solution of m x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix &m, std::span<const Rational> b);

} // namespace wrat
