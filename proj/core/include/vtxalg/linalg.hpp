#pragma once

#include "vtxalg/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace vtx {

using VectorQ = std::vector<Rational>;

VectorQ zero_vector(std::size_t n);
VectorQ unit_vector(std::size_t n, std::size_t i);
bool is_zero(const VectorQ &v);
// y += a * x
void axpy(VectorQ &y, const Rational &a, const VectorQ &x);
VectorQ scaled(const VectorQ &x, const Rational &a);
VectorQ operator+(const VectorQ &a, const VectorQ &b);
VectorQ operator-(const VectorQ &a, const VectorQ &b);

// Dense row-major matrix over Q.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);

    static Matrix identity(std::size_t n);
    static Matrix from_columns(const std::vector<VectorQ> &cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational &operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational &operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    VectorQ column(std::size_t j) const;
    VectorQ apply(const VectorQ &v) const;
    bool is_zero() const;

    const std::vector<Rational> &data() const { return a_; }
    std::vector<Rational> &data() { return a_; }

    friend Matrix operator*(const Matrix &a, const Matrix &b);
    friend Matrix operator+(const Matrix &a, const Matrix &b);
    friend Matrix operator-(const Matrix &a, const Matrix &b);
    friend Matrix operator*(const Rational &s, const Matrix &a);
    friend bool operator==(const Matrix &a, const Matrix &b) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

// Subspace of Q^n kept in reduced row echelon form. Pivots are chosen on the
// first nonzero column, so the basis depends only on the span.
class Subspace {
public:
    explicit Subspace(std::size_t ambient = 0) : n_(ambient) {}

    std::size_t ambient() const { return n_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<VectorQ> &basis() const { return rows_; }

    // Remainder of v after eliminating the pivot columns.
    VectorQ reduce(const VectorQ &v) const;
    bool contains(const VectorQ &v) const;
    // Returns true when v enlarged the span.
    bool insert(const VectorQ &v);
    // Coordinates of v in terms of the current basis rows, if v is in the span.
    std::optional<VectorQ> coordinates(const VectorQ &v) const;

    friend bool operator==(const Subspace &a, const Subspace &b)
    {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

private:
    std::size_t n_;
    std::vector<VectorQ> rows_;
    std::vector<std::size_t> pivots_;
};

// Basis (row-reduced) of {c : <r, c> = 0 for every row r}.
std::vector<VectorQ> nullspace(const std::vector<VectorQ> &rows, std::size_t n);
std::size_t rank(const std::vector<VectorQ> &rows, std::size_t n);

// Solves sum_i c_i * vs[i] = target; returns coefficients or nothing.
std::optional<VectorQ> solve_combination(const std::vector<VectorQ> &vs, const VectorQ &target);

} // namespace vtx
