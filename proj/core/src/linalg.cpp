#include "vtxalg/linalg.hpp"

#include "vtxalg/errors.hpp"

#include <algorithm>

namespace vtx {

VectorQ zero_vector(std::size_t n) { return VectorQ(n); }

VectorQ unit_vector(std::size_t n, std::size_t i)
{
    VectorQ v(n);
    v.at(i) = 1;
    return v;
}

bool is_zero(const VectorQ &v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational &x) { return sgn(x) == 0; });
}

void axpy(VectorQ &y, const Rational &a, const VectorQ &x)
{
    if (sgn(a) == 0)
        return;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (sgn(x[i]) != 0)
            y[i] += a * x[i];
}

VectorQ scaled(const VectorQ &x, const Rational &a)
{
    VectorQ y(x.size());
    axpy(y, a, x);
    return y;
}

VectorQ operator+(const VectorQ &a, const VectorQ &b)
{
    VectorQ r = a;
    axpy(r, 1, b);
    return r;
}

VectorQ operator-(const VectorQ &a, const VectorQ &b)
{
    VectorQ r = a;
    axpy(r, -1, b);
    return r;
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(const std::vector<VectorQ> &cols, std::size_t rows)
{
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i)
            m(i, j) = cols[j].at(i);
    return m;
}

VectorQ Matrix::column(std::size_t j) const
{
    VectorQ v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, j);
    return v;
}

VectorQ Matrix::apply(const VectorQ &v) const
{
    VectorQ r(rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
        if (sgn(v[j]) == 0)
            continue;
        for (std::size_t i = 0; i < rows_; ++i)
            if (sgn((*this)(i, j)) != 0)
                r[i] += (*this)(i, j) * v[j];
    }
    return r;
}

bool Matrix::is_zero() const
{
    return std::all_of(a_.begin(), a_.end(), [](const Rational &x) { return sgn(x) == 0; });
}

Matrix operator*(const Matrix &a, const Matrix &b)
{
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational &x = a(i, k);
            if (sgn(x) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (sgn(b(k, j)) != 0)
                    r(i, j) += x * b(k, j);
        }
    return r;
}

Matrix operator+(const Matrix &a, const Matrix &b)
{
    Matrix r = a;
    for (std::size_t i = 0; i < r.a_.size(); ++i)
        r.a_[i] += b.a_[i];
    return r;
}

Matrix operator-(const Matrix &a, const Matrix &b)
{
    Matrix r = a;
    for (std::size_t i = 0; i < r.a_.size(); ++i)
        r.a_[i] -= b.a_[i];
    return r;
}

Matrix operator*(const Rational &s, const Matrix &a)
{
    Matrix r = a;
    for (auto &x : r.a_)
        x *= s;
    return r;
}

VectorQ Subspace::reduce(const VectorQ &v) const
{
    VectorQ r = v;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        Rational c = r[pivots_[k]];
        if (sgn(c) != 0)
            axpy(r, -c, rows_[k]);
    }
    return r;
}

bool Subspace::contains(const VectorQ &v) const { return is_zero(reduce(v)); }

bool Subspace::insert(const VectorQ &v)
{
    if (v.size() != n_)
        throw Error("subspace dimension mismatch");
    VectorQ r = reduce(v);
    auto it = std::find_if(r.begin(), r.end(), [](const Rational &x) { return sgn(x) != 0; });
    if (it == r.end())
        return false;
    std::size_t p = static_cast<std::size_t>(it - r.begin());
    Rational inv = 1 / r[p];
    for (auto &x : r)
        x *= inv;
    for (auto &row : rows_) {
        Rational c = row[p];
        if (sgn(c) != 0)
            axpy(row, -c, r);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(r));
    return true;
}

std::optional<VectorQ> Subspace::coordinates(const VectorQ &v) const
{
    if (!contains(v))
        return std::nullopt;
    VectorQ c(rows_.size());
    for (std::size_t k = 0; k < rows_.size(); ++k)
        c[k] = v[pivots_[k]];
    return c;
}

std::vector<VectorQ> nullspace(const std::vector<VectorQ> &rows, std::size_t n)
{
    Subspace s(n);
    for (const auto &r : rows)
        s.insert(r);
    const auto &b = s.basis();
    std::vector<std::size_t> pivots;
    for (const auto &r : b)
        for (std::size_t j = 0; j < n; ++j)
            if (sgn(r[j]) != 0) {
                pivots.push_back(j);
                break;
            }
    Subspace out(n);
    for (std::size_t f = 0; f < n; ++f) {
        if (std::find(pivots.begin(), pivots.end(), f) != pivots.end())
            continue;
        VectorQ v(n);
        v[f] = 1;
        for (std::size_t k = 0; k < b.size(); ++k)
            v[pivots[k]] = -b[k][f];
        out.insert(v);
    }
    return out.basis();
}

std::size_t rank(const std::vector<VectorQ> &rows, std::size_t n)
{
    Subspace s(n);
    for (const auto &r : rows)
        s.insert(r);
    return s.dim();
}

std::optional<VectorQ> solve_combination(const std::vector<VectorQ> &vs, const VectorQ &target)
{
    // Augment each vector with a unit tag so the reduction records the combination.
    const std::size_t n = target.size();
    const std::size_t m = vs.size();
    Subspace s(n + m);
    for (std::size_t i = 0; i < m; ++i) {
        VectorQ row(n + m);
        for (std::size_t j = 0; j < n; ++j)
            row[j] = vs[i].at(j);
        row[n + i] = 1;
        s.insert(row);
    }
    VectorQ t(n + m);
    for (std::size_t j = 0; j < n; ++j)
        t[j] = target[j];
    VectorQ r = s.reduce(t);
    for (std::size_t j = 0; j < n; ++j)
        if (sgn(r[j]) != 0)
            return std::nullopt;
    // r = t - sum c_i row_i restricted to tag columns gives -c.
    VectorQ c(m);
    for (std::size_t i = 0; i < m; ++i)
        c[i] = -r[n + i];
    return c;
}

} // namespace vtx
