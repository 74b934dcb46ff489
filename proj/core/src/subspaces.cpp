#include "vtxalg/algebra.hpp"

#include <deque>
#include <tuple>

namespace vtx {

Subspace generate_subalgebra(const AlgebraStructure &alg, const std::vector<VectorQ> &S)
{
    Subspace U(alg.dim());
    std::deque<VectorQ> queue;
    U.insert(alg.vac());
    queue.push_back(alg.vac());
    while (!queue.empty()) {
        VectorQ b = std::move(queue.front());
        queue.pop_front();
        for (const auto &u : S)
            for (auto &[n, r] : alg.y.act(u, b))
                if (U.insert(r))
                    queue.push_back(std::move(r));
    }
    return U;
}

Subspace stabilizer(const AlgebraStructure &alg, const Subspace &U)
{
    const std::size_t n = alg.dim();
    const auto annihilators = nullspace(U.basis(), n);
    Subspace out(n);
    if (annihilators.empty()) {
        for (std::size_t i = 0; i < n; ++i)
            out.insert(alg.e(i));
        return out;
    }
    // Row (mode, k, p) holds p((e_i)_mode u_k) as a function of i.
    std::map<std::tuple<int, std::size_t, std::size_t>, VectorQ> rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < U.dim(); ++k)
            for (auto &[m, r] : alg.y.act(i, U.basis()[k]))
                for (std::size_t p = 0; p < annihilators.size(); ++p) {
                    Rational s = 0;
                    for (std::size_t c = 0; c < n; ++c)
                        s += annihilators[p][c] * r[c];
                    if (sgn(s) == 0)
                        continue;
                    auto &row = rows[{m, k, p}];
                    if (row.empty())
                        row = zero_vector(n);
                    row[i] = s;
                }
    std::vector<VectorQ> eqs;
    for (auto &[key, r] : rows)
        eqs.push_back(std::move(r));
    for (auto &v : nullspace(eqs, n))
        out.insert(v);
    return out;
}

namespace {

// e^{xD} Y(w, -x) v
Distribution reversed_field(const AlgebraStructure &alg, const Matrix &D, const VectorQ &w,
                            const VectorQ &v)
{
    Distribution::Terms terms;
    for (auto &[m, r] : alg.y.act(w, v)) {
        Exponent e{};
        e[0] = -m - 1;
        terms.emplace(e, ((m + 1) % 2 != 0) ? scaled(r, -1) : r);
    }
    Distribution yneg = Distribution::finite({"x"}, alg.dim(), std::move(terms));
    Distribution ex = exp_xD(D, "x");
    int radius = 12;
    for (const auto *d : {&yneg, &ex})
        for (const auto &[e, c] : d->terms())
            radius = std::max(radius, std::abs(e[0]) + static_cast<int>(alg.dim()) + 2);
    return mul(ex, yneg, default_window({"x"}, 2 * radius),
               CoefficientProduct::matrix_vector(alg.dim()));
}

} // namespace

Subspace localizer(const AlgebraStructure &alg, const std::vector<VectorQ> &S)
{
    const std::size_t n = alg.dim();
    const Matrix D = d_operator(alg).matrix;
    std::map<std::tuple<std::size_t, int, std::size_t>, VectorQ> rows;
    for (std::size_t s = 0; s < S.size(); ++s)
        for (std::size_t i = 0; i < n; ++i) {
            Distribution delta = sub(field(alg.y, alg.e(i), S[s], "x"),
                                     reversed_field(alg, D, S[s], alg.e(i)));
            for (const auto &[e, c] : delta.terms())
                for (std::size_t comp = 0; comp < n; ++comp) {
                    if (sgn(c[comp]) == 0)
                        continue;
                    auto &row = rows[{s, e[0], comp}];
                    if (row.empty())
                        row = zero_vector(n);
                    row[i] = c[comp];
                }
        }
    std::vector<VectorQ> eqs;
    for (auto &[key, r] : rows)
        eqs.push_back(std::move(r));
    Subspace out(n);
    for (auto &v : nullspace(eqs, n))
        out.insert(v);
    return out;
}

bool is_subalgebra(const AlgebraStructure &alg, const Subspace &U)
{
    if (!U.contains(alg.vac()))
        return false;
    for (const auto &a : U.basis())
        for (const auto &b : U.basis())
            for (const auto &[m, r] : alg.y.act(a, b))
                if (!U.contains(r))
                    return false;
    return true;
}

} // namespace vtx
