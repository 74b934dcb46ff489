#include "vtxalg/constructions.hpp"

#include "vtxalg/errors.hpp"

#include <algorithm>
#include <numeric>

namespace vtx {

// ---------------------------------------------------------------- associative data

VectorQ AssocAlgebraData::product(const VectorQ &a, const VectorQ &b) const
{
    VectorQ out = zero_vector(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (sgn(a[i]) == 0)
            continue;
        for (std::size_t j = 0; j < dim(); ++j)
            if (sgn(b[j]) != 0)
                axpy(out, a[i] * b[j], mult[i][j]);
    }
    return out;
}

void validate_assoc(const AssocAlgebraData &A)
{
    const std::size_t n = A.dim();
    if (n == 0 || A.identity >= n)
        throw MalformedStructure("associative algebra needs a basis and an identity");
    if (A.mult.size() != n)
        throw MalformedStructure("multiplication table has the wrong shape");
    for (const auto &row : A.mult) {
        if (row.size() != n)
            throw MalformedStructure("multiplication table has the wrong shape");
        for (const auto &v : row)
            if (v.size() != n)
                throw MalformedStructure("multiplication table entry of wrong dimension");
    }
    if (A.derivation.rows() != n || A.derivation.cols() != n)
        throw MalformedStructure("derivation matrix has the wrong shape");

    const VectorQ one = unit_vector(n, A.identity);
    for (std::size_t i = 0; i < n; ++i) {
        const VectorQ e = unit_vector(n, i);
        if (A.product(one, e) != e || A.product(e, one) != e)
            throw MalformedStructure("identity axiom fails for " + A.basis[i]);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const VectorQ a = unit_vector(n, i), b = unit_vector(n, j), c = unit_vector(n, k);
                if (A.product(A.product(a, b), c) != A.product(a, A.product(b, c)))
                    throw MalformedStructure("multiplication is not associative on (" +
                                             A.basis[i] + ", " + A.basis[j] + ", " + A.basis[k] +
                                             ")");
            }
    const Matrix &d = A.derivation;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const VectorQ a = unit_vector(n, i), b = unit_vector(n, j);
            if (d.apply(A.mult[i][j]) != A.product(d.column(i), b) + A.product(a, d.column(j)))
                throw NotADerivation("Leibniz rule fails on (" + A.basis[i] + ", " + A.basis[j] +
                                     ")");
        }
    Matrix p = d;
    for (std::size_t k = 1; k < n && !p.is_zero(); ++k)
        p = p * d;
    if (!p.is_zero())
        throw NonNilpotentD("derivation is not nilpotent");
}

AlgebraStructure from_assoc_with_derivation(const AssocAlgebraData &A)
{
    validate_assoc(A);
    const std::size_t n = A.dim();
    AlgebraStructure alg;
    alg.basis = A.basis;
    alg.vacuum = A.identity;
    alg.y = ActionTable(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        VectorQ dm = unit_vector(n, i);
        Rational fact = 1;
        for (int m = 0; !is_zero(dm); ++m) {
            for (std::size_t j = 0; j < n; ++j)
                alg.y.set(i, j, -1 - m, scaled(A.product(dm, unit_vector(n, j)), 1 / fact));
            dm = A.derivation.apply(dm);
            fact *= m + 1;
        }
    }
    return alg;
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> matrix_units(std::size_t n)
{
    std::vector<std::pair<std::size_t, std::size_t>> units;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != n - 1 || j != n - 1)
                units.emplace_back(i, j);
    return units;
}

// Scalar n x n matrix of the M_n basis element m.
std::vector<Rational> matrix_of(std::size_t n, std::size_t m)
{
    std::vector<Rational> a(n * n);
    if (m == 0) {
        for (std::size_t i = 0; i < n; ++i)
            a[i * n + i] = 1;
        return a;
    }
    auto [i, j] = matrix_units(n)[m - 1];
    a[i * n + j] = 1;
    return a;
}

} // namespace

AssocAlgebraData full_matrix_assoc(std::size_t n)
{
    if (n == 0)
        throw MalformedStructure("matrix size must be positive");
    const auto units = matrix_units(n);
    const std::size_t dim = n * n;
    AssocAlgebraData A;
    A.basis.push_back("one");
    for (auto [i, j] : units)
        A.basis.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    A.identity = 0;
    A.derivation = Matrix(dim, dim);
    // Coordinates of a scalar matrix N: one -> N_nn, E_ii -> N_ii - N_nn, E_ij -> N_ij.
    auto decompose = [&](const std::vector<Rational> &N) {
        VectorQ c = zero_vector(dim);
        const Rational last = N[dim - 1];
        c[0] = last;
        for (std::size_t k = 0; k < units.size(); ++k) {
            auto [i, j] = units[k];
            c[k + 1] = i == j ? N[i * n + j] - last : N[i * n + j];
        }
        return c;
    };
    A.mult.assign(dim, std::vector<VectorQ>(dim));
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) {
            auto L = matrix_of(n, a), R = matrix_of(n, b);
            std::vector<Rational> P(dim);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t j = 0; j < n; ++j)
                        P[i * n + k] += L[i * n + j] * R[j * n + k];
            A.mult[a][b] = decompose(P);
        }
    return A;
}

AlgebraStructure full_matrix_algebra(std::size_t n)
{
    return from_assoc_with_derivation(full_matrix_assoc(n));
}

// ---------------------------------------------------------------- tensor products

namespace {

AlgebraStructure tensor_pair(const AlgebraStructure &A, const AlgebraStructure &B)
{
    const std::size_t na = A.dim(), nb = B.dim(), n = na * nb;
    AlgebraStructure out;
    for (const auto &a : A.basis)
        for (const auto &b : B.basis)
            out.basis.push_back(a + "." + b);
    out.vacuum = A.vacuum * nb + B.vacuum;
    out.y = ActionTable(n, n);
    for (std::size_t a = 0; a < na; ++a)
        for (std::size_t b = 0; b < nb; ++b)
            for (std::size_t c = 0; c < na; ++c)
                for (std::size_t d = 0; d < nb; ++d) {
                    std::map<int, VectorQ> modes;
                    for (const auto &[p, ac] : A.y.entry(a, c))
                        for (const auto &[q, bd] : B.y.entry(b, d)) {
                            auto it = modes.find(p + q + 1);
                            if (it == modes.end())
                                it = modes.emplace(p + q + 1, zero_vector(n)).first;
                            for (std::size_t i = 0; i < na; ++i) {
                                if (sgn(ac[i]) == 0)
                                    continue;
                                for (std::size_t j = 0; j < nb; ++j)
                                    it->second[i * nb + j] += ac[i] * bd[j];
                            }
                        }
                    for (auto &[m, v] : modes)
                        out.y.set(a * nb + b, c * nb + d, m, std::move(v));
                }
    return out;
}

} // namespace

AlgebraStructure tensor_product(const std::vector<AlgebraStructure> &factors)
{
    if (factors.empty())
        throw MalformedStructure("tensor product of no factors");
    AlgebraStructure out = factors.front();
    for (std::size_t k = 1; k < factors.size(); ++k)
        out = tensor_pair(out, factors[k]);
    return out;
}

AlgebraStructure matrix_algebra(const AlgebraStructure &alg, std::size_t n)
{
    if (n == 0)
        throw MalformedStructure("matrix size must be positive");
    const std::size_t nv = alg.dim(), nm = n * n, dim = nv * nm;
    const auto units = matrix_units(n);
    AlgebraStructure out;
    const auto mnames = full_matrix_assoc(n).basis;
    for (const auto &v : alg.basis)
        for (const auto &m : mnames)
            out.basis.push_back(v + "." + m);
    out.vacuum = alg.vacuum * nm;
    out.y = ActionTable(dim, dim);

    // An element is an n x n matrix with entries in V.
    using VMatrix = std::vector<VectorQ>;
    auto basis_matrix = [&](std::size_t idx) {
        const std::size_t v = idx / nm, m = idx % nm;
        auto scalar = matrix_of(n, m);
        VMatrix M(nm, zero_vector(nv));
        for (std::size_t k = 0; k < nm; ++k)
            if (sgn(scalar[k]) != 0)
                M[k] = scaled(alg.e(v), scalar[k]);
        return M;
    };
    auto coordinates = [&](const VMatrix &M) {
        VectorQ c = zero_vector(dim);
        const VectorQ &last = M[nm - 1];
        for (std::size_t v = 0; v < nv; ++v) {
            c[v * nm] = last[v];
            for (std::size_t k = 0; k < units.size(); ++k) {
                auto [i, j] = units[k];
                c[v * nm + k + 1] = i == j ? M[i * n + j][v] - last[v] : M[i * n + j][v];
            }
        }
        return c;
    };
    for (std::size_t a = 0; a < dim; ++a) {
        const VMatrix A = basis_matrix(a);
        for (std::size_t b = 0; b < dim; ++b) {
            const VMatrix B = basis_matrix(b);
            std::map<int, VMatrix> prod;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    if (is_zero(A[i * n + j]))
                        continue;
                    for (std::size_t k = 0; k < n; ++k) {
                        if (is_zero(B[j * n + k]))
                            continue;
                        for (auto &[mode, r] : alg.y.act(A[i * n + j], B[j * n + k])) {
                            auto it = prod.find(mode);
                            if (it == prod.end())
                                it = prod.emplace(mode, VMatrix(nm, zero_vector(nv))).first;
                            axpy(it->second[i * n + k], 1, r);
                        }
                    }
                }
            for (const auto &[mode, M] : prod)
                out.y.set(a, b, mode, coordinates(M));
        }
    }
    return out;
}

// ---------------------------------------------------------------- gradings and cocycles

std::size_t AbelianGroup::size() const
{
    std::size_t s = 1;
    for (int o : orders)
        s *= static_cast<std::size_t>(o);
    return s;
}

std::vector<int> AbelianGroup::element(std::size_t idx) const
{
    std::vector<int> g(orders.size());
    for (std::size_t k = orders.size(); k-- > 0;) {
        g[k] = static_cast<int>(idx % static_cast<std::size_t>(orders[k]));
        idx /= static_cast<std::size_t>(orders[k]);
    }
    return g;
}

std::size_t AbelianGroup::index(const std::vector<int> &g) const
{
    if (g.size() != orders.size())
        throw GradingInvalid("group element has the wrong number of components");
    std::size_t idx = 0;
    for (std::size_t k = 0; k < orders.size(); ++k) {
        int r = ((g[k] % orders[k]) + orders[k]) % orders[k];
        idx = idx * static_cast<std::size_t>(orders[k]) + static_cast<std::size_t>(r);
    }
    return idx;
}

std::size_t AbelianGroup::add(std::size_t g, std::size_t h) const
{
    auto a = element(g), b = element(h);
    for (std::size_t k = 0; k < a.size(); ++k)
        a[k] += b[k];
    return index(a);
}

void validate_grading(const AlgebraStructure &alg, const GradedTag &grading)
{
    for (int o : grading.group.orders)
        if (o <= 0)
            throw GradingInvalid("group orders must be positive");
    if (grading.degree.size() != alg.dim())
        throw GradingInvalid("one degree per basis vector is required");
    for (auto d : grading.degree)
        if (d >= grading.group.size())
            throw GradingInvalid("degree outside the group");
    if (grading.degree[alg.vacuum] != 0)
        throw GradingInvalid("vacuum must have degree 0");
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = 0; j < alg.dim(); ++j) {
            const std::size_t g = grading.group.add(grading.degree[i], grading.degree[j]);
            for (const auto &[n, v] : alg.y.entry(i, j))
                for (std::size_t k = 0; k < alg.dim(); ++k)
                    if (sgn(v[k]) != 0 && grading.degree[k] != g)
                        throw GradingInvalid("(" + alg.basis[i] + ")_" + std::to_string(n) + "(" +
                                             alg.basis[j] + ") leaves its graded piece");
        }
}

void validate_cocycle(const CocycleData &eps)
{
    const auto &G = eps.group;
    const std::size_t n = G.size();
    if (eps.table.size() != n)
        throw CocycleInvalid("cocycle table has the wrong shape");
    for (const auto &row : eps.table) {
        if (row.size() != n)
            throw CocycleInvalid("cocycle table has the wrong shape");
        for (const auto &v : row)
            if (sgn(v) == 0)
                throw CocycleInvalid("cocycle values must be nonzero");
    }
    for (std::size_t a = 0; a < n; ++a)
        if (eps.table[a][0] != 1 || eps.table[0][a] != 1)
            throw CocycleInvalid("cocycle is not normalized");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (eps.table[a][G.add(b, c)] * eps.table[b][c] !=
                    eps.table[a][b] * eps.table[G.add(a, b)][c])
                    throw CocycleInvalid("cocycle identity fails on a triple");
}

Rational commutator_factor(const CocycleData &eps, std::size_t g, std::size_t h)
{
    return eps.table[g][h] / eps.table[h][g];
}

AlgebraStructure cocycle_twist(const AlgebraStructure &alg, const GradedTag &grading,
                               const CocycleData &eps)
{
    validate_grading(alg, grading);
    validate_cocycle(eps);
    if (grading.group.orders != eps.group.orders)
        throw CocycleInvalid("cocycle and grading use different groups");
    AlgebraStructure out = alg;
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = 0; j < alg.dim(); ++j) {
            const Rational &e = eps.table[grading.degree[i]][grading.degree[j]];
            for (const auto &[n, v] : alg.y.entry(i, j))
                out.y.set(i, j, n, scaled(v, e));
        }
    return out;
}

// ---------------------------------------------------------------- groups and cross products

std::size_t FiniteGroup::inverse(std::size_t g) const
{
    for (std::size_t h = 0; h < size(); ++h)
        if (table[g][h] == identity)
            return h;
    throw MalformedStructure("group element without inverse");
}

bool FiniteGroup::abelian() const
{
    for (std::size_t g = 0; g < size(); ++g)
        for (std::size_t h = 0; h < size(); ++h)
            if (table[g][h] != table[h][g])
                return false;
    return true;
}

void validate_group(const FiniteGroup &G)
{
    const std::size_t n = G.size();
    if (n == 0 || G.identity >= n || G.table.size() != n)
        throw MalformedStructure("group table has the wrong shape");
    for (const auto &row : G.table) {
        if (row.size() != n)
            throw MalformedStructure("group table has the wrong shape");
        for (auto x : row)
            if (x >= n)
                throw MalformedStructure("group table entry out of range");
    }
    for (std::size_t g = 0; g < n; ++g) {
        if (G.table[G.identity][g] != g || G.table[g][G.identity] != g)
            throw MalformedStructure("identity axiom fails in the group table");
        G.inverse(g);
        for (std::size_t h = 0; h < n; ++h)
            for (std::size_t k = 0; k < n; ++k)
                if (G.table[G.table[g][h]][k] != G.table[g][G.table[h][k]])
                    throw MalformedStructure("group table is not associative");
    }
}

void validate_action(const AlgebraStructure &alg, const GroupActionData &act)
{
    validate_group(act.group);
    const std::size_t n = alg.dim();
    if (act.action.size() != act.group.size())
        throw MalformedStructure("one action matrix per group element is required");
    for (const auto &m : act.action)
        if (m.rows() != n || m.cols() != n)
            throw MalformedStructure("action matrix has the wrong shape");
    if (!(act.action[act.group.identity] == Matrix::identity(n)))
        throw NotAnAutomorphism("identity element must act trivially");
    for (std::size_t g = 0; g < act.group.size(); ++g)
        for (std::size_t h = 0; h < act.group.size(); ++h)
            if (!(act.action[act.group.mul(g, h)] == act.action[g] * act.action[h]))
                throw NotAnAutomorphism("action is not a group homomorphism");
    for (std::size_t g = 0; g < act.group.size(); ++g) {
        const Matrix &psi = act.action[g];
        if (psi.apply(alg.vac()) != alg.vac())
            throw NotAnAutomorphism(act.group.elements[g] + " does not fix the vacuum");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                auto lhs = alg.y.entry(i, j);
                auto rhs = alg.y.act(psi.column(i), psi.column(j));
                for (auto &[m, v] : lhs)
                    v = psi.apply(v);
                for (auto it = lhs.begin(); it != lhs.end();)
                    it = is_zero(it->second) ? lhs.erase(it) : std::next(it);
                if (lhs != rhs)
                    throw NotAnAutomorphism(act.group.elements[g] + " does not preserve (" +
                                            alg.basis[i] + ", " + alg.basis[j] + ")");
            }
    }
}

AlgebraStructure cross_product(const AlgebraStructure &alg, const GroupActionData &act)
{
    validate_action(alg, act);
    const auto &G = act.group;
    const std::size_t nv = alg.dim(), ng = G.size(), n = nv * ng;
    AlgebraStructure out;
    for (const auto &v : alg.basis)
        for (const auto &g : G.elements)
            out.basis.push_back(v + "." + g);
    out.vacuum = alg.vacuum * ng + G.identity;
    out.y = ActionTable(n, n);
    for (std::size_t u = 0; u < nv; ++u)
        for (std::size_t g1 = 0; g1 < ng; ++g1)
            for (std::size_t v = 0; v < nv; ++v)
                for (std::size_t g2 = 0; g2 < ng; ++g2) {
                    const std::size_t g = G.mul(g1, g2);
                    for (auto &[m, r] : alg.y.act(alg.e(u), act.action[g1].column(v))) {
                        VectorQ lifted = zero_vector(n);
                        for (std::size_t k = 0; k < nv; ++k)
                            lifted[k * ng + g] = r[k];
                        out.y.set(u * ng + g1, v * ng + g2, m, std::move(lifted));
                    }
                }
    return out;
}

GroupActionData trivial_action(const FiniteGroup &G, std::size_t dim)
{
    return {G, std::vector<Matrix>(G.size(), Matrix::identity(dim))};
}

AlgebraStructure group_algebra(const FiniteGroup &G)
{
    validate_group(G);
    AssocAlgebraData A;
    A.basis = G.elements;
    A.identity = G.identity;
    const std::size_t n = G.size();
    A.mult.assign(n, std::vector<VectorQ>(n));
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h)
            A.mult[g][h] = unit_vector(n, G.mul(g, h));
    A.derivation = Matrix(n, n);
    return from_assoc_with_derivation(A);
}

// ---------------------------------------------------------------- R-maps

RMap identity_rmap(std::size_t dim, const Rational &q)
{
    return RMap("identity", dim, [q](const RMap::Triple &t) { return RMap::Image{{q, t}}; });
}

RMap tensor_swap_rmap(std::size_t dim_a, std::size_t dim_b)
{
    return RMap("tensor-swap", dim_a * dim_b, [dim_b](const RMap::Triple &t) {
        const std::size_t a1 = t[0] / dim_b, b1 = t[0] % dim_b;
        const std::size_t a2 = t[1] / dim_b, b2 = t[1] % dim_b;
        return RMap::Image{{1, {a1 * dim_b + b2, a2 * dim_b + b1, t[2]}}};
    });
}

RMap cocycle_rmap(const GradedTag &grading, const CocycleData &eps)
{
    return RMap("cocycle", grading.degree.size(), [grading, eps](const RMap::Triple &t) {
        // Slot 1 holds v of degree h, slot 2 holds u of degree g; factor c(g, h).
        const Rational c = commutator_factor(eps, grading.degree[t[1]], grading.degree[t[0]]);
        return RMap::Image{{c, t}};
    });
}

RMap cross_rmap(std::size_t vdim, const GroupActionData &act)
{
    const std::size_t ng = act.group.size();
    return RMap("cross", vdim * ng, [vdim, ng, act](const RMap::Triple &t) {
        const auto &G = act.group;
        const std::size_t v = t[0] / ng, g2 = t[0] % ng;
        const std::size_t u = t[1] / ng, g1 = t[1] % ng;
        const std::size_t w = t[2] / ng, g3 = t[2] % ng;
        const std::size_t comm =
            G.mul(G.mul(G.inverse(g1), G.inverse(g2)), G.mul(g1, g2));
        const VectorQ gv = act.action[g1].column(v);
        const VectorQ gu = act.action[G.inverse(g2)].column(u);
        const VectorQ gw = act.action[comm].column(w);
        const std::size_t h = G.mul(comm, g3);
        RMap::Image img;
        for (std::size_t a = 0; a < vdim; ++a) {
            if (sgn(gv[a]) == 0)
                continue;
            for (std::size_t b = 0; b < vdim; ++b) {
                if (sgn(gu[b]) == 0)
                    continue;
                for (std::size_t c = 0; c < vdim; ++c)
                    if (sgn(gw[c]) != 0)
                        img.push_back({gv[a] * gu[b] * gw[c], {a * ng + g2, b * ng + g1, c * ng + h}});
            }
        }
        return img;
    });
}

Distribution rmap_reversed(const AlgebraStructure &alg, const RMap &R, std::size_t v,
                           std::size_t u, std::size_t w)
{
    if (R.dim() != alg.dim())
        throw MalformedStructure("R-map dimension does not match the algebra");
    Distribution out = Distribution::finite({"x2", "x1"}, alg.dim(), {});
    for (const auto &[c, t] : R({v, u, w}))
        out = add(out, scale(field_product({{&alg.y, alg.e(t[0]), "x2"},
                                            {&alg.y, alg.e(t[1]), "x1"}},
                                           alg.e(t[2])),
                             c));
    return out;
}

CheckReport check_jacobi_like(const AlgebraStructure &alg, const RMap &R, const Window &win,
                              int bound)
{
    const std::size_t n = alg.dim();
    CheckReport rep;
    rep.exact_complete = false;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
            int k_trunc = 0;
            for (const auto &[m, r] : alg.y.entry(u, v))
                k_trunc = std::max(k_trunc, m + 1);
            for (std::size_t w = 0; w < n; ++w) {
                const Distribution reversed = rmap_reversed(alg, R, v, u, w);
                auto r = jacobi_with_reversed(alg, alg.e(u), alg.e(v), alg.e(w), reversed, win);
                for (auto &wit : r.witnesses) {
                    wit.check = "jacobi-like";
                    wit.basis = {u, v, w};
                }
                rep.absorb(r);

                auto assoc = weak_assoc_order(alg, alg.y, alg.e(u), alg.e(v), alg.e(w), bound);
                if (!assoc.found()) {
                    Witness wit = assoc.witness.value_or(Witness{});
                    wit.check = "jacobi-like-associativity";
                    wit.basis = {u, v, w};
                    rep.fail(std::move(wit));
                }

                const Distribution A =
                    field_product({{&alg.y, alg.e(u), "x1"}, {&alg.y, alg.e(v), "x2"}}, alg.e(w));
                int spread = 0;
                for (const auto *d : {&A, &reversed})
                    for (const auto &[e, c] : d->terms())
                        spread = std::max({spread, std::abs(e[0]), std::abs(e[1])});
                const Window W = default_window({"x1", "x2"}, spread + k_trunc + 1);
                const Distribution p = binom_expand(k_trunc, "x1", "x2", -1, W);
                auto c = window_equal(mul(p, A, W), mul(p, reversed, W));
                if (!c.equal() || !c.exact_complete) {
                    Witness wit;
                    wit.check = "jacobi-like-commutation";
                    wit.basis = {u, v, w};
                    wit.vars = {"x1", "x2"};
                    wit.exponent = c.witness;
                    wit.lhs = c.lhs;
                    wit.rhs = c.rhs;
                    wit.note = "k = " + std::to_string(k_trunc);
                    rep.fail(std::move(wit));
                }
            }
        }
    return rep;
}

} // namespace vtx
