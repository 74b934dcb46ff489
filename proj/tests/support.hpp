#pragma once

// Hand-built fixtures used as independent references by the unit tests.

#include "vtxalg/constructions.hpp"

namespace fx {

using namespace vtx;

inline VectorQ vec(std::initializer_list<long> xs)
{
    VectorQ v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

// Q[t]/(t^3) with the nilpotent derivation d(t) = t^2.
inline AssocAlgebraData a3_assoc()
{
    AssocAlgebraData A;
    A.basis = {"one", "t", "t2"};
    A.identity = 0;
    A.mult.assign(3, std::vector<VectorQ>(3, zero_vector(3)));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; i + j < 3; ++j)
            A.mult[i][j] = unit_vector(3, i + j);
    A.derivation = Matrix(3, 3);
    A.derivation(2, 1) = 1;
    return A;
}

inline AlgebraStructure a3() { return from_assoc_with_derivation(a3_assoc()); }

// Q[t]/(t^3) with d/dt, which is not a derivation there.
inline AssocAlgebraData a3_d_dt()
{
    AssocAlgebraData A = a3_assoc();
    A.derivation = Matrix(3, 3);
    A.derivation(0, 1) = 1;
    A.derivation(1, 2) = 2;
    return A;
}

// The table Y(a, x) b = a(t + x) b mod t^3 built without the derivation check.
inline AlgebraStructure a3_d_dt_table()
{
    AlgebraStructure alg;
    alg.basis = {"one", "t", "t2"};
    alg.vacuum = 0;
    alg.y = ActionTable(3, 3);
    // e^{x d/dt} t^i = sum_m C(i, m) x^m t^(i-m)
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t m = 0; m <= i; ++m)
            for (std::size_t j = 0; j < 3; ++j)
                if (i - m + j < 3)
                    alg.y.set(i, j, -1 - static_cast<int>(m),
                              scaled(unit_vector(3, i - m + j), binomial(static_cast<long>(i),
                                                                         static_cast<long>(m))));
    return alg;
}

// Q[t]/(t^2) with zero derivation.
inline AlgebraStructure a2()
{
    AssocAlgebraData A;
    A.basis = {"one", "t"};
    A.identity = 0;
    A.mult = {{vec({1, 0}), vec({0, 1})}, {vec({0, 1}), vec({0, 0})}};
    A.derivation = Matrix(2, 2);
    return from_assoc_with_derivation(A);
}

// Upper-triangular 2x2 matrices, basis {one, E11, E12}, zero derivation.
inline AlgebraStructure ut2()
{
    AssocAlgebraData A;
    A.basis = {"one", "E11", "E12"};
    A.identity = 0;
    A.mult = {{vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})},
              {vec({0, 1, 0}), vec({0, 1, 0}), vec({0, 0, 1})},
              {vec({0, 0, 1}), vec({0, 0, 0}), vec({0, 0, 0})}};
    A.derivation = Matrix(3, 3);
    return from_assoc_with_derivation(A);
}

inline AbelianGroup z2z2() { return AbelianGroup{{2, 2}}; }

// Group algebra Q[Z2 x Z2], basis e00, e01, e10, e11.
inline AlgebraStructure z22_base()
{
    AbelianGroup G = z2z2();
    AssocAlgebraData A;
    for (std::size_t g = 0; g < 4; ++g) {
        auto e = G.element(g);
        A.basis.push_back("e" + std::to_string(e[0]) + std::to_string(e[1]));
    }
    A.identity = 0;
    A.mult.assign(4, std::vector<VectorQ>(4));
    for (std::size_t g = 0; g < 4; ++g)
        for (std::size_t h = 0; h < 4; ++h)
            A.mult[g][h] = unit_vector(4, G.add(g, h));
    A.derivation = Matrix(4, 4);
    return from_assoc_with_derivation(A);
}

inline GradedTag z22_grading() { return {z2z2(), {0, 1, 2, 3}}; }

// eps(a, b) = (-1)^(a2 b1)
inline CocycleData z22_cocycle()
{
    AbelianGroup G = z2z2();
    CocycleData c{G, std::vector<std::vector<Rational>>(4, std::vector<Rational>(4))};
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b)
            c.table[a][b] = (G.element(a)[1] * G.element(b)[0]) % 2 ? -1 : 1;
    return c;
}

inline AlgebraStructure z22_twist() { return cocycle_twist(z22_base(), z22_grading(), z22_cocycle()); }

inline FiniteGroup z2()
{
    return FiniteGroup{{"e", "g"}, {{0, 1}, {1, 0}}, 0};
}

// Z2 acting on Q[t]/(t^2) by t -> -t.
inline GroupActionData a2_sign_action()
{
    Matrix g = Matrix::identity(2);
    g(1, 1) = -1;
    return {z2(), {Matrix::identity(2), g}};
}

// S3 as permutations of {0,1,2}; elements listed as images.
inline FiniteGroup s3()
{
    std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1},
                                             {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
    FiniteGroup G;
    G.identity = 0;
    for (const auto &p : perms)
        G.elements.push_back(std::to_string(p[0]) + std::to_string(p[1]) + std::to_string(p[2]));
    G.table.assign(6, std::vector<std::size_t>(6));
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) {
            std::array<int, 3> c{};
            for (int i = 0; i < 3; ++i)
                c[i] = perms[a][perms[b][i]];
            G.table[a][b] = static_cast<std::size_t>(
                std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    return G;
}

} // namespace fx
