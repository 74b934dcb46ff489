#pragma once

#include "vtxalg/algebra.hpp"

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace vtx {

// Unital associative algebra with a nilpotent derivation.
struct AssocAlgebraData {
    std::vector<std::string> basis;
    std::size_t identity = 0;
    // mult[i][j] = e_i e_j
    std::vector<std::vector<VectorQ>> mult;
    Matrix derivation;

    std::size_t dim() const { return basis.size(); }
    VectorQ product(const VectorQ &a, const VectorQ &b) const;
};

// Throws MalformedStructure, NotADerivation or NonNilpotentD.
void validate_assoc(const AssocAlgebraData &A);
// Y(a, x) b = (e^{xd} a) b.
AlgebraStructure from_assoc_with_derivation(const AssocAlgebraData &A);
// M_n(Q) with basis {one, E_ij for (i, j) != (n, n)} and zero derivation.
AssocAlgebraData full_matrix_assoc(std::size_t n);
AlgebraStructure full_matrix_algebra(std::size_t n);

// Factor basis vectors are joined by '.'; basis order is lexicographic.
AlgebraStructure tensor_product(const std::vector<AlgebraStructure> &factors);
// Formal matrix product on n x n matrices with entries in alg. Basis
// (v, m) in lexicographic order with m running over the M_n basis above.
AlgebraStructure matrix_algebra(const AlgebraStructure &alg, std::size_t n);

// Z/orders[0] x Z/orders[1] x ...; elements indexed lexicographically.
struct AbelianGroup {
    std::vector<int> orders;

    std::size_t size() const;
    std::vector<int> element(std::size_t idx) const;
    std::size_t index(const std::vector<int> &g) const;
    std::size_t add(std::size_t g, std::size_t h) const;
};

struct GradedTag {
    AbelianGroup group;
    // Group element index per basis vector.
    std::vector<std::size_t> degree;
};

struct CocycleData {
    AbelianGroup group;
    // table[g][h] = eps(g, h)
    std::vector<std::vector<Rational>> table;
};

// Throws GradingInvalid.
void validate_grading(const AlgebraStructure &alg, const GradedTag &grading);
// Throws CocycleInvalid.
void validate_cocycle(const CocycleData &eps);
// eps(g, h) / eps(h, g)
Rational commutator_factor(const CocycleData &eps, std::size_t g, std::size_t h);
// Y_eps(u, x) v = eps(deg u, deg v) Y(u, x) v.
AlgebraStructure cocycle_twist(const AlgebraStructure &alg, const GradedTag &grading,
                               const CocycleData &eps);

struct FiniteGroup {
    std::vector<std::string> elements;
    // table[g][h] = index of gh
    std::vector<std::vector<std::size_t>> table;
    std::size_t identity = 0;

    std::size_t size() const { return elements.size(); }
    std::size_t mul(std::size_t g, std::size_t h) const { return table[g][h]; }
    std::size_t inverse(std::size_t g) const;
    bool abelian() const;
};

// Throws MalformedStructure unless the table is a group.
void validate_group(const FiniteGroup &G);

struct GroupActionData {
    FiniteGroup group;
    // One automorphism matrix per group element.
    std::vector<Matrix> action;
};

// Throws NotAnAutomorphism (or MalformedStructure for shape errors).
void validate_action(const AlgebraStructure &alg, const GroupActionData &act);
// Y(ug, x)(vh) = Y(u, x) g(v) gh on V (x) Q[G], vacuum 1e.
AlgebraStructure cross_product(const AlgebraStructure &alg, const GroupActionData &act);
// The same space with the trivial action of the given group.
GroupActionData trivial_action(const FiniteGroup &G, std::size_t dim);
// Q[G] as an algebra (zero derivation).
AlgebraStructure group_algebra(const FiniteGroup &G);

// Linear endomorphism of V (x) V (x) V given on basis triples.
class RMap {
public:
    using Triple = std::array<std::size_t, 3>;
    using Image = std::vector<std::pair<Rational, Triple>>;

    RMap() = default;
    RMap(std::string kind, std::size_t dim, std::function<Image(const Triple &)> image)
        : kind_(std::move(kind)), dim_(dim), image_(std::move(image))
    {
    }

    const std::string &kind() const { return kind_; }
    std::size_t dim() const { return dim_; }
    Image operator()(const Triple &t) const { return image_(t); }

private:
    std::string kind_;
    std::size_t dim_ = 0;
    std::function<Image(const Triple &)> image_;
};

RMap identity_rmap(std::size_t dim, const Rational &q = 1);
// V = A (x) B with lexicographic basis: swaps the B-components of slots 1 and 2.
RMap tensor_swap_rmap(std::size_t dim_a, std::size_t dim_b);
// R(v (x) u (x) w) = c(deg u, deg v) v (x) u (x) w.
RMap cocycle_rmap(const GradedTag &grading, const CocycleData &eps);
// Cross product R-map on V[G]; vdim is dim V.
RMap cross_rmap(std::size_t vdim, const GroupActionData &act);

// (Y (x) Y)(x2, x1) R(v (x) u (x) w)
Distribution rmap_reversed(const AlgebraStructure &alg, const RMap &R, std::size_t v,
                           std::size_t u, std::size_t w);

// Jacobi-like identity on every basis triple, plus its two consequences:
// weak associativity and commutation against the R-twisted product.
CheckReport check_jacobi_like(const AlgebraStructure &alg, const RMap &R, const Window &win,
                              int bound);

} // namespace vtx
