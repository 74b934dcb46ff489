#pragma once

#include "vtxalg/algebra.hpp"

namespace vtx {

// Module W over an algebra V: y acts from V (source) on W (target).
struct ModuleStructure {
    std::vector<std::string> basis;
    ActionTable y;

    std::size_t dim() const { return basis.size(); }
    VectorQ e(std::size_t i) const { return unit_vector(dim(), i); }
};

ModuleStructure adjoint_module(const AlgebraStructure &alg);

// Truncation, Y_W(1, x) = 1, weak associativity for every triple and the
// derivative property Y_W(Dv, x) = d/dx Y_W(v, x). The reported order is
// the largest l needed; with finitely many v the (u, w)-uniform l is that
// maximum, so both variants share one verdict.
CheckReport check_module(const AlgebraStructure &alg, const ModuleStructure &mod, int bound);

// Column vectors W^n over matrix_algebra(alg, n); basis (w, row) lexicographic.
ModuleStructure wn_module(const AlgebraStructure &alg, const ModuleStructure &mod, std::size_t n);

// W_1 (x) ... (x) W_r over tensor_product of the algebras, lexicographic basis.
ModuleStructure tensor_module(const std::vector<ModuleStructure> &mods);
// The embedded factor algebras act by commuting operators.
CheckReport check_tensor_factors_commute(const std::vector<AlgebraStructure> &algs,
                                         const ModuleStructure &tmod);

// v -> Y_W(v, x) is injective.
bool is_faithful(const ModuleStructure &mod);

// Algebra locality order k implies the module relation with the same k; on a
// faithful module the converse is checked too.
CheckReport check_locality_transfer(const AlgebraStructure &alg, const ModuleStructure &mod,
                                    std::size_t u, std::size_t v, const Rational &q, int bound);

// Least k with prod_{i<j} (x_i - x_j)^k Y_W(v_1, x_1) ... Y_W(v_r, x_r) w
// lower truncated in every variable, for every basis w.
OrderResult check_product_compatibility(const AlgebraStructure &alg, const ModuleStructure &mod,
                                        const std::vector<std::size_t> &vs, int bound);

// Span of all v^(1)_{n_1} ... v^(r)_{n_r} w.
Subspace generated_submodule(const AlgebraStructure &alg, const ModuleStructure &mod,
                             const VectorQ &w);

} // namespace vtx
