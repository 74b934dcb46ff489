#pragma once

#include "vtxalg/formal_series.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vtx {

// Finitely supported vertex-operator data: (e_i)_n w_j for basis vectors e_i
// of a source space acting on basis vectors w_j of a target space.
class ActionTable {
public:
    using Modes = std::map<int, VectorQ>;

    ActionTable() = default;
    ActionTable(std::size_t src_dim, std::size_t tgt_dim);

    std::size_t src_dim() const { return src_; }
    std::size_t tgt_dim() const { return tgt_; }

    void set(std::size_t i, std::size_t j, int n, VectorQ v);
    void add(std::size_t i, std::size_t j, int n, const VectorQ &v);
    const Modes &entry(std::size_t i, std::size_t j) const;

    // n -> (e_i)_n w, nonzero entries only.
    Modes act(std::size_t i, const VectorQ &w) const;
    // n -> u_n w for an arbitrary source vector u.
    Modes act(const VectorQ &u, const VectorQ &w) const;
    VectorQ mode(const VectorQ &u, int n, const VectorQ &w) const;

    // Smallest and largest n carrying a nonzero entry, if any.
    std::optional<std::pair<int, int>> n_range() const;

    friend bool operator==(const ActionTable &, const ActionTable &) = default;

private:
    std::size_t src_ = 0, tgt_ = 0;
    std::vector<Modes> entries_;
};

struct AlgebraStructure {
    std::vector<std::string> basis;
    std::size_t vacuum = 0;
    ActionTable y;

    std::size_t dim() const { return basis.size(); }
    std::optional<std::size_t> index_of(const std::string &name) const;
    VectorQ vac() const { return unit_vector(dim(), vacuum); }
    VectorQ e(std::size_t i) const { return unit_vector(dim(), i); }
};

enum class Verdict { Pass, Fail, Inconclusive };
std::string to_string(Verdict v);

struct Witness {
    std::string check;
    std::vector<std::size_t> basis;
    std::vector<std::string> vars;
    std::vector<int> exponent;
    VectorQ lhs, rhs;
    std::string note;
};

struct CheckReport {
    Verdict verdict = Verdict::Pass;
    std::vector<Witness> witnesses;
    std::optional<int> order;
    bool exact_complete = true;
    std::string note;

    bool passed() const { return verdict == Verdict::Pass; }
    void fail(Witness w);
    void inconclusive(std::string why);
    // Pass & Pass = Pass, any Fail wins, otherwise Inconclusive.
    void absorb(const CheckReport &other);
};

struct OrderResult {
    enum class Status { Found, NotFoundWithinBound, Inconclusive };
    Status status = Status::Found;
    int order = 0;
    int bound = 0;
    std::optional<Witness> witness;
    // Discrepancy is constant in every formal variable.
    bool constant_witness = false;
    bool exact_complete = true;

    bool found() const { return status == Status::Found; }
};
std::string to_string(OrderResult::Status s);

struct DOperator {
    Matrix matrix;
};

// Default search bound 2 * (n_max - n_min) + 4 over the global mode range.
int default_bound(const AlgebraStructure &alg);
Window default_window(std::vector<std::string> vars, int radius = 12);

CheckReport validate_structure(const AlgebraStructure &alg);
DOperator d_operator(const AlgebraStructure &alg);
// sum_j x^j D^j / j! as a distribution with flattened matrix coefficients.
Distribution exp_xD(const Matrix &D, const std::string &var);
// e^{xD} v.
Distribution exp_xD(const Matrix &D, const VectorQ &v, const std::string &var);

// Y(u, x) w for a table acting on the target space, as a one-variable series.
Distribution field(const ActionTable &table, const VectorQ &u, const VectorQ &w,
                   const std::string &var);

struct FieldFactor {
    const ActionTable *table;
    VectorQ u;
    std::string var;
};
// Y(u_1, x_1) ... Y(u_r, x_r) w, innermost factor last.
Distribution field_product(const std::vector<FieldFactor> &factors, const VectorQ &w);

CheckReport check_d_bracket(const AlgebraStructure &alg);
// Y(v, x) 1 = e^{xD} v for every basis v.
CheckReport check_creation_exp(const AlgebraStructure &alg);

// Weak associativity for one triple, with the outer action given by `on`
// (the algebra itself or a module). Searches l = 0..bound.
OrderResult weak_assoc_order(const AlgebraStructure &alg, const ActionTable &on,
                             const VectorQ &u, const VectorQ &v, const VectorQ &w, int bound);
// Least l working for every basis v (the l depends only on u and w).
OrderResult find_weak_assoc_l(const AlgebraStructure &alg, std::size_t u, std::size_t w, int bound);

// q-locality of Y(u, x1), Y(v, x2) applied to one vector w.
OrderResult locality_order(const ActionTable &on, const VectorQ &u, const VectorQ &v,
                           const VectorQ &w, const Rational &q, int bound);
// Same over every basis vector of the target space.
OrderResult find_locality_k(const ActionTable &on, std::size_t u, std::size_t v,
                            const Rational &q, int bound);
OrderResult find_locality_k(const AlgebraStructure &alg, std::size_t u, std::size_t v,
                            const Rational &q, int bound);

CheckReport check_skew_symmetry(const AlgebraStructure &alg, std::size_t u, std::size_t v,
                                 const Rational &q, int bound);

// Both sides of the q-Jacobi identity on a three-variable window (x0, x1, x2).
CheckReport check_jacobi_triple(const AlgebraStructure &alg, const VectorQ &u, const VectorQ &v,
                                const VectorQ &w, const Rational &q, const Window &win);
// Jacobi identity with a caller-supplied reversed term in place of
// q Y(v, x2) Y(u, x1) w.
CheckReport jacobi_with_reversed(const AlgebraStructure &alg, const VectorQ &u, const VectorQ &v,
                                 const VectorQ &w, const Distribution &reversed, const Window &win);
// All basis w; the note records whether the verdict agrees with
// (locality found) and (weak associativity found).
CheckReport check_jacobi(const AlgebraStructure &alg, std::size_t u, std::size_t v,
                         const Rational &q, const Window &win);

// Subalgebra generated by S: the span of iterated modes applied to the vacuum.
Subspace generate_subalgebra(const AlgebraStructure &alg, const std::vector<VectorQ> &S);
// {v : v_n U in U for all n}.
Subspace stabilizer(const AlgebraStructure &alg, const Subspace &U);
// {v : Y(v, x) w = e^{xD} Y(w, -x) v for all w in S}.
Subspace localizer(const AlgebraStructure &alg, const std::vector<VectorQ> &S);
// u_n a in span for all u, a in the subspace and all n.
bool is_subalgebra(const AlgebraStructure &alg, const Subspace &U);

} // namespace vtx
