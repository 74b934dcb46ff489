#pragma once

#include "vtxalg/modules.hpp"

#include <functional>
#include <memory>
#include <mutex>

namespace vtx {

// End(W)-valued series a(x) = sum_e A_e x^e on a finite-dimensional W.
// Polynomial mode stores finitely many matrices; oracle mode computes
// coefficients on demand from a declared lower exponent bound.
class VertexOperator {
public:
    VertexOperator() = default;

    static VertexOperator polynomial(std::size_t dim, std::map<int, Matrix> coeffs);
    static VertexOperator identity(std::size_t dim);
    static VertexOperator oracle(std::size_t dim, int lowest, std::optional<int> highest,
                                 std::function<Matrix(int)> coefficient);

    std::size_t dim() const { return dim_; }
    bool is_polynomial() const { return !oracle_; }
    // Coefficient of x^e.
    Matrix coefficient(int e) const;
    // a_n, the coefficient of x^{-n-1}.
    Matrix mode(int n) const { return coefficient(-n - 1); }
    // Nonzero terms; polynomial mode only.
    const std::map<int, Matrix> &terms() const;
    std::optional<int> lowest() const;
    std::optional<int> highest() const;

    // Flattened matrix coefficients observed on the range of w for var.
    Distribution as_distribution(const std::string &var, const Window &w) const;
    // Exact distribution; polynomial mode only.
    Distribution as_distribution(const std::string &var) const;

    friend bool operator==(const VertexOperator &a, const VertexOperator &b);

private:
    struct Oracle {
        int lowest;
        std::optional<int> highest;
        std::function<Matrix(int)> fn;
        mutable std::map<int, Matrix> memo;
        mutable std::mutex mu;
    };
    std::size_t dim_ = 0;
    std::map<int, Matrix> terms_;
    std::shared_ptr<Oracle> oracle_;
};

// Y_W(u, x) as an operator on the module.
VertexOperator module_operator(const ModuleStructure &mod, const VectorQ &u);
VertexOperator derivative(const VertexOperator &a);

// Least k with prod_{i<j} (x_i - x_j)^k a_1(x_1) ... a_r(x_r) lower truncated
// in every variable. Exact in polynomial mode, window-sound for oracles.
OrderResult find_compat_order(const std::vector<VertexOperator> &seq, int bound);

// (-y + x)^{-k} ((x - y)^k a(x) b(y)) on variables (x, y).
Distribution truncated_T(const VertexOperator &a, const VertexOperator &b, int k, const Window &w);

// Res_{x1}((x1 - x)^n a(x1) b(x) - (-x + x1)^n T(a(x1) b(x))), exact formula.
VertexOperator nth_product(const VertexOperator &a, const VertexOperator &b, int n);
// Res_{x1}((x1 - x)^n a(x1) b(x) - (-x + x1)^n b(x) a(x1)).
VertexOperator nth_product_local(const VertexOperator &a, const VertexOperator &b, int n);
// The residue definition evaluated with distributions on a window (x1, x).
Distribution nth_product_window(const VertexOperator &a, const VertexOperator &b, int n,
                                const Window &w);

// Finds l with (x0 + x2)^l a(x0 + x2) b(x2) w lower truncated and equal to
// (x2 + x0)^l (Y_E(a, x0) b)(x2) w.
CheckReport check_prop_assoc(const VertexOperator &a, const VertexOperator &b, const VectorQ &w,
                             int bound);

struct ClosureOptions {
    std::optional<std::pair<int, int>> n_range;
    std::size_t dim_cap = 64;
    int depth_cap = 8;
    bool local = false; // use nth_product_local
};

struct ClosureResult {
    enum class Status { Closed, CapExceeded, IndexRangeExhausted };
    Status status = Status::Closed;
    std::vector<VertexOperator> basis;
    std::vector<int> depth;
    std::pair<int, int> n_range{0, 0};
    std::optional<AlgebraStructure> structure;
    std::string note;
};
std::string to_string(ClosureResult::Status s);

ClosureResult closure(const std::vector<VertexOperator> &S, std::size_t dim_w,
                      const ClosureOptions &opts = {});

// The module Y_W(alpha(x), x0) = alpha(x0) over the closed structure.
ModuleStructure closure_module(const ClosureResult &cr, std::vector<std::string> w_basis);
// check_module on that module plus faithfulness.
CheckReport verify_module_structure(const ClosureResult &cr);

// nth_product(Y_W(u, x), Y_W(v, x), n) = Y_W(u_n v, x) for all basis (u, v, n).
CheckReport check_product_bridge(const AlgebraStructure &alg, const ModuleStructure &mod);

} // namespace vtx
