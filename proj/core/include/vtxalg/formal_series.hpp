#pragma once

#include "vtxalg/linalg.hpp"

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vtx {

inline constexpr std::size_t kMaxVars = 6;

// Exponent tuple; slots past the owning distribution's variable count are 0.
using Exponent = std::array<int, kMaxVars>;

struct Interval {
    int lo = 0, hi = 0;
    friend bool operator==(const Interval &, const Interval &) = default;
};

// Finite observation box: one closed exponent interval per named variable.
class Window {
public:
    Window() = default;
    Window(std::vector<std::string> vars, std::vector<Interval> ranges);

    static Window cube(std::vector<std::string> vars, int lo = -12, int hi = 12);

    std::size_t size() const { return vars_.size(); }
    const std::vector<std::string> &vars() const { return vars_; }
    const std::vector<Interval> &ranges() const { return ranges_; }
    const Interval &range(std::size_t i) const { return ranges_[i]; }
    std::optional<std::size_t> index_of(const std::string &var) const;
    const Interval &range(const std::string &var) const;

    bool contains(const Exponent &e) const;
    // Same variables, possibly in another order; every interval inside ours.
    bool covers(const Window &other) const;
    Window intersect(const Window &other) const;

    friend bool operator==(const Window &, const Window &) = default;

private:
    std::vector<std::string> vars_;
    std::vector<Interval> ranges_;
};

// Iterated-series space a distribution lives in, innermost variable first.
// Example: U((x1))((x2)) is {(x1, lower_bounded), (x2, lower_bounded)}.
struct RegionTag {
    enum class Kind { polynomial, lower_bounded, unrestricted };
    std::vector<std::pair<std::string, Kind>> entries;

    RegionTag joined(const RegionTag &other) const;
    RegionTag without(const std::string &var) const;
    friend bool operator==(const RegionTag &, const RegionTag &) = default;
};

// Per-variable support bounds; nullopt means unbounded in that direction.
struct Support {
    std::vector<std::optional<int>> lo, hi;
    friend bool operator==(const Support &, const Support &) = default;
};

// Multi-variable formal series with VectorQ coefficients, stored exactly on a
// window. Coefficients outside the window are known only when the support
// bounds force them to vanish.
class Distribution {
public:
    using Terms = std::map<Exponent, VectorQ>;

    Distribution() = default;
    Distribution(Window window, std::size_t dim, Support support, RegionTag region,
                 Terms terms = {});

    // Laurent polynomial with support equal to the bounding box of its terms.
    static Distribution finite(std::vector<std::string> vars, std::size_t dim, Terms terms);
    static Distribution zero(Window window, std::size_t dim);
    static Distribution monomial(std::vector<std::string> vars, const std::vector<int> &exps,
                                 VectorQ coeff);

    const Window &window() const { return window_; }
    const std::vector<std::string> &vars() const { return window_.vars(); }
    std::size_t nvars() const { return window_.size(); }
    std::size_t dim() const { return dim_; }
    const Support &support() const { return support_; }
    const RegionTag &region() const { return region_; }
    const Terms &terms() const { return terms_; }

    bool bounded() const;
    // Support bounded on both sides and contained in the window: truncation
    // to the window loses nothing.
    bool exact_complete() const;
    // Box of exponents whose coefficient is determined (stored or forced 0).
    std::pair<long, long> known(std::size_t var) const;

    friend bool operator==(const Distribution &, const Distribution &) = default;

private:
    Window window_;
    std::size_t dim_ = 1;
    Support support_;
    RegionTag region_;
    Terms terms_;
};

// Bilinear coefficient product used by mul; the default multiplies a scalar
// (dimension 1) into a vector of any dimension.
struct CoefficientProduct {
    std::size_t out_dim = 0; // 0: infer from the scalar rule
    std::function<void(VectorQ &acc, const VectorQ &a, const VectorQ &b)> accumulate;

    // Coefficients are flattened row-major n x n matrices.
    static CoefficientProduct matrix(std::size_t n);
    // a is a flattened n x n matrix, b a vector of length n.
    static CoefficientProduct matrix_vector(std::size_t n);
};

VectorQ coeff(const Distribution &d, const std::vector<int> &e);

// (lead*a + sign*b)^n expanded in nonnegative powers of b, truncated to w.
Distribution binom_expand(int n, const std::string &a, const std::string &b, int sign,
                          const Window &w, int lead = 1);

// delta(x) = sum_n x^n observed on w.
Distribution delta(const std::string &var, const Window &w);

enum class DeltaSide { left, right };
// left:  x0^-1 d((x1-x2)/x0) - x0^-1 d((x2-x1)/(-x0))
// right: x2^-1 d((x1-x0)/x2)
Distribution delta_three_term(DeltaSide side, const Window &w);
// The individual three-variable delta terms.
Distribution delta_x0_x1_minus_x2(const Window &w);      // x0^-1 d((x1-x2)/x0)
Distribution delta_x0_x2_minus_x1(const Window &w);      // x0^-1 d((x2-x1)/(-x0))
Distribution delta_x2_x1_minus_x0(const Window &w);      // x2^-1 d((x1-x0)/x2)

Distribution add(const Distribution &a, const Distribution &b);
Distribution sub(const Distribution &a, const Distribution &b);
Distribution scale(const Distribution &a, const Rational &s);
Distribution restrict(const Distribution &a, const Window &w);
// Applies a linear map to every coefficient.
Distribution map_coefficients(const Distribution &a, std::size_t out_dim,
                              const std::function<VectorQ(const VectorQ &)> &f);

// Throws NonSummableProduct unless the support descriptors certify that every
// target coefficient is a finite sum. The result window is w shrunk to where
// all contributions are known.
Distribution mul(const Distribution &a, const Distribution &b, const Window &w,
                 const CoefficientProduct &product = {});

Distribution residue(const Distribution &d, const std::string &var);

// Substitutes var = a + b, expanding in nonnegative powers of b. a and b must
// be fresh variables; w gives their observation ranges.
Distribution taylor_shift(const Distribution &d, const std::string &var, const std::string &a,
                          const std::string &b, const Window &w);

Distribution derivative(const Distribution &d, const std::string &var);

struct Comparison {
    enum class Verdict { Equal, Differs, InconclusiveWindow };
    Verdict verdict = Verdict::Equal;
    // Equal and both supports certified inside the window.
    bool exact_complete = false;
    std::vector<int> witness; // exponent in the window's variable order
    VectorQ lhs, rhs;

    bool equal() const { return verdict == Verdict::Equal; }
};

// Compares on w. InconclusiveWindow means w is not fully observed by both
// operands; matching coefficients otherwise give Equal, with exact_complete
// telling whether the match is a proof or only window-sound.
Comparison window_equal(const Distribution &a, const Distribution &b, const Window &w);
// Compares on the hull of both windows, clipped to where both are known.
Comparison window_equal(const Distribution &a, const Distribution &b);

std::string to_string(Comparison::Verdict v);

} // namespace vtx
