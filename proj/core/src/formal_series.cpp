#include "vtxalg/formal_series.hpp"

#include "vtxalg/errors.hpp"

#include <algorithm>
#include <limits>

namespace vtx {

namespace {

constexpr long kInf = std::numeric_limits<long>::max() / 4;

bool inside(const Interval &r, long e) { return r.lo <= e && e <= r.hi; }

// For each variable of d, its slot in the target window.
std::vector<std::size_t> slots_in(const std::vector<std::string> &vars, const Window &target)
{
    std::vector<std::size_t> out;
    out.reserve(vars.size());
    for (const auto &v : vars) {
        auto i = target.index_of(v);
        if (!i)
            throw Error("variable '" + v + "' missing from target window");
        out.push_back(*i);
    }
    return out;
}

Exponent remap(const Exponent &e, const std::vector<std::size_t> &slots)
{
    Exponent r{};
    for (std::size_t i = 0; i < slots.size(); ++i)
        r[slots[i]] = e[i];
    return r;
}

struct VarView {
    std::optional<int> lo, hi; // support
    long klo = -kInf, khi = kInf; // known box
    Interval win{0, 0};
};

VarView view(const Distribution &d, const std::string &var)
{
    VarView v;
    auto i = d.window().index_of(var);
    if (!i) {
        v.lo = 0;
        v.hi = 0;
        return v;
    }
    v.lo = d.support().lo[*i];
    v.hi = d.support().hi[*i];
    std::tie(v.klo, v.khi) = d.known(*i);
    v.win = d.window().range(*i);
    return v;
}

void check_vars(const std::vector<std::string> &vars)
{
    if (vars.size() > kMaxVars)
        throw Error("too many formal variables");
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j])
                throw Error("duplicate formal variable '" + vars[i] + "'");
}

void prune(Distribution::Terms &terms)
{
    for (auto it = terms.begin(); it != terms.end();)
        it = is_zero(it->second) ? terms.erase(it) : std::next(it);
}

std::vector<std::string> union_vars(const Distribution &a, const Distribution &b)
{
    auto vars = a.vars();
    for (const auto &v : b.vars())
        if (std::find(vars.begin(), vars.end(), v) == vars.end())
            vars.push_back(v);
    return vars;
}

} // namespace

// ---------------------------------------------------------------- Window

Window::Window(std::vector<std::string> vars, std::vector<Interval> ranges)
    : vars_(std::move(vars)), ranges_(std::move(ranges))
{
    check_vars(vars_);
    if (vars_.size() != ranges_.size())
        throw Error("window needs one interval per variable");
    for (const auto &r : ranges_)
        if (r.lo > r.hi)
            throw Error("window interval with lo > hi");
}

Window Window::cube(std::vector<std::string> vars, int lo, int hi)
{
    std::vector<Interval> ranges(vars.size(), Interval{lo, hi});
    return Window(std::move(vars), std::move(ranges));
}

std::optional<std::size_t> Window::index_of(const std::string &var) const
{
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == var)
            return i;
    return std::nullopt;
}

const Interval &Window::range(const std::string &var) const
{
    auto i = index_of(var);
    if (!i)
        throw Error("variable '" + var + "' not in window");
    return ranges_[*i];
}

bool Window::contains(const Exponent &e) const
{
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (!inside(ranges_[i], e[i]))
            return false;
    return true;
}

bool Window::covers(const Window &other) const
{
    if (other.size() != size())
        return false;
    for (std::size_t i = 0; i < other.size(); ++i) {
        auto j = index_of(other.vars_[i]);
        if (!j)
            return false;
        if (other.ranges_[i].lo < ranges_[*j].lo || other.ranges_[i].hi > ranges_[*j].hi)
            return false;
    }
    return true;
}

Window Window::intersect(const Window &other) const
{
    std::vector<Interval> r = ranges_;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto j = other.index_of(vars_[i]);
        if (!j)
            throw Error("window intersection over different variables");
        r[i].lo = std::max(r[i].lo, other.ranges_[*j].lo);
        r[i].hi = std::min(r[i].hi, other.ranges_[*j].hi);
        if (r[i].lo > r[i].hi)
            throw WindowTooSmall("empty window intersection in '" + vars_[i] + "'");
    }
    return Window(vars_, r);
}

// ---------------------------------------------------------------- RegionTag

RegionTag RegionTag::joined(const RegionTag &other) const
{
    RegionTag r = *this;
    for (const auto &[var, kind] : other.entries) {
        auto it = std::find_if(r.entries.begin(), r.entries.end(),
                               [&](const auto &e) { return e.first == var; });
        if (it == r.entries.end())
            r.entries.emplace_back(var, kind);
        else
            it->second = std::max(it->second, kind);
    }
    return r;
}

RegionTag RegionTag::without(const std::string &var) const
{
    RegionTag r;
    for (const auto &e : entries)
        if (e.first != var)
            r.entries.push_back(e);
    return r;
}

// ---------------------------------------------------------------- Distribution

Distribution::Distribution(Window window, std::size_t dim, Support support, RegionTag region,
                           Terms terms)
    : window_(std::move(window)), dim_(dim), support_(std::move(support)),
      region_(std::move(region)), terms_(std::move(terms))
{
    const std::size_t n = window_.size();
    if (support_.lo.size() != n || support_.hi.size() != n)
        throw Error("support descriptor does not match the window");
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.size() != dim_)
            throw Error("coefficient of wrong dimension");
        if (is_zero(it->second)) {
            it = terms_.erase(it);
            continue;
        }
        if (!window_.contains(it->first))
            throw ExponentOutsideWindow("stored term outside the window");
        for (std::size_t i = 0; i < n; ++i)
            if ((support_.lo[i] && it->first[i] < *support_.lo[i]) ||
                (support_.hi[i] && it->first[i] > *support_.hi[i]))
                throw Error("stored term violates the support descriptor");
        ++it;
    }
}

Distribution Distribution::finite(std::vector<std::string> vars, std::size_t dim, Terms terms)
{
    check_vars(vars);
    const std::size_t n = vars.size();
    prune(terms);
    std::vector<Interval> box(n, Interval{0, 0});
    bool first = true;
    for (const auto &[e, c] : terms) {
        for (std::size_t i = 0; i < n; ++i) {
            if (first)
                box[i] = {e[i], e[i]};
            box[i].lo = std::min(box[i].lo, e[i]);
            box[i].hi = std::max(box[i].hi, e[i]);
        }
        first = false;
    }
    Support s;
    RegionTag region;
    for (std::size_t i = 0; i < n; ++i) {
        s.lo.push_back(box[i].lo);
        s.hi.push_back(box[i].hi);
        region.entries.emplace_back(vars[i], RegionTag::Kind::polynomial);
    }
    return Distribution(Window(std::move(vars), box), dim, std::move(s), std::move(region),
                        std::move(terms));
}

Distribution Distribution::zero(Window window, std::size_t dim)
{
    Support s;
    RegionTag region;
    for (const auto &v : window.vars()) {
        s.lo.push_back(0);
        s.hi.push_back(0);
        region.entries.emplace_back(v, RegionTag::Kind::polynomial);
    }
    // Support [0,0] may sit outside a window that excludes 0; widen it.
    std::vector<Interval> r = window.ranges();
    for (auto &iv : r) {
        iv.lo = std::min(iv.lo, 0);
        iv.hi = std::max(iv.hi, 0);
    }
    return Distribution(Window(window.vars(), r), dim, std::move(s), std::move(region));
}

Distribution Distribution::monomial(std::vector<std::string> vars, const std::vector<int> &exps,
                                    VectorQ coeff)
{
    if (exps.size() != vars.size())
        throw Error("monomial exponent arity mismatch");
    Exponent e{};
    std::copy(exps.begin(), exps.end(), e.begin());
    const std::size_t dim = coeff.size();
    Terms t;
    t.emplace(e, std::move(coeff));
    auto d = finite(std::move(vars), dim, std::move(t));
    if (d.terms().empty()) {
        std::vector<Interval> box;
        for (int x : exps)
            box.push_back({x, x});
        return zero(Window(d.vars(), box), dim);
    }
    return d;
}

bool Distribution::bounded() const
{
    for (std::size_t i = 0; i < nvars(); ++i)
        if (!support_.lo[i] || !support_.hi[i])
            return false;
    return true;
}

bool Distribution::exact_complete() const
{
    for (std::size_t i = 0; i < nvars(); ++i) {
        const auto &r = window_.range(i);
        if (!support_.lo[i] || !support_.hi[i] || *support_.lo[i] < r.lo || *support_.hi[i] > r.hi)
            return false;
    }
    return true;
}

std::pair<long, long> Distribution::known(std::size_t var) const
{
    const auto &r = window_.range(var);
    long lo = r.lo, hi = r.hi;
    if (support_.lo[var] && *support_.lo[var] >= r.lo)
        lo = -kInf;
    if (support_.hi[var] && *support_.hi[var] <= r.hi)
        hi = kInf;
    return {lo, hi};
}

// ---------------------------------------------------------------- products

CoefficientProduct CoefficientProduct::matrix(std::size_t n)
{
    CoefficientProduct p;
    p.out_dim = n * n;
    p.accumulate = [n](VectorQ &acc, const VectorQ &a, const VectorQ &b) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const Rational &x = a[i * n + k];
                if (sgn(x) == 0)
                    continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (sgn(b[k * n + j]) != 0)
                        acc[i * n + j] += x * b[k * n + j];
            }
    };
    return p;
}

CoefficientProduct CoefficientProduct::matrix_vector(std::size_t n)
{
    CoefficientProduct p;
    p.out_dim = n;
    p.accumulate = [n](VectorQ &acc, const VectorQ &a, const VectorQ &b) {
        for (std::size_t k = 0; k < n; ++k) {
            if (sgn(b[k]) == 0)
                continue;
            for (std::size_t i = 0; i < n; ++i)
                if (sgn(a[i * n + k]) != 0)
                    acc[i] += a[i * n + k] * b[k];
        }
    };
    return p;
}

// ---------------------------------------------------------------- basic ops

VectorQ coeff(const Distribution &d, const std::vector<int> &e)
{
    if (e.size() != d.nvars())
        throw Error("exponent arity mismatch");
    Exponent x{};
    std::copy(e.begin(), e.end(), x.begin());
    if (!d.window().contains(x))
        throw ExponentOutsideWindow("exponent outside the observation window");
    auto it = d.terms().find(x);
    return it == d.terms().end() ? zero_vector(d.dim()) : it->second;
}

Distribution binom_expand(int n, const std::string &a, const std::string &b, int sign,
                          const Window &w, int lead)
{
    if (a == b)
        throw Error("binom_expand needs two distinct variables");
    const Interval ra = w.range(a), rb = w.range(b);
    Distribution::Terms terms;
    const int imax = n >= 0 ? std::min(n, rb.hi) : rb.hi;
    for (int i = std::max(0, rb.lo); i <= imax; ++i) {
        const int ea = n - i;
        if (!inside(ra, ea))
            continue;
        Rational c = binomial(n, i);
        if ((i % 2) && sign < 0)
            c = -c;
        if (((n - i) % 2) && lead < 0)
            c = -c;
        Exponent e{};
        e[0] = ea;
        e[1] = i;
        terms.emplace(e, VectorQ{c});
    }
    using K = RegionTag::Kind;
    Support s;
    s.lo = {n >= 0 ? std::optional<int>(0) : std::nullopt, 0};
    s.hi = {n, n >= 0 ? std::optional<int>(n) : std::nullopt};
    RegionTag region{{{a, K::polynomial}, {b, n >= 0 ? K::polynomial : K::lower_bounded}}};
    return Distribution(Window({a, b}, {ra, rb}), 1, std::move(s), std::move(region),
                        std::move(terms));
}

Distribution delta(const std::string &var, const Window &w)
{
    const Interval r = w.range(var);
    Distribution::Terms terms;
    for (int n = r.lo; n <= r.hi; ++n) {
        Exponent e{};
        e[0] = n;
        terms.emplace(e, VectorQ{Rational(1)});
    }
    Support s{{std::nullopt}, {std::nullopt}};
    RegionTag region{{{var, RegionTag::Kind::unrestricted}}};
    return Distribution(Window({var}, {r}), 1, std::move(s), std::move(region), std::move(terms));
}

namespace {

// z^-1 d((a - b)/(sz*z)) with (a - b)^n expanded in powers of b:
//   sum_n (sz)^-n z^{-n-1} (a - b)^n.
Distribution three_var_delta(const std::string &z, int sz, const std::string &a,
                             const std::string &b, const Window &w)
{
    const Window out({"x0", "x1", "x2"}, {w.range("x0"), w.range("x1"), w.range("x2")});
    const std::size_t iz = *out.index_of(z), ia = *out.index_of(a), ib = *out.index_of(b);
    const Interval rz = out.range(iz);
    Distribution::Terms terms;
    for (int ez = rz.lo; ez <= rz.hi; ++ez) {
        const int n = -ez - 1;
        Distribution piece = binom_expand(n, a, b, -1, out);
        const bool flip = sz < 0 && (n % 2 != 0);
        for (const auto &[e, c] : piece.terms()) {
            Exponent x{};
            x[iz] = ez;
            x[ia] = e[0];
            x[ib] = e[1];
            terms.emplace(x, flip ? VectorQ{-c[0]} : c);
        }
    }
    Support s{{std::nullopt, std::nullopt, std::nullopt}, {std::nullopt, std::nullopt, std::nullopt}};
    s.lo[ib] = 0;
    using K = RegionTag::Kind;
    RegionTag region{{{a, K::polynomial}, {b, K::lower_bounded}, {z, K::unrestricted}}};
    return Distribution(out, 1, std::move(s), std::move(region), std::move(terms));
}

} // namespace

Distribution delta_x0_x1_minus_x2(const Window &w) { return three_var_delta("x0", 1, "x1", "x2", w); }
Distribution delta_x0_x2_minus_x1(const Window &w) { return three_var_delta("x0", -1, "x2", "x1", w); }
Distribution delta_x2_x1_minus_x0(const Window &w) { return three_var_delta("x2", 1, "x1", "x0", w); }

Distribution delta_three_term(DeltaSide side, const Window &w)
{
    if (side == DeltaSide::right)
        return delta_x2_x1_minus_x0(w);
    return sub(delta_x0_x1_minus_x2(w), delta_x0_x2_minus_x1(w));
}

Distribution add(const Distribution &a, const Distribution &b)
{
    if (a.dim() != b.dim())
        throw Error("adding distributions of different coefficient dimension");
    const auto vars = union_vars(a, b);
    std::vector<Interval> ranges;
    Support s;
    for (const auto &v : vars) {
        VarView va = view(a, v), vb = view(b, v);
        long lo = std::max(va.klo, vb.klo), hi = std::min(va.khi, vb.khi);
        const bool in_a = a.window().index_of(v).has_value();
        const bool in_b = b.window().index_of(v).has_value();
        long hlo, hhi;
        if (in_a && in_b) {
            hlo = std::min(va.win.lo, vb.win.lo);
            hhi = std::max(va.win.hi, vb.win.hi);
        } else {
            const Interval &r = in_a ? va.win : vb.win;
            hlo = std::min(r.lo, 0);
            hhi = std::max(r.hi, 0);
        }
        lo = std::max(lo, hlo);
        hi = std::min(hi, hhi);
        if (lo > hi)
            throw WindowTooSmall("sum has no commonly observed exponents in '" + v + "'");
        ranges.push_back({static_cast<int>(lo), static_cast<int>(hi)});
        s.lo.push_back(va.lo && vb.lo ? std::optional<int>(std::min(*va.lo, *vb.lo)) : std::nullopt);
        s.hi.push_back(va.hi && vb.hi ? std::optional<int>(std::max(*va.hi, *vb.hi)) : std::nullopt);
    }
    Window w(vars, ranges);
    const auto sa = slots_in(a.vars(), w), sb = slots_in(b.vars(), w);
    Distribution::Terms terms;
    for (const auto &[e, c] : a.terms()) {
        Exponent x = remap(e, sa);
        if (w.contains(x))
            terms[x] = c;
    }
    for (const auto &[e, c] : b.terms()) {
        Exponent x = remap(e, sb);
        if (!w.contains(x))
            continue;
        auto it = terms.find(x);
        if (it == terms.end())
            terms.emplace(x, c);
        else
            axpy(it->second, 1, c);
    }
    prune(terms);
    return Distribution(std::move(w), a.dim(), std::move(s), a.region().joined(b.region()),
                        std::move(terms));
}

Distribution scale(const Distribution &a, const Rational &s)
{
    Distribution::Terms terms;
    if (sgn(s) != 0)
        for (const auto &[e, c] : a.terms())
            terms.emplace(e, scaled(c, s));
    return Distribution(a.window(), a.dim(), a.support(), a.region(), std::move(terms));
}

Distribution sub(const Distribution &a, const Distribution &b) { return add(a, scale(b, -1)); }

Distribution restrict(const Distribution &a, const Window &w)
{
    if (!(w.size() == a.nvars()))
        throw Error("restrict needs the same variables");
    std::vector<Interval> ranges;
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        const Interval &r = w.range(a.vars()[i]);
        auto [klo, khi] = a.known(i);
        if (r.lo < klo || r.hi > khi)
            throw WindowTooSmall("restriction window exceeds the known region");
        ranges.push_back(r);
    }
    Window out(a.vars(), ranges);
    Distribution::Terms terms;
    for (const auto &[e, c] : a.terms())
        if (out.contains(e))
            terms.emplace(e, c);
    // Keep the support descriptor honest with respect to the smaller window.
    Support s = a.support();
    return Distribution(std::move(out), a.dim(), std::move(s), a.region(), std::move(terms));
}

Distribution map_coefficients(const Distribution &a, std::size_t out_dim,
                              const std::function<VectorQ(const VectorQ &)> &f)
{
    Distribution::Terms terms;
    for (const auto &[e, c] : a.terms()) {
        VectorQ v = f(c);
        if (v.size() != out_dim)
            throw Error("coefficient map produced the wrong dimension");
        if (!is_zero(v))
            terms.emplace(e, std::move(v));
    }
    return Distribution(a.window(), out_dim, a.support(), a.region(), std::move(terms));
}

Distribution mul(const Distribution &a, const Distribution &b, const Window &w,
                 const CoefficientProduct &product)
{
    const auto vars = union_vars(a, b);
    if (vars.size() != w.size())
        throw Error("product window must list exactly the variables of both factors");
    std::vector<Interval> ranges;
    Support s;
    for (std::size_t k = 0; k < w.size(); ++k) {
        const std::string &v = w.vars()[k];
        if (std::find(vars.begin(), vars.end(), v) == vars.end())
            throw Error("product window names unknown variable '" + v + "'");
        VarView A = view(a, v), B = view(b, v);
        const bool finite = (A.lo && A.hi) || (B.lo && B.hi) || (A.lo && B.lo) || (A.hi && B.hi);
        if (!finite)
            throw NonSummableProduct("coefficients in '" + v + "' are infinite sums");

        long vlo = w.range(k).lo, vhi = w.range(k).hi;
        auto need_lo = [&](long bound) { vlo = std::max(vlo, bound); };
        auto need_hi = [&](long bound) { vhi = std::min(vhi, bound); };
        if (!(A.lo && *A.lo >= A.klo))
            B.hi ? need_lo(A.klo + *B.hi) : need_lo(kInf);
        if (!(A.hi && *A.hi <= A.khi))
            B.lo ? need_hi(A.khi + *B.lo) : need_hi(-kInf);
        if (!(B.hi && *B.hi <= B.khi))
            A.lo ? need_hi(B.khi + *A.lo) : need_hi(-kInf);
        if (!(B.lo && *B.lo >= B.klo))
            A.hi ? need_lo(B.klo + *A.hi) : need_lo(kInf);
        if (vlo > vhi)
            throw WindowTooSmall("factors are not observed widely enough in '" + v + "'");
        ranges.push_back({static_cast<int>(vlo), static_cast<int>(vhi)});
        s.lo.push_back(A.lo && B.lo ? std::optional<int>(*A.lo + *B.lo) : std::nullopt);
        s.hi.push_back(A.hi && B.hi ? std::optional<int>(*A.hi + *B.hi) : std::nullopt);
    }
    Window out(w.vars(), ranges);

    CoefficientProduct p = product;
    if (!p.accumulate) {
        if (a.dim() != 1 && b.dim() != 1)
            throw Error("vector-by-vector product needs an explicit coefficient product");
        p.out_dim = std::max(a.dim(), b.dim());
        const bool a_scalar = a.dim() == 1;
        p.accumulate = [a_scalar](VectorQ &acc, const VectorQ &x, const VectorQ &y) {
            if (a_scalar)
                axpy(acc, x[0], y);
            else
                axpy(acc, y[0], x);
        };
    }

    const auto sa = slots_in(a.vars(), out), sb = slots_in(b.vars(), out);
    std::vector<std::pair<Exponent, const VectorQ *>> tb;
    tb.reserve(b.terms().size());
    for (const auto &[e, c] : b.terms())
        tb.emplace_back(remap(e, sb), &c);

    Distribution::Terms terms;
    const std::size_t n = out.size();
    for (const auto &[ea, ca] : a.terms()) {
        const Exponent xa = remap(ea, sa);
        for (const auto &[xb, cb] : tb) {
            Exponent x{};
            for (std::size_t i = 0; i < n; ++i)
                x[i] = xa[i] + xb[i];
            if (!out.contains(x))
                continue;
            auto it = terms.find(x);
            if (it == terms.end())
                it = terms.emplace(x, zero_vector(p.out_dim)).first;
            p.accumulate(it->second, ca, *cb);
        }
    }
    prune(terms);
    return Distribution(std::move(out), p.out_dim, std::move(s), a.region().joined(b.region()),
                        std::move(terms));
}

Distribution residue(const Distribution &d, const std::string &var)
{
    auto k = d.window().index_of(var);
    if (!k)
        throw Error("residue variable '" + var + "' not present");
    auto [klo, khi] = d.known(*k);
    if (-1 < klo || -1 > khi)
        throw ExponentOutsideWindow("exponent -1 of '" + var + "' is not observed");
    std::vector<std::string> vars;
    std::vector<Interval> ranges;
    Support s;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < d.nvars(); ++i) {
        if (i == *k)
            continue;
        keep.push_back(i);
        vars.push_back(d.vars()[i]);
        ranges.push_back(d.window().range(i));
        s.lo.push_back(d.support().lo[i]);
        s.hi.push_back(d.support().hi[i]);
    }
    Distribution::Terms terms;
    for (const auto &[e, c] : d.terms()) {
        if (e[*k] != -1)
            continue;
        Exponent x{};
        for (std::size_t i = 0; i < keep.size(); ++i)
            x[i] = e[keep[i]];
        terms.emplace(x, c);
    }
    return Distribution(Window(vars, ranges), d.dim(), std::move(s), d.region().without(var),
                        std::move(terms));
}

Distribution taylor_shift(const Distribution &d, const std::string &var, const std::string &a,
                          const std::string &b, const Window &w)
{
    auto k = d.window().index_of(var);
    if (!k)
        throw Error("shift variable '" + var + "' not present");
    if (d.window().index_of(a) || d.window().index_of(b) || a == b)
        throw Error("taylor_shift targets must be fresh, distinct variables");
    const auto lo = d.support().lo[*k];
    const auto hi = d.support().hi[*k];
    if (!lo)
        throw NonSummableProduct("substitution into a series unbounded below in '" + var + "'");

    auto [klo, khi] = d.known(*k);
    const Interval wa = w.range(a), wb = w.range(b);
    const long alo = std::max<long>(wa.lo, klo == -kInf ? -kInf : klo - wb.lo);
    const long ahi = std::min<long>(wa.hi, khi == kInf ? kInf : khi - wb.hi);
    if (alo > ahi)
        throw WindowTooSmall("source not observed widely enough for the shift");

    std::vector<std::string> vars;
    std::vector<Interval> ranges;
    Support s;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < d.nvars(); ++i) {
        if (i == *k)
            continue;
        keep.push_back(i);
        vars.push_back(d.vars()[i]);
        ranges.push_back(d.window().range(i));
        s.lo.push_back(d.support().lo[i]);
        s.hi.push_back(d.support().hi[i]);
    }
    const std::size_t ia = vars.size(), ib = ia + 1;
    vars.push_back(a);
    vars.push_back(b);
    ranges.push_back({static_cast<int>(alo), static_cast<int>(ahi)});
    ranges.push_back(wb);
    if (*lo >= 0) {
        s.lo.push_back(0);
        s.hi.push_back(hi);
        s.lo.push_back(0);
        s.hi.push_back(hi);
    } else {
        s.lo.push_back(std::nullopt);
        s.hi.push_back(hi);
        s.lo.push_back(0);
        s.hi.push_back(std::nullopt);
    }
    Window out(vars, ranges);

    Distribution::Terms terms;
    for (const auto &[e, c] : d.terms()) {
        const int m = e[*k];
        const int imax = m >= 0 ? std::min(m, wb.hi) : wb.hi;
        for (int i = std::max(0, wb.lo); i <= imax; ++i) {
            Exponent x{};
            for (std::size_t j = 0; j < keep.size(); ++j)
                x[j] = e[keep[j]];
            x[ia] = m - i;
            x[ib] = i;
            if (!out.contains(x))
                continue;
            auto it = terms.find(x);
            if (it == terms.end())
                it = terms.emplace(x, zero_vector(d.dim())).first;
            axpy(it->second, binomial(m, i), c);
        }
    }
    prune(terms);
    RegionTag region = d.region().without(var);
    const auto kind = *lo >= 0 ? RegionTag::Kind::polynomial : RegionTag::Kind::lower_bounded;
    region.entries.emplace_back(a, RegionTag::Kind::polynomial);
    region.entries.emplace_back(b, kind);
    return Distribution(std::move(out), d.dim(), std::move(s), std::move(region), std::move(terms));
}

Distribution derivative(const Distribution &d, const std::string &var)
{
    auto k = d.window().index_of(var);
    if (!k)
        throw Error("derivative variable '" + var + "' not present");
    std::vector<Interval> ranges = d.window().ranges();
    auto [klo, khi] = d.known(*k);
    // The coefficient at n comes from n+1, so the top row is lost unless the
    // support already stops inside the window; known-zero rows extend the bottom.
    if (khi != kInf) {
        if (ranges[*k].lo == ranges[*k].hi)
            throw WindowTooSmall("window too narrow to differentiate");
        ranges[*k].hi -= 1;
    }
    if (klo == -kInf)
        ranges[*k].lo -= 1;
    Support s = d.support();
    if (s.lo[*k])
        *s.lo[*k] -= 1;
    if (s.hi[*k])
        *s.hi[*k] -= 1;
    Window out(d.vars(), ranges);
    Distribution::Terms terms;
    for (const auto &[e, c] : d.terms()) {
        if (e[*k] == 0)
            continue;
        Exponent x = e;
        x[*k] -= 1;
        if (out.contains(x))
            terms.emplace(x, scaled(c, e[*k]));
    }
    return Distribution(std::move(out), d.dim(), std::move(s), d.region(), std::move(terms));
}

Comparison window_equal(const Distribution &a, const Distribution &b, const Window &w)
{
    Comparison r;
    if (a.dim() != b.dim())
        throw Error("comparing distributions of different coefficient dimension");
    auto observed = [&](const Distribution &d) {
        if (d.nvars() != w.size())
            return false;
        for (std::size_t i = 0; i < w.size(); ++i) {
            auto j = d.window().index_of(w.vars()[i]);
            if (!j)
                return false;
            auto [lo, hi] = d.known(*j);
            if (w.range(i).lo < lo || w.range(i).hi > hi)
                return false;
        }
        return true;
    };
    if (!observed(a) || !observed(b)) {
        r.verdict = Comparison::Verdict::InconclusiveWindow;
        return r;
    }
    // Both supports inside the window: the verdict holds for the full series.
    auto contained = [&](const Distribution &d) {
        for (std::size_t i = 0; i < d.nvars(); ++i) {
            const auto &lo = d.support().lo[i];
            const auto &hi = d.support().hi[i];
            const Interval &rw = w.range(d.vars()[i]);
            if (!lo || !hi || *lo < rw.lo || *hi > rw.hi)
                return false;
        }
        return true;
    };
    r.exact_complete = contained(a) && contained(b);
    const auto sa = slots_in(a.vars(), w), sb = slots_in(b.vars(), w);
    std::map<Exponent, std::pair<const VectorQ *, const VectorQ *>> joint;
    for (const auto &[e, c] : a.terms()) {
        Exponent x = remap(e, sa);
        if (w.contains(x))
            joint[x].first = &c;
    }
    for (const auto &[e, c] : b.terms()) {
        Exponent x = remap(e, sb);
        if (w.contains(x))
            joint[x].second = &c;
    }
    const VectorQ zero = zero_vector(a.dim());
    for (const auto &[x, pair] : joint) {
        const VectorQ &l = pair.first ? *pair.first : zero;
        const VectorQ &rr = pair.second ? *pair.second : zero;
        if (l != rr) {
            r.verdict = Comparison::Verdict::Differs;
            r.witness.assign(x.begin(), x.begin() + static_cast<long>(w.size()));
            r.lhs = l;
            r.rhs = rr;
            return r;
        }
    }
    return r;
}

Comparison window_equal(const Distribution &a, const Distribution &b)
{
    if (a.nvars() != b.nvars())
        throw Error("comparing distributions over different variables");
    std::vector<Interval> ranges;
    for (const auto &v : a.vars()) {
        if (!b.window().index_of(v))
            throw Error("comparing distributions over different variables");
        VarView va = view(a, v), vb = view(b, v);
        long lo = std::max({va.klo, vb.klo, static_cast<long>(std::min(va.win.lo, vb.win.lo))});
        long hi = std::min({va.khi, vb.khi, static_cast<long>(std::max(va.win.hi, vb.win.hi))});
        if (lo > hi) {
            Comparison c;
            c.verdict = Comparison::Verdict::InconclusiveWindow;
            return c;
        }
        ranges.push_back({static_cast<int>(lo), static_cast<int>(hi)});
    }
    return window_equal(a, b, Window(a.vars(), ranges));
}

std::string to_string(Comparison::Verdict v)
{
    switch (v) {
    case Comparison::Verdict::Equal:
        return "Equal";
    case Comparison::Verdict::Differs:
        return "Differs";
    case Comparison::Verdict::InconclusiveWindow:
        return "InconclusiveWindow";
    }
    return "?";
}

} // namespace vtx
