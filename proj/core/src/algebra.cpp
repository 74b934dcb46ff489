#include "vtxalg/algebra.hpp"

#include "vtxalg/errors.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <memory>
#include <mutex>

namespace vtx {

// ---------------------------------------------------------------- ActionTable

ActionTable::ActionTable(std::size_t src_dim, std::size_t tgt_dim)
    : src_(src_dim), tgt_(tgt_dim), entries_(src_dim * tgt_dim)
{
}

void ActionTable::set(std::size_t i, std::size_t j, int n, VectorQ v)
{
    if (i >= src_ || j >= tgt_)
        throw MalformedStructure("structure entry index out of range");
    if (v.size() != tgt_)
        throw MalformedStructure("structure entry of wrong dimension");
    auto &m = entries_[i * tgt_ + j];
    if (is_zero(v))
        m.erase(n);
    else
        m[n] = std::move(v);
}

void ActionTable::add(std::size_t i, std::size_t j, int n, const VectorQ &v)
{
    if (i >= src_ || j >= tgt_)
        throw MalformedStructure("structure entry index out of range");
    auto &m = entries_[i * tgt_ + j];
    auto it = m.find(n);
    if (it == m.end()) {
        if (!is_zero(v))
            m.emplace(n, v);
        return;
    }
    axpy(it->second, 1, v);
    if (is_zero(it->second))
        m.erase(it);
}

const ActionTable::Modes &ActionTable::entry(std::size_t i, std::size_t j) const
{
    if (i >= src_ || j >= tgt_)
        throw MalformedStructure("structure entry index out of range");
    return entries_[i * tgt_ + j];
}

ActionTable::Modes ActionTable::act(std::size_t i, const VectorQ &w) const
{
    Modes out;
    for (std::size_t j = 0; j < tgt_; ++j) {
        if (sgn(w[j]) == 0)
            continue;
        for (const auto &[n, v] : entry(i, j)) {
            auto it = out.find(n);
            if (it == out.end())
                it = out.emplace(n, zero_vector(tgt_)).first;
            axpy(it->second, w[j], v);
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = is_zero(it->second) ? out.erase(it) : std::next(it);
    return out;
}

ActionTable::Modes ActionTable::act(const VectorQ &u, const VectorQ &w) const
{
    Modes out;
    for (std::size_t i = 0; i < src_; ++i) {
        if (sgn(u[i]) == 0)
            continue;
        for (const auto &[n, v] : act(i, w)) {
            auto it = out.find(n);
            if (it == out.end())
                it = out.emplace(n, zero_vector(tgt_)).first;
            axpy(it->second, u[i], v);
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = is_zero(it->second) ? out.erase(it) : std::next(it);
    return out;
}

VectorQ ActionTable::mode(const VectorQ &u, int n, const VectorQ &w) const
{
    auto m = act(u, w);
    auto it = m.find(n);
    return it == m.end() ? zero_vector(tgt_) : it->second;
}

std::optional<std::pair<int, int>> ActionTable::n_range() const
{
    std::optional<std::pair<int, int>> r;
    for (const auto &m : entries_) {
        if (m.empty())
            continue;
        int lo = m.begin()->first, hi = m.rbegin()->first;
        if (!r)
            r = {lo, hi};
        r->first = std::min(r->first, lo);
        r->second = std::max(r->second, hi);
    }
    return r;
}

std::optional<std::size_t> AlgebraStructure::index_of(const std::string &name) const
{
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == name)
            return i;
    return std::nullopt;
}

// ---------------------------------------------------------------- reports

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Pass:
        return "Pass";
    case Verdict::Fail:
        return "Fail";
    case Verdict::Inconclusive:
        return "Inconclusive";
    }
    return "?";
}

std::string to_string(OrderResult::Status s)
{
    switch (s) {
    case OrderResult::Status::Found:
        return "Found";
    case OrderResult::Status::NotFoundWithinBound:
        return "NotFoundWithinBound";
    case OrderResult::Status::Inconclusive:
        return "Inconclusive";
    }
    return "?";
}

void CheckReport::fail(Witness w)
{
    verdict = Verdict::Fail;
    witnesses.push_back(std::move(w));
}

void CheckReport::inconclusive(std::string why)
{
    if (verdict == Verdict::Pass)
        verdict = Verdict::Inconclusive;
    if (!note.empty())
        note += "; ";
    note += why;
}

void CheckReport::absorb(const CheckReport &other)
{
    if (other.verdict == Verdict::Fail)
        verdict = Verdict::Fail;
    else if (other.verdict == Verdict::Inconclusive && verdict == Verdict::Pass)
        verdict = Verdict::Inconclusive;
    witnesses.insert(witnesses.end(), other.witnesses.begin(), other.witnesses.end());
    exact_complete = exact_complete && other.exact_complete;
    if (other.order)
        order = order ? std::max(*order, *other.order) : *other.order;
    if (!other.note.empty() && note.find(other.note) == std::string::npos)
        note += (note.empty() ? "" : "; ") + other.note;
}

int default_bound(const AlgebraStructure &alg)
{
    auto r = alg.y.n_range();
    if (!r)
        return 4;
    return 2 * (r->second - r->first) + 4;
}

Window default_window(std::vector<std::string> vars, int radius)
{
    return Window::cube(std::move(vars), -radius, radius);
}

namespace {

Witness witness_from(const std::string &check, std::vector<std::size_t> basis, const Comparison &c,
                     const std::vector<std::string> &vars, std::string note = {})
{
    Witness w;
    w.check = check;
    w.basis = std::move(basis);
    w.vars = vars;
    w.exponent = c.witness;
    w.lhs = c.lhs;
    w.rhs = c.rhs;
    w.note = std::move(note);
    return w;
}

int max_abs_exponent(const Distribution &d)
{
    int r = 0;
    for (const auto &[e, c] : d.terms())
        for (std::size_t i = 0; i < d.nvars(); ++i)
            r = std::max(r, std::abs(e[i]));
    return r;
}

Distribution zero_on(const std::vector<std::string> &vars, std::size_t dim)
{
    return Distribution::finite(vars, dim, {});
}

} // namespace

// ---------------------------------------------------------------- fields

Distribution field(const ActionTable &table, const VectorQ &u, const VectorQ &w,
                   const std::string &var)
{
    Distribution::Terms terms;
    for (auto &[n, v] : table.act(u, w)) {
        Exponent e{};
        e[0] = -n - 1;
        terms.emplace(e, v);
    }
    return Distribution::finite({var}, table.tgt_dim(), std::move(terms));
}

Distribution field_product(const std::vector<FieldFactor> &factors, const VectorQ &w)
{
    if (factors.empty())
        throw Error("field_product needs at least one factor");
    std::vector<std::string> vars;
    for (const auto &f : factors)
        vars.push_back(f.var);
    const std::size_t dim = factors.front().table->tgt_dim();
    std::map<Exponent, VectorQ> cur;
    cur.emplace(Exponent{}, w);
    for (std::size_t k = factors.size(); k-- > 0;) {
        const auto &f = factors[k];
        std::map<Exponent, VectorQ> next;
        for (const auto &[e, vec] : cur)
            for (auto &[n, r] : f.table->act(f.u, vec)) {
                Exponent x = e;
                x[k] = -n - 1;
                auto it = next.find(x);
                if (it == next.end())
                    next.emplace(x, r);
                else
                    axpy(it->second, 1, r);
            }
        cur = std::move(next);
    }
    return Distribution::finite(vars, dim, std::move(cur));
}

// ---------------------------------------------------------------- axioms

CheckReport validate_structure(const AlgebraStructure &alg)
{
    const std::size_t n = alg.dim();
    if (n == 0)
        throw MalformedStructure("zero-dimensional algebra");
    if (alg.vacuum >= n)
        throw MalformedStructure("vacuum index out of range");
    if (alg.y.src_dim() != n || alg.y.tgt_dim() != n)
        throw MalformedStructure("structure table does not match the basis");

    CheckReport rep;
    for (std::size_t j = 0; j < n; ++j) {
        const auto &m = alg.y.entry(alg.vacuum, j);
        ActionTable::Modes expect{{-1, alg.e(j)}};
        if (m != expect) {
            Witness w;
            w.check = "vacuum";
            w.basis = {alg.vacuum, j};
            w.vars = {"x"};
            auto it = std::find_if(m.begin(), m.end(), [&](const auto &p) {
                return p.first != -1 || p.second != alg.e(j);
            });
            int nbad = it != m.end() ? it->first : -1;
            w.exponent = {-nbad - 1};
            w.lhs = alg.y.mode(alg.vac(), nbad, alg.e(j));
            w.rhs = nbad == -1 ? alg.e(j) : zero_vector(n);
            w.note = "Y(1,x) must be the identity";
            rep.fail(std::move(w));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto &m = alg.y.entry(i, alg.vacuum);
        for (const auto &[k, v] : m) {
            if (k >= 0) {
                Witness w;
                w.check = "creation";
                w.basis = {i, alg.vacuum};
                w.vars = {"x"};
                w.exponent = {-k - 1};
                w.lhs = v;
                w.rhs = zero_vector(n);
                w.note = "v_n 1 must vanish for n >= 0";
                rep.fail(std::move(w));
            }
        }
        auto it = m.find(-1);
        VectorQ got = it == m.end() ? zero_vector(n) : it->second;
        if (got != alg.e(i)) {
            Witness w;
            w.check = "creation";
            w.basis = {i, alg.vacuum};
            w.vars = {"x"};
            w.exponent = {0};
            w.lhs = got;
            w.rhs = alg.e(i);
            w.note = "v_{-1} 1 must equal v";
            rep.fail(std::move(w));
        }
    }
    return rep;
}

DOperator d_operator(const AlgebraStructure &alg)
{
    std::vector<VectorQ> cols;
    for (std::size_t j = 0; j < alg.dim(); ++j)
        cols.push_back(alg.y.mode(alg.e(j), -2, alg.vac()));
    return {Matrix::from_columns(cols, alg.dim())};
}

Distribution exp_xD(const Matrix &D, const std::string &var)
{
    const std::size_t n = D.rows();
    Distribution::Terms terms;
    Matrix p = Matrix::identity(n);
    for (std::size_t j = 0; j <= n; ++j) {
        if (p.is_zero())
            return Distribution::finite({var}, n * n, std::move(terms));
        Exponent e{};
        e[0] = static_cast<int>(j);
        terms.emplace(e, ((1 / factorial(static_cast<long>(j))) * p).data());
        p = p * D;
    }
    throw NonNilpotentD("D is not nilpotent");
}

Distribution exp_xD(const Matrix &D, const VectorQ &v, const std::string &var)
{
    const std::size_t n = D.rows();
    Distribution::Terms terms;
    VectorQ p = v;
    Rational fact = 1;
    for (std::size_t j = 0; j <= n; ++j) {
        if (is_zero(p))
            return Distribution::finite({var}, n, std::move(terms));
        Exponent e{};
        e[0] = static_cast<int>(j);
        terms.emplace(e, scaled(p, 1 / fact));
        p = D.apply(p);
        fact *= static_cast<long>(j + 1);
    }
    // D^n v != 0 means D is not nilpotent.
    throw NonNilpotentD("D is not nilpotent");
}

CheckReport check_d_bracket(const AlgebraStructure &alg)
{
    const Matrix D = d_operator(alg).matrix;
    const std::size_t n = alg.dim();
    CheckReport rep;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Distribution yij = field(alg.y, alg.e(i), alg.e(j), "x");
            Distribution bracket =
                sub(map_coefficients(yij, n, [&](const VectorQ &c) { return D.apply(c); }),
                    field(alg.y, alg.e(i), D.column(j), "x"));
            Distribution yd = field(alg.y, D.column(i), alg.e(j), "x");
            Distribution dx = derivative(yij, "x");
            auto c1 = window_equal(bracket, yd);
            if (!c1.equal())
                rep.fail(witness_from("D-bracket", {i, j}, c1, {"x"}, "[D,Y(v,x)] vs Y(Dv,x)"));
            auto c2 = window_equal(yd, dx);
            if (!c2.equal())
                rep.fail(witness_from("D-derivative", {i, j}, c2, {"x"}, "Y(Dv,x) vs d/dx Y(v,x)"));
        }
    return rep;
}

CheckReport check_creation_exp(const AlgebraStructure &alg)
{
    const Matrix D = d_operator(alg).matrix;
    CheckReport rep;
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        auto lhs = field(alg.y, alg.e(i), alg.vac(), "x");
        auto rhs = exp_xD(D, alg.e(i), "x");
        auto c = window_equal(lhs, rhs);
        if (!c.equal())
            rep.fail(witness_from("creation-exp", {i}, c, {"x"}, "Y(v,x)1 vs e^{xD}v"));
    }
    return rep;
}

// ---------------------------------------------------------------- weak associativity

OrderResult weak_assoc_order(const AlgebraStructure &alg, const ActionTable &on,
                             const VectorQ &u, const VectorQ &v, const VectorQ &w, int bound)
{
    const std::size_t dim = on.tgt_dim();
    const std::vector<std::string> vars{"x0", "x2"};

    // B_n(x2) = sum_m x2^{-m-1} u_n (v_m w)
    std::map<int, Distribution::Terms> b_terms;
    int spread = 0;
    for (auto &[m, vw] : on.act(v, w)) {
        spread = std::max(spread, std::abs(m) + 1);
        for (auto &[n, r] : on.act(u, vw)) {
            spread = std::max(spread, std::abs(n) + 1);
            Exponent e{};
            e[0] = -m - 1;
            auto &t = b_terms[n];
            auto it = t.find(e);
            if (it == t.end())
                t.emplace(e, r);
            else
                axpy(it->second, 1, r);
        }
    }
    // C(x0, x2) = sum_p x0^{-p-1} Y(u_p v, x2) w
    Distribution::Terms c_terms;
    for (auto &[p, uv] : alg.y.act(u, v)) {
        spread = std::max(spread, std::abs(p) + 1);
        for (auto &[m, r] : on.act(uv, w)) {
            spread = std::max(spread, std::abs(m) + 1);
            Exponent e{};
            e[0] = -p - 1;
            e[1] = -m - 1;
            auto it = c_terms.find(e);
            if (it == c_terms.end())
                c_terms.emplace(e, r);
            else
                axpy(it->second, 1, r);
        }
    }
    const Distribution C = Distribution::finite(vars, dim, c_terms);

    OrderResult res;
    res.bound = bound;
    res.status = OrderResult::Status::Inconclusive;
    for (int l = 0; l <= bound; ++l) {
        const Window W = default_window(vars, std::max(12, l + 2 * spread + 4));
        Distribution lhs = zero_on(vars, dim);
        for (const auto &[n, terms] : b_terms) {
            Distribution bn = Distribution::finite({"x2"}, dim, terms);
            lhs = add(lhs, mul(binom_expand(l - n - 1, "x0", "x2", 1, W), bn, W));
        }
        Distribution rhs = mul(binom_expand(l, "x0", "x2", 1, W), C, W);
        auto c = window_equal(lhs, rhs);
        if (c.equal() && c.exact_complete) {
            res.status = OrderResult::Status::Found;
            res.order = l;
            res.witness.reset();
            return res;
        }
        if (c.verdict == Comparison::Verdict::Differs && c.exact_complete) {
            // Both sides are polynomials here; multiplying their nonzero
            // difference by (x0 + x2) keeps it nonzero, so no larger l works.
            res.status = OrderResult::Status::NotFoundWithinBound;
            res.witness = witness_from("weak-associativity", {}, c, vars,
                                       "l = " + std::to_string(l) + ", refutes every larger l");
            return res;
        }
        if (c.verdict == Comparison::Verdict::Differs && !res.witness)
            res.witness = witness_from("weak-associativity", {}, c, vars,
                                       "l = " + std::to_string(l));
    }
    return res;
}

OrderResult find_weak_assoc_l(const AlgebraStructure &alg, std::size_t u, std::size_t w, int bound)
{
    OrderResult res;
    res.bound = bound;
    for (std::size_t v = 0; v < alg.dim(); ++v) {
        auto r = weak_assoc_order(alg, alg.y, alg.e(u), alg.e(v), alg.e(w), bound);
        if (!r.found()) {
            r.bound = bound;
            if (r.witness)
                r.witness->basis = {u, v, w};
            return r;
        }
        res.order = std::max(res.order, r.order);
    }
    return res;
}

// ---------------------------------------------------------------- locality

OrderResult locality_order(const ActionTable &on, const VectorQ &u, const VectorQ &v,
                           const VectorQ &w, const Rational &q, int bound)
{
    const std::vector<std::string> vars{"x1", "x2"};
    Distribution A = field_product({{&on, u, "x1"}, {&on, v, "x2"}}, w);
    Distribution B = scale(field_product({{&on, v, "x2"}, {&on, u, "x1"}}, w), q);
    const int spread = std::max(max_abs_exponent(A), max_abs_exponent(B));

    OrderResult res;
    res.bound = bound;
    for (int k = 0; k <= bound; ++k) {
        const Window W = default_window(vars, std::max(12, spread + k + 1));
        Distribution p = binom_expand(k, "x1", "x2", -1, W);
        auto c = window_equal(mul(p, A, W), mul(p, B, W));
        if (c.equal() && c.exact_complete) {
            res.order = k;
            return res;
        }
        if (k == 0) {
            if (c.verdict == Comparison::Verdict::Differs)
                res.witness = witness_from("locality", {}, c, vars);
            res.exact_complete = A.exact_complete() && B.exact_complete();
        }
    }
    auto constant = [](const Distribution &d) {
        for (const auto &[e, c] : d.terms())
            if (e[0] != 0 || e[1] != 0)
                return false;
        return true;
    };
    res.constant_witness = constant(A) && constant(B);
    // On Laurent polynomials multiplication by (x1 - x2)^k is injective, so an
    // exact nonzero discrepancy refutes every k, not only those searched.
    res.status = res.exact_complete && res.witness ? OrderResult::Status::NotFoundWithinBound
                                                   : OrderResult::Status::Inconclusive;
    return res;
}

OrderResult find_locality_k(const ActionTable &on, std::size_t u, std::size_t v,
                            const Rational &q, int bound)
{
    OrderResult res;
    res.bound = bound;
    const std::size_t n = on.src_dim();
    for (std::size_t w = 0; w < on.tgt_dim(); ++w) {
        auto r = locality_order(on, unit_vector(n, u), unit_vector(n, v),
                                unit_vector(on.tgt_dim(), w), q, bound);
        if (!r.found()) {
            if (r.witness)
                r.witness->basis = {u, v, w};
            return r;
        }
        res.order = std::max(res.order, r.order);
    }
    return res;
}

OrderResult find_locality_k(const AlgebraStructure &alg, std::size_t u, std::size_t v,
                            const Rational &q, int bound)
{
    return find_locality_k(alg.y, u, v, q, bound);
}

// ---------------------------------------------------------------- skew-symmetry

namespace {

// e^{xD} Y(w, -x) v
Distribution skew_side(const AlgebraStructure &alg, const Matrix &D, const VectorQ &w,
                       const VectorQ &v)
{
    Distribution::Terms terms;
    for (auto &[n, r] : alg.y.act(w, v)) {
        Exponent e{};
        e[0] = -n - 1;
        terms.emplace(e, ((-n - 1) % 2 != 0) ? scaled(r, -1) : r);
    }
    Distribution yneg = Distribution::finite({"x"}, alg.dim(), std::move(terms));
    Distribution ex = exp_xD(D, "x");
    const int radius = std::max(12, max_abs_exponent(yneg) + max_abs_exponent(ex) + 2);
    return mul(ex, yneg, default_window({"x"}, radius),
               CoefficientProduct::matrix_vector(alg.dim()));
}

} // namespace

CheckReport check_skew_symmetry(const AlgebraStructure &alg, std::size_t u, std::size_t v,
                                const Rational &q, int bound)
{
    const Matrix D = d_operator(alg).matrix;
    CheckReport rep;
    Distribution lhs = field(alg.y, alg.e(u), alg.e(v), "x");
    Distribution rhs = scale(skew_side(alg, D, alg.e(v), alg.e(u)), q);
    auto c = window_equal(lhs, rhs);
    if (!c.equal())
        rep.fail(witness_from("skew-symmetry", {u, v}, c, {"x"}, "Y(u,x)v vs q e^{xD}Y(v,-x)u"));

    int k_trunc = 0;
    for (const auto &[n, r] : alg.y.entry(u, v))
        k_trunc = std::max(k_trunc, n + 1);
    auto loc = find_locality_k(alg, u, v, q, bound);
    const int k = loc.found() ? loc.order : k_trunc;
    rep.order = k;
    if (k_trunc > k || k_trunc > bound) {
        Witness w;
        w.check = "truncation";
        w.basis = {u, v};
        w.vars = {"x"};
        w.exponent = {-k_trunc};
        w.lhs = alg.y.mode(alg.e(u), k_trunc - 1, alg.e(v));
        w.rhs = zero_vector(alg.dim());
        w.note = "x^k Y(u,x)v has a negative power for k = " + std::to_string(k);
        rep.fail(std::move(w));
    }
    return rep;
}

// ---------------------------------------------------------------- Jacobi identity

namespace {

struct DeltaKernel {
    Distribution d1, d2, d3;
};

const DeltaKernel &jacobi_deltas(const Window &w)
{
    static std::mutex mu;
    static std::map<std::vector<int>, std::unique_ptr<DeltaKernel>> cache;
    std::vector<int> key;
    for (const auto &v : {"x0", "x1", "x2"}) {
        key.push_back(w.range(v).lo);
        key.push_back(w.range(v).hi);
    }
    std::lock_guard lock(mu);
    auto &slot = cache[key];
    if (!slot)
        slot = std::make_unique<DeltaKernel>(DeltaKernel{
            delta_x0_x1_minus_x2(w), delta_x0_x2_minus_x1(w), delta_x2_x1_minus_x0(w)});
    return *slot;
}

Distribution creation_side(const AlgebraStructure &alg, const ActionTable &on, const VectorQ &u,
                           const VectorQ &v, const VectorQ &w)
{
    // C(x0, x2) = Y(Y(u, x0) v, x2) w
    Distribution::Terms terms;
    for (auto &[p, uv] : alg.y.act(u, v))
        for (auto &[m, r] : on.act(uv, w)) {
            Exponent e{};
            e[0] = -p - 1;
            e[1] = -m - 1;
            auto it = terms.find(e);
            if (it == terms.end())
                terms.emplace(e, r);
            else
                axpy(it->second, 1, r);
        }
    return Distribution::finite({"x0", "x2"}, on.tgt_dim(), std::move(terms));
}

} // namespace

CheckReport jacobi_with_reversed(const AlgebraStructure &alg, const VectorQ &u, const VectorQ &v,
                                 const VectorQ &w, const Distribution &reversed, const Window &win)
{
    const auto &k = jacobi_deltas(win);
    Distribution A = field_product({{&alg.y, u, "x1"}, {&alg.y, v, "x2"}}, w);
    Distribution C = creation_side(alg, alg.y, u, v, w);
    Distribution lhs = sub(mul(k.d1, A, win), mul(k.d2, reversed, win));
    Distribution rhs = mul(k.d3, C, win);
    auto c = window_equal(lhs, rhs);
    CheckReport rep;
    rep.exact_complete = false;
    if (c.verdict == Comparison::Verdict::Differs)
        rep.fail(witness_from("jacobi", {}, c, {"x0", "x1", "x2"}));
    else if (c.verdict == Comparison::Verdict::InconclusiveWindow)
        rep.inconclusive("window too small for the Jacobi comparison");
    return rep;
}

CheckReport check_jacobi_triple(const AlgebraStructure &alg, const VectorQ &u, const VectorQ &v,
                                const VectorQ &w, const Rational &q, const Window &win)
{
    Distribution B = scale(field_product({{&alg.y, v, "x2"}, {&alg.y, u, "x1"}}, w), q);
    return jacobi_with_reversed(alg, u, v, w, B, win);
}

CheckReport check_jacobi(const AlgebraStructure &alg, std::size_t u, std::size_t v,
                         const Rational &q, const Window &win)
{
    CheckReport rep;
    rep.exact_complete = false;
    bool assoc_all = true;
    const int bound = default_bound(alg);
    for (std::size_t w = 0; w < alg.dim(); ++w) {
        auto r = check_jacobi_triple(alg, alg.e(u), alg.e(v), alg.e(w), q, win);
        for (auto &wit : r.witnesses)
            wit.basis = {u, v, w};
        rep.absorb(r);
        if (!weak_assoc_order(alg, alg.y, alg.e(u), alg.e(v), alg.e(w), bound).found())
            assoc_all = false;
    }
    const bool loc = find_locality_k(alg, u, v, q, bound).found();
    const bool predicted = loc && assoc_all;
    if (rep.verdict != Verdict::Inconclusive)
        rep.note = (rep.passed() == predicted) ? "consistent with locality and associativity"
                                               : "INCONSISTENT with locality and associativity";
    return rep;
}

} // namespace vtx
