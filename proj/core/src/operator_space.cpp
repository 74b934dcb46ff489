#include "vtxalg/operator_space.hpp"

#include "vtxalg/errors.hpp"

#include <algorithm>
#include <deque>

namespace vtx {

// ---------------------------------------------------------------- VertexOperator

VertexOperator VertexOperator::polynomial(std::size_t dim, std::map<int, Matrix> coeffs)
{
    VertexOperator op;
    op.dim_ = dim;
    for (auto &[e, m] : coeffs) {
        if (m.rows() != dim || m.cols() != dim)
            throw MalformedStructure("operator coefficient has the wrong shape");
        if (!m.is_zero())
            op.terms_.emplace(e, std::move(m));
    }
    return op;
}

VertexOperator VertexOperator::identity(std::size_t dim)
{
    return polynomial(dim, {{0, Matrix::identity(dim)}});
}

VertexOperator VertexOperator::oracle(std::size_t dim, int lowest, std::optional<int> highest,
                                      std::function<Matrix(int)> coefficient)
{
    VertexOperator op;
    op.dim_ = dim;
    op.oracle_ = std::make_shared<Oracle>();
    op.oracle_->lowest = lowest;
    op.oracle_->highest = highest;
    op.oracle_->fn = std::move(coefficient);
    return op;
}

Matrix VertexOperator::coefficient(int e) const
{
    if (!oracle_) {
        auto it = terms_.find(e);
        return it == terms_.end() ? Matrix(dim_, dim_) : it->second;
    }
    if (e < oracle_->lowest || (oracle_->highest && e > *oracle_->highest))
        return Matrix(dim_, dim_);
    std::lock_guard lock(oracle_->mu);
    auto it = oracle_->memo.find(e);
    if (it == oracle_->memo.end())
        it = oracle_->memo.emplace(e, oracle_->fn(e)).first;
    return it->second;
}

const std::map<int, Matrix> &VertexOperator::terms() const
{
    if (oracle_)
        throw Error("operator is not in polynomial mode");
    return terms_;
}

std::optional<int> VertexOperator::lowest() const
{
    if (oracle_)
        return oracle_->lowest;
    if (terms_.empty())
        return 0;
    return terms_.begin()->first;
}

std::optional<int> VertexOperator::highest() const
{
    if (oracle_)
        return oracle_->highest;
    if (terms_.empty())
        return 0;
    return terms_.rbegin()->first;
}

Distribution VertexOperator::as_distribution(const std::string &var, const Window &w) const
{
    const Interval r = w.range(var);
    Distribution::Terms t;
    auto put = [&](int e, const Matrix &m) {
        if (e < r.lo || e > r.hi || m.is_zero())
            return;
        Exponent x{};
        x[0] = e;
        t.emplace(x, m.data());
    };
    if (!oracle_) {
        for (const auto &[e, m] : terms_)
            put(e, m);
    } else {
        const int hi = oracle_->highest ? std::min(r.hi, *oracle_->highest) : r.hi;
        for (int e = std::max(r.lo, oracle_->lowest); e <= hi; ++e)
            put(e, coefficient(e));
    }
    Support s{{lowest()}, {highest()}};
    RegionTag region{{{var, oracle_ && !oracle_->highest ? RegionTag::Kind::lower_bounded
                                                          : RegionTag::Kind::polynomial}}};
    return Distribution(Window({var}, {r}), dim_ * dim_, std::move(s), std::move(region),
                        std::move(t));
}

Distribution VertexOperator::as_distribution(const std::string &var) const
{
    Distribution::Terms t;
    for (const auto &[e, m] : terms()) {
        Exponent x{};
        x[0] = e;
        t.emplace(x, m.data());
    }
    return Distribution::finite({var}, dim_ * dim_, std::move(t));
}

bool operator==(const VertexOperator &a, const VertexOperator &b)
{
    return a.dim_ == b.dim_ && a.terms() == b.terms();
}

VertexOperator module_operator(const ModuleStructure &mod, const VectorQ &u)
{
    const std::size_t d = mod.dim();
    std::map<int, Matrix> c;
    for (std::size_t j = 0; j < d; ++j)
        for (const auto &[n, v] : mod.y.act(u, mod.e(j))) {
            auto it = c.find(-n - 1);
            if (it == c.end())
                it = c.emplace(-n - 1, Matrix(d, d)).first;
            for (std::size_t i = 0; i < d; ++i)
                it->second(i, j) = v[i];
        }
    return VertexOperator::polynomial(d, std::move(c));
}

VertexOperator derivative(const VertexOperator &a)
{
    std::map<int, Matrix> c;
    for (const auto &[e, m] : a.terms())
        if (e != 0)
            c.emplace(e - 1, Rational(e) * m);
    return VertexOperator::polynomial(a.dim(), std::move(c));
}

// ---------------------------------------------------------------- compatibility

OrderResult find_compat_order(const std::vector<VertexOperator> &seq, int bound)
{
    OrderResult res;
    res.bound = bound;
    // Each factor occupies its own variable, so the product is lower truncated
    // in x_i exactly when the i-th factor is; the polynomial (x_i - x_j)^k
    // factors cannot remove that. Hence k = 0 decides the question for
    // operators on a finite-dimensional space.
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i].dim() != seq.front().dim())
            throw NotCompatible("operators act on spaces of different dimension");
        if (!seq[i].lowest()) {
            res.status = OrderResult::Status::NotFoundWithinBound;
            Witness w;
            w.check = "compatibility";
            w.basis = {i};
            w.note = "factor is not lower truncated";
            res.witness = w;
            return res;
        }
        if (!seq[i].is_polynomial())
            res.exact_complete = false;
    }
    return res;
}

namespace {

void require_compatible(const VertexOperator &a, const VertexOperator &b)
{
    if (!find_compat_order({a, b}, 0).found())
        throw NotCompatible("pair is not compatible");
}

void require_polynomial(const VertexOperator &a)
{
    if (!a.is_polynomial())
        throw Error("exact nth products need polynomial operators; use nth_product_window");
}

// (x1 - x)^k a(x1) b(x) as (r, s) -> matrix, with a applied after b.
std::map<std::pair<int, int>, Matrix> product_terms(const VertexOperator &a,
                                                    const VertexOperator &b, int k, bool swapped)
{
    std::map<std::pair<int, int>, Matrix> out;
    for (const auto &[r, A] : a.terms())
        for (const auto &[s, B] : b.terms()) {
            const Matrix M = swapped ? B * A : A * B;
            if (M.is_zero())
                continue;
            for (int i = 0; i <= k; ++i) {
                Rational c = binomial(k, i);
                if (i % 2)
                    c = -c;
                auto key = std::make_pair(r + k - i, s + i);
                auto it = out.find(key);
                if (it == out.end())
                    out.emplace(key, c * M);
                else
                    it->second = it->second + c * M;
            }
        }
    return out;
}

// Res_{x1} (x1 - x)^m P (when first) minus Res_{x1} (-x + x1)^m P (when second).
void accumulate_residue(std::map<int, Matrix> &acc, const std::map<std::pair<int, int>, Matrix> &P,
                        int m, bool first, bool second, std::size_t dim)
{
    auto add = [&](int e, const Rational &c, const Matrix &M) {
        auto it = acc.find(e);
        if (it == acc.end())
            it = acc.emplace(e, Matrix(dim, dim)).first;
        it->second = it->second + c * M;
    };
    for (const auto &[rs, M] : P) {
        const int r = rs.first, s = rs.second;
        const int j = -1 - r;
        const Rational sign = ((m - j) % 2 != 0) ? -1 : 1;
        if (first && j <= m)
            add(m - j + s, binomial(m, m - j) * sign, M);
        if (second && j >= 0)
            add(m - j + s, -binomial(m, j) * sign, M);
    }
}

} // namespace

Distribution truncated_T(const VertexOperator &a, const VertexOperator &b, int k, const Window &w)
{
    require_compatible(a, b);
    if (k < 0)
        throw NotCompatible("negative compatibility order");
    const std::string x = w.vars().at(0), y = w.vars().at(1);
    const std::size_t d = a.dim();
    Distribution ab = mul(a.as_distribution(x, w), b.as_distribution(y, w), w,
                          CoefficientProduct::matrix(d));
    Distribution p = mul(binom_expand(k, x, y, -1, w), ab, w);
    return mul(binom_expand(-k, y, x, 1, w, -1), p, w);
}

VertexOperator nth_product(const VertexOperator &a, const VertexOperator &b, int n)
{
    require_polynomial(a);
    require_polynomial(b);
    auto compat = find_compat_order({a, b}, 0);
    if (!compat.found())
        throw NotCompatible("pair is not compatible");
    const int k = compat.order;
    std::map<int, Matrix> acc;
    accumulate_residue(acc, product_terms(a, b, k, false), n - k, true, true, a.dim());
    return VertexOperator::polynomial(a.dim(), std::move(acc));
}

VertexOperator nth_product_local(const VertexOperator &a, const VertexOperator &b, int n)
{
    require_polynomial(a);
    require_polynomial(b);
    std::map<int, Matrix> acc;
    accumulate_residue(acc, product_terms(a, b, 0, false), n, true, false, a.dim());
    accumulate_residue(acc, product_terms(a, b, 0, true), n, false, true, a.dim());
    return VertexOperator::polynomial(a.dim(), std::move(acc));
}

Distribution nth_product_window(const VertexOperator &a, const VertexOperator &b, int n,
                                const Window &w)
{
    auto compat = find_compat_order({a, b}, 0);
    if (!compat.found())
        throw NotCompatible("pair is not compatible");
    const std::size_t d = a.dim();
    const Window wt({"x1", "x"}, {w.range("x1"), w.range("x")});
    Distribution ab = mul(a.as_distribution("x1", wt), b.as_distribution("x", wt), wt,
                          CoefficientProduct::matrix(d));
    Distribution first = mul(binom_expand(n, "x1", "x", -1, wt), ab, wt);
    Distribution T = truncated_T(a, b, compat.order, wt);
    Distribution second = mul(binom_expand(n, "x", "x1", 1, wt, -1), T, wt);
    return residue(sub(first, second), "x1");
}

// ---------------------------------------------------------------- associativity

CheckReport check_prop_assoc(const VertexOperator &a, const VertexOperator &b, const VectorQ &w,
                             int bound)
{
    require_polynomial(a);
    require_polynomial(b);
    require_compatible(a, b);
    const std::size_t d = a.dim();
    const std::vector<std::string> vars{"x0", "x2"};

    // b(x2) w
    Distribution::Terms bw_terms;
    for (const auto &[e, B] : b.terms()) {
        VectorQ v = B.apply(w);
        if (is_zero(v))
            continue;
        Exponent x{};
        x[0] = e;
        bw_terms.emplace(x, std::move(v));
    }
    const Distribution bw = Distribution::finite({"x2"}, d, bw_terms);
    const int amin = *a.lowest(), amax = *a.highest();
    int spread = std::max({std::abs(amin), std::abs(amax), 1});
    for (const auto &[e, c] : bw.terms())
        spread = std::max(spread, std::abs(e[0]));
    const bool nonneg = amin >= 0;

    CheckReport rep;
    for (int l = 0; l <= bound; ++l) {
        // (x0 + x2)^l a(x0 + x2) = sum_e A_e (x0 + x2)^{l + e}; lower truncated in x0
        // only when every l + e is nonnegative.
        if (l + amin < 0)
            continue;
        const int R = std::max(12, 2 * spread + l + 4);
        const Window W = default_window(vars, R);
        Distribution::Terms lt;
        for (const auto &[e, A] : a.terms()) {
            Distribution shifted = mul(binom_expand(l + e, "x0", "x2", 1, W), bw, W);
            for (const auto &[x, v] : shifted.terms()) {
                auto it = lt.find(x);
                if (it == lt.end())
                    it = lt.emplace(x, zero_vector(d)).first;
                axpy(it->second, Rational(1), A.apply(v));
            }
        }
        std::erase_if(lt, [](const auto &t) { return is_zero(t.second); });
        const Distribution lhs = Distribution::finite(vars, d, std::move(lt));

        // sum_n x0^{-n-1} (a_n b)(x2) w over n in [-1 - R, -1]; a_n b = 0 for n >= 0.
        Distribution::Terms rt;
        int x2lo = 0;
        for (int n = -1 - R; n <= -1; ++n) {
            const VertexOperator p = nth_product(a, b, n);
            for (const auto &[e, M] : p.terms()) {
                VectorQ v = M.apply(w);
                if (is_zero(v))
                    continue;
                Exponent x{};
                x[0] = -n - 1;
                x[1] = e;
                x2lo = std::min(x2lo, e);
                rt.emplace(x, std::move(v));
            }
        }
        Support s;
        s.lo = {0, nonneg ? std::optional<int>(x2lo) : std::nullopt};
        s.hi = {nonneg ? std::optional<int>(amax) : std::nullopt, std::nullopt};
        if (nonneg) {
            s.hi[1] = 0;
            for (const auto &[x, v] : rt)
                s.hi[1] = std::max(*s.hi[1], x[1]);
        }
        Window rw(vars, {{0, R}, {std::min(x2lo, -R), R}});
        Distribution rhs_base(rw, d, s, RegionTag{}, rt);
        Distribution rhs = mul(binom_expand(l, "x2", "x0", 1, W), rhs_base, W);

        auto c = window_equal(lhs, rhs);
        if (c.equal()) {
            rep.order = l;
            rep.exact_complete = c.exact_complete;
            if (!c.exact_complete)
                rep.inconclusive("window-sound only");
            return rep;
        }
        if (c.verdict == Comparison::Verdict::Differs) {
            Witness wit;
            wit.check = "operator-associativity";
            wit.vars = vars;
            wit.exponent = c.witness;
            wit.lhs = c.lhs;
            wit.rhs = c.rhs;
            wit.note = "l = " + std::to_string(l);
            rep.witnesses.push_back(std::move(wit));
        }
    }
    rep.verdict = rep.witnesses.empty() ? Verdict::Inconclusive : Verdict::Fail;
    return rep;
}

// ---------------------------------------------------------------- closure

std::string to_string(ClosureResult::Status s)
{
    switch (s) {
    case ClosureResult::Status::Closed:
        return "Closed";
    case ClosureResult::Status::CapExceeded:
        return "CapExceeded";
    case ClosureResult::Status::IndexRangeExhausted:
        return "IndexRangeExhausted";
    }
    return "?";
}

namespace {

// Row-reduced span of operators keyed by (exponent, matrix entry), tracking
// each row as a combination of the inserted operators.
class OperatorSpan {
public:
    using Key = std::pair<int, std::size_t>;
    using Sparse = std::map<Key, Rational>;
    using Coord = std::map<std::size_t, Rational>;

    static Sparse fingerprint(const VertexOperator &op)
    {
        Sparse f;
        for (const auto &[e, m] : op.terms())
            for (std::size_t i = 0; i < m.data().size(); ++i)
                if (sgn(m.data()[i]) != 0)
                    f.emplace(Key{e, i}, m.data()[i]);
        return f;
    }

    // Coordinates in terms of inserted operators, if op is in the span.
    std::optional<Coord> express(const VertexOperator &op) const
    {
        auto [rem, coord] = reduce(fingerprint(op));
        if (!rem.empty())
            return std::nullopt;
        return coord;
    }

    bool insert(const VertexOperator &op, std::size_t idx)
    {
        auto [rem, coord] = reduce(fingerprint(op));
        if (rem.empty())
            return false;
        // rem = op - sum coord_i op_i
        Coord c;
        for (auto &[i, v] : coord)
            c[i] = -v;
        c[idx] += 1;
        const Rational lead = rem.begin()->second;
        for (auto &[k, v] : rem)
            v /= lead;
        for (auto &[i, v] : c)
            v /= lead;
        const Key pivot = rem.begin()->first;
        for (auto &row : rows_) {
            auto it = row.v.find(pivot);
            if (it == row.v.end())
                continue;
            const Rational f = it->second;
            axpy_sparse(row.v, -f, rem);
            axpy_coord(row.c, -f, c);
        }
        pivots_[pivot] = rows_.size();
        rows_.push_back({std::move(rem), std::move(c)});
        return true;
    }

    std::size_t rank() const { return rows_.size(); }

private:
    struct Row {
        Sparse v;
        Coord c;
    };

    static void axpy_sparse(Sparse &y, const Rational &a, const Sparse &x)
    {
        for (const auto &[k, v] : x) {
            auto &t = y[k];
            t += a * v;
            if (sgn(t) == 0)
                y.erase(k);
        }
    }
    static void axpy_coord(Coord &y, const Rational &a, const Coord &x)
    {
        for (const auto &[k, v] : x) {
            auto &t = y[k];
            t += a * v;
            if (sgn(t) == 0)
                y.erase(k);
        }
    }

    std::pair<Sparse, Coord> reduce(Sparse v) const
    {
        Coord coord;
        for (const auto &[key, idx] : pivots_) {
            auto it = v.find(key);
            if (it == v.end())
                continue;
            const Rational f = it->second;
            axpy_sparse(v, -f, rows_[idx].v);
            axpy_coord(coord, f, rows_[idx].c);
        }
        return {std::move(v), std::move(coord)};
    }

    std::vector<Row> rows_;
    std::map<Key, std::size_t> pivots_;
};

std::pair<int, int> default_n_range(const std::vector<VertexOperator> &S)
{
    if (S.empty())
        return {-1, 0};
    int nmin = 0;
    for (const auto &a : S)
        nmin = std::min(nmin, -1 - *a.highest());
    return {nmin - 2, 0};
}

} // namespace

ClosureResult closure(const std::vector<VertexOperator> &S, std::size_t dim_w,
                      const ClosureOptions &opts)
{
    for (const auto &a : S) {
        require_polynomial(a);
        if (a.dim() != dim_w)
            throw NotCompatible("generator acts on a space of the wrong dimension");
    }
    // Compatibility of all length-2 and length-3 sequences from S and 1_W.
    std::vector<VertexOperator> pool = S;
    pool.push_back(VertexOperator::identity(dim_w));
    for (const auto &a : pool)
        for (const auto &b : pool) {
            if (!find_compat_order({a, b}, 0).found())
                throw NotCompatible("generator pair is not compatible");
            for (const auto &c : pool)
                if (!find_compat_order({a, b, c}, 0).found())
                    throw NotCompatible("generator triple is not compatible");
        }

    ClosureResult cr;
    cr.n_range = opts.n_range.value_or(default_n_range(S));
    auto product = [&](const VertexOperator &a, const VertexOperator &b, int n) {
        return opts.local ? nth_product_local(a, b, n) : nth_product(a, b, n);
    };

    OperatorSpan span;
    cr.basis.push_back(VertexOperator::identity(dim_w));
    cr.depth.push_back(0);
    span.insert(cr.basis.back(), 0);
    std::deque<std::size_t> queue{0};
    bool capped = false;
    while (!queue.empty() && !capped) {
        const std::size_t bi = queue.front();
        queue.pop_front();
        for (const auto &a : S) {
            for (int n = cr.n_range.second; n >= cr.n_range.first && !capped; --n) {
                VertexOperator p = product(a, cr.basis[bi], n);
                if (p.terms().empty() || span.express(p))
                    continue;
                if (cr.basis.size() >= opts.dim_cap) {
                    cr.note = "dimension cap " + std::to_string(opts.dim_cap) + " reached";
                    capped = true;
                    break;
                }
                if (cr.depth[bi] + 1 > opts.depth_cap) {
                    cr.note = "depth cap " + std::to_string(opts.depth_cap) + " reached";
                    capped = true;
                    break;
                }
                span.insert(p, cr.basis.size());
                cr.basis.push_back(std::move(p));
                cr.depth.push_back(cr.depth[bi] + 1);
                queue.push_back(cr.basis.size() - 1);
            }
            if (capped)
                break;
        }
    }
    if (capped) {
        cr.status = ClosureResult::Status::CapExceeded;
        return cr;
    }

    // Products outside the enumerated index range must vanish. For a generator
    // without negative powers they vanish below -1 - deg a; with negative
    // powers a nonzero product just below the range proves the range short.
    for (const auto &a : S) {
        std::vector<int> probe;
        const int floor_n = -1 - *a.highest();
        if (*a.lowest() >= 0) {
            for (int n = floor_n; n < cr.n_range.first; ++n)
                probe.push_back(n);
        } else {
            probe.push_back(cr.n_range.first - 1);
        }
        for (int n = cr.n_range.second + 1; n < 0; ++n)
            probe.push_back(n);
        for (int n : probe)
            for (const auto &b : cr.basis)
                if (!product(a, b, n).terms().empty()) {
                    cr.status = ClosureResult::Status::IndexRangeExhausted;
                    cr.note = "nonzero product at n = " + std::to_string(n) +
                              " outside the enumerated range";
                    return cr;
                }
    }

    // Structure constants of the closed span.
    AlgebraStructure alg;
    const std::size_t d = cr.basis.size();
    for (std::size_t i = 0; i < d; ++i)
        alg.basis.push_back("b" + std::to_string(i));
    alg.vacuum = 0;
    alg.y = ActionTable(d, d);
    bool complete = true;
    for (std::size_t i = 0; i < d && complete; ++i) {
        const auto &bi = cr.basis[i];
        const bool exact_range = *bi.lowest() >= 0;
        const int lo = exact_range ? -1 - *bi.highest() : cr.n_range.first;
        for (std::size_t j = 0; j < d && complete; ++j)
            for (int n = lo; n <= -1; ++n) {
                VertexOperator p = product(bi, cr.basis[j], n);
                if (p.terms().empty())
                    continue;
                auto coord = span.express(p);
                if (!coord) {
                    complete = false;
                    cr.note = "product of b" + std::to_string(i) + " and b" + std::to_string(j) +
                              " at n = " + std::to_string(n) + " leaves the span";
                    break;
                }
                VectorQ v = zero_vector(d);
                for (const auto &[k, c] : *coord)
                    v[k] = c;
                alg.y.set(i, j, n, std::move(v));
            }
        if (!exact_range && complete)
            cr.note = "structure read off on the enumerated index range only";
    }
    if (complete)
        cr.structure = std::move(alg);
    return cr;
}

ModuleStructure closure_module(const ClosureResult &cr, std::vector<std::string> w_basis)
{
    if (cr.basis.empty())
        throw Error("empty closure");
    const std::size_t dw = cr.basis.front().dim();
    if (w_basis.size() != dw)
        throw MalformedStructure("module basis does not match the operator dimension");
    ModuleStructure mod;
    mod.basis = std::move(w_basis);
    mod.y = ActionTable(cr.basis.size(), dw);
    for (std::size_t i = 0; i < cr.basis.size(); ++i)
        for (const auto &[e, M] : cr.basis[i].terms())
            for (std::size_t j = 0; j < dw; ++j) {
                VectorQ col = M.column(j);
                if (!is_zero(col))
                    mod.y.set(i, j, -e - 1, std::move(col));
            }
    return mod;
}

CheckReport verify_module_structure(const ClosureResult &cr)
{
    CheckReport rep;
    if (cr.status != ClosureResult::Status::Closed || !cr.structure) {
        rep.inconclusive("closure did not produce a structure");
        return rep;
    }
    std::vector<std::string> names;
    for (std::size_t j = 0; j < cr.basis.front().dim(); ++j)
        names.push_back("w" + std::to_string(j));
    const ModuleStructure mod = closure_module(cr, names);
    rep = check_module(*cr.structure, mod, default_bound(*cr.structure));
    if (!is_faithful(mod)) {
        Witness w;
        w.check = "faithfulness";
        w.note = "closure module is not faithful";
        rep.fail(std::move(w));
    }
    return rep;
}

CheckReport check_product_bridge(const AlgebraStructure &alg, const ModuleStructure &mod)
{
    CheckReport rep;
    std::vector<VertexOperator> ops;
    for (std::size_t u = 0; u < alg.dim(); ++u)
        ops.push_back(module_operator(mod, alg.e(u)));
    for (std::size_t u = 0; u < alg.dim(); ++u)
        for (std::size_t v = 0; v < alg.dim(); ++v) {
            const int lo = std::min(-1 - *ops[u].highest(), alg.y.n_range().value_or(std::pair{0, 0}).first) - 1;
            const int hi = std::max(0, alg.y.n_range().value_or(std::pair{0, 0}).second) + 1;
            for (int n = lo; n <= hi; ++n) {
                VertexOperator lhs = nth_product(ops[u], ops[v], n);
                VertexOperator rhs = module_operator(mod, alg.y.mode(alg.e(u), n, alg.e(v)));
                if (!(lhs == rhs)) {
                    Witness w;
                    w.check = "operator-product";
                    w.basis = {u, v};
                    w.exponent = {n};
                    w.note = "Y_W(u_n v, x) differs from Y_W(u, x)_n Y_W(v, x)";
                    rep.fail(std::move(w));
                }
            }
        }
    return rep;
}

} // namespace vtx
