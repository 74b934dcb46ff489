#include "vtxalg/modules.hpp"

#include "vtxalg/constructions.hpp"
#include "vtxalg/errors.hpp"

#include <algorithm>
#include <deque>

namespace vtx {

ModuleStructure adjoint_module(const AlgebraStructure &alg) { return {alg.basis, alg.y}; }

namespace {

void check_shape(const AlgebraStructure &alg, const ModuleStructure &mod)
{
    if (mod.dim() == 0)
        throw MalformedStructure("zero-dimensional module");
    if (mod.y.src_dim() != alg.dim() || mod.y.tgt_dim() != mod.dim())
        throw MalformedStructure("module action does not match the algebra and module bases");
}

} // namespace

CheckReport check_module(const AlgebraStructure &alg, const ModuleStructure &mod, int bound)
{
    check_shape(alg, mod);
    CheckReport rep;
    for (std::size_t j = 0; j < mod.dim(); ++j) {
        const ActionTable::Modes expect{{-1, mod.e(j)}};
        if (mod.y.entry(alg.vacuum, j) != expect) {
            Witness w;
            w.check = "module-vacuum";
            w.basis = {alg.vacuum, j};
            w.vars = {"x"};
            w.exponent = {0};
            w.lhs = mod.y.mode(alg.vac(), -1, mod.e(j));
            w.rhs = mod.e(j);
            w.note = "Y_W(1, x) must be the identity";
            rep.fail(std::move(w));
        }
    }

    int lmax = 0;
    for (std::size_t u = 0; u < alg.dim(); ++u)
        for (std::size_t w = 0; w < mod.dim(); ++w)
            for (std::size_t v = 0; v < alg.dim(); ++v) {
                auto r = weak_assoc_order(alg, mod.y, alg.e(u), alg.e(v), mod.e(w), bound);
                if (!r.found()) {
                    Witness wit = r.witness.value_or(Witness{});
                    wit.check = "module-associativity";
                    wit.basis = {u, v, w};
                    rep.fail(std::move(wit));
                    continue;
                }
                lmax = std::max(lmax, r.order);
            }
    rep.order = lmax;

    const Matrix D = d_operator(alg).matrix;
    for (std::size_t v = 0; v < alg.dim(); ++v)
        for (std::size_t w = 0; w < mod.dim(); ++w) {
            auto c = window_equal(field(mod.y, D.column(v), mod.e(w), "x"),
                                  derivative(field(mod.y, alg.e(v), mod.e(w), "x"), "x"));
            if (!c.equal()) {
                Witness wit;
                wit.check = "module-derivative";
                wit.basis = {v, w};
                wit.vars = {"x"};
                wit.exponent = c.witness;
                wit.lhs = c.lhs;
                wit.rhs = c.rhs;
                wit.note = "Y_W(Dv, x) vs d/dx Y_W(v, x)";
                rep.fail(std::move(wit));
            }
        }
    return rep;
}

ModuleStructure wn_module(const AlgebraStructure &alg, const ModuleStructure &mod, std::size_t n)
{
    check_shape(alg, mod);
    if (n == 0)
        throw MalformedStructure("matrix size must be positive");
    const std::size_t nw = mod.dim(), nv = alg.dim(), nm = n * n;
    const auto mnames = full_matrix_assoc(n).basis;
    ModuleStructure out;
    for (const auto &w : mod.basis)
        for (std::size_t r = 0; r < n; ++r)
            out.basis.push_back(w + ".r" + std::to_string(r + 1));
    out.y = ActionTable(nv * nm, nw * n);

    // Scalar matrix of each M_n basis element, recovered from its product with the identity.
    auto scalar_matrix = [&](std::size_t m) {
        std::vector<Rational> a(nm);
        if (m == 0) {
            for (std::size_t i = 0; i < n; ++i)
                a[i * n + i] = 1;
            return a;
        }
        std::size_t k = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != n - 1 || j != n - 1)
                    if (++k == m)
                        a[i * n + j] = 1;
        return a;
    };
    for (std::size_t v = 0; v < nv; ++v)
        for (std::size_t m = 0; m < nm; ++m) {
            const auto M = scalar_matrix(m);
            for (std::size_t w = 0; w < nw; ++w)
                for (std::size_t r = 0; r < n; ++r)
                    for (const auto &[k, vw] : mod.y.entry(v, w)) {
                        VectorQ col = zero_vector(nw * n);
                        for (std::size_t i = 0; i < n; ++i) {
                            const Rational &c = M[i * n + r];
                            if (sgn(c) == 0)
                                continue;
                            for (std::size_t x = 0; x < nw; ++x)
                                col[x * n + i] += c * vw[x];
                        }
                        out.y.set(v * nm + m, w * n + r, k, std::move(col));
                    }
        }
    return out;
}

namespace {

ModuleStructure tensor_module_pair(const ModuleStructure &A, const ModuleStructure &B)
{
    const std::size_t sa = A.y.src_dim(), sb = B.y.src_dim();
    const std::size_t ta = A.dim(), tb = B.dim();
    ModuleStructure out;
    for (const auto &a : A.basis)
        for (const auto &b : B.basis)
            out.basis.push_back(a + "." + b);
    out.y = ActionTable(sa * sb, ta * tb);
    for (std::size_t a = 0; a < sa; ++a)
        for (std::size_t b = 0; b < sb; ++b)
            for (std::size_t c = 0; c < ta; ++c)
                for (std::size_t d = 0; d < tb; ++d) {
                    std::map<int, VectorQ> modes;
                    for (const auto &[p, ac] : A.y.entry(a, c))
                        for (const auto &[q, bd] : B.y.entry(b, d)) {
                            auto it = modes.find(p + q + 1);
                            if (it == modes.end())
                                it = modes.emplace(p + q + 1, zero_vector(ta * tb)).first;
                            for (std::size_t i = 0; i < ta; ++i) {
                                if (sgn(ac[i]) == 0)
                                    continue;
                                for (std::size_t j = 0; j < tb; ++j)
                                    it->second[i * tb + j] += ac[i] * bd[j];
                            }
                        }
                    for (auto &[m, v] : modes)
                        out.y.set(a * sb + b, c * tb + d, m, std::move(v));
                }
    return out;
}

} // namespace

ModuleStructure tensor_module(const std::vector<ModuleStructure> &mods)
{
    if (mods.empty())
        throw MalformedStructure("tensor product of no modules");
    ModuleStructure out = mods.front();
    for (std::size_t k = 1; k < mods.size(); ++k)
        out = tensor_module_pair(out, mods[k]);
    return out;
}

CheckReport check_tensor_factors_commute(const std::vector<AlgebraStructure> &algs,
                                         const ModuleStructure &tmod)
{
    // Index of the tensor basis vector with slot f set to a and vacua elsewhere.
    auto embed = [&](std::size_t f, std::size_t a) {
        std::size_t idx = 0;
        for (std::size_t k = 0; k < algs.size(); ++k)
            idx = idx * algs[k].dim() + (k == f ? a : algs[k].vacuum);
        return idx;
    };
    const std::size_t n = tmod.y.src_dim();
    CheckReport rep;
    for (std::size_t f = 0; f < algs.size(); ++f)
        for (std::size_t g = f + 1; g < algs.size(); ++g)
            for (std::size_t a = 0; a < algs[f].dim(); ++a)
                for (std::size_t b = 0; b < algs[g].dim(); ++b) {
                    const VectorQ ea = unit_vector(n, embed(f, a)), eb = unit_vector(n, embed(g, b));
                    for (std::size_t w = 0; w < tmod.dim(); ++w) {
                        auto l = field_product({{&tmod.y, ea, "x1"}, {&tmod.y, eb, "x2"}}, tmod.e(w));
                        auto r = field_product({{&tmod.y, eb, "x2"}, {&tmod.y, ea, "x1"}}, tmod.e(w));
                        auto c = window_equal(l, r);
                        if (!c.equal()) {
                            Witness wit;
                            wit.check = "factor-commutation";
                            wit.basis = {embed(f, a), embed(g, b), w};
                            wit.vars = {"x1", "x2"};
                            wit.exponent = c.witness;
                            wit.lhs = c.lhs;
                            wit.rhs = c.rhs;
                            rep.fail(std::move(wit));
                        }
                    }
                }
    return rep;
}

bool is_faithful(const ModuleStructure &mod)
{
    // Row v lists every coefficient of Y_W(e_v, x) e_j.
    const std::size_t n = mod.y.src_dim();
    std::map<std::pair<std::size_t, int>, std::vector<VectorQ>> cols;
    std::vector<VectorQ> columns;
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t j = 0; j < mod.dim(); ++j)
            for (const auto &[k, r] : mod.y.entry(v, j))
                for (std::size_t c = 0; c < mod.dim(); ++c)
                    if (sgn(r[c]) != 0) {
                        auto &col = cols[{j, k}];
                        if (col.empty())
                            col.assign(mod.dim(), zero_vector(n));
                        col[c][v] = r[c];
                    }
    for (auto &[key, block] : cols)
        for (auto &c : block)
            columns.push_back(std::move(c));
    // Injective iff the coefficient functionals span the dual of V.
    return rank(columns, n) == n;
}

CheckReport check_locality_transfer(const AlgebraStructure &alg, const ModuleStructure &mod,
                                    std::size_t u, std::size_t v, const Rational &q, int bound)
{
    check_shape(alg, mod);
    const auto on_alg = find_locality_k(alg, u, v, q, bound);
    const auto on_mod = find_locality_k(mod.y, u, v, q, bound);
    const bool faithful = is_faithful(mod);
    CheckReport rep;
    auto describe = [](const OrderResult &r) {
        return r.found() ? "Found(" + std::to_string(r.order) + ")" : to_string(r.status);
    };
    rep.note = "algebra " + describe(on_alg) + ", module " + describe(on_mod) +
               (faithful ? ", faithful" : ", not faithful");
    if (on_alg.found()) {
        rep.order = on_alg.order;
        if (!on_mod.found() || on_mod.order > on_alg.order) {
            Witness w = on_mod.witness.value_or(Witness{});
            w.check = "locality-transfer";
            w.note = "algebra order does not carry over to the module";
            rep.fail(std::move(w));
        }
    } else if (!on_alg.witness) {
        rep.inconclusive("algebra locality undecided");
    }
    if (faithful && on_mod.found() && (!on_alg.found() || on_alg.order > on_mod.order)) {
        Witness w = on_alg.witness.value_or(Witness{});
        w.check = "locality-transfer-converse";
        w.note = "module order does not lift to the algebra on a faithful module";
        rep.fail(std::move(w));
    }
    return rep;
}

OrderResult check_product_compatibility(const AlgebraStructure &alg, const ModuleStructure &mod,
                                        const std::vector<std::size_t> &vs, int bound)
{
    check_shape(alg, mod);
    if (vs.size() > kMaxVars)
        throw Error("too many factors for the compatibility check");
    OrderResult res;
    res.bound = bound;
    std::vector<std::string> vars;
    std::vector<FieldFactor> factors;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        vars.push_back("x" + std::to_string(i + 1));
        factors.push_back({&mod.y, alg.e(vs[i]), vars.back()});
    }
    if (vs.empty())
        return res;
    std::vector<Distribution> products;
    int spread = 0;
    for (std::size_t w = 0; w < mod.dim(); ++w) {
        products.push_back(field_product(factors, mod.e(w)));
        for (const auto &[e, c] : products.back().terms())
            for (std::size_t i = 0; i < vs.size(); ++i)
                spread = std::max(spread, std::abs(e[i]));
    }
    for (int k = 0; k <= bound; ++k) {
        const int pairs = static_cast<int>(vs.size() * (vs.size() - 1) / 2);
        const Window W = default_window(vars, spread + pairs * k + 2);
        bool ok = true;
        for (const auto &p : products) {
            Distribution acc = p;
            for (std::size_t i = 0; i < vs.size() && ok; ++i)
                for (std::size_t j = i + 1; j < vs.size(); ++j) {
                    Distribution b = binom_expand(k, vars[i], vars[j], -1, W);
                    std::vector<std::string> wv = acc.vars();
                    std::vector<Interval> wr;
                    for (const auto &v : wv)
                        wr.push_back(W.range(v));
                    acc = mul(acc, b, Window(wv, wr));
                }
            // Lower truncation in every variable, certified by the support.
            for (std::size_t i = 0; i < acc.nvars(); ++i)
                ok = ok && acc.support().lo[i].has_value();
        }
        if (ok) {
            res.order = k;
            return res;
        }
    }
    res.status = OrderResult::Status::Inconclusive;
    return res;
}

Subspace generated_submodule(const AlgebraStructure &alg, const ModuleStructure &mod,
                             const VectorQ &w)
{
    check_shape(alg, mod);
    Subspace U(mod.dim());
    std::deque<VectorQ> queue;
    if (U.insert(w))
        queue.push_back(w);
    while (!queue.empty()) {
        VectorQ b = std::move(queue.front());
        queue.pop_front();
        for (std::size_t i = 0; i < alg.dim(); ++i)
            for (auto &[n, r] : mod.y.act(i, b))
                if (U.insert(r))
                    queue.push_back(std::move(r));
    }
    return U;
}

} // namespace vtx
