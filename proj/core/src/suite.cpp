#include "vtxalg/suite.hpp"

#include "vtxalg/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>
#include <thread>

namespace vtx {

using json = nlohmann::ordered_json;

std::string to_string(RecordVerdict v)
{
    switch (v) {
    case RecordVerdict::Pass:
        return "Pass";
    case RecordVerdict::Fail:
        return "Fail";
    case RecordVerdict::Inconclusive:
        return "Inconclusive";
    case RecordVerdict::Classified:
        return "Classified";
    }
    return "?";
}

std::size_t SuiteReport::count(RecordVerdict v) const
{
    return static_cast<std::size_t>(std::count_if(records.begin(), records.end(),
                                                  [v](const SuiteRecord &r) { return r.verdict == v; }));
}

namespace {

using Task = std::function<SuiteRecord()>;

RecordVerdict from_verdict(Verdict v)
{
    switch (v) {
    case Verdict::Pass:
        return RecordVerdict::Pass;
    case Verdict::Fail:
        return RecordVerdict::Fail;
    case Verdict::Inconclusive:
        return RecordVerdict::Inconclusive;
    }
    return RecordVerdict::Inconclusive;
}

// Runs the tasks on a small pool; results keep the task order.
std::vector<SuiteRecord> run_tasks(std::vector<Task> tasks, unsigned threads)
{
    std::vector<SuiteRecord> out(tasks.size());
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(tasks.size());
    auto worker = [&] {
        for (std::size_t i; (i = next++) < tasks.size();) {
            const auto t0 = std::chrono::steady_clock::now();
            try {
                out[i] = tasks[i]();
            } catch (...) {
                errors[i] = std::current_exception();
            }
            out[i].seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto &th : pool)
        th.join();
    for (auto &e : errors)
        if (e)
            std::rethrow_exception(e);
    return out;
}

std::string q_text(const Rational &q) { return "q = " + to_string(q); }

class Planner {
public:
    Planner(const AlgebraFile &f, const SuiteOptions &o) : f_(f), alg_(f.algebra), o_(o)
    {
        bound_ = o.bound.value_or(default_bound(alg_));
        if (o.window) {
            radius_ = *o.window;
        } else {
            auto r = alg_.y.n_range().value_or(std::pair{-1, -1});
            radius_ = std::max(6, 2 * (r.second - r.first) + 4);
        }
        if (o.q == "from-cocycle" && !f.cocycle)
            throw ValidationError("--q from-cocycle needs a cocycle section");
        if (o.q != "auto" && o.q != "from-cocycle")
            fixed_q_ = parse_rational(o.q);
    }

    int bound() const { return bound_; }
    int radius() const { return radius_; }

    Rational q(std::size_t u, std::size_t v) const
    {
        if (fixed_q_)
            return *fixed_q_;
        // The cocycle describes the twist only on a twisted algebra; a graded
        // input to the twist is still checked with q = 1 unless asked.
        const bool twisted = f_.rmap && f_.rmap->kind == "cocycle";
        if (f_.cocycle && f_.grading && (twisted || o_.q == "from-cocycle"))
            return commutator_factor(*f_.cocycle, f_.grading->degree[u], f_.grading->degree[v]);
        return 1;
    }

    bool wanted(const std::string &check, const std::vector<std::size_t> &tuple) const
    {
        if (o_.only && *o_.only != check)
            return false;
        if (o_.tuple.empty())
            return true;
        if (o_.tuple.size() != tuple.size())
            return false;
        for (std::size_t i = 0; i < tuple.size(); ++i)
            if (alg_.basis[tuple[i]] != o_.tuple[i])
                return false;
        return true;
    }

    std::vector<std::string> names(const std::vector<std::size_t> &t) const
    {
        std::vector<std::string> n;
        for (auto i : t)
            n.push_back(alg_.basis[i]);
        return n;
    }

    void add(const std::string &check, const std::vector<std::size_t> &tuple,
             std::function<SuiteRecord()> body)
    {
        if (!wanted(check, tuple))
            return;
        tasks_.push_back([this, check, tuple, body = std::move(body)] {
            SuiteRecord r = body();
            r.check = check;
            r.tuple = names(tuple);
            if (r.witness_basis.empty())
                r.witness_basis = alg_.basis;
            return r;
        });
    }

    std::vector<Task> take() { return std::move(tasks_); }

    void axioms()
    {
        add("structure", {}, [this] {
            SuiteRecord r;
            r.identity = "truncation, vacuum and creation axioms";
            fill(r, validate_structure(alg_));
            return r;
        });
        add("d-bracket", {}, [this] {
            SuiteRecord r;
            r.identity = "[D, Y(v, x)] = Y(Dv, x) = d/dx Y(v, x)";
            fill(r, check_d_bracket(alg_));
            return r;
        });
        add("creation-exp", {}, [this] {
            SuiteRecord r;
            r.identity = "Y(v, x)1 = e^{xD} v";
            fill(r, check_creation_exp(alg_));
            return r;
        });
        for (std::size_t u = 0; u < alg_.dim(); ++u)
            for (std::size_t w = 0; w < alg_.dim(); ++w)
                add("weak-associativity", {u, w}, [this, u, w] {
                    SuiteRecord r;
                    r.identity = "weak associativity (x0 + x2)^l Y(u, x0 + x2) Y(v, x2) w = "
                                 "(x0 + x2)^l Y(Y(u, x0) v, x2) w, l taken over all v";
                    fill(r, find_weak_assoc_l(alg_, u, w, bound_), "l");
                    r.note = "strong and weak variants agree: l is the maximum over v";
                    return r;
                });
    }

    void locality()
    {
        for (std::size_t u = 0; u < alg_.dim(); ++u)
            for (std::size_t v = 0; v < alg_.dim(); ++v)
                add("locality", {u, v}, [this, u, v] {
                    SuiteRecord r;
                    r.identity = "q-locality (x1 - x2)^k Y(u, x1) Y(v, x2) = "
                                 "q (x1 - x2)^k Y(v, x2) Y(u, x1)";
                    const Rational q = this->q(u, v);
                    auto res = find_locality_k(alg_, u, v, q, bound_);
                    fill(r, res, "k");
                    if (res.status == OrderResult::Status::NotFoundWithinBound) {
                        r.verdict = RecordVerdict::Classified;
                        r.note = "nonlocal pair";
                        if (res.constant_witness)
                            r.note += ", discrepancy constant in x1 and x2";
                        r.note += ", " + q_text(q);
                    } else {
                        r.note = q_text(q);
                    }
                    return r;
                });
    }

    void skew()
    {
        for (std::size_t u = 0; u < alg_.dim(); ++u)
            for (std::size_t v = 0; v < alg_.dim(); ++v)
                add("skew-symmetry", {u, v}, [this, u, v] {
                    SuiteRecord r;
                    r.identity = "skew-symmetry Y(u, x) v = q e^{xD} Y(v, -x) u, "
                                 "equivalent to q-locality";
                    const Rational q = this->q(u, v);
                    auto rep = check_skew_symmetry(alg_, u, v, q, bound_);
                    auto loc = find_locality_k(alg_, u, v, q, bound_);
                    fill(r, rep, "k");
                    const bool agree = rep.passed() == loc.found();
                    if (rep.verdict == Verdict::Inconclusive ||
                        loc.status == OrderResult::Status::Inconclusive) {
                        r.verdict = RecordVerdict::Inconclusive;
                        r.note = "locality or skew-symmetry undecided";
                    } else if (!agree) {
                        r.verdict = RecordVerdict::Fail;
                        r.note = "skew-symmetry and locality disagree";
                    } else if (!rep.passed()) {
                        r.verdict = RecordVerdict::Classified;
                        r.note = "fails together with locality";
                    } else {
                        r.note = "agrees with locality";
                    }
                    r.note += ", " + q_text(q);
                    return r;
                });
    }

    void jacobi()
    {
        for (std::size_t u = 0; u < alg_.dim(); ++u)
            for (std::size_t v = 0; v < alg_.dim(); ++v)
                add("jacobi", {u, v}, [this, u, v] {
                    SuiteRecord r;
                    r.identity = "q-Jacobi identity, for every basis w";
                    const Rational q = this->q(u, v);
                    auto rep = check_jacobi(alg_, u, v, q, Window::cube({"x0", "x1", "x2"},
                                                                        -radius_, radius_));
                    fill(r, rep);
                    const bool consistent = rep.note.rfind("consistent", 0) == 0;
                    if (rep.verdict == Verdict::Fail && consistent)
                        r.verdict = RecordVerdict::Classified;
                    else if (rep.verdict == Verdict::Pass && !consistent)
                        r.verdict = RecordVerdict::Fail;
                    r.note = rep.note + ", " + q_text(q);
                    return r;
                });
    }

    void modules()
    {
        add_module("adjoint", adjoint_module(alg_));
        if (f_.module)
            add_module("file", *f_.module);
    }

    void jacobi_like()
    {
        auto R = rmap_of(f_);
        if (!R)
            return;
        add("jacobi-like", {}, [this, R = *R] {
            SuiteRecord r;
            r.identity = "Jacobi-like identity with the reversed product composed with R (" +
                         R.kind() + "), on every basis triple";
            fill(r, check_jacobi_like(alg_, R, Window::cube({"x0", "x1", "x2"}, -radius_, radius_),
                                      bound_));
            if (f_.group && !f_.group->group.abelian())
                r.note = "nonabelian group: verdict reported, no expected value";
            return r;
        });
    }

private:
    static void fill(SuiteRecord &r, const CheckReport &rep, const std::string &kind = "l")
    {
        r.verdict = from_verdict(rep.verdict);
        r.witnesses = rep.witnesses;
        r.exact_complete = rep.exact_complete;
        r.note = rep.note;
        if (rep.order)
            r.order = {kind, *rep.order};
    }

    static void fill(SuiteRecord &r, const OrderResult &res, const std::string &kind)
    {
        r.exact_complete = res.exact_complete;
        switch (res.status) {
        case OrderResult::Status::Found:
            r.verdict = RecordVerdict::Pass;
            r.order = {kind, res.order};
            break;
        case OrderResult::Status::NotFoundWithinBound:
            r.verdict = RecordVerdict::Fail;
            break;
        case OrderResult::Status::Inconclusive:
            r.verdict = RecordVerdict::Inconclusive;
            break;
        }
        if (res.witness)
            r.witnesses.push_back(*res.witness);
    }

    void add_module(const std::string &which, ModuleStructure mod)
    {
        auto m = std::make_shared<const ModuleStructure>(std::move(mod));
        const std::string pre = "module-" + which;
        add(pre, {}, [this, m] {
            SuiteRecord r;
            r.identity = "module axioms: truncation, Y_W(1, x) = 1, weak associativity, "
                         "Y_W(Dv, x) = d/dx Y_W(v, x)";
            fill(r, check_module(alg_, *m, bound_));
            r.witness_basis = m->basis;
            return r;
        });
        add(pre + "-faithful", {}, [m] {
            SuiteRecord r;
            r.identity = "v -> Y_W(v, x) is injective";
            r.verdict = RecordVerdict::Classified;
            r.note = is_faithful(*m) ? "faithful" : "not faithful";
            return r;
        });
        add(pre + "-operator-products", {}, [this, m] {
            SuiteRecord r;
            r.identity = "Y_W(u, x)_n Y_W(v, x) = Y_W(u_n v, x)";
            fill(r, check_product_bridge(alg_, *m));
            return r;
        });
        for (std::size_t u = 0; u < alg_.dim(); ++u)
            for (std::size_t v = 0; v < alg_.dim(); ++v)
                add(pre + "-locality-transfer", {u, v}, [this, m, u, v] {
                    SuiteRecord r;
                    r.identity = "locality of the algebra transfers to the module, and back "
                                 "when the module is faithful";
                    const Rational q = this->q(u, v);
                    fill(r, check_locality_transfer(alg_, *m, u, v, q, bound_));
                    r.note += ", " + q_text(q);
                    r.witness_basis = m->basis;
                    return r;
                });
        for (std::size_t u = 0; u < alg_.dim(); ++u)
            for (std::size_t v = 0; v < alg_.dim(); ++v)
                add(pre + "-compatibility", {u, v}, [this, m, u, v] {
                    SuiteRecord r;
                    r.identity = "Y_W(u, x1) Y_W(v, x2) w lower truncated after (x1 - x2)^k";
                    fill(r, check_product_compatibility(alg_, *m, {u, v}, bound_), "k");
                    r.witness_basis = m->basis;
                    return r;
                });
        for (std::size_t j = 0; j < m->dim(); ++j)
            if (!o_.only || *o_.only == pre + "-generation")
                tasks_.push_back([this, m, j, pre] {
                    SuiteRecord r;
                    r.check = pre + "-generation";
                    r.tuple = {m->basis[j]};
                    r.identity = "submodule generated by a basis vector";
                    const auto sub = generated_submodule(alg_, *m, m->e(j));
                    r.verdict = RecordVerdict::Classified;
                    r.note = "generates dimension " + std::to_string(sub.dim()) + " of " +
                             std::to_string(m->dim());
                    r.witness_basis = m->basis;
                    return r;
                });
    }

    const AlgebraFile &f_;
    const AlgebraStructure &alg_;
    const SuiteOptions &o_;
    int bound_ = 0;
    int radius_ = 0;
    std::optional<Rational> fixed_q_;
    std::vector<Task> tasks_;
};

std::vector<std::pair<std::string, std::string>> option_list(const Planner &p,
                                                             const SuiteOptions &o)
{
    std::vector<std::pair<std::string, std::string>> out{
        {"bound", std::to_string(p.bound())},
        {"window", std::to_string(p.radius())},
        {"q", o.q}};
    if (o.only)
        out.emplace_back("only", *o.only);
    if (!o.tuple.empty()) {
        std::string t;
        for (const auto &s : o.tuple)
            t += (t.empty() ? "" : ",") + s;
        out.emplace_back("tuple", t);
    }
    return out;
}

void classify(SuiteReport &rep)
{
    bool any = false, nonlocal = false, undecided = false;
    for (const auto &r : rep.records)
        if (r.check == "locality") {
            any = true;
            nonlocal |= r.verdict == RecordVerdict::Classified;
            undecided |= r.verdict == RecordVerdict::Inconclusive;
        }
    if (any)
        rep.classification.emplace_back("locality",
                                        nonlocal ? "nonlocal" : undecided ? "undecided" : "local");
}

bool pairwise_local(const std::vector<VertexOperator> &S)
{
    // For Laurent polynomial operators (x1 - x2)^k [a(x1), b(x2)] = 0 forces
    // [a(x1), b(x2)] = 0, so locality means every pair of coefficients commutes.
    for (const auto &a : S)
        for (const auto &b : S)
            for (const auto &[e, A] : a.terms())
                for (const auto &[f, B] : b.terms())
                    if (!(A * B == B * A))
                        return false;
    return true;
}

} // namespace

SuiteReport run_suite(const AlgebraFile &target, const std::string &suite, const SuiteOptions &opts)
{
    if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
        throw Error("unknown suite '" + suite + "'");
    if (suite == "closure")
        return run_closure(target, opts);
    Planner plan(target, opts);
    const bool all = suite == "all";
    if (all || suite == "axioms")
        plan.axioms();
    if (all || suite == "locality")
        plan.locality();
    if (all || suite == "skew")
        plan.skew();
    if (all || suite == "jacobi")
        plan.jacobi();
    if (all || suite == "modules")
        plan.modules();
    if (all || suite == "jacobi-like")
        plan.jacobi_like();

    SuiteReport rep;
    rep.target = target.name;
    rep.suite = suite;
    rep.options = option_list(plan, opts);
    rep.records = run_tasks(plan.take(), opts.threads);
    classify(rep);
    if (all && (!opts.only || opts.only->rfind("closure", 0) == 0)) {
        SuiteReport c = run_closure(target, opts);
        for (auto &r : c.records)
            rep.records.push_back(std::move(r));
        rep.closure = std::move(c.closure);
    }
    return rep;
}

SuiteReport run_closure(const AlgebraFile &target, const SuiteOptions &opts)
{
    SuiteReport rep;
    rep.target = target.name;
    rep.suite = "closure";

    OperatorSet S;
    std::vector<std::string> w_basis;
    bool adjoint = false;
    if (target.operators) {
        S = *target.operators;
        for (std::size_t j = 0; j < S.dim; ++j)
            w_basis.push_back("w" + std::to_string(j));
    } else {
        adjoint = true;
        const auto &alg = target.algebra;
        const auto mod = adjoint_module(alg);
        S.dim = alg.dim();
        for (std::size_t i = 0; i < alg.dim(); ++i)
            if (i != alg.vacuum) {
                S.names.push_back("Y(" + alg.basis[i] + ")");
                S.ops.push_back(module_operator(mod, alg.e(i)));
            }
        w_basis = alg.basis;
    }
    ClosureOptions co;
    co.n_range = opts.n_range;
    co.dim_cap = opts.dim_cap;
    co.depth_cap = opts.depth_cap;
    co.local = opts.local_products;
    rep.options = {{"dim-cap", std::to_string(co.dim_cap)},
                   {"depth-cap", std::to_string(co.depth_cap)},
                   {"products", co.local ? "local" : "truncated"},
                   {"generators", adjoint ? "adjoint operators" : "file operators"}};
    if (co.n_range)
        rep.options.emplace_back("n-range", std::to_string(co.n_range->first) + "," +
                                                std::to_string(co.n_range->second));

    auto wanted = [&](const std::string &c) { return !opts.only || *opts.only == c; };
    const ClosureResult cr = closure(S.ops, S.dim, co);

    ClosureSummary sum;
    sum.status = to_string(cr.status);
    sum.dim = cr.basis.size();
    sum.n_range = cr.n_range;
    sum.note = cr.note;

    if (wanted("closure")) {
        SuiteRecord r;
        r.check = "closure";
        r.identity = "span of iterated nth products of the generators and the identity";
        r.verdict = cr.status == ClosureResult::Status::Closed && cr.structure
                        ? RecordVerdict::Pass
                        : RecordVerdict::Inconclusive;
        r.note = sum.status + ", dimension " + std::to_string(sum.dim) +
                 (cr.note.empty() ? "" : ", " + cr.note);
        if (adjoint && r.verdict == RecordVerdict::Pass && sum.dim != target.algebra.dim()) {
            r.verdict = RecordVerdict::Fail;
            r.note += ", adjoint closure should have dimension " +
                      std::to_string(target.algebra.dim());
        }
        rep.records.push_back(std::move(r));
    }

    if (cr.structure) {
        AlgebraFile out;
        out.name = (target.name.empty() ? std::string("closure") : target.name + "-closure");
        out.algebra = *cr.structure;
        out.module = closure_module(cr, w_basis);
        out.operators = S;
        sum.algebra = out;

        if (wanted("closure-structure")) {
            SuiteRecord r;
            r.check = "closure-structure";
            r.identity = "the closed span with nth products satisfies the algebra axioms";
            auto v = validate_structure(*cr.structure);
            r.verdict = from_verdict(v.verdict);
            r.witnesses = v.witnesses;
            r.witness_basis = cr.structure->basis;
            rep.records.push_back(std::move(r));
        }
        if (wanted("closure-module")) {
            SuiteRecord r;
            r.check = "closure-module";
            r.identity = "W is a faithful module over the closed algebra";
            auto v = verify_module_structure(cr);
            r.verdict = from_verdict(v.verdict);
            r.witnesses = v.witnesses;
            r.witness_basis = w_basis;
            r.note = is_faithful(*out.module) ? "faithful" : "not faithful";
            rep.records.push_back(std::move(r));
        }
        if (wanted("closure-compatibility")) {
            SuiteRecord r;
            r.check = "closure-compatibility";
            r.identity = "length-3 sequences of closure operators are compatible";
            bool ok = true;
            for (const auto &a : cr.basis)
                for (const auto &b : cr.basis)
                    ok = ok && find_compat_order({a, b, cr.basis.back()}, 0).found();
            r.verdict = ok ? RecordVerdict::Pass : RecordVerdict::Fail;
            // Compatibility order next to the first index from which every
            // product vanishes; recorded, not interpreted.
            int k = 0, vanish_from = cr.n_range.first;
            for (const auto &a : cr.basis)
                for (const auto &b : cr.basis) {
                    const auto c = find_compat_order({a, b}, 0);
                    k = std::max(k, c.order);
                    for (int n = k - 1; n >= cr.n_range.first; --n)
                        if (!nth_product(a, b, n).terms().empty()) {
                            vanish_from = std::max(vanish_from, n + 1);
                            break;
                        }
                }
            r.note = "compatibility order k = " + std::to_string(k) +
                     ", products vanish from n = " + std::to_string(vanish_from);
            rep.records.push_back(std::move(r));
        }
        if (pairwise_local(S.ops)) {
            if (wanted("closure-local-products") && !co.local) {
                SuiteRecord r;
                r.check = "closure-local-products";
                r.identity = "on a pairwise local set the commutator-style nth products give "
                             "the same closure";
                ClosureOptions lo = co;
                lo.local = true;
                auto cl = closure(S.ops, S.dim, lo);
                const bool same = cl.status == cr.status && cl.basis == cr.basis &&
                                  cl.structure && cl.structure->y == cr.structure->y;
                r.verdict = same ? RecordVerdict::Pass : RecordVerdict::Fail;
                rep.records.push_back(std::move(r));
            }
            if (wanted("closure-jacobi")) {
                SuiteRecord r;
                r.check = "closure-jacobi";
                r.identity = "the algebra generated by a local set satisfies the Jacobi identity "
                             "with q = 1";
                const auto &a = *cr.structure;
                auto rng = a.y.n_range().value_or(std::pair{-1, -1});
                const int R = std::max(6, 2 * (rng.second - rng.first) + 4);
                const Window win = Window::cube({"x0", "x1", "x2"}, -R, R);
                CheckReport all;
                for (std::size_t u = 0; u < a.dim(); ++u)
                    for (std::size_t v = 0; v < a.dim(); ++v)
                        all.absorb(check_jacobi(a, u, v, 1, win));
                r.verdict = from_verdict(all.verdict);
                r.witnesses = all.witnesses;
                r.witness_basis = a.basis;
                r.exact_complete = all.exact_complete;
                rep.records.push_back(std::move(r));
            }
        }
        if (adjoint && wanted("closure-operator-products")) {
            SuiteRecord r;
            r.check = "closure-operator-products";
            r.identity = "Y(u, x)_n Y(v, x) = Y(u_n v, x) on the adjoint module";
            auto v = check_product_bridge(target.algebra, adjoint_module(target.algebra));
            r.verdict = from_verdict(v.verdict);
            r.witnesses = v.witnesses;
            r.witness_basis = target.algebra.basis;
            rep.records.push_back(std::move(r));
        }
    }
    for (auto &r : rep.records)
        if (r.witness_basis.empty())
            r.witness_basis = w_basis;
    rep.closure = std::move(sum);
    return rep;
}

// ---------------------------------------------------------------- emission

namespace {

json witness_json(const Witness &w, const std::vector<std::string> &basis)
{
    auto vec = [&](const VectorQ &v) -> json {
        json o = json::object();
        if (v.size() != basis.size()) {
            json a = json::array();
            for (const auto &x : v)
                a.push_back(to_string(x));
            return a;
        }
        for (std::size_t i = 0; i < v.size(); ++i)
            if (sgn(v[i]) != 0)
                o[basis[i]] = to_string(v[i]);
        return o;
    };
    json j;
    j["check"] = w.check;
    json b = json::array();
    for (auto i : w.basis)
        b.push_back(i);
    j["basis"] = b;
    j["vars"] = w.vars;
    j["exponent"] = w.exponent;
    j["lhs"] = vec(w.lhs);
    j["rhs"] = vec(w.rhs);
    j["note"] = w.note;
    return j;
}

json report_json(const SuiteReport &r, bool timing)
{
    json j;
    j["schema"] = "vtxalg-report/1";
    j["target"] = r.target;
    j["suite"] = r.suite;
    json opts = json::object();
    for (const auto &[k, v] : r.options)
        opts[k] = v;
    j["options"] = opts;
    json recs = json::array();
    for (const auto &rec : r.records) {
        json o;
        o["check"] = rec.check;
        o["identity"] = rec.identity;
        o["tuple"] = rec.tuple;
        o["verdict"] = to_string(rec.verdict);
        o["order"] = rec.order ? json{{"kind", rec.order->first}, {"value", rec.order->second}}
                               : json(nullptr);
        o["exactness"] = rec.exact_complete ? "exact-complete" : "window-sound";
        json ws = json::array();
        for (const auto &w : rec.witnesses)
            ws.push_back(witness_json(w, rec.witness_basis));
        o["witnesses"] = ws;
        o["note"] = rec.note;
        if (timing)
            o["wall_time_ms"] = static_cast<long>(rec.seconds * 1000.0 + 0.5);
        recs.push_back(std::move(o));
    }
    j["records"] = recs;
    json cls = json::object();
    for (const auto &[k, v] : r.classification)
        cls[k] = v;
    j["classification"] = cls;
    if (r.closure) {
        json c;
        c["status"] = r.closure->status;
        c["dim"] = r.closure->dim;
        c["n_range"] = {r.closure->n_range.first, r.closure->n_range.second};
        c["note"] = r.closure->note;
        c["algebra"] = r.closure->algebra ? json::parse(emit_algebra_json(*r.closure->algebra))
                                          : json(nullptr);
        j["closure"] = c;
    }
    j["summary"] = {{"records", r.records.size()},
                    {"pass", r.count(RecordVerdict::Pass)},
                    {"fail", r.count(RecordVerdict::Fail)},
                    {"inconclusive", r.count(RecordVerdict::Inconclusive)},
                    {"classified", r.count(RecordVerdict::Classified)},
                    {"failures", r.count(RecordVerdict::Fail)}};
    return j;
}

std::string join(const std::vector<std::string> &v, const std::string &sep)
{
    std::string s;
    for (const auto &x : v)
        s += (s.empty() ? "" : sep) + x;
    return s;
}

std::string report_text(const SuiteReport &r, bool timing)
{
    std::ostringstream os;
    os << "target " << (r.target.empty() ? "-" : r.target) << ", suite " << r.suite << "\n";
    std::vector<std::string> o;
    for (const auto &[k, v] : r.options)
        o.push_back(k + "=" + v);
    os << "options " << join(o, " ") << "\n\n";
    os << std::left << std::setw(34) << "check" << std::setw(16) << "tuple" << std::setw(14)
       << "verdict" << std::setw(7) << "order"
       << "note\n";
    for (const auto &rec : r.records) {
        std::string order = rec.order ? rec.order->first + "=" + std::to_string(rec.order->second)
                                      : "-";
        std::string note = rec.note;
        if (!rec.exact_complete)
            note += note.empty() ? "window-sound" : " [window-sound]";
        if (timing)
            note += " (" + std::to_string(static_cast<long>(rec.seconds * 1000.0 + 0.5)) + " ms)";
        os << std::left << std::setw(34) << rec.check << std::setw(16)
           << (rec.tuple.empty() ? "-" : "(" + join(rec.tuple, ",") + ")") << std::setw(14)
           << to_string(rec.verdict) << std::setw(7) << order << note << "\n";
        for (const auto &w : rec.witnesses) {
            std::vector<std::string> ex;
            for (std::size_t i = 0; i < w.exponent.size(); ++i)
                ex.push_back((i < w.vars.size() ? w.vars[i] + "^" : std::string()) +
                             std::to_string(w.exponent[i]));
            auto vt = [&](const VectorQ &v) {
                return v.size() == rec.witness_basis.size() ? vector_text(v, rec.witness_basis)
                                                            : std::string("-");
            };
            os << "    witness " << w.check << " at [" << join(ex, " ") << "] lhs " << vt(w.lhs)
               << " rhs " << vt(w.rhs) << (w.note.empty() ? "" : " (" + w.note + ")") << "\n";
        }
    }
    if (r.closure) {
        os << "\nclosure " << r.closure->status << ", dimension " << r.closure->dim
           << ", n in [" << r.closure->n_range.first << ", " << r.closure->n_range.second << "]"
           << (r.closure->note.empty() ? "" : ", " + r.closure->note) << "\n";
    }
    for (const auto &[k, v] : r.classification)
        os << "classification " << k << ": " << v << "\n";
    os << "\nsummary " << r.records.size() << " records, " << r.count(RecordVerdict::Pass)
       << " pass, " << r.count(RecordVerdict::Fail) << " fail, "
       << r.count(RecordVerdict::Inconclusive) << " inconclusive, "
       << r.count(RecordVerdict::Classified) << " classified\n";
    return os.str();
}

} // namespace

std::string emit_report(const SuiteReport &r, ReportFormat fmt, bool timing)
{
    if (fmt == ReportFormat::Json)
        return report_json(r, timing).dump(2) + "\n";
    return report_text(r, timing);
}

std::string emit_reports(const std::vector<SuiteReport> &rs, ReportFormat fmt, bool timing)
{
    if (fmt == ReportFormat::Json) {
        json arr = json::array();
        std::size_t failures = 0;
        for (const auto &r : rs) {
            arr.push_back(report_json(r, timing));
            failures += r.count(RecordVerdict::Fail);
        }
        json j{{"schema", "vtxalg-report-set/1"}, {"reports", arr}, {"failures", failures}};
        return j.dump(2) + "\n";
    }
    std::string out;
    for (const auto &r : rs)
        out += report_text(r, timing) + "\n";
    return out;
}

} // namespace vtx
