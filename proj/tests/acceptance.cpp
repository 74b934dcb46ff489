// One line per acceptance criterion: "criterion N: PASS|FAIL  summary".

#include "vtxalg/errors.hpp"
#include "vtxalg/suite.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace vtx;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fixture_dir = VTXALG_FIXTURE_DIR;

AlgebraFile load(const std::string &name)
{
    return parse_algebra_file(fixture_dir + "/" + name + ".json");
}

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::vector<std::string> notes;

    void require(bool ok, const std::string &what)
    {
        if (!ok) {
            pass = false;
            notes.push_back("failed: " + what);
        }
    }
};

std::string fmt_seconds(double s)
{
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(3);
    os << s << " s";
    return os.str();
}

bool all_triples_weak_assoc_zero(const AlgebraStructure &alg, int bound)
{
    for (std::size_t u = 0; u < alg.dim(); ++u)
        for (std::size_t v = 0; v < alg.dim(); ++v)
            for (std::size_t w = 0; w < alg.dim(); ++w) {
                auto r = weak_assoc_order(alg, alg.y, alg.e(u), alg.e(v), alg.e(w), bound);
                if (!r.found() || r.order != 0)
                    return false;
            }
    return true;
}

Window jacobi_window(const AlgebraStructure &alg)
{
    auto r = alg.y.n_range().value_or(std::pair{-1, -1});
    const int R = std::max(6, 2 * (r.second - r.first) + 4);
    return Window::cube({"x0", "x1", "x2"}, -R, R);
}

// ---------------------------------------------------------------- criteria

Outcome delta_identity()
{
    Outcome o;
    const auto t0 = Clock::now();
    const Window w = Window::cube({"x0", "x1", "x2"}, -8, 8);
    const Distribution lhs = sub(delta_x0_x1_minus_x2(w), delta_x0_x2_minus_x1(w));
    const Distribution rhs = delta_x2_x1_minus_x0(w);
    std::size_t mismatches = 0, points = 0;
    for (int a = -8; a <= 8; ++a)
        for (int b = -8; b <= 8; ++b)
            for (int c = -8; c <= 8; ++c) {
                ++points;
                Exponent e{};
                e[0] = a;
                e[1] = b;
                e[2] = c;
                auto get = [&](const Distribution &d) {
                    auto it = d.terms().find(e);
                    return it == d.terms().end() ? Rational(0) : it->second[0];
                };
                if (get(lhs) != get(rhs))
                    ++mismatches;
            }
    const double s = seconds_since(t0);
    o.require(mismatches == 0, "coefficient mismatches");
    o.require(lhs.window().covers(w) && rhs.window().covers(w), "window coverage");
    o.require(s < 1.0, "runtime under 1 s");
    o.detail << points << " exponents on [-8,8]^3, " << mismatches << " mismatches, "
             << fmt_seconds(s);
    return o;
}

Outcome jacobi_round_trip()
{
    Outcome o;
    std::size_t total = 0, agree = 0;
    for (const char *name : {"a3", "ut2", "z22_twist", "m2_a3"}) {
        const auto alg = load(name).algebra;
        const int bound = default_bound(alg);
        const Window win = jacobi_window(alg);
        for (const Rational q : {Rational(1), Rational(-1)})
            for (std::size_t u = 0; u < alg.dim(); ++u)
                for (std::size_t v = 0; v < alg.dim(); ++v)
                    for (std::size_t w = 0; w < alg.dim(); ++w) {
                        const auto e = [&](std::size_t i) { return alg.e(i); };
                        auto jac = check_jacobi_triple(alg, e(u), e(v), e(w), q, win);
                        const bool loc = locality_order(alg.y, e(u), e(v), e(w), q, bound).found();
                        const bool assoc =
                            weak_assoc_order(alg, alg.y, e(u), e(v), e(w), bound).found();
                        ++total;
                        if (jac.verdict != Verdict::Inconclusive && jac.passed() == (loc && assoc))
                            ++agree;
                    }
    }
    o.require(agree == total, "Jacobi verdict matches locality and associativity");
    o.detail << agree << "/" << total << " triples agree over A3, UT2, Z22 twist, M(2,A3), q = +-1";
    return o;
}

Outcome a3_suite()
{
    Outcome o;
    const auto t0 = Clock::now();
    auto f = load("a3");
    SuiteReport rep;
    for (const char *s : {"axioms", "locality", "skew", "jacobi"}) {
        auto r = run_suite(f, s);
        rep.records.insert(rep.records.end(), r.records.begin(), r.records.end());
    }
    const double secs = seconds_since(t0);
    bool orders = true;
    for (const auto &r : rep.records)
        if (r.check == "locality" || r.check == "weak-associativity")
            orders = orders && r.order && r.order->second == 0;
    o.require(rep.count(RecordVerdict::Pass) == rep.records.size(), "every record passes");
    o.require(orders, "l = k = 0 on every pair");
    o.require(secs < 5.0, "runtime under 5 s");
    o.detail << rep.records.size() << " records pass (axioms, D-bracket, Y(v,x)1 = e^{xD}v, "
             << "skew-symmetry, Jacobi q = 1), l = k = 0, " << fmt_seconds(secs);
    return o;
}

Outcome ut2_nonlocality()
{
    Outcome o;
    const auto alg = load("ut2").algebra;
    const int bound = default_bound(alg);
    o.require(all_triples_weak_assoc_zero(alg, bound), "weak associativity Found(0)");
    const std::size_t E11 = *alg.index_of("E11"), E12 = *alg.index_of("E12");
    auto loc = find_locality_k(alg, E11, E12, 1, bound);
    o.require(loc.status == OrderResult::Status::NotFoundWithinBound, "(E11,E12) nonlocal");
    o.require(loc.constant_witness, "constant witness");
    o.require(loc.witness && loc.witness->lhs == alg.e(E12) && loc.witness->rhs == zero_vector(3),
              "witness E12 vs 0");
    std::size_t matched = 0;
    for (std::size_t u = 0; u < 3; ++u)
        for (std::size_t v = 0; v < 3; ++v) {
            const bool skew = check_skew_symmetry(alg, u, v, 1, bound).passed();
            const bool local = find_locality_k(alg, u, v, 1, bound).found();
            matched += skew == local;
        }
    o.require(matched == 9, "skew-symmetry matches locality");
    o.detail << "weak associativity Found(0) on 27 triples, (E11,E12) NotFoundWithinBound with "
             << "constant witness E12 vs 0, skew/locality agree on " << matched << "/9 pairs";
    return o;
}

Outcome z22_twist()
{
    Outcome o;
    const auto base = load("z22");
    const auto tw = load("z22_twist");
    bool cocycle_ok = true;
    try {
        validate_cocycle(*base.cocycle);
    } catch (const Error &) {
        cocycle_ok = false;
    }
    o.require(cocycle_ok, "cocycle validation");
    const auto &G = base.cocycle->group;
    const Rational c = commutator_factor(*base.cocycle, G.index({1, 0}), G.index({0, 1}));
    o.require(c == -1, "c((1,0),(0,1)) = -1");

    const auto &alg = tw.algebra;
    const int bound = default_bound(alg);
    bool graded_local = true, plain_fails = false;
    for (std::size_t u = 0; u < alg.dim(); ++u)
        for (std::size_t v = 0; v < alg.dim(); ++v) {
            const Rational q = commutator_factor(*tw.cocycle, tw.grading->degree[u],
                                                 tw.grading->degree[v]);
            auto r = find_locality_k(alg, u, v, q, bound);
            graded_local = graded_local && r.found() && r.order == 0;
            if (q == -1 && !find_locality_k(alg, u, v, 1, bound).found())
                plain_fails = true;
        }
    o.require(graded_local, "q = c(g,h) locality Found(0)");
    o.require(plain_fails, "q = 1 fails on an anti-commuting pair");
    SuiteOptions opt;
    opt.q = "from-cocycle";
    auto jac = run_suite(tw, "jacobi", opt);
    o.require(jac.count(RecordVerdict::Pass) == jac.records.size(), "restricted Jacobi identity");
    o.detail << "cocycle valid, c((1,0),(0,1)) = " << to_string(c)
             << ", q = c locality Found(0) on 16 pairs, q = 1 nonlocal on anti-commuting pairs, "
             << "restricted Jacobi " << jac.count(RecordVerdict::Pass) << "/" << jac.records.size();
    return o;
}

Outcome matrix_tensor()
{
    Outcome o;
    const auto m = load("m2_a3").algebra;
    const auto t = tensor_product({load("a3").algebra, full_matrix_algebra(2)});
    o.require(m.basis == t.basis && m.y == t.y && m.vacuum == t.vacuum, "tables identical");
    o.require(all_triples_weak_assoc_zero(m, default_bound(m)), "weak associativity Found(0)");
    auto jl = check_jacobi_like(m, tensor_swap_rmap(3, 4), jacobi_window(m), default_bound(m));
    o.require(jl.passed(), "tensor-swap Jacobi-like identity");
    o.detail << "M(2,A3) and A3 (x) M2(Q) tables equal entrywise (" << m.dim()
             << "-dim), weak associativity Found(0), tensor-swap Jacobi-like "
             << to_string(jl.verdict);
    return o;
}

Outcome cross_product_check()
{
    Outcome o;
    const auto f = load("cross_a2z2");
    const auto &alg = f.algebra;
    const int bound = default_bound(alg);
    std::size_t found = 0;
    for (std::size_t u = 0; u < alg.dim(); ++u)
        for (std::size_t v = 0; v < alg.dim(); ++v)
            for (std::size_t w = 0; w < alg.dim(); ++w)
                found += weak_assoc_order(alg, alg.y, alg.e(u), alg.e(v), alg.e(w), bound).found();
    o.require(found == 64, "weak associativity on all triples");
    auto jl = check_jacobi_like(alg, *rmap_of(f), jacobi_window(alg), bound);
    o.require(jl.passed(), "abelian Jacobi-like identity");
    const auto base = load("a2_z2").algebra;
    const auto G = f.group->group;
    const auto triv = cross_product(base, trivial_action(G, base.dim()));
    const auto tens = tensor_product({base, group_algebra(G)});
    o.require(triv.y == tens.y && triv.basis == tens.basis, "trivial action equals tensor");
    o.detail << "weak associativity Found on " << found << "/64 triples, Jacobi-like "
             << to_string(jl.verdict) << " on 64 triples, trivial action = tensor with Q[Z2]";
    return o;
}

Outcome closure_check()
{
    Outcome o;
    const auto f = load("a3");
    const auto &alg = f.algebra;
    const auto mod = adjoint_module(alg);
    const auto Yt = module_operator(mod, alg.e(1)), Yt2 = module_operator(mod, alg.e(2));
    auto cr = closure({Yt}, 3);
    o.require(cr.status == ClosureResult::Status::Closed, "status Closed");
    o.require(cr.basis.size() == 3, "dimension 3");
    o.require(cr.structure && cr.structure->y == alg.y, "structure constants equal A3");
    o.require(nth_product(Yt, Yt, -1) == Yt2, "Y(t)_{-1} Y(t) = Y(t2)");
    bool vanish = true;
    for (const auto &a : cr.basis)
        for (const auto &b : cr.basis)
            for (int n = 0; n <= 6; ++n)
                vanish = vanish && nth_product(a, b, n).terms().empty();
    o.require(vanish, "products vanish for n >= 0");
    ClosureOptions lo;
    lo.local = true;
    auto cl = closure({Yt}, 3, lo);
    o.require(cl.basis == cr.basis && cl.structure && cr.structure && cl.structure->y == cr.structure->y,
              "local and truncated closures identical");
    bool jac = cr.structure.has_value();
    if (cr.structure)
        for (std::size_t u = 0; u < 3; ++u)
            for (std::size_t v = 0; v < 3; ++v)
                jac = jac && check_jacobi(*cr.structure, u, v, 1, jacobi_window(*cr.structure)).passed();
    o.require(jac, "closed structure passes q = 1 Jacobi");
    auto vm = verify_module_structure(cr);
    o.require(vm.passed(), "module structure verified");
    o.require(is_faithful(closure_module(cr, {"w0", "w1", "w2"})), "faithful");
    o.detail << "closure of {Y(t)} on A3: " << to_string(cr.status) << ", dim " << cr.basis.size()
             << ", table equals A3, Y(t)_{-1}Y(t) = Y(t2), zero for n >= 0, local closure identical, "
             << "Jacobi q = 1 passes, module faithful";
    return o;
}

Outcome module_suite()
{
    Outcome o;
    std::size_t adj_ok = 0, adj_total = 0, transfer_ok = 0, transfer_total = 0;
    for (const char *name : {"a3", "ut2", "a2_z2", "z22", "m2q", "z22_twist", "m2_a3", "cross_a2z2"}) {
        const auto f = load(name);
        const auto &alg = f.algebra;
        const auto mod = adjoint_module(alg);
        const int bound = default_bound(alg);
        ++adj_total;
        adj_ok += check_module(alg, mod, bound).passed();
        const bool twisted = f.rmap && f.rmap->kind == "cocycle";
        if (!is_faithful(mod))
            continue;
        for (std::size_t u = 0; u < alg.dim(); ++u)
            for (std::size_t v = 0; v < alg.dim(); ++v) {
                const Rational q = twisted ? commutator_factor(*f.cocycle, f.grading->degree[u],
                                                               f.grading->degree[v])
                                           : Rational(1);
                ++transfer_total;
                transfer_ok += check_locality_transfer(alg, mod, u, v, q, bound).passed();
            }
    }
    o.require(adj_ok == adj_total, "adjoint modules pass");
    o.require(transfer_ok == transfer_total, "locality transfer agrees");

    const auto m2 = load("m2_a3");
    const auto &W = *m2.module;
    const bool wn_ok = check_module(m2.algebra, W, default_bound(m2.algebra)).passed();
    o.require(wn_ok, "(A3)^2 over M(2,A3) passes");
    std::vector<std::string> short_of;
    for (std::size_t j = 0; j < W.dim(); ++j) {
        const auto d = generated_submodule(m2.algebra, W, W.e(j)).dim();
        if (d != W.dim())
            short_of.push_back(W.basis[j] + " generates dimension " + std::to_string(d) + " of " +
                               std::to_string(W.dim()));
    }
    // Literal clause; t and t2 columns generate only (t)^2 and (t2)^2.
    o.require(short_of.empty(), "every basis vector generates (A3)^2");
    o.detail << "adjoint modules " << adj_ok << "/" << adj_total << ", locality transfer "
             << transfer_ok << "/" << transfer_total << " pairs, (A3)^2 module axioms "
             << (wn_ok ? "pass" : "fail");
    for (const auto &s : short_of)
        o.notes.push_back(s);
    return o;
}

Outcome end_to_end()
{
    Outcome o;
    const auto t0 = Clock::now();
    std::vector<SuiteReport> first, second;
    const std::vector<std::string> names{"a2_z2", "a3",        "cross_a2z2", "m2_a3",
                                         "m2q",   "ut2",       "z22",        "z22_twist"};
    for (const auto &n : names)
        first.push_back(run_suite(load(n), "all"));
    const double secs = seconds_since(t0);
    for (const auto &n : names)
        second.push_back(run_suite(load(n), "all"));
    const std::string a = emit_reports(first, ReportFormat::Json);
    const std::string b = emit_reports(second, ReportFormat::Json);
    std::size_t fails = 0;
    for (const auto &r : first)
        fails += r.count(RecordVerdict::Fail);
    o.require(secs < 60.0, "all suites under 60 s");
    o.require(a == b, "byte-identical JSON");
    o.require(fails == 0, "no Fail records");
    o.detail << "suite all over " << names.size() << " fixtures in " << fmt_seconds(secs)
             << ", " << fails << " failures, JSON " << a.size() << " bytes identical across runs";
    return o;
}

} // namespace

int main(int argc, char **argv)
{
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--fixtures" && i + 1 < argc)
            fixture_dir = argv[++i];
        else if (arg == "--criterion" && i + 1 < argc)
            only = std::stoi(argv[++i]);
    }
    const std::vector<std::pair<int, std::function<Outcome()>>> criteria{
        {1, delta_identity},    {2, jacobi_round_trip}, {3, a3_suite},
        {4, ut2_nonlocality},   {5, z22_twist},         {6, matrix_tensor},
        {7, cross_product_check}, {8, closure_check},   {9, module_suite},
        {10, end_to_end}};
    int failed = 0;
    for (const auto &[id, run] : criteria) {
        if (only && id != only)
            continue;
        Outcome o;
        try {
            o = run();
        } catch (const std::exception &e) {
            o.pass = false;
            o.notes.push_back(std::string("error: ") + e.what());
        }
        failed += !o.pass;
        std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  "
                  << o.detail.str() << "\n";
        for (const auto &n : o.notes)
            std::cout << "    " << n << "\n";
    }
    return failed ? 1 : 0;
}
