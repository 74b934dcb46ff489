#include "vtxalg/errors.hpp"
#include "vtxalg/suite.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace vtx;

namespace {

void write_out(const std::string &path, const std::string &text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write '" + path + "'");
    out << text;
}

std::vector<std::string> split(const std::string &s, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto p = s.find(sep, start);
        out.push_back(s.substr(start, p - start));
        if (p == std::string::npos)
            break;
        start = p + 1;
    }
    return out;
}

std::pair<int, int> parse_range(const std::string &s)
{
    auto parts = split(s, ',');
    if (parts.size() != 2)
        throw Error("--n-range expects lo,hi");
    return {std::stoi(parts[0]), std::stoi(parts[1])};
}

ReportFormat format_of(const std::string &f)
{
    return f == "json" ? ReportFormat::Json : ReportFormat::Text;
}

ModuleStructure module_or_adjoint(const AlgebraFile &f)
{
    return f.module ? *f.module : adjoint_module(f.algebra);
}

struct Common {
    std::optional<int> bound, window;
    std::string q = "auto";
    std::string format = "text";
    std::string output;
    bool timing = false;
    unsigned threads = 0;

    void attach(CLI::App *app)
    {
        app->add_option("--bound", bound, "search bound for the orders k and l");
        app->add_option("--window", window, "window radius per variable");
        app->add_option("--q", q, "locality factor: a rational, 'auto' or 'from-cocycle'");
        app->add_option("--format", format, "report format")
            ->check(CLI::IsMember({"text", "json"}));
        app->add_option("-o,--output", output, "write the report to a file");
        app->add_flag("--timing", timing, "include wall times in the report");
        app->add_option("--threads", threads, "worker threads, 0 for all cores");
    }

    SuiteOptions options() const
    {
        SuiteOptions o;
        o.bound = bound;
        o.window = window;
        o.q = q;
        o.threads = threads;
        return o;
    }
};

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact checks and constructions for finite-dimensional vertex algebras"};
    app.require_subcommand(1);

    // check
    auto *check = app.add_subcommand("check", "run a check suite on an algebra file");
    std::string check_file, suite = "all", only, tuple;
    Common cc;
    check->add_option("file", check_file)->required()->check(CLI::ExistingFile);
    check->add_option("--suite", suite)->check(CLI::IsMember(suite_names()));
    check->add_option("--only", only, "run a single check id");
    check->add_option("--tuple", tuple, "restrict to one basis tuple, comma separated");
    cc.attach(check);

    // construct
    auto *construct = app.add_subcommand("construct", "build a new algebra file");
    construct->require_subcommand(1);
    std::string out_path, name;
    construct->add_option("-o,--output", out_path, "output file (stdout by default)");
    construct->add_option("--name", name, "name recorded in the output");

    std::vector<std::string> tensor_inputs;
    bool tensor_swap = false;
    auto *tensor = construct->add_subcommand("tensor", "tensor product of algebras");
    tensor->add_option("files", tensor_inputs)->required()->check(CLI::ExistingFile);
    tensor->add_flag("--swap-rmap", tensor_swap, "attach the tensor-swap R-map (two factors)");

    std::string matrix_input;
    std::size_t matrix_n = 2;
    auto *matrix = construct->add_subcommand("matrix", "n x n matrices over an algebra");
    matrix->add_option("file", matrix_input)->required()->check(CLI::ExistingFile);
    matrix->add_option("-n", matrix_n, "matrix size")->check(CLI::PositiveNumber);

    std::string twist_input;
    auto *twist = construct->add_subcommand("twist", "cocycle twist using the file's grading");
    twist->add_option("file", twist_input)->required()->check(CLI::ExistingFile);

    std::string cross_input;
    auto *cross = construct->add_subcommand("cross", "cross product with the file's group action");
    cross->add_option("file", cross_input)->required()->check(CLI::ExistingFile);

    std::string assoc_input;
    auto *from_assoc =
        construct->add_subcommand("from-assoc", "table of an associative algebra with derivation");
    from_assoc->add_option("file", assoc_input)->required()->check(CLI::ExistingFile);

    // closure
    auto *clos = app.add_subcommand("closure", "close an operator set under nth products");
    std::string closure_file, n_range, emit_algebra;
    std::size_t dim_cap = 64, depth_cap = 8;
    bool local = false;
    Common cl;
    clos->add_option("file", closure_file)->required()->check(CLI::ExistingFile);
    clos->add_option("--dim-cap", dim_cap);
    clos->add_option("--depth-cap", depth_cap);
    clos->add_option("--n-range", n_range, "lo,hi");
    clos->add_flag("--local", local, "use the commutator-style nth product");
    clos->add_option("--emit-algebra", emit_algebra, "write the closed algebra as a file");
    cl.attach(clos);

    // report
    auto *report = app.add_subcommand("report", "run one suite over several files");
    std::vector<std::string> report_files;
    std::string report_suite = "all";
    Common rc;
    report->add_option("files", report_files)->required()->check(CLI::ExistingFile);
    report->add_option("--suite", report_suite)->check(CLI::IsMember(suite_names()));
    rc.attach(report);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) {
            SuiteOptions o = cc.options();
            if (!only.empty())
                o.only = only;
            if (!tuple.empty())
                o.tuple = split(tuple, ',');
            auto rep = run_suite(parse_algebra_file(check_file), suite, o);
            write_out(cc.output, emit_report(rep, format_of(cc.format), cc.timing));
            return rep.exit_code();
        }
        if (construct->parsed()) {
            AlgebraFile out;
            if (tensor->parsed()) {
                std::vector<AlgebraStructure> algs;
                std::vector<ModuleStructure> mods;
                for (const auto &p : tensor_inputs) {
                    auto f = parse_algebra_file(p);
                    algs.push_back(f.algebra);
                    mods.push_back(module_or_adjoint(f));
                    out.name += (out.name.empty() ? "" : "_") + f.name;
                }
                out.algebra = tensor_product(algs);
                out.module = tensor_module(mods);
                if (tensor_swap) {
                    if (algs.size() != 2)
                        throw Error("--swap-rmap needs exactly two factors");
                    out.rmap = RMapSpec{"tensor-swap", {algs[0].dim(), algs[1].dim()}, 0};
                }
            } else if (matrix->parsed()) {
                auto f = parse_algebra_file(matrix_input);
                out.name = "m" + std::to_string(matrix_n) + "_" + f.name;
                out.algebra = matrix_algebra(f.algebra, matrix_n);
                out.module = wn_module(f.algebra, module_or_adjoint(f), matrix_n);
                out.rmap = RMapSpec{"tensor-swap", {f.algebra.dim(), matrix_n * matrix_n}, 0};
            } else if (twist->parsed()) {
                auto f = parse_algebra_file(twist_input);
                if (!f.grading || !f.cocycle)
                    throw ValidationError("twist needs grading and cocycle sections");
                out.name = f.name + "_twist";
                out.algebra = cocycle_twist(f.algebra, *f.grading, *f.cocycle);
                out.grading = f.grading;
                out.cocycle = f.cocycle;
                out.rmap = RMapSpec{"cocycle", {}, 0};
            } else if (cross->parsed()) {
                auto f = parse_algebra_file(cross_input);
                if (!f.group)
                    throw ValidationError("cross needs a group section");
                out.name = f.name + "_cross";
                out.algebra = cross_product(f.algebra, *f.group);
                out.group = f.group;
                out.rmap = RMapSpec{"cross", {}, f.algebra.dim()};
            } else {
                auto f = parse_algebra_file(assoc_input, false);
                if (!f.assoc)
                    throw ValidationError("from-assoc needs an assoc section");
                out = f;
                out.algebra = from_assoc_with_derivation(*f.assoc);
                if (f.algebra.basis != f.assoc->basis)
                    throw ValidationError("basis must equal the assoc basis");
            }
            if (!name.empty())
                out.name = name;
            // Re-parse to validate what is written.
            const std::string text = emit_algebra_json(out);
            parse_algebra_json(text, "constructed output");
            write_out(out_path, text);
            return 0;
        }
        if (clos->parsed()) {
            SuiteOptions o = cl.options();
            o.dim_cap = dim_cap;
            o.depth_cap = depth_cap;
            o.local_products = local;
            if (!n_range.empty())
                o.n_range = parse_range(n_range);
            auto rep = run_closure(parse_algebra_file(closure_file), o);
            write_out(cl.output, emit_report(rep, format_of(cl.format), cl.timing));
            if (!emit_algebra.empty()) {
                if (!rep.closure || !rep.closure->algebra)
                    throw Error("closure produced no structure to emit");
                write_out(emit_algebra, emit_algebra_json(*rep.closure->algebra));
            }
            return rep.exit_code();
        }
        if (report->parsed()) {
            std::vector<SuiteReport> reps;
            int code = 0;
            for (const auto &p : report_files) {
                reps.push_back(run_suite(parse_algebra_file(p), report_suite, rc.options()));
                code = std::max(code, reps.back().exit_code());
            }
            write_out(rc.output, emit_reports(reps, format_of(rc.format), rc.timing));
            return code;
        }
    } catch (const Error &e) {
        std::cerr << "vtxalg: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
