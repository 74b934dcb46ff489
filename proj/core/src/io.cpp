#include "vtxalg/io.hpp"

#include "vtxalg/errors.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace vtx {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(const std::string &path, const std::string &what)
{
    throw ParseError(path + ": " + what);
}

[[noreturn]] void invalid(const std::string &path, const std::string &what)
{
    throw ValidationError(path + ": " + what);
}

const json &req(const json &o, const char *key, const std::string &path)
{
    if (!o.is_object())
        bad(path, "expected an object");
    auto it = o.find(key);
    if (it == o.end())
        bad(path + "." + key, "missing field");
    return *it;
}

std::string get_string(const json &j, const std::string &path)
{
    if (!j.is_string())
        bad(path, "expected a string");
    return j.get<std::string>();
}

long get_int(const json &j, const std::string &path)
{
    if (!j.is_number_integer())
        bad(path, "expected an integer");
    return j.get<long>();
}

std::size_t get_size(const json &j, const std::string &path)
{
    const long v = get_int(j, path);
    if (v < 0)
        bad(path, "expected a nonnegative integer");
    return static_cast<std::size_t>(v);
}

const json &get_array(const json &j, const std::string &path)
{
    if (!j.is_array())
        bad(path, "expected an array");
    return j;
}

Rational get_rational(const json &j, const std::string &path)
{
    if (!j.is_string())
        bad(path, "rationals are written as strings");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const ParseError &e) {
        bad(path, e.what());
    }
}

std::vector<std::string> get_names(const json &j, const std::string &path)
{
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < get_array(j, path).size(); ++i) {
        out.push_back(get_string(j[i], path + "[" + std::to_string(i) + "]"));
        if (!seen.insert(out.back()).second)
            invalid(path, "duplicate name '" + out.back() + "'");
    }
    return out;
}

std::size_t resolve(const std::vector<std::string> &names, const std::string &name,
                    const std::string &path)
{
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end())
        invalid(path, "unknown basis name '" + name + "'");
    return static_cast<std::size_t>(it - names.begin());
}

VectorQ get_sparse(const json &j, const std::vector<std::string> &basis, const std::string &path)
{
    if (!j.is_object())
        bad(path, "expected an object of name: rational");
    VectorQ v = zero_vector(basis.size());
    for (const auto &[k, val] : j.items())
        v[resolve(basis, k, path)] = get_rational(val, path + "." + k);
    return v;
}

Matrix get_matrix(const json &j, std::size_t rows, std::size_t cols, const std::string &path)
{
    if (get_array(j, path).size() != rows)
        invalid(path, "expected " + std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const std::string rp = path + "[" + std::to_string(r) + "]";
        if (get_array(j[r], rp).size() != cols)
            invalid(rp, "expected " + std::to_string(cols) + " columns");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = get_rational(j[r][c], rp + "[" + std::to_string(c) + "]");
    }
    return m;
}

json sparse_json(const VectorQ &v, const std::vector<std::string> &basis)
{
    json o = json::object();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0)
            o[basis[i]] = to_string(v[i]);
    return o;
}

json matrix_json(const Matrix &m)
{
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(to_string(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

// Entries {u, v, n, result} into a table acting from src names on tgt names.
ActionTable get_table(const json &j, const std::vector<std::string> &src,
                      const std::vector<std::string> &tgt, const char *target_key,
                      const std::string &path)
{
    ActionTable t(src.size(), tgt.size());
    std::set<std::tuple<std::size_t, std::size_t, long>> seen;
    for (std::size_t i = 0; i < get_array(j, path).size(); ++i) {
        const std::string ep = path + "[" + std::to_string(i) + "]";
        const json &e = j[i];
        const auto u = resolve(src, get_string(req(e, "u", ep), ep + ".u"), ep + ".u");
        const auto v = resolve(tgt, get_string(req(e, target_key, ep), ep + "." + target_key),
                               ep + "." + target_key);
        const long n = get_int(req(e, "n", ep), ep + ".n");
        if (!seen.insert({u, v, n}).second)
            invalid(ep, "duplicate entry");
        t.set(u, v, static_cast<int>(n), get_sparse(req(e, "result", ep), tgt, ep + ".result"));
    }
    return t;
}

json table_json(const ActionTable &t, const std::vector<std::string> &src,
                const std::vector<std::string> &tgt, const char *target_key)
{
    json out = json::array();
    for (std::size_t u = 0; u < t.src_dim(); ++u)
        for (std::size_t v = 0; v < t.tgt_dim(); ++v)
            for (const auto &[n, r] : t.entry(u, v)) {
                json e;
                e["u"] = src[u];
                e[target_key] = tgt[v];
                e["n"] = n;
                e["result"] = sparse_json(r, tgt);
                out.push_back(std::move(e));
            }
    return out;
}

AbelianGroup get_abelian(const json &j, const std::string &path)
{
    AbelianGroup G;
    for (std::size_t i = 0; i < get_array(j, path).size(); ++i) {
        const long o = get_int(j[i], path + "[" + std::to_string(i) + "]");
        if (o < 1)
            invalid(path, "group orders must be positive");
        G.orders.push_back(static_cast<int>(o));
    }
    return G;
}

std::vector<int> get_tuple(const json &j, const std::string &path)
{
    std::vector<int> t;
    for (std::size_t i = 0; i < get_array(j, path).size(); ++i)
        t.push_back(static_cast<int>(get_int(j[i], path + "[" + std::to_string(i) + "]")));
    return t;
}

template <class F>
void as_validation(const std::string &path, F &&f)
{
    try {
        f();
    } catch (const ValidationError &) {
        throw;
    } catch (const ParseError &) {
        throw;
    } catch (const Error &e) {
        invalid(path, e.what());
    }
}

} // namespace

std::string vector_text(const VectorQ &v, const std::vector<std::string> &basis)
{
    return sparse_json(v, basis).dump();
}

AlgebraFile parse_algebra_json(std::string_view text, const std::string &origin, bool validate)
{
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(origin + ": " + e.what());
    }
    const std::string P = origin;
    AlgebraFile f;

    const long version = get_int(req(root, "format_version", P), P + ".format_version");
    if (version != kFormatVersion)
        bad(P + ".format_version", "unsupported version " + std::to_string(version));
    if (root.contains("name"))
        f.name = get_string(root["name"], P + ".name");

    auto &alg = f.algebra;
    alg.basis = get_names(req(root, "basis", P), P + ".basis");
    if (root.contains("dim") && get_size(root["dim"], P + ".dim") != alg.basis.size())
        invalid(P + ".dim", "does not match the basis length");
    alg.vacuum = resolve(alg.basis, get_string(req(root, "vacuum", P), P + ".vacuum"),
                         P + ".vacuum");
    alg.y = get_table(req(root, "entries", P), alg.basis, alg.basis, "v", P + ".entries");
    const std::size_t d = alg.dim();

    if (root.contains("grading")) {
        const std::string gp = P + ".grading";
        const json &g = root["grading"];
        GradedTag tag;
        tag.group = get_abelian(req(g, "orders", gp), gp + ".orders");
        const json &degs = get_array(req(g, "degrees", gp), gp + ".degrees");
        if (degs.size() != d)
            invalid(gp + ".degrees", "one degree per basis vector is required");
        for (std::size_t i = 0; i < d; ++i) {
            const std::string dp = gp + ".degrees[" + std::to_string(i) + "]";
            auto t = get_tuple(degs[i], dp);
            if (t.size() != tag.group.orders.size())
                invalid(dp, "degree has the wrong length");
            for (std::size_t k = 0; k < t.size(); ++k)
                if (t[k] < 0 || t[k] >= tag.group.orders[k])
                    invalid(dp, "degree component out of range");
            tag.degree.push_back(tag.group.index(t));
        }
        f.grading = std::move(tag);
    }

    if (root.contains("cocycle")) {
        const std::string cp = P + ".cocycle";
        if (!f.grading)
            invalid(cp, "a cocycle needs a grading section");
        CocycleData c;
        c.group = f.grading->group;
        const std::size_t n = c.group.size();
        const Matrix m = get_matrix(req(root["cocycle"], "table", cp), n, n, cp + ".table");
        c.table.assign(n, std::vector<Rational>(n));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                c.table[a][b] = m(a, b);
        f.cocycle = std::move(c);
    }

    if (root.contains("group")) {
        const std::string gp = P + ".group";
        const json &g = root["group"];
        GroupActionData act;
        act.group.elements = get_names(req(g, "elements", gp), gp + ".elements");
        const auto &els = act.group.elements;
        act.group.identity =
            resolve(els, get_string(req(g, "identity", gp), gp + ".identity"), gp + ".identity");
        const json &tab = get_array(req(g, "table", gp), gp + ".table");
        if (tab.size() != els.size())
            invalid(gp + ".table", "table must be square");
        for (std::size_t a = 0; a < els.size(); ++a) {
            const std::string rp = gp + ".table[" + std::to_string(a) + "]";
            if (get_array(tab[a], rp).size() != els.size())
                invalid(rp, "table must be square");
            std::vector<std::size_t> row;
            for (std::size_t b = 0; b < els.size(); ++b)
                row.push_back(resolve(els, get_string(tab[a][b], rp), rp));
            act.group.table.push_back(std::move(row));
        }
        const std::size_t n = get_size(req(g, "acts_on_dim", gp), gp + ".acts_on_dim");
        const json &ac = req(g, "action", gp);
        if (!ac.is_object())
            bad(gp + ".action", "expected an object keyed by group element");
        act.action.assign(els.size(), Matrix());
        for (std::size_t k = 0; k < els.size(); ++k) {
            const std::string ap = gp + ".action." + els[k];
            if (!ac.contains(els[k]))
                invalid(ap, "missing action matrix");
            act.action[k] = get_matrix(ac[els[k]], n, n, ap);
        }
        f.group = std::move(act);
    }

    if (root.contains("assoc")) {
        const std::string ap = P + ".assoc";
        const json &a = root["assoc"];
        AssocAlgebraData A;
        A.basis = get_names(req(a, "basis", ap), ap + ".basis");
        A.identity =
            resolve(A.basis, get_string(req(a, "identity", ap), ap + ".identity"), ap + ".identity");
        const std::size_t n = A.dim();
        A.mult.assign(n, std::vector<VectorQ>(n, zero_vector(n)));
        const json &mult = get_array(req(a, "products", ap), ap + ".products");
        for (std::size_t i = 0; i < mult.size(); ++i) {
            const std::string mp = ap + ".products[" + std::to_string(i) + "]";
            const auto x = resolve(A.basis, get_string(req(mult[i], "a", mp), mp + ".a"), mp + ".a");
            const auto y = resolve(A.basis, get_string(req(mult[i], "b", mp), mp + ".b"), mp + ".b");
            A.mult[x][y] = get_sparse(req(mult[i], "result", mp), A.basis, mp + ".result");
        }
        A.derivation = get_matrix(req(a, "derivation", ap), n, n, ap + ".derivation");
        f.assoc = std::move(A);
    }

    if (root.contains("module")) {
        const std::string mp = P + ".module";
        ModuleStructure m;
        m.basis = get_names(req(root["module"], "basis", mp), mp + ".basis");
        m.y = get_table(req(root["module"], "entries", mp), alg.basis, m.basis, "w",
                        mp + ".entries");
        f.module = std::move(m);
    }

    if (root.contains("operators")) {
        const std::string op = P + ".operators";
        const json &o = root["operators"];
        OperatorSet S;
        S.dim = get_size(req(o, "dim", op), op + ".dim");
        const json &list = get_array(req(o, "list", op), op + ".list");
        for (std::size_t i = 0; i < list.size(); ++i) {
            const std::string lp = op + ".list[" + std::to_string(i) + "]";
            S.names.push_back(get_string(req(list[i], "name", lp), lp + ".name"));
            std::map<int, Matrix> coeffs;
            const json &cs = get_array(req(list[i], "coefficients", lp), lp + ".coefficients");
            for (std::size_t k = 0; k < cs.size(); ++k) {
                const std::string cp = lp + ".coefficients[" + std::to_string(k) + "]";
                const int e = static_cast<int>(get_int(req(cs[k], "power", cp), cp + ".power"));
                if (coeffs.count(e))
                    invalid(cp, "duplicate power");
                coeffs.emplace(e, get_matrix(req(cs[k], "matrix", cp), S.dim, S.dim, cp + ".matrix"));
            }
            S.ops.push_back(VertexOperator::polynomial(S.dim, std::move(coeffs)));
        }
        f.operators = std::move(S);
    }

    if (root.contains("rmap")) {
        const std::string rp = P + ".rmap";
        const json &r = root["rmap"];
        RMapSpec spec;
        spec.kind = get_string(req(r, "kind", rp), rp + ".kind");
        if (spec.kind == "tensor-swap") {
            const json &fd = get_array(req(r, "factor_dims", rp), rp + ".factor_dims");
            for (std::size_t i = 0; i < fd.size(); ++i)
                spec.factor_dims.push_back(get_size(fd[i], rp + ".factor_dims"));
            if (spec.factor_dims.size() != 2 || spec.factor_dims[0] * spec.factor_dims[1] != d)
                invalid(rp + ".factor_dims", "expected two factor dimensions multiplying to dim");
        } else if (spec.kind == "cross") {
            spec.base_dim = get_size(req(r, "base_dim", rp), rp + ".base_dim");
            if (!f.group)
                invalid(rp, "the cross R-map needs a group section");
            if (spec.base_dim * f.group->group.size() != d)
                invalid(rp + ".base_dim", "base_dim times |G| must equal dim");
        } else if (spec.kind == "cocycle") {
            if (!f.grading || !f.cocycle)
                invalid(rp, "the cocycle R-map needs grading and cocycle sections");
        } else if (spec.kind != "identity") {
            invalid(rp + ".kind", "unknown R-map kind '" + spec.kind + "'");
        }
        f.rmap = std::move(spec);
    }

    if (!validate)
        return f;

    as_validation(P, [&] {
        auto rep = validate_structure(alg);
        if (!rep.passed()) {
            const auto &w = rep.witnesses.front();
            invalid(P, w.check + (w.note.empty() ? "" : " (" + w.note + ")"));
        }
    });
    if (f.grading)
        as_validation(P + ".grading", [&] { validate_grading(alg, *f.grading); });
    if (f.cocycle)
        as_validation(P + ".cocycle", [&] { validate_cocycle(*f.cocycle); });
    if (f.group)
        as_validation(P + ".group", [&] {
            validate_group(f.group->group);
            if (f.group->action.front().rows() == d && !f.rmap)
                validate_action(alg, *f.group);
        });
    if (f.assoc)
        as_validation(P + ".assoc", [&] { validate_assoc(*f.assoc); });
    if (f.operators)
        for (std::size_t i = 0; i < f.operators->ops.size(); ++i)
            if (f.operators->ops[i].dim() != f.operators->dim)
                invalid(P + ".operators", "operator dimension mismatch");
    return f;
}

AlgebraFile parse_algebra_file(const std::string &path, bool validate)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_algebra_json(ss.str(), path, validate);
}

std::string emit_algebra_json(const AlgebraFile &f)
{
    const auto &alg = f.algebra;
    json root;
    root["format_version"] = kFormatVersion;
    root["name"] = f.name;
    root["basis"] = alg.basis;
    root["dim"] = alg.dim();
    root["vacuum"] = alg.basis.at(alg.vacuum);
    root["entries"] = table_json(alg.y, alg.basis, alg.basis, "v");
    if (f.grading) {
        json degs = json::array();
        for (auto g : f.grading->degree)
            degs.push_back(f.grading->group.element(g));
        root["grading"] = {{"orders", f.grading->group.orders}, {"degrees", degs}};
    }
    if (f.cocycle) {
        const std::size_t n = f.cocycle->group.size();
        Matrix m(n, n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                m(a, b) = f.cocycle->table[a][b];
        root["cocycle"] = {{"table", matrix_json(m)}};
    }
    if (f.group) {
        const auto &G = f.group->group;
        json tab = json::array();
        for (const auto &row : G.table) {
            json r = json::array();
            for (auto h : row)
                r.push_back(G.elements[h]);
            tab.push_back(std::move(r));
        }
        json action = json::object();
        for (std::size_t k = 0; k < G.size(); ++k)
            action[G.elements[k]] = matrix_json(f.group->action[k]);
        root["group"] = {{"elements", G.elements},
                         {"identity", G.elements[G.identity]},
                         {"table", tab},
                         {"acts_on_dim", f.group->action.front().rows()},
                         {"action", action}};
    }
    if (f.assoc) {
        const auto &A = *f.assoc;
        json prods = json::array();
        for (std::size_t i = 0; i < A.dim(); ++i)
            for (std::size_t j = 0; j < A.dim(); ++j)
                if (!is_zero(A.mult[i][j]))
                    prods.push_back({{"a", A.basis[i]},
                                     {"b", A.basis[j]},
                                     {"result", sparse_json(A.mult[i][j], A.basis)}});
        root["assoc"] = {{"basis", A.basis},
                         {"identity", A.basis[A.identity]},
                         {"products", prods},
                         {"derivation", matrix_json(A.derivation)}};
    }
    if (f.module)
        root["module"] = {{"basis", f.module->basis},
                          {"entries", table_json(f.module->y, alg.basis, f.module->basis, "w")}};
    if (f.operators) {
        json list = json::array();
        for (std::size_t i = 0; i < f.operators->ops.size(); ++i) {
            json cs = json::array();
            for (const auto &[e, m] : f.operators->ops[i].terms())
                cs.push_back({{"power", e}, {"matrix", matrix_json(m)}});
            list.push_back({{"name", f.operators->names[i]}, {"coefficients", cs}});
        }
        root["operators"] = {{"dim", f.operators->dim}, {"list", list}};
    }
    if (f.rmap) {
        json r = {{"kind", f.rmap->kind}};
        if (f.rmap->kind == "tensor-swap")
            r["factor_dims"] = f.rmap->factor_dims;
        if (f.rmap->kind == "cross")
            r["base_dim"] = f.rmap->base_dim;
        root["rmap"] = r;
    }
    return root.dump(2) + "\n";
}

std::optional<RMap> rmap_of(const AlgebraFile &f)
{
    if (!f.rmap)
        return std::nullopt;
    const auto &s = *f.rmap;
    if (s.kind == "identity")
        return identity_rmap(f.algebra.dim());
    if (s.kind == "tensor-swap")
        return tensor_swap_rmap(s.factor_dims[0], s.factor_dims[1]);
    if (s.kind == "cocycle")
        return cocycle_rmap(*f.grading, *f.cocycle);
    return cross_rmap(s.base_dim, *f.group);
}

} // namespace vtx
