#include <CLI11.hpp>

#include <iostream>

#include "hopfexp/constructions.hpp"
#include "hopfexp/coradical.hpp"
#include "hopfexp/deform.hpp"
#include "hopfexp/theorems.hpp"

using namespace hopfexp;

namespace {

struct GlobalOpts {
    std::string out;
    std::string format = "text";
    std::int64_t bound = 0;
    std::uint64_t seed = 1;
};

void write_or_print(const GlobalOpts& g, const AlgebraDocument& doc) {
    if (g.out.empty())
        std::cout << canonical_serialize(doc);
    else
        save_document(doc, g.out);
}

json provenance(const std::string& op, const AlgebraDocument& src) {
    json m = json::object();
    m["provenance"] = json::object();
    m["provenance"]["op"] = op;
    m["provenance"]["source"] = document_digest(src);
    return m;
}

int cmd_build(const GlobalOpts& g, const std::string& kind, const std::string& table,
              std::int64_t n, const std::string& field_spec) {
    FieldDescriptor f = field_from_spec_string(field_spec);
    HopfAlgebra h = [&] {
        if (kind == "group") return group_algebra(FiniteGroupTable::named(table), f);
        if (kind == "dual-group") return dual_group_algebra(FiniteGroupTable::named(table), f);
        if (kind == "taft") return taft(n, f);
        if (kind == "h4") return sweedler_h4(f);
        throw Error(Errc::UsageError, "unknown kind: " + kind + " (group|dual-group|taft|h4)");
    }();
    json meta = json::object();
    meta["construction"] = kind;
    if (kind == "group" || kind == "dual-group") meta["table"] = table;
    if (kind == "taft") meta["n"] = n;
    write_or_print(g, document_from_algebra(h, meta));
    return 0;
}

int cmd_check(const GlobalOpts& g, const std::string& path) {
    AlgebraDocument doc = load_document(path);
    HopfAlgebra h = algebra_from_document(doc);
    if (g.format == "json") {
        json out = json::object();
        out["digest"] = document_digest(doc);
        out["dim"] = h.dim;
        out["field"] = field_to_json(h.field);
        out["axioms"] = "pass";
        out["s2_order"] = h.s2_order();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "ok: dim " << h.dim << " over " << h.field.to_string() << ", axioms pass, ord(S^2) = "
                  << h.s2_order() << "\n";
    }
    return 0;
}

int cmd_exp(const GlobalOpts& g, const std::string& path, std::int64_t i, const std::string& method) {
    HopfAlgebra h = load_algebra(path);
    if (method == "iterate") {
        std::int64_t bound = g.bound > 0 ? g.bound : default_brute_force_bound(h);
        BruteForceOutcome r = brute_force_exponent(h, i, bound);
        if (g.format == "json") {
            json out = json::object();
            out["i"] = i;
            out["method"] = "iterate";
            out["bound"] = bound;
            if (r.known()) out["value"] = *r.value;
            else out["value"] = "unknown";
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "exp_{2i}, i = " << i << ": "
                      << (r.known() ? std::to_string(*r.value) : "unknown (bound " + std::to_string(bound) + ")")
                      << "\n";
        }
        return 0;
    }
    if (method != "decide") throw Error(Errc::UsageError, "method must be decide or iterate");
    ExponentResult r = exponent_2i(h, i);
    if (g.format == "json") {
        json out = json::object();
        out["i"] = i;
        out["i_normalized"] = r.certificate.i_normalized;
        out["method"] = "decide";
        out["value"] = r.finite() ? json(r.value->get_str()) : json("infinite");
        out["min_poly"] = r.certificate.min_poly.to_string();
        out["order"] = r.certificate.order.to_string();
        if (r.certificate.cycle_index) out["cycle_index"] = *r.certificate.cycle_index;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "exp_{2i}, i = " << i << ": " << (r.finite() ? r.value->get_str() : "infinite")
                  << "\n  certificate: min poly " << r.certificate.min_poly.to_string() << "\n  "
                  << r.certificate.order.to_string() << "\n";
    }
    return 0;
}

int cmd_transform(const GlobalOpts& g, const std::string& path, const std::string& op,
                  const std::string& twist_path, const std::string& with_path) {
    AlgebraDocument src = load_document(path);
    HopfAlgebra h = algebra_from_document(src);
    HopfAlgebra out = [&]() -> HopfAlgebra {
        if (op == "dual") return dual(h);
        if (op == "op") return opposite(h);
        if (op == "cop") return coopposite(h);
        if (op == "double") return drinfeld_double(h).result;
        if (op == "smash-s2") return smash_s2(h).result;
        if (op == "twist") {
            if (twist_path.empty()) throw Error(Errc::UsageError, "twist needs --twist FILE");
            json tj = json::parse(read_file(twist_path));
            auto [j, ji] = twist_from_json(h, tj);
            return twist(h, TwistElement::from_coords(h, j, ji));
        }
        if (op == "tensor") {
            if (with_path.empty()) throw Error(Errc::UsageError, "tensor needs --with FILE");
            return tensor_product(h, load_algebra(with_path));
        }
        throw Error(Errc::UsageError,
                    "unknown op: " + op + " (dual|op|cop|double|smash-s2|twist|tensor)");
    }();
    json meta = provenance(op, src);
    if (op == "smash-s2") {
        SmashProduct sp = smash_s2(h);
        json pivot = json::array();
        for (const auto& c : sp.pivot) pivot.push_back(serialize_scalar(c));
        meta["pivot"] = pivot;
        meta["s2_order"] = sp.d;
    }
    write_or_print(g, document_from_algebra(out, meta));
    return 0;
}

int cmd_coradical(const GlobalOpts& g, const std::string& path) {
    HopfAlgebra h = load_algebra(path);
    CoradicalData cd = coradical_filtration(h);
    json out = json::object();
    out["h0_dim"] = cd.h0_basis.size();
    json fil = json::array();
    for (const auto& level : cd.filtration) fil.push_back(level.size());
    out["filtration_dims"] = fil;
    out["loewy_length"] = cd.loewy_length;
    out["dual_chevalley"] = is_dual_chevalley(h);
    json simples = json::array();
    for (const auto& s : cd.simples) simples.push_back(s.dim);
    out["simple_dims"] = simples;
    if (g.format == "json") {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "H_0 dim " << cd.h0_basis.size() << ", Loewy length " << cd.loewy_length
                  << ", dual Chevalley " << (out["dual_chevalley"].get<bool>() ? "yes" : "no")
                  << "\nfiltration dims:";
        for (const auto& d : fil) std::cout << " " << d;
        std::cout << "\nsimple subcoalgebra dims:";
        for (const auto& d : simples) std::cout << " " << d;
        std::cout << "\n";
    }
    return 0;
}

int cmd_grouplikes(const GlobalOpts& g, const std::string& path) {
    HopfAlgebra h = load_algebra(path);
    auto gl = grouplikes(h);
    if (g.format == "json") {
        json out = json::array();
        for (const auto& e : gl) {
            json one = json::object();
            json coords = json::array();
            for (const auto& c : e.coordinates) coords.push_back(serialize_scalar(c));
            one["coordinates"] = coords;
            one["order"] = e.order;
            out.push_back(one);
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << gl.size() << " grouplike(s)\n";
        for (const auto& e : gl) {
            std::cout << "  order " << e.order << ":";
            for (std::size_t i = 0; i < e.coordinates.size(); ++i)
                if (!e.coordinates[i].is_zero())
                    std::cout << " +" << e.coordinates[i].to_string() << "*" << h.basis_names[i];
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_primitive(const GlobalOpts& g, const std::string& path) {
    HopfAlgebra h = load_algebra(path);
    json out = json::object();
    json blocks = json::array();
    auto simples = simple_decomposition(h, g.seed);
    bool any_nontrivial = false;
    for (const auto& s : simples) {
        json b = json::object();
        b["dim"] = s.dim;
        auto bm = basic_multiplicative_matrix(h, s, g.seed);
        b["split"] = bm.has_value();
        if (bm) {
            b["rank"] = bm->rows;
            PrimitiveMatrixSpace space = primitive_space(h, *bm, unit_multiplicative_matrix(h));
            b["primitive_space_dim"] = space.basis.size();
            b["nontrivial_dim"] = space.nontrivial_basis.size();
            any_nontrivial = any_nontrivial || space.has_nontrivial();
        }
        blocks.push_back(b);
    }
    out["simples"] = blocks;
    out["has_nontrivial_primitive"] = any_nontrivial;
    if (g.format == "json")
        std::cout << out.dump(2) << "\n";
    else {
        for (const auto& b : out["simples"])
            std::cout << "simple dim " << b["dim"] << (b["split"].get<bool>() ? " (split)" : " (no split)")
                      << (b.contains("nontrivial_dim")
                              ? ", nontrivial primitives: " + b["nontrivial_dim"].dump()
                              : "")
                      << "\n";
        std::cout << (any_nontrivial ? "nontrivial (C,1)-primitive matrices exist\n"
                                     : "no nontrivial (C,1)-primitive matrix\n");
    }
    return 0;
}

int cmd_verify(const GlobalOpts& g, const std::string& path, const std::string& suite_name) {
    HopfAlgebra h = load_algebra(path);
    TheoremOptions opts;
    opts.seed = g.seed;
    VerificationReport rep = verify_theorems(h, suite_from_string(suite_name), opts);
    std::string rendered = g.format == "json" ? rep.to_json().dump(2) + "\n" : rep.to_text();
    if (g.out.empty())
        std::cout << rendered;
    else
        atomic_write_file(g.out, rendered);
    return rep.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact structure-constant Hopf algebras: exponents, deformations, coradical data"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    GlobalOpts g;
    app.add_option("--out", g.out, "write the result to this path (atomic)");
    app.add_option("--format", g.format, "text | json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--bound", g.bound, "iteration bound for brute-force exponents");
    app.add_option("--seed", g.seed, "seed for the deterministic randomized steps");

    std::string kind, table = "z2", field_spec = "rational", path, op, twist_path, with_path;
    std::string method = "decide", suite = "all";
    std::int64_t n = 2, i_param = 0;

    auto* build = app.add_subcommand("build", "construct a named algebra");
    build->add_option("--kind", kind, "group | dual-group | taft | h4")->required();
    build->add_option("--table", table, "group table name (z1..z512, z2x2, s3)");
    build->add_option("--n", n, "Taft parameter");
    build->add_option("--field", field_spec, "rational | cyclotomic:N | prime:P");

    auto* check = app.add_subcommand("check", "load a document and verify the axioms");
    check->add_option("doc", path, "algebra document")->required();

    auto* expc = app.add_subcommand("exp", "compute a twisted exponent");
    expc->add_option("doc", path, "algebra document")->required();
    expc->add_option("--i", i_param, "twist index i in exp_{2i} (0 = exp0, -1 = exp)");
    expc->add_option("--method", method, "decide | iterate");

    auto* tr = app.add_subcommand("transform", "apply a closure or deformation");
    tr->add_option("doc", path, "algebra document")->required();
    tr->add_option("--op", op, "dual | op | cop | double | smash-s2 | twist | tensor")->required();
    tr->add_option("--twist", twist_path, "twist document (for --op twist)");
    tr->add_option("--with", with_path, "second algebra document (for --op tensor)");

    auto* cor = app.add_subcommand("coradical", "coradical filtration and Loewy data");
    cor->add_option("doc", path, "algebra document")->required();

    auto* gl = app.add_subcommand("grouplikes", "list the grouplike elements");
    gl->add_option("doc", path, "algebra document")->required();

    auto* prim = app.add_subcommand("primitive", "simple blocks and primitive-matrix spaces");
    prim->add_option("doc", path, "algebra document")->required();

    auto* ver = app.add_subcommand("verify-theorems", "run a verification suite");
    ver->add_option("doc", path, "algebra document")->required();
    ver->add_option("--suite", suite, "invariance | smash | finiteness | primitive | all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (build->parsed()) return cmd_build(g, kind, table, n, field_spec);
        if (check->parsed()) return cmd_check(g, path);
        if (expc->parsed()) return cmd_exp(g, path, i_param, method);
        if (tr->parsed()) return cmd_transform(g, path, op, twist_path, with_path);
        if (cor->parsed()) return cmd_coradical(g, path);
        if (gl->parsed()) return cmd_grouplikes(g, path);
        if (prim->parsed()) return cmd_primitive(g, path);
        if (ver->parsed()) return cmd_verify(g, path, suite);
    } catch (const Error& e) {
        std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
