#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "relquiv/extension.hpp"
#include "relquiv/oracle.hpp"
#include "relquiv/render.hpp"
#include "relquiv/selftest.hpp"

using namespace relquiv;
using ordered_json = nlohmann::ordered_json;

namespace {

std::uint64_t default_seed() {
    if (const char* s = std::getenv("RELQUIV_SEED")) return std::strtoull(s, nullptr, 10);
    return 2024;
}

int vertex_of(const StringPresentation& P, const std::string& name) {
    int v = P.vertex_index(name);
    if (v < 0) throw ParseError("unknown vertex " + name);
    return v;
}

int cmd_validate(const std::string& file, bool json) {
    StringPresentation P = parse_bqv_file(file);
    ValidationReport rep = validate(P);
    if (json) {
        ordered_json j;
        j["admissible"] = rep.admissible;
        j["s1"] = rep.s1;
        j["s2"] = rep.s2;
        j["s3"] = rep.s3;
        j["g1"] = rep.g1;
        j["g2"] = rep.g2;
        j["is_tree"] = rep.is_tree;
        j["is_string"] = rep.is_string();
        j["is_gentle"] = rep.is_gentle();
        j["witnesses"] = rep.witnesses;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "admissible: " << (rep.admissible ? "yes" : "no") << "\n"
                  << "string: " << (rep.is_string() ? "yes" : "no") << "\n"
                  << "gentle: " << (rep.is_gentle() ? "yes" : "no") << "\n"
                  << "tree: " << (rep.is_tree ? "yes" : "no") << "\n";
        for (const std::string& w : rep.witnesses) std::cout << "  - " << w << "\n";
    }
    return 0;
}

int cmd_resolve(const std::string& file, const std::string& interval,
                const std::string& injective, const std::string& projective) {
    StringPresentation P = parse_bqv_file(file);
    require_string_tree(P);
    int given = !interval.empty() + !injective.empty() + !projective.empty();
    if (given != 1)
        throw ParseError("pass exactly one of --interval, --injective, --projective");
    if (!interval.empty()) {
        size_t colon = interval.find(':');
        if (colon == std::string::npos) throw ParseError("--interval wants a:b");
        int a = vertex_of(P, interval.substr(0, colon));
        int b = vertex_of(P, interval.substr(colon + 1));
        Interval iv = make_interval(P, a, b);
        std::cout << "projective resolution:\n"
                  << render_levels(P, resolve_interval(P, iv)) << "\n";
        StringPresentation op = P.opposite();
        Interval ivop = make_interval(op, b, a);
        std::cout << "injective coresolution:\n"
                  << render_levels(op, resolve_interval(op, ivop), true);
    } else if (!injective.empty()) {
        std::cout << render_levels(P, resolve_injective(P, vertex_of(P, injective)));
    } else {
        StringPresentation op = P.opposite();
        std::cout << render_levels(op, coresolve_projective_op(op, vertex_of(P, projective)),
                                   true);
    }
    return 0;
}

int cmd_ext(const std::string& file, const std::string& c_name, const std::string& z_name,
            int degree) {
    StringPresentation P = parse_bqv_file(file);
    ExtEngine E(P);
    if (degree < 2) throw ParseError("--degree wants a value >= 2");
    if (!c_name.empty() && !z_name.empty()) {
        int c = vertex_of(P, c_name), z = vertex_of(P, z_name);
        Oracle O(E);
        std::vector<ExtWitness> ws = ext_witnesses(E, c, z, degree);
        std::cout << "dim Ext^" << degree << "(I(" << c_name << "), P(" << z_name
                  << ")) = " << O.ext_dim(c, z, degree) << "\n";
        for (const ExtWitness& w : ws) std::cout << "  " << witness_to_string(P, w) << "\n";
        return 0;
    }
    if (!c_name.empty()) {
        ExtSupport s = ext_support(E, vertex_of(P, c_name), degree);
        std::cout << "support of Ext^" << degree << "(I(" << c_name << "), -):\n";
        for (const SupportInterval& iv : s.intervals) {
            std::cout << "  branch at " << P.vertex_names[iv.branch_root]
                      << (iv.off_branch ? " (off)" : "") << ":";
            for (int z : iv.zs) std::cout << " " << P.vertex_names[z];
            std::cout << "\n";
        }
        for (int z : s.difference_points)
            std::cout << "  difference point " << P.vertex_names[z] << "\n";
        std::cout << "  all:";
        for (int z : s.all) std::cout << " " << P.vertex_names[z];
        std::cout << "\n";
        return 0;
    }
    if (!z_name.empty()) {
        ExtSupport s = ext_cosupport(E, vertex_of(P, z_name), degree);
        std::cout << "cosupport of Ext^" << degree << "(-, P(" << z_name << ")):\n  all:";
        for (int c : s.all) std::cout << " " << P.vertex_names[c];
        std::cout << "\n";
        return 0;
    }
    throw ParseError("pass --c, --z, or both");
}

int cmd_arrows(const std::string& file, bool json, bool strict, bool unrestricted) {
    StringPresentation P = parse_bqv_file(file);
    ExtEngine E(P);
    std::vector<NewArrow> arr = new_arrows(E, !unrestricted);
    Oracle O(E);
    ArrowMultiset got;
    for (const NewArrow& a : arr) got[{a.z, a.c, a.degree}]++;
    ArrowMultiset want = O.new_arrow_multiset(true);
    bool agree = got == want;

    if (json) {
        ordered_json j;
        ordered_json list = ordered_json::array();
        for (const NewArrow& a : arr) {
            ordered_json e;
            e["name"] = a.name;
            e["z"] = P.vertex_names[a.z];
            e["c"] = P.vertex_names[a.c];
            e["degree"] = a.degree;
            list.push_back(std::move(e));
        }
        j["arrows"] = std::move(list);
        j["oracle_agrees"] = agree;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const NewArrow& a : arr)
            std::cout << a.name << ": " << P.vertex_names[a.z] << " -> " << P.vertex_names[a.c]
                      << " (degree " << a.degree << ")\n";
        if (agree) {
            std::cout << "oracle agrees (" << arr.size() << " arrows)\n";
        } else {
            std::cout << "oracle DISAGREES:\n";
            for (const auto& [key, cnt] : want)
                std::cout << "  oracle " << P.vertex_names[std::get<0>(key)] << " -> "
                          << P.vertex_names[std::get<1>(key)] << " degree "
                          << std::get<2>(key) << " x" << cnt << "\n";
        }
    }
    return agree ? 0 : (strict ? 3 : 0);
}

int cmd_extend(const std::string& file, const std::string& mode, const std::string& format,
               const std::string& out) {
    StringPresentation P = parse_bqv_file(file);
    if (mode != "tensor" && mode != "trivial") throw ParseError("--mode wants tensor|trivial");
    if (format != "json" && format != "dot") throw ParseError("--format wants json|dot");
    ExtendedPresentation E = build_extension(
        P, mode == "tensor" ? ExtensionMode::Tensor : ExtensionMode::Trivial);
    std::string text = format == "json" ? extension_to_json(E) : extension_to_dot(E);
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out);
        if (!f) throw ParseError("cannot write " + out);
        f << text;
    }
    return 0;
}

int cmd_oracle(const std::string& file, const std::vector<std::string>& ext_query,
               bool check_only) {
    StringPresentation P = parse_bqv_file(file);
    ExtEngine E(P);
    Oracle O(E);
    if (!ext_query.empty()) {
        if (ext_query.size() != 3) throw ParseError("--ext wants c z i");
        int c = vertex_of(P, ext_query[0]), z = vertex_of(P, ext_query[1]);
        int i = std::stoi(ext_query[2]);
        std::cout << "primal " << O.ext_dim_primal(c, z, i) << ", opposite "
                  << O.ext_dim_op(c, z, i) << "\n";
        return 0;
    }
    std::cout << "global dimension: " << E.gldim() << "\n";
    bool all_ok = true;
    for (int v = 0; v < P.n_vertices(); ++v) {
        auto a = O.verify_injective_resolution(v);
        auto b = O.verify_op_injective_resolution(v);
        all_ok = all_ok && a.ok() && b.ok();
        std::cout << "I(" << P.vertex_names[v] << "): " << (a.ok() ? "ok" : "FAIL")
                  << "   cores P(" << P.vertex_names[v] << "): " << (b.ok() ? "ok" : "FAIL")
                  << "\n";
    }
    if (!check_only) {
        for (const auto& [key, cnt] : O.new_arrow_multiset(true))
            std::cout << "top cell " << P.vertex_names[std::get<0>(key)] << " -> "
                      << P.vertex_names[std::get<1>(key)] << " degree " << std::get<2>(key)
                      << ": " << cnt << "\n";
    }
    if (!all_ok) throw OracleError("resolution verification failed");
    return 0;
}

int cmd_selftest(const SelftestOptions& opt, bool strict) {
    SelftestReport rep = run_selftest(opt);
    std::cout << selftest_summary(rep);
    return rep.ok() ? 0 : (strict ? 3 : 0);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"string tree presentations: resolutions, Ext combinatorics, higher relation extensions"};
    app.require_subcommand(1);

    std::string v_file;
    bool v_json = false;
    auto* v = app.add_subcommand("validate", "check the axioms and report flags");
    v->add_option("file", v_file, "input .bqv")->required();
    v->add_flag("--json", v_json, "machine-readable report");

    std::string r_file, r_interval, r_injective, r_projective;
    auto* r = app.add_subcommand("resolve", "minimal resolutions and coresolutions");
    r->add_option("file", r_file, "input .bqv")->required();
    r->add_option("--interval", r_interval, "a:b resolves the uniserial M[a,b] both ways");
    r->add_option("--injective", r_injective, "vertex c: resolve I(c)");
    r->add_option("--projective", r_projective, "vertex z: coresolve P(z)");

    std::string x_file, x_c, x_z;
    int x_degree = 2;
    auto* x = app.add_subcommand("ext", "Ext witnesses and support intervals");
    x->add_option("file", x_file, "input .bqv")->required();
    x->add_option("--c", x_c, "injective side vertex");
    x->add_option("--z", x_z, "projective side vertex");
    x->add_option("--degree", x_degree, "Ext degree (default 2)");

    std::string a_file;
    bool a_json = false, a_strict = false, a_unrestricted = false;
    auto* a = app.add_subcommand("arrows", "new arrows of the higher relation extension");
    a->add_option("file", a_file, "input .bqv")->required();
    a->add_flag("--json", a_json, "machine-readable list");
    a->add_flag("--strict", a_strict, "exit 3 when the oracle disagrees");
    a->add_flag("--no-restrict", a_unrestricted, "scan every c, not just relation endpoints");

    std::string e_file, e_mode = "tensor", e_format = "json", e_out;
    auto* e = app.add_subcommand("extend", "build the extended presentation");
    e->add_option("file", e_file, "input .bqv")->required();
    e->add_option("--mode", e_mode, "tensor|trivial");
    e->add_option("--format", e_format, "json|dot");
    e->add_option("-o,--out", e_out, "output file (default stdout)");

    std::string o_file;
    std::vector<std::string> o_ext;
    bool o_check = false;
    auto* o = app.add_subcommand("oracle", "exact linear algebra cross-check");
    o->add_option("file", o_file, "input .bqv")->required();
    o->add_option("--ext", o_ext, "c z i: one Ext dimension, both models")->expected(3);
    o->add_flag("--check", o_check, "resolution verification only");

    SelftestOptions st;
    st.seed = default_seed();
    bool st_serial = false, st_strict = false;
    auto* s = app.add_subcommand("selftest", "differential test on random instances");
    s->add_option("--string", st.string_count, "number of string instances");
    s->add_option("--gentle", st.gentle_count, "number of gentle instances");
    s->add_option("--max-vertices", st.max_vertices, "vertex bound per instance");
    s->add_option("--density", st.density, "relation density (default: varied)");
    s->add_option("--seed", st.seed, "base seed (default: RELQUIV_SEED or 2024)");
    s->add_option("--threads", st.threads, "worker threads (0 = default)");
    s->add_flag("--serial", st_serial, "disable the parallel fan-out");
    s->add_flag("--strict", st_strict, "exit 3 on any failure");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*v) return cmd_validate(v_file, v_json);
        if (*r) return cmd_resolve(r_file, r_interval, r_injective, r_projective);
        if (*x) return cmd_ext(x_file, x_c, x_z, x_degree);
        if (*a) return cmd_arrows(a_file, a_json, a_strict, a_unrestricted);
        if (*e) return cmd_extend(e_file, e_mode, e_format, e_out);
        if (*o) return cmd_oracle(o_file, o_ext, o_check);
        if (*s) {
            st.parallel = !st_serial;
            return cmd_selftest(st, st_strict);
        }
    } catch (const AxiomError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const OracleError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 3;
    } catch (const ParseError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 1;
}
