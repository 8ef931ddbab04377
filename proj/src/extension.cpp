#include "relquiv/extension.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <tuple>

namespace relquiv {

namespace {

using ordered_json = nlohmann::ordered_json;

void finalize(ExtendedPresentation& E) {
    StringPresentation Q = to_presentation(E);
    for (int x = 0; x < Q.n_arrows(); ++x)
        for (int y = x + 1; y < Q.n_arrows(); ++y)
            if (Q.arrows[x].src == Q.arrows[y].tgt && Q.arrows[x].tgt == Q.arrows[y].src)
                E.has_two_cycle = true;
    if (E.relations_specified) {
        ValidationReport rep = validate(Q);
        E.gentle = rep.is_gentle();
        E.monomial = true;
    }
}

}  // namespace

ExtendedPresentation build_extension(const StringPresentation& P, ExtensionMode mode) {
    require_string_tree(P);
    if (validate(P).is_gentle()) {
        ExtendedPresentation E;
        E.base = P;
        E.mode = mode;
        E.arrows = gentle_new_arrows(P);
        std::vector<Overlapping> chains = maximal_overlappings(P);
        for (Overlapping& o : chains) E.overlaps.emplace_back(std::move(o));
        E.relations_specified = true;
        E.relations = mode == ExtensionMode::Tensor ? tensor_relations(P)
                                                    : trivial_extension_relations(P);
        finalize(E);
        return E;
    }
    ExtEngine engine(P);
    return build_extension(engine, mode);
}

ExtendedPresentation build_extension(const ExtEngine& E, ExtensionMode mode) {
    const StringPresentation& P = E.pres();
    if (validate(P).is_gentle()) return build_extension(P, mode);
    ExtendedPresentation out;
    out.base = P;
    out.mode = mode;
    out.arrows = new_arrows(E);
    out.overlaps.assign(out.arrows.size(), std::nullopt);
    finalize(out);
    return out;
}

StringPresentation to_presentation(const ExtendedPresentation& E) {
    StringPresentation Q = E.base;
    int old_count = Q.n_arrows();
    for (const NewArrow& a : E.arrows) Q.arrows.push_back({a.name, a.z, a.c});
    if (E.relations_specified) {
        Q.relations.clear();
        for (const ExtWord& w : E.relations) {
            std::vector<int> word;
            for (const ExtLetter& l : w)
                word.push_back(l.is_new ? old_count + l.index : l.index);
            Q.relations.push_back(std::move(word));
        }
    }
    Q.rebuild_adjacency();
    return Q;
}

namespace {

ordered_json path_to_json(const StringPresentation& P, const Path& p) {
    ordered_json j;
    j["source"] = P.vertex_names[p.source];
    ordered_json arr = ordered_json::array();
    for (int a : p.arrows) arr.push_back(P.arrows[a].name);
    j["arrows"] = std::move(arr);
    return j;
}

Path path_from_json(const StringPresentation& P, const ordered_json& j) {
    Path p;
    p.source = P.vertex_index(j.at("source").get<std::string>());
    for (const auto& n : j.at("arrows")) p.arrows.push_back(P.arrow_index(n.get<std::string>()));
    return p;
}

ordered_json witness_to_json(const StringPresentation& P, const ExtWitness& w) {
    ordered_json j;
    j["kind"] = w.kind == WitnessKind::PathClass ? "path" : "difference";
    j["degree"] = w.degree;
    j["level"] = w.level;
    j["node"] = w.node;
    j["omega"] = path_to_json(P, w.omega);
    return j;
}

ExtWitness witness_from_json(const StringPresentation& P, const ordered_json& j) {
    ExtWitness w;
    w.kind = j.at("kind").get<std::string>() == "path" ? WitnessKind::PathClass
                                                       : WitnessKind::DifferenceClass;
    w.degree = j.at("degree").get<int>();
    w.level = j.at("level").get<int>();
    w.node = j.at("node").get<int>();
    w.omega = path_from_json(P, j.at("omega"));
    return w;
}

ordered_json overlap_to_json(const StringPresentation& P, const Overlapping& o) {
    ordered_json j;
    j["generators"] = o.generators;
    ordered_json shared = ordered_json::array();
    for (int a : o.shared) shared.push_back(P.arrows[a].name);
    j["shared"] = std::move(shared);
    ordered_json support = ordered_json::array();
    for (int a : o.support) support.push_back(P.arrows[a].name);
    j["support"] = std::move(support);
    j["c"] = P.vertex_names[o.c];
    j["z"] = P.vertex_names[o.z];
    return j;
}

Overlapping overlap_from_json(const StringPresentation& P, const ordered_json& j) {
    Overlapping o;
    o.generators = j.at("generators").get<std::vector<int>>();
    for (const auto& n : j.at("shared")) o.shared.push_back(P.arrow_index(n.get<std::string>()));
    for (const auto& n : j.at("support")) o.support.push_back(P.arrow_index(n.get<std::string>()));
    o.c = P.vertex_index(j.at("c").get<std::string>());
    o.z = P.vertex_index(j.at("z").get<std::string>());
    return o;
}

}  // namespace

std::string extension_to_json(const ExtendedPresentation& E) {
    const StringPresentation& P = E.base;
    ordered_json j;
    j["mode"] = E.mode == ExtensionMode::Tensor ? "tensor" : "trivial";
    j["vertices"] = P.vertex_names;

    ordered_json arrows = ordered_json::array();
    for (const Arrow& a : P.arrows) {
        ordered_json e;
        e["name"] = a.name;
        e["src"] = P.vertex_names[a.src];
        e["tgt"] = P.vertex_names[a.tgt];
        e["kind"] = "old";
        arrows.push_back(std::move(e));
    }
    for (size_t i = 0; i < E.arrows.size(); ++i) {
        const NewArrow& a = E.arrows[i];
        ordered_json e;
        e["name"] = a.name;
        e["src"] = P.vertex_names[a.z];
        e["tgt"] = P.vertex_names[a.c];
        e["kind"] = "new";
        e["degree"] = a.degree;
        e["provenance"] = a.prov == Provenance::Overlap ? "overlap" : "witness";
        if (a.witness) e["witness"] = witness_to_json(P, *a.witness);
        if (i < E.overlaps.size() && E.overlaps[i])
            e["overlap"] = overlap_to_json(P, *E.overlaps[i]);
        arrows.push_back(std::move(e));
    }
    j["arrows"] = std::move(arrows);

    j["relations_specified"] = E.relations_specified;
    ordered_json rels = ordered_json::array();
    if (E.relations_specified) {
        for (const ExtWord& w : E.relations) {
            ordered_json word = ordered_json::array();
            for (const ExtLetter& l : w)
                word.push_back(l.is_new ? E.arrows[l.index].name : P.arrows[l.index].name);
            rels.push_back(std::move(word));
        }
    } else {
        for (const auto& rel : P.relations) {
            ordered_json word = ordered_json::array();
            for (int a : rel) word.push_back(P.arrows[a].name);
            rels.push_back(std::move(word));
        }
    }
    j["relations"] = std::move(rels);

    j["flags"] = {{"gentle", E.gentle},
                  {"monomial", E.monomial},
                  {"two_cycle", E.has_two_cycle}};
    return j.dump(2) + "\n";
}

ExtendedPresentation extension_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad extension JSON: ") + e.what());
    }
    ExtendedPresentation E;
    E.mode = j.at("mode").get<std::string>() == "tensor" ? ExtensionMode::Tensor
                                                          : ExtensionMode::Trivial;
    E.base.vertex_names = j.at("vertices").get<std::vector<std::string>>();

    std::map<std::string, int> new_index;
    for (const auto& e : j.at("arrows")) {
        if (e.at("kind").get<std::string>() == "old") {
            Arrow a;
            a.name = e.at("name").get<std::string>();
            a.src = E.base.vertex_index(e.at("src").get<std::string>());
            a.tgt = E.base.vertex_index(e.at("tgt").get<std::string>());
            if (a.src < 0 || a.tgt < 0) throw ParseError("arrow endpoint not in vertex list");
            E.base.arrows.push_back(std::move(a));
        }
    }
    E.base.rebuild_adjacency();

    for (const auto& e : j.at("arrows")) {
        if (e.at("kind").get<std::string>() == "old") continue;
        NewArrow a;
        a.name = e.at("name").get<std::string>();
        a.z = E.base.vertex_index(e.at("src").get<std::string>());
        a.c = E.base.vertex_index(e.at("tgt").get<std::string>());
        if (a.z < 0 || a.c < 0) throw ParseError("arrow endpoint not in vertex list");
        a.degree = e.at("degree").get<int>();
        a.prov = e.at("provenance").get<std::string>() == "overlap" ? Provenance::Overlap
                                                                    : Provenance::Witness;
        if (e.contains("witness")) a.witness = witness_from_json(E.base, e.at("witness"));
        new_index[a.name] = static_cast<int>(E.arrows.size());
        if (e.contains("overlap")) {
            E.overlaps.push_back(overlap_from_json(E.base, e.at("overlap")));
        } else {
            E.overlaps.push_back(std::nullopt);
        }
        E.arrows.push_back(std::move(a));
    }

    E.relations_specified = j.at("relations_specified").get<bool>();
    for (const auto& word : j.at("relations")) {
        ExtWord w;
        std::vector<int> old_word;
        bool all_old = true;
        for (const auto& n : word) {
            std::string name = n.get<std::string>();
            int a = E.base.arrow_index(name);
            if (a >= 0) {
                w.push_back({false, a});
                old_word.push_back(a);
            } else {
                auto it = new_index.find(name);
                if (it == new_index.end()) throw ParseError("unknown letter " + name);
                w.push_back({true, it->second});
                all_old = false;
            }
        }
        if (all_old) E.base.relations.push_back(std::move(old_word));
        if (E.relations_specified) E.relations.push_back(std::move(w));
    }
    E.base.rebuild_adjacency();

    const auto& flags = j.at("flags");
    E.gentle = flags.at("gentle").get<bool>();
    E.monomial = flags.at("monomial").get<bool>();
    E.has_two_cycle = flags.at("two_cycle").get<bool>();
    return E;
}

std::string extension_to_dot(const ExtendedPresentation& E) {
    const StringPresentation& P = E.base;
    std::string s = "digraph extension {\n  rankdir=LR;\n";
    for (const std::string& v : P.vertex_names) s += "  \"" + v + "\";\n";
    for (const Arrow& a : P.arrows)
        s += "  \"" + P.vertex_names[a.src] + "\" -> \"" + P.vertex_names[a.tgt] +
             "\" [label=\"" + a.name + "\"];\n";
    for (const NewArrow& a : E.arrows)
        s += "  \"" + P.vertex_names[a.z] + "\" -> \"" + P.vertex_names[a.c] +
             "\" [label=\"" + a.name + "\", style=dashed];\n";
    s += "}\n";
    return s;
}

TheoremReport verify_theorem_7_1(const ExtEngine& E) {
    const StringPresentation& P = E.pres();
    require_gentle_tree(P);
    TheoremReport rep;
    rep.tensor_gentle = build_extension(P, ExtensionMode::Tensor).gentle;
    rep.trivial_monomial = build_extension(P, ExtensionMode::Trivial).monomial;

    std::map<std::tuple<int, int, int>, int> fast, full;
    for (const NewArrow& a : gentle_new_arrows(P)) fast[{a.z, a.c, a.degree}]++;
    for (const NewArrow& a : new_arrows(E)) full[{a.z, a.c, a.degree}]++;
    rep.arrows_match = fast == full;
    return rep;
}

}  // namespace relquiv
