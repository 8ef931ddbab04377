#include "relquiv/gentle.hpp"

#include <algorithm>

namespace relquiv {

void require_gentle_tree(const StringPresentation& P) {
    ValidationReport rep = validate(P);
    if (!(rep.string_tree() && rep.is_gentle())) {
        std::string msg = "input is not an admissible gentle tree";
        for (const auto& w : rep.witnesses) msg += "; " + w;
        throw AxiomError(msg);
    }
}

std::vector<Overlapping> maximal_overlappings(const StringPresentation& P) {
    require_gentle_tree(P);
    int nr = static_cast<int>(P.relations.size());

    // Quadratic generators chain through shared arrows; both neighbours are
    // unique, so maximal chains are exactly the successor-walk components.
    auto successor = [&](int r) {
        for (int s = 0; s < nr; ++s)
            if (P.relations[s][0] == P.relations[r][1]) return s;
        return -1;
    };
    auto predecessor = [&](int r) {
        for (int s = 0; s < nr; ++s)
            if (P.relations[s][1] == P.relations[r][0]) return s;
        return -1;
    };

    std::vector<Overlapping> out;
    for (int r = 0; r < nr; ++r) {
        if (predecessor(r) != -1) continue;
        Overlapping o;
        for (int cur = r; cur != -1; cur = successor(cur)) {
            if (!o.generators.empty()) o.shared.push_back(P.relations[cur][0]);
            o.generators.push_back(cur);
        }
        o.support.push_back(P.relations[r][0]);
        for (int g : o.generators) o.support.push_back(P.relations[g][1]);
        o.c = P.arrows[o.support.front()].src;
        o.z = P.arrows[o.support.back()].tgt;
        out.push_back(std::move(o));
    }
    return out;
}

std::vector<NewArrow> gentle_new_arrows(const StringPresentation& P) {
    std::vector<NewArrow> out;
    for (const Overlapping& o : maximal_overlappings(P)) {
        NewArrow a;
        a.z = o.z;
        a.c = o.c;
        a.degree = o.t() + 1;
        a.prov = Provenance::Overlap;
        a.name = "x_" + P.vertex_names[o.z] + "_" + P.vertex_names[o.c] + "_" +
                 std::to_string(a.degree);
        out.push_back(std::move(a));
    }
    return out;
}

namespace {

bool contains_subword(const ExtWord& w, const ExtWord& sub) {
    if (sub.size() > w.size()) return false;
    for (size_t i = 0; i + sub.size() <= w.size(); ++i)
        if (std::equal(sub.begin(), sub.end(), w.begin() + i)) return true;
    return false;
}

ExtLetter old_letter(int a) { return ExtLetter{false, a}; }
ExtLetter new_letter(int a) { return ExtLetter{true, a}; }

}  // namespace

std::vector<ExtWord> tensor_relations(const StringPresentation& P) {
    std::vector<ExtWord> out;
    for (const auto& rel : P.relations) {
        ExtWord w;
        for (int a : rel) w.push_back(old_letter(a));
        out.push_back(std::move(w));
    }
    std::vector<Overlapping> chains = maximal_overlappings(P);
    for (size_t i = 0; i < chains.size(); ++i) {
        out.push_back({new_letter(static_cast<int>(i)), old_letter(chains[i].support.front())});
        out.push_back({old_letter(chains[i].support.back()), new_letter(static_cast<int>(i))});
    }
    return out;
}

std::vector<ExtWord> trivial_extension_relations(const StringPresentation& P) {
    std::vector<ExtWord> out = tensor_relations(P);
    std::vector<Overlapping> chains = maximal_overlappings(P);

    // Any product through two new arrows vanishes; the generators are the
    // subword-minimal words zeta rho zeta'. The tree has at most one old path
    // rho between the relevant endpoints.
    size_t base = out.size();
    for (size_t i = 0; i < chains.size(); ++i) {
        for (size_t j = 0; j < chains.size(); ++j) {
            std::optional<Path> rho = find_path(P, chains[i].c, chains[j].z);
            if (!rho) continue;
            ExtWord w;
            w.push_back(new_letter(static_cast<int>(i)));
            for (int a : rho->arrows) w.push_back(old_letter(a));
            w.push_back(new_letter(static_cast<int>(j)));
            bool minimal = true;
            for (size_t k = 0; k < base; ++k)
                if (contains_subword(w, out[k])) minimal = false;
            if (minimal) out.push_back(std::move(w));
        }
    }
    return out;
}

std::string ext_word_to_string(const StringPresentation& P,
                               const std::vector<NewArrow>& news, const ExtWord& w) {
    std::string s;
    for (const ExtLetter& l : w) {
        if (!s.empty()) s += " ";
        s += l.is_new ? news[l.index].name : P.arrows[l.index].name;
    }
    return s;
}

}  // namespace relquiv
