#include "relquiv/render.hpp"

#include <algorithm>
#include <sstream>

namespace relquiv {

namespace {

std::string word_str(const StringPresentation& P, std::vector<int> word, bool op_side) {
    if (word.empty()) return "e";
    if (op_side) std::reverse(word.begin(), word.end());
    std::string s;
    for (int a : word) {
        if (!s.empty()) s += " ";
        s += P.arrows[a].name;
    }
    return s;
}

std::string interval_str(const StringPresentation& P, const Interval& iv, bool op_side) {
    int a = op_side ? iv.b : iv.a;
    int b = op_side ? iv.a : iv.b;
    return "[" + P.vertex_names[a] + "," + P.vertex_names[b] + "]";
}

std::string target_str(const StringPresentation& P, const Resolution& R, bool op_side) {
    if (R.target == Resolution::Target::Injective)
        return op_side ? "P(" + P.vertex_names[R.target_vertex] + ")"
                       : "I(" + P.vertex_names[R.target_vertex] + ")";
    return "M" + interval_str(P, *R.target_interval, op_side);
}

std::string summand_str(const StringPresentation& P, const ResNode& n, bool op_side) {
    return (op_side ? "I(" : "P(") + P.vertex_names[n.point] + ")";
}

std::string level_term(const StringPresentation& P, const Resolution& R, int lvl, bool op_side) {
    std::string s;
    for (const ResNode& n : R.levels[lvl]) {
        if (!s.empty()) s += " + ";
        s += summand_str(P, n, op_side);
    }
    return s.empty() ? "0" : s;
}

}  // namespace

std::string term_line(const StringPresentation& P, const Resolution& R, bool op_side) {
    std::vector<std::string> terms;
    if (op_side) {
        terms.push_back(target_str(P, R, true));
        for (size_t l = 0; l < R.levels.size(); ++l)
            terms.push_back(level_term(P, R, static_cast<int>(l), true));
    } else {
        for (int l = R.pd(); l >= 0; --l) terms.push_back(level_term(P, R, l, false));
        terms.push_back(target_str(P, R, false));
    }
    std::string s = "0";
    for (const std::string& t : terms) s += " -> " + t;
    return s + " -> 0";
}

std::string render_levels(const StringPresentation& P, const Resolution& R, bool op_side) {
    std::ostringstream os;
    os << term_line(P, R, op_side) << "\n";
    for (size_t lvl = 0; lvl < R.levels.size(); ++lvl) {
        os << (op_side ? "degree " : "level ") << lvl << ":\n";
        for (size_t k = 0; k < R.levels[lvl].size(); ++k) {
            const ResNode& n = R.levels[lvl][k];
            os << "  " << k << ": " << summand_str(P, n, op_side);
            if (n.interval) os << " " << interval_str(P, *n.interval, op_side);
            switch (n.role) {
                case NodeRole::Root: os << " root"; break;
                case NodeRole::TopStart: os << " top"; break;
                case NodeRole::Cokernel: os << " cokernel"; break;
                case NodeRole::Branch: break;
            }
            for (const ParentLink& pl : n.parents)
                os << "  <- " << pl.index << " via " << (pl.sign < 0 ? "-" : "")
                   << word_str(P, pl.word, op_side);
            os << "\n";
        }
    }
    return os.str();
}

}  // namespace relquiv
