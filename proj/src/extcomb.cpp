#include "relquiv/extcomb.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace relquiv {

namespace {

std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

bool kills_all_children(const StringPresentation& P, const Resolution& R, int level,
                        int node_idx, const std::vector<int>& omega) {
    const ResNode& n = R.node(level, node_idx);
    for (int ch : n.children) {
        const ResNode& child = R.node(level + 1, ch);
        for (const ParentLink& l : child.parents) {
            if (l.index != node_idx) continue;
            if (!P.word_is_zero(concat(omega, l.word))) return false;
        }
    }
    return true;
}

std::vector<ExtWitness> witnesses_impl(const StringPresentation& P, const Resolution& R,
                                       int z, int degree) {
    if (degree < 2) throw std::invalid_argument("witnesses need degree >= 2");
    std::vector<ExtWitness> out;
    if (degree < static_cast<int>(R.levels.size())) {
        for (size_t ni = 0; ni < R.levels[degree].size(); ++ni) {
            const ResNode& n = R.levels[degree][ni];
            std::optional<Path> omega = find_path(P, z, n.point);
            if (!omega || !path_nonzero(P, *omega)) continue;
            if (n.parents.size() != 1)
                throw std::logic_error("deep node with multiple parents");
            int parent_pt = R.node(degree - 1, n.parents.front().index).point;
            std::vector<int> vs = omega->vertices(P);
            if (std::find(vs.begin(), vs.end(), parent_pt) != vs.end()) continue;
            if (!kills_all_children(P, R, degree, static_cast<int>(ni), omega->arrows))
                continue;
            ExtWitness w;
            w.kind = WitnessKind::PathClass;
            w.degree = degree;
            w.level = degree;
            w.node = static_cast<int>(ni);
            w.omega = std::move(*omega);
            out.push_back(std::move(w));
        }
    }
    if (degree - 1 < static_cast<int>(R.levels.size())) {
        for (size_t ni = 0; ni < R.levels[degree - 1].size(); ++ni) {
            const ResNode& n = R.levels[degree - 1][ni];
            if (n.children.size() == 2 && n.point == z) {
                ExtWitness w;
                w.kind = WitnessKind::DifferenceClass;
                w.degree = degree;
                w.level = degree - 1;
                w.node = static_cast<int>(ni);
                w.omega = stationary_path(z);
                out.push_back(std::move(w));
            }
        }
    }
    return out;
}

ExtSupport support_impl(const StringPresentation& P, const Resolution& R, int degree) {
    ExtSupport out;
    out.degree = degree;
    std::set<int> all;
    if (degree >= 2 && degree < static_cast<int>(R.levels.size())) {
        for (size_t ni = 0; ni < R.levels[degree].size(); ++ni) {
            const ResNode& n = R.levels[degree][ni];
            const ParentLink& pl = n.parents.front();
            int parent_pt = R.node(degree - 1, pl.index).point;

            auto valid = [&](const Path& omega) {
                return kills_all_children(P, R, degree, static_cast<int>(ni), omega.arrows);
            };

            // Parent branch: suffixes of the connecting word, from the node
            // point back up to just below the parent point.
            SupportInterval par;
            par.level = degree;
            par.node = static_cast<int>(ni);
            par.branch_root = n.point;
            {
                Path omega = stationary_path(n.point);
                if (valid(omega)) par.zs.push_back(n.point);
                for (size_t k = pl.word.size(); k-- > 1;) {
                    Path suf;
                    suf.source = P.arrows[pl.word[k - 1]].tgt;
                    suf.arrows.assign(pl.word.begin() + k, pl.word.end());
                    if (suf.source == parent_pt) break;
                    if (valid(suf)) par.zs.push_back(suf.source);
                }
            }
            if (!par.zs.empty()) out.intervals.push_back(par);

            // Off branch: the other in-arrow of the node point, extended
            // along its unique nonzero continuation line.
            int sigma_last = pl.word.empty() ? -1 : pl.word.back();
            for (int iota : P.in_arrows[n.point]) {
                if (iota == sigma_last) continue;
                SupportInterval off;
                off.level = degree;
                off.node = static_cast<int>(ni);
                off.branch_root = n.point;
                off.off_branch = true;
                Path omega;
                omega.source = P.arrows[iota].src;
                omega.arrows = {iota};
                while (true) {
                    if (valid(omega)) off.zs.push_back(omega.source);
                    int next = -1;
                    for (int kappa : P.in_arrows[omega.source])
                        if (!P.word_is_zero(concat({kappa}, omega.arrows))) next = kappa;
                    if (next < 0) break;
                    omega.arrows.insert(omega.arrows.begin(), next);
                    omega.source = P.arrows[next].src;
                }
                if (!off.zs.empty()) out.intervals.push_back(off);
            }
        }
    }
    if (degree >= 2 && degree - 1 < static_cast<int>(R.levels.size()))
        for (const ResNode& n : R.levels[degree - 1])
            if (n.children.size() == 2) out.difference_points.push_back(n.point);

    for (const auto& iv : out.intervals) all.insert(iv.zs.begin(), iv.zs.end());
    all.insert(out.difference_points.begin(), out.difference_points.end());
    out.all.assign(all.begin(), all.end());
    return out;
}

bool word_is_relation(const StringPresentation& P, const std::vector<int>& w) {
    return std::find(P.relations.begin(), P.relations.end(), w) != P.relations.end();
}

bool witness_survives(const StringPresentation& P, const Resolution& R, const ExtWitness& w) {
    const ResNode& n = R.node(w.level, w.node);
    if (w.kind == WitnessKind::PathClass) {
        if (n.children.empty()) return w.omega.stationary();
        for (int ch : n.children) {
            const ResNode& child = R.node(w.level + 1, ch);
            for (const ParentLink& l : child.parents)
                if (l.index == w.node && word_is_relation(P, concat(w.omega.arrows, l.word)))
                    return true;
        }
        return false;
    }
    // Difference classes survive when both legs extend by a full relation.
    for (int ch : n.children) {
        const ResNode& child = R.node(w.level + 1, ch);
        bool leg_ok = false;
        for (const ParentLink& l : child.parents) {
            if (l.index != w.node) continue;
            for (int g : child.children) {
                const ResNode& grand = R.node(w.level + 2, g);
                for (const ParentLink& gl : grand.parents)
                    if (gl.index == ch && word_is_relation(P, concat(l.word, gl.word)))
                        leg_ok = true;
            }
        }
        if (!leg_ok) return false;
    }
    return true;
}

std::vector<TopClass> top_basis_impl(const StringPresentation& P, const Resolution& R,
                                     int degree) {
    std::vector<TopClass> out;
    for (int v = 0; v < P.n_vertices(); ++v)
        for (ExtWitness& w : witnesses_impl(P, R, v, degree))
            if (witness_survives(P, R, w)) out.push_back({v, std::move(w)});
    return out;
}

}  // namespace

std::vector<ExtWitness> ext_witnesses(const ExtEngine& E, int c, int z, int degree) {
    return witnesses_impl(E.pres(), E.injective_resolution(c), z, degree);
}

std::vector<ExtWitness> op_ext_witnesses(const ExtEngine& E, int c, int z, int degree) {
    return witnesses_impl(E.op(), E.op_injective_resolution(z), c, degree);
}

ExtSupport ext_support(const ExtEngine& E, int c, int degree) {
    ExtSupport s = support_impl(E.pres(), E.injective_resolution(c), degree);
    s.c = c;
    return s;
}

ExtSupport ext_cosupport(const ExtEngine& E, int z, int degree) {
    ExtSupport s = support_impl(E.op(), E.op_injective_resolution(z), degree);
    s.c = z;
    return s;
}

std::vector<TopClass> left_top_basis(const ExtEngine& E, int c, int degree) {
    return top_basis_impl(E.pres(), E.injective_resolution(c), degree);
}

std::vector<TopClass> right_top_basis(const ExtEngine& E, int z, int degree) {
    return top_basis_impl(E.op(), E.op_injective_resolution(z), degree);
}

std::vector<NewArrow> new_arrows(const ExtEngine& E, bool restrict_c) {
    const StringPresentation& P = E.pres();
    std::vector<int> cs;
    if (restrict_c) {
        std::set<int> ends;
        for (const auto& rel : P.relations) {
            ends.insert(P.arrows[rel.front()].src);
            ends.insert(P.arrows[rel.back()].tgt);
        }
        cs.assign(ends.begin(), ends.end());
    } else {
        for (int v = 0; v < P.n_vertices(); ++v) cs.push_back(v);
    }

    std::vector<NewArrow> out;
    std::map<std::pair<int, int>, std::map<int, int>> right_cache;  // (z, i) -> c -> count
    for (int i = 2; i <= E.gldim(); ++i) {
        for (int c : cs) {
            std::vector<TopClass> left = left_top_basis(E, c, i);
            std::map<int, std::vector<const TopClass*>> by_z;
            for (const TopClass& t : left) by_z[t.vertex].push_back(&t);
            for (auto& [z, classes] : by_z) {
                auto key = std::make_pair(z, i);
                auto it = right_cache.find(key);
                if (it == right_cache.end()) {
                    std::map<int, int> counts;
                    for (const TopClass& t : right_top_basis(E, z, i)) counts[t.vertex]++;
                    it = right_cache.emplace(key, std::move(counts)).first;
                }
                auto rc = it->second.find(c);
                int keep = std::min(static_cast<int>(classes.size()),
                                    rc == it->second.end() ? 0 : rc->second);
                for (int k = 0; k < keep; ++k) {
                    NewArrow a;
                    a.z = z;
                    a.c = c;
                    a.degree = i;
                    a.prov = Provenance::Witness;
                    a.witness = classes[k]->witness;
                    a.name = "x_" + P.vertex_names[z] + "_" + P.vertex_names[c] + "_" +
                             std::to_string(i);
                    if (keep > 1) a.name += "_" + std::to_string(k + 1);
                    out.push_back(std::move(a));
                }
            }
        }
    }
    return out;
}

std::string witness_to_string(const StringPresentation& P, const ExtWitness& w) {
    if (w.kind == WitnessKind::PathClass)
        return "path class at level " + std::to_string(w.level) + " node " +
               std::to_string(w.node) + " via " + path_to_string(P, w.omega);
    return "difference class under level " + std::to_string(w.level) + " node " +
           std::to_string(w.node);
}

}  // namespace relquiv
