#include "relquiv/resolutions.hpp"

#include <algorithm>

namespace relquiv {

namespace {

bool is_prefix(const std::vector<int>& pre, const std::vector<int>& word) {
    return pre.size() <= word.size() && std::equal(pre.begin(), pre.end(), word.begin());
}

Path suffix_path(const StringPresentation& P, const Path& p, size_t from) {
    Path q;
    q.source = from == 0 ? p.source : P.arrows[p.arrows[from - 1]].tgt;
    q.arrows.assign(p.arrows.begin() + from, p.arrows.end());
    return q;
}

bool product_zero(const StringPresentation& P, const std::vector<int>& left,
                  const std::vector<int>& right, size_t right_len) {
    std::vector<int> w = left;
    w.insert(w.end(), right.begin(), right.begin() + right_len);
    return P.word_is_zero(w);
}

struct ChildSpec {
    Interval interval;
    std::vector<int> word;  // connecting path: parent point .. child point
};

ChildSpec child_from(const StringPresentation& P, const Path& max, size_t cut) {
    Path rest = suffix_path(P, max, cut);
    std::vector<int> w(max.arrows.begin(), max.arrows.begin() + cut);
    return {Interval{rest.source, rest.target(P), rest}, std::move(w)};
}

// Index of the maximal path continuing the interval word; stationary
// intervals are disambiguated by the inflow arrow's unique nonzero
// continuation, falling back to enumeration order.
int pick_zero_branch(const StringPresentation& P, const std::vector<Path>& maxima,
                     const std::vector<int>& word, int inflow) {
    if (maxima.size() > 2) throw std::logic_error("more than two maximal paths at a vertex");
    if (!word.empty()) {
        for (size_t i = 0; i < maxima.size(); ++i)
            if (is_prefix(word, maxima[i].arrows)) return static_cast<int>(i);
        throw std::logic_error("interval is not a prefix of any maximal path");
    }
    if (inflow >= 0) {
        for (size_t i = 0; i < maxima.size(); ++i) {
            if (maxima[i].arrows.empty()) continue;
            if (!P.word_is_zero({inflow, maxima[i].arrows.front()})) return static_cast<int>(i);
        }
    }
    return 0;
}

// Children of the augmentation kernel at a resolution root covering the
// interval: the continuation past the interval end plus the second maximal
// path with its start clipped.
std::vector<ChildSpec> root_children(const StringPresentation& P, const Interval& iv) {
    std::vector<Path> maxima = maximal_nonzero_paths_from(P, iv.a);
    int zi = pick_zero_branch(P, maxima, iv.path.arrows, -1);
    std::vector<ChildSpec> out;
    size_t k = iv.path.arrows.size();
    if (maxima[zi].arrows.size() > k) out.push_back(child_from(P, maxima[zi], k + 1));
    for (size_t i = 0; i < maxima.size(); ++i) {
        if (static_cast<int>(i) == zi) continue;
        if (maxima[i].arrows.empty()) throw std::logic_error("stationary second maximal path");
        out.push_back(child_from(P, maxima[i], 1));
    }
    return out;
}

// Children of an interior node: per maximal path from the node point, the
// shortest prefix annihilated by every kill word (the parent connecting
// word(s)). The branch continuing the interval is listed first.
std::vector<ChildSpec> scan_children(const StringPresentation& P, int point,
                                     const std::vector<std::vector<int>>& kills,
                                     const std::vector<int>& interval_word, int inflow) {
    std::vector<Path> maxima = maximal_nonzero_paths_from(P, point);
    std::vector<int> order(maxima.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    if (maxima.size() > 1) {
        int zi = pick_zero_branch(P, maxima, interval_word, inflow);
        std::swap(order[0], order[zi]);
        std::sort(order.begin() + 1, order.end());
    }
    std::vector<ChildSpec> out;
    for (int mi : order) {
        const Path& m = maxima[mi];
        for (size_t cut = 1; cut <= m.arrows.size(); ++cut) {
            bool dead = true;
            for (const auto& kw : kills)
                if (!product_zero(P, kw, m.arrows, cut)) {
                    dead = false;
                    break;
                }
            if (dead) {
                out.push_back(child_from(P, m, cut));
                break;
            }
        }
    }
    return out;
}

void attach(std::vector<ResNode>& next, ResNode& parent, int parent_idx, ChildSpec&& cs) {
    ResNode ch;
    ch.point = cs.interval.a;
    ch.interval = cs.interval;
    ch.role = NodeRole::Branch;
    ch.parents.push_back({parent_idx, std::move(cs.word), 1});
    parent.children.push_back(static_cast<int>(next.size()));
    next.push_back(std::move(ch));
}

int node_inflow(const ResNode& n) {
    if (n.parents.empty() || n.parents.front().word.empty()) return -1;
    return n.parents.front().word.back();
}

std::vector<ChildSpec> node_children(const StringPresentation& P, const ResNode& n,
                                     const std::vector<std::vector<int>>& cokernel_kills) {
    switch (n.role) {
        case NodeRole::Root:
            return root_children(P, *n.interval);
        case NodeRole::TopStart: {
            // Only the branch away from the shared socle; the cokernel node
            // covers the continuation through it.
            std::vector<Path> maxima = maximal_nonzero_paths_from(P, n.interval->a);
            int zi = pick_zero_branch(P, maxima, n.interval->path.arrows, -1);
            std::vector<ChildSpec> out;
            for (size_t i = 0; i < maxima.size(); ++i)
                if (static_cast<int>(i) != zi) out.push_back(child_from(P, maxima[i], 1));
            return out;
        }
        case NodeRole::Cokernel:
            return scan_children(P, n.point, cokernel_kills, {}, -1);
        case NodeRole::Branch:
            return scan_children(P, n.point, {n.parents.front().word},
                                 n.interval->path.arrows, node_inflow(n));
    }
    return {};
}

void expand_levels(const StringPresentation& P, Resolution& R,
                   const std::vector<std::vector<int>>& cokernel_kills) {
    while (true) {
        const int level = static_cast<int>(R.levels.size()) - 1;
        std::vector<ResNode> next;
        for (size_t ni = 0; ni < R.levels[level].size(); ++ni) {
            ResNode& n = R.levels[level][ni];
            for (ChildSpec& cs : node_children(P, n, cokernel_kills))
                attach(next, n, static_cast<int>(ni), std::move(cs));
        }
        if (next.empty()) break;
        R.levels.push_back(std::move(next));
    }
}

}  // namespace

Resolution resolve_interval(const StringPresentation& P, const Interval& iv) {
    Resolution R;
    R.target = Resolution::Target::IntervalModule;
    R.target_interval = iv;
    ResNode root;
    root.point = iv.a;
    root.interval = iv;
    root.role = NodeRole::Root;
    R.levels.push_back({std::move(root)});
    expand_levels(P, R, {});
    return R;
}

Resolution resolve_injective(const StringPresentation& P, int c) {
    std::vector<Path> tops = maximal_nonzero_paths_to(P, c);
    if (tops.empty()) throw std::logic_error("no maximal path into a vertex");
    if (tops.size() == 1) {
        Resolution R = resolve_interval(P, Interval{tops[0].source, c, tops[0]});
        R.target = Resolution::Target::Injective;
        R.target_vertex = c;
        return R;
    }
    if (tops.size() > 2) throw std::logic_error("more than two maximal paths into a vertex");

    Resolution R;
    R.target = Resolution::Target::Injective;
    R.target_vertex = c;

    std::vector<ResNode> level0(2);
    for (int j = 0; j < 2; ++j) {
        level0[j].point = tops[j].source;
        level0[j].interval = Interval{tops[j].source, c, tops[j]};
        level0[j].role = NodeRole::TopStart;
    }
    R.levels.push_back(std::move(level0));

    // Level 1: the away-branches of the two top starts surround the shared
    // cokernel summand at c, whose two parent legs carry opposite signs.
    std::vector<ResNode> level1;
    std::vector<std::vector<ChildSpec>> away(2);
    for (int j = 0; j < 2; ++j)
        away[j] = node_children(P, R.levels[0][j], {});
    auto attach_away = [&](int j) {
        for (ChildSpec& cs : away[j]) {
            ResNode d;
            d.point = cs.interval.a;
            d.interval = cs.interval;
            d.role = NodeRole::Branch;
            d.parents.push_back({j, std::move(cs.word), 1});
            level1.push_back(std::move(d));
        }
    };
    attach_away(0);
    ResNode cnode;
    cnode.point = c;
    cnode.role = NodeRole::Cokernel;
    cnode.parents.push_back({0, tops[0].arrows, 1});
    cnode.parents.push_back({1, tops[1].arrows, -1});
    level1.push_back(std::move(cnode));
    attach_away(1);
    for (size_t i = 0; i < level1.size(); ++i)
        for (const ParentLink& pl : level1[i].parents)
            R.levels[0][pl.index].children.push_back(static_cast<int>(i));
    R.levels.push_back(std::move(level1));

    expand_levels(P, R, {tops[0].arrows, tops[1].arrows});
    return R;
}

Resolution coresolve_projective_op(const StringPresentation& op, int z) {
    return resolve_injective(op, z);
}

int global_dimension(const StringPresentation& P) {
    int g = 0;
    for (int v = 0; v < P.n_vertices(); ++v) {
        Resolution R = resolve_interval(P, Interval{v, v, stationary_path(v)});
        g = std::max(g, R.pd());
    }
    return g;
}

std::vector<int> level_sizes(const Resolution& R) {
    std::vector<int> out;
    for (const auto& lvl : R.levels) out.push_back(static_cast<int>(lvl.size()));
    return out;
}

}  // namespace relquiv
