#include "relquiv/modules.hpp"

#include <functional>
#include <numeric>

namespace relquiv {

Interval make_interval(const StringPresentation& P, int a, int b) {
    std::optional<Path> p = find_path(P, a, b);
    if (!p || !path_nonzero(P, *p))
        throw std::invalid_argument("make_interval: no nonzero path " + P.vertex_names[a] +
                                    " .. " + P.vertex_names[b]);
    return Interval{a, b, *p};
}

std::string interval_to_string(const StringPresentation& P, const Interval& iv) {
    return "[" + P.vertex_names[iv.a] + "," + P.vertex_names[iv.b] + "]";
}

int Representation::total_dim() const {
    return std::accumulate(dims.begin(), dims.end(), 0);
}

bool relations_vanish(const StringPresentation& P, const Representation& R) {
    for (const auto& rel : P.relations) {
        int u = P.arrows[rel.front()].src;
        Mat acc(R.dims[u], R.dims[u]);
        for (int i = 0; i < acc.rows; ++i) acc.at(i, i) = 1;
        for (int a : rel) acc = mat_mul(R.mats[a], acc);
        if (!mat_is_zero(acc)) return false;
    }
    return true;
}

namespace {

Representation empty_rep(const StringPresentation& P) {
    Representation R;
    R.dims.assign(P.n_vertices(), 0);
    R.mats.resize(P.n_arrows());
    return R;
}

void shape_mats(const StringPresentation& P, Representation& R) {
    for (int a = 0; a < P.n_arrows(); ++a) {
        Mat& m = R.mats[a];
        Mat shaped(R.dims[P.arrows[a].tgt], R.dims[P.arrows[a].src]);
        for (int i = 0; i < std::min(m.rows, shaped.rows); ++i)
            for (int j = 0; j < std::min(m.cols, shaped.cols); ++j)
                shaped.at(i, j) = m.at(i, j);
        m = shaped;
    }
}

}  // namespace

Representation interval_module(const StringPresentation& P, const Interval& iv) {
    Representation R = empty_rep(P);
    std::vector<int> vs = iv.path.vertices(P);
    for (int v : vs) R.dims[v] = 1;
    shape_mats(P, R);
    for (int a : iv.path.arrows) R.mats[a].at(0, 0) = 1;
    return R;
}

std::vector<Path> projective_basis(const StringPresentation& P, int v) {
    std::vector<Path> basis;
    std::vector<int> word;
    std::function<void(int)> dfs = [&](int w) {
        basis.push_back(Path{v, word});
        for (int a : P.out_arrows[w]) {
            word.push_back(a);
            if (!P.word_is_zero(word)) dfs(P.arrows[a].tgt);
            word.pop_back();
        }
    };
    dfs(v);
    return basis;
}

Representation projective_module(const StringPresentation& P, int v) {
    std::vector<Path> basis = projective_basis(P, v);
    Representation R = empty_rep(P);
    // position of each basis path inside its vertex space
    std::vector<int> pos(basis.size());
    for (size_t i = 0; i < basis.size(); ++i) {
        int t = basis[i].target(P);
        pos[i] = R.dims[t]++;
    }
    shape_mats(P, R);
    auto locate = [&](const Path& p) -> int {
        for (size_t i = 0; i < basis.size(); ++i)
            if (basis[i] == p) return pos[i];
        return -1;
    };
    for (size_t i = 0; i < basis.size(); ++i) {
        int t = basis[i].target(P);
        for (int a : P.out_arrows[t]) {
            Path q = basis[i];
            q.arrows.push_back(a);
            if (P.word_is_zero(q.arrows)) continue;
            R.mats[a].at(locate(q), pos[i]) = 1;
        }
    }
    return R;
}

std::vector<Path> injective_basis(const StringPresentation& P, int c) {
    // Paths ending at c, via the opposite quiver, translated back.
    StringPresentation op = P.opposite();
    std::vector<Path> rev = projective_basis(op, c);
    std::vector<Path> out;
    for (const Path& p : rev) {
        Path q;
        q.source = p.target(op);
        q.arrows.assign(p.arrows.rbegin(), p.arrows.rend());
        out.push_back(std::move(q));
    }
    return out;
}

Representation injective_module(const StringPresentation& P, int c) {
    std::vector<Path> basis = injective_basis(P, c);
    Representation R = empty_rep(P);
    std::vector<int> pos(basis.size());
    for (size_t i = 0; i < basis.size(); ++i) pos[i] = R.dims[basis[i].source]++;
    shape_mats(P, R);
    auto locate = [&](const Path& p) -> int {
        for (size_t i = 0; i < basis.size(); ++i)
            if (basis[i] == p) return pos[i];
        return -1;
    };
    // Dual action: the functional at a path a.q (starting with arrow a) maps
    // to the functional at q.
    for (size_t i = 0; i < basis.size(); ++i) {
        const Path& p = basis[i];
        if (p.stationary()) continue;
        int a = p.arrows.front();
        Path q;
        q.source = P.arrows[a].tgt;
        q.arrows.assign(p.arrows.begin() + 1, p.arrows.end());
        R.mats[a].at(locate(q), pos[i]) = 1;
    }
    return R;
}

std::vector<int> walk_vertices(const StringPresentation& P, const Walk& w) {
    std::vector<int> vs{w.start};
    for (size_t i = 0; i < w.letters.size(); ++i) {
        const WalkLetter& l = w.letters[i];
        const Arrow& ar = P.arrows[l.arrow];
        int from = l.inverse ? ar.tgt : ar.src;
        int to = l.inverse ? ar.src : ar.tgt;
        if (vs.back() != from)
            throw std::invalid_argument("walk: letter does not attach at current endpoint");
        if (i > 0 && w.letters[i - 1].arrow == l.arrow && w.letters[i - 1].inverse != l.inverse)
            throw std::invalid_argument("walk: not reduced");
        vs.push_back(to);
    }
    return vs;
}

Representation string_module(const StringPresentation& P, const Walk& w) {
    std::vector<int> vs = walk_vertices(P, w);
    Representation R = empty_rep(P);
    std::vector<int> pos(vs.size());
    for (size_t i = 0; i < vs.size(); ++i) pos[i] = R.dims[vs[i]]++;
    shape_mats(P, R);
    for (size_t i = 0; i < w.letters.size(); ++i) {
        const WalkLetter& l = w.letters[i];
        // direct: the arrow carries position i to i+1; inverse: i+1 to i
        if (l.inverse)
            R.mats[l.arrow].at(pos[i], pos[i + 1]) = 1;
        else
            R.mats[l.arrow].at(pos[i + 1], pos[i]) = 1;
    }
    return R;
}

}  // namespace relquiv
