#include "relquiv/oracle.hpp"

#include <algorithm>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace relquiv {

namespace {

bool is_prefix(const std::vector<int>& pre, const std::vector<int>& word) {
    return pre.size() <= word.size() && std::equal(pre.begin(), pre.end(), word.begin());
}

std::vector<int> level_coords(const Resolution& R, int i,
                              const std::function<bool(int)>& has_path) {
    std::vector<int> out;
    if (i < 0 || i >= static_cast<int>(R.levels.size())) return out;
    for (size_t n = 0; n < R.levels[i].size(); ++n)
        if (has_path(R.levels[i][n].point)) out.push_back(static_cast<int>(n));
    return out;
}

std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

}  // namespace

Oracle::Oracle(const ExtEngine& E, bool reversed_lift_order) : E_(E) {
    lifts_.reserve(E_.pres().n_arrows());
    for (int a = 0; a < E_.pres().n_arrows(); ++a)
        lifts_.push_back(lift_chain_map(a, reversed_lift_order));
}

int Oracle::hom_dim(int a, int z) const { return E_.nonzero_path(z, a) ? 1 : 0; }

Mat Oracle::coboundary(const StringPresentation& P, const Resolution& R, int z, int i) const {
    const bool primal = &P == &E_.pres();
    auto path = [&](int u, int v) -> const std::optional<Path>& {
        return primal ? E_.nonzero_path(u, v) : E_.op_nonzero_path(u, v);
    };
    auto has = [&](int x) { return static_cast<bool>(path(z, x)); };
    std::vector<int> cols = level_coords(R, i, has);
    std::vector<int> rows = level_coords(R, i + 1, has);
    Mat D(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t ci = 0; ci < cols.size(); ++ci) {
        const std::optional<Path>& rho = path(z, R.node(i, cols[ci]).point);
        for (size_t ri = 0; ri < rows.size(); ++ri) {
            const ResNode& n = R.node(i + 1, rows[ri]);
            std::int64_t v = 0;
            for (const ParentLink& l : n.parents) {
                if (l.index != cols[ci]) continue;
                if (!P.word_is_zero(concat(rho->arrows, l.word))) v += l.sign;
            }
            D.at(static_cast<int>(ri), static_cast<int>(ci)) = fmod_p(v);
        }
    }
    return D;
}

Mat Oracle::cocycles(const StringPresentation& P, const Resolution& R, int z, int i) const {
    if (i < 0 || i >= static_cast<int>(R.levels.size())) return Mat(0, 0);
    return kernel_basis(coboundary(P, R, z, i));
}

int Oracle::ext_dim_model(const StringPresentation& P, const Resolution& R, int z, int i) const {
    if (i < 0 || i >= static_cast<int>(R.levels.size())) return 0;
    int zdim = cocycles(P, R, z, i).cols;
    int bdim = i == 0 ? 0 : mat_rank(coboundary(P, R, z, i - 1));
    return zdim - bdim;
}

int Oracle::ext_dim_primal(int c, int z, int i) const {
    return ext_dim_model(E_.pres(), E_.injective_resolution(c), z, i);
}

int Oracle::ext_dim_op(int c, int z, int i) const {
    return ext_dim_model(E_.op(), E_.op_injective_resolution(z), c, i);
}

int Oracle::ext_dim(int c, int z, int i) const {
    int a = ext_dim_primal(c, z, i);
    int b = ext_dim_op(c, z, i);
    if (a != b)
        throw OracleError("ext model mismatch at (c=" + E_.pres().vertex_names[c] +
                          ", z=" + E_.pres().vertex_names[z] + ", i=" + std::to_string(i) +
                          "): " + std::to_string(a) + " vs " + std::to_string(b));
    return a;
}

namespace {

// Per-level basis layout of a direct sum of projectives, grouped by vertex.
struct SumLayout {
    // per vertex: list of (node index, basis index within that node)
    std::vector<std::vector<std::pair<int, int>>> slots;
    // per node: its projective basis and a lookup word -> basis index
    std::vector<std::vector<Path>> bases;
    std::vector<std::map<std::vector<int>, int>> lookup;
    // (node, basis index) -> position within slots[vertex]
    std::map<std::pair<int, int>, int> pos;
};

SumLayout layout_level(const StringPresentation& P, const Resolution& R, int level) {
    SumLayout L;
    L.slots.resize(P.n_vertices());
    const auto& nodes = R.levels[level];
    L.bases.resize(nodes.size());
    L.lookup.resize(nodes.size());
    for (size_t n = 0; n < nodes.size(); ++n) {
        L.bases[n] = projective_basis(P, nodes[n].point);
        for (size_t b = 0; b < L.bases[n].size(); ++b) {
            L.lookup[n][L.bases[n][b].arrows] = static_cast<int>(b);
            int w = L.bases[n][b].target(P);
            L.pos[{static_cast<int>(n), static_cast<int>(b)}] =
                static_cast<int>(L.slots[w].size());
            L.slots[w].push_back({static_cast<int>(n), static_cast<int>(b)});
        }
    }
    return L;
}

}  // namespace

Oracle::ResolutionCheck Oracle::verify_resolution(const StringPresentation& P,
                                                  const Resolution& R) const {
    ResolutionCheck out;
    int nv = P.n_vertices();
    int pd = R.pd();
    std::vector<SumLayout> layouts;
    for (int k = 0; k <= pd; ++k) layouts.push_back(layout_level(P, R, k));

    // Differential at vertex w, from level k to level k-1.
    auto diff_at = [&](int k, int w) {
        const SumLayout& from = layouts[k];
        const SumLayout& to = layouts[k - 1];
        Mat M(static_cast<int>(to.slots[w].size()), static_cast<int>(from.slots[w].size()));
        for (size_t col = 0; col < from.slots[w].size(); ++col) {
            auto [n, b] = from.slots[w][col];
            const Path& p = from.bases[n][b];
            for (const ParentLink& l : R.node(k, n).parents) {
                std::vector<int> word = concat(l.word, p.arrows);
                if (P.word_is_zero(word)) continue;
                auto it = to.lookup[l.index].find(word);
                if (it == to.lookup[l.index].end())
                    throw OracleError("differential image is not a basis path");
                int row = to.pos.at({l.index, it->second});
                M.at(row, static_cast<int>(col)) =
                    fmod_p(M.at(row, static_cast<int>(col)) + l.sign);
            }
        }
        return M;
    };

    // Augmentation at vertex w.
    std::vector<Path> target_basis;  // injective case
    if (R.target == Resolution::Target::Injective)
        target_basis = injective_basis(P, R.target_vertex);
    auto target_dim = [&](int w) -> int {
        if (R.target == Resolution::Target::Injective) {
            int d = 0;
            for (const Path& q : target_basis) d += q.source == w;
            return d;
        }
        const auto vs = R.target_interval->path.vertices(P);
        return std::count(vs.begin(), vs.end(), w) ? 1 : 0;
    };
    auto aug_at = [&](int w) {
        const SumLayout& from = layouts[0];
        Mat M(target_dim(w), static_cast<int>(from.slots[w].size()));
        for (size_t col = 0; col < from.slots[w].size(); ++col) {
            auto [n, b] = from.slots[w][col];
            const Path& p = from.bases[n][b];
            if (R.target == Resolution::Target::Injective) {
                const Path& cover = R.node(0, n).interval->path;
                int row = 0;
                for (const Path& q : target_basis) {
                    if (q.source != w) continue;
                    if (concat(p.arrows, q.arrows) == cover.arrows)
                        M.at(row, static_cast<int>(col)) = 1;
                    ++row;
                }
            } else {
                const Path& iv = R.target_interval->path;
                if (is_prefix(p.arrows, iv.arrows)) M.at(0, static_cast<int>(col)) = 1;
            }
        }
        return M;
    };

    out.minimal = true;
    for (int k = 1; k <= pd; ++k)
        for (const ResNode& n : R.levels[k])
            for (const ParentLink& l : n.parents)
                if (l.word.empty()) out.minimal = false;

    out.d_squared_zero = true;
    out.exact = true;
    out.augmentation_onto = true;
    for (int w = 0; w < nv; ++w) {
        std::vector<Mat> M(pd + 2);  // M[k]: level k -> k-1, M[0] = augmentation
        M[0] = aug_at(w);
        for (int k = 1; k <= pd; ++k) M[k] = diff_at(k, w);
        M[pd + 1] = Mat(static_cast<int>(layouts[pd].slots[w].size()), 0);
        for (int k = 0; k <= pd; ++k)
            if (M[k].cols > 0 && M[k + 1].cols > 0 && !mat_is_zero(mat_mul(M[k], M[k + 1])))
                out.d_squared_zero = false;
        for (int k = 0; k <= pd; ++k) {
            int dim_k = static_cast<int>(layouts[k].slots[w].size());
            if (mat_rank(M[k]) + mat_rank(M[k + 1]) != dim_k) out.exact = false;
        }
        if (mat_rank(M[0]) != target_dim(w)) out.augmentation_onto = false;
    }
    return out;
}

Oracle::ResolutionCheck Oracle::verify_injective_resolution(int c) const {
    return verify_resolution(E_.pres(), E_.injective_resolution(c));
}

Oracle::ResolutionCheck Oracle::verify_op_injective_resolution(int z) const {
    return verify_resolution(E_.op(), E_.op_injective_resolution(z));
}

Oracle::ResolutionCheck Oracle::verify_interval_resolution(const Interval& iv) const {
    return verify_resolution(E_.pres(), resolve_interval(E_.pres(), iv));
}

Oracle::ResolutionCheck Oracle::verify_op_interval_resolution(const Interval& iv_op) const {
    return verify_resolution(E_.op(), resolve_interval(E_.op(), iv_op));
}

Lift Oracle::lift_chain_map(int arrow, bool reversed_order) const {
    const StringPresentation& P = E_.pres();
    int b = P.arrows[arrow].src;
    int c = P.arrows[arrow].tgt;
    const Resolution& rb = E_.injective_resolution(b);
    const Resolution& rc = E_.injective_resolution(c);
    int depth = std::min(rb.pd(), rc.pd());

    Lift L;
    L.arrow = arrow;
    L.entries.resize(depth + 1);

    auto path = [&](int u, int v) -> const std::optional<Path>& {
        return E_.nonzero_path(u, v);
    };

    for (int k = 0; k <= std::min(rc.pd(), rb.pd() + 1); ++k) {
        // Unknowns of this level.
        std::vector<std::pair<int, int>> vars;
        if (k <= depth) {
            for (size_t nb = 0; nb < rb.levels[k].size(); ++nb)
                for (size_t nc = 0; nc < rc.levels[k].size(); ++nc)
                    if (path(rb.node(k, nb).point, rc.node(k, nc).point))
                        vars.push_back({static_cast<int>(nb), static_cast<int>(nc)});
        }
        if (reversed_order) std::reverse(vars.begin(), vars.end());
        auto var_index = [&](int nb, int nc) -> int {
            for (size_t v = 0; v < vars.size(); ++v)
                if (vars[v].first == nb && vars[v].second == nc) return static_cast<int>(v);
            return -1;
        };

        std::vector<std::vector<std::int64_t>> rows;
        std::vector<std::int64_t> rhs;
        if (k == 0) {
            // Commute with the augmentations: one scalar equation per top
            // node of the c-resolution that sees b.
            for (size_t nc = 0; nc < rc.levels[0].size(); ++nc) {
                int aj = rc.node(0, nc).point;
                const std::optional<Path>& tau = path(aj, b);
                if (!tau) continue;
                std::vector<std::int64_t> row(vars.size(), 0);
                for (size_t nb = 0; nb < rb.levels[0].size(); ++nb) {
                    int vi = var_index(static_cast<int>(nb), static_cast<int>(nc));
                    if (vi < 0) continue;
                    const std::optional<Path>& mu = path(rb.node(0, nb).point, aj);
                    const Path& cover_b = rb.node(0, nb).interval->path;
                    if (mu && concat(mu->arrows, tau->arrows) == cover_b.arrows)
                        row[vi] = 1;
                }
                const Path& cover_c = rc.node(0, nc).interval->path;
                std::vector<int> want = tau->arrows;
                want.push_back(arrow);
                rows.push_back(std::move(row));
                rhs.push_back(cover_c.arrows == want ? 1 : 0);
            }
        } else {
            // d_b . L_k = L_{k-1} . d_c, one equation per (level k-1 node of
            // the b-side, level k node of the c-side) joined by a path.
            for (size_t mb = 0; mb < rb.levels[k - 1].size(); ++mb) {
                for (size_t nc = 0; nc < rc.levels[k].size(); ++nc) {
                    if (!path(rb.node(k - 1, mb).point, rc.node(k, nc).point)) continue;
                    std::vector<std::int64_t> row(vars.size(), 0);
                    if (k <= rb.pd()) {
                        for (size_t nb = 0; nb < rb.levels[k].size(); ++nb) {
                            int vi = var_index(static_cast<int>(nb), static_cast<int>(nc));
                            if (vi < 0) continue;
                            const std::optional<Path>& rho =
                                path(rb.node(k, nb).point, rc.node(k, nc).point);
                            for (const ParentLink& l : rb.node(k, nb).parents) {
                                if (l.index != static_cast<int>(mb)) continue;
                                if (!P.word_is_zero(concat(l.word, rho->arrows)))
                                    row[vi] = fmod_p(row[vi] + l.sign);
                            }
                        }
                    }
                    std::int64_t acc = 0;
                    for (const ParentLink& l : rc.node(k, nc).parents) {
                        const std::optional<Path>& mu =
                            path(rb.node(k - 1, mb).point, rc.node(k - 1, l.index).point);
                        if (!mu) continue;
                        auto it = L.entries[k - 1].find({static_cast<int>(mb), l.index});
                        if (it == L.entries[k - 1].end()) continue;
                        if (!P.word_is_zero(concat(mu->arrows, l.word)))
                            acc += l.sign * it->second;
                    }
                    rows.push_back(std::move(row));
                    rhs.push_back(fmod_p(acc));
                }
            }
        }

        Mat A(static_cast<int>(rows.size()), static_cast<int>(vars.size()));
        for (size_t r = 0; r < rows.size(); ++r)
            for (size_t cidx = 0; cidx < vars.size(); ++cidx)
                A.at(static_cast<int>(r), static_cast<int>(cidx)) = rows[r][cidx];
        SolveResult sol = solve(A, rhs);
        if (!sol.ok) throw OracleError("chain map lift is unsolvable");
        if (k <= depth)
            for (size_t v = 0; v < vars.size(); ++v)
                if (sol.x[v] != 0) L.entries[k][vars[v]] = sol.x[v];
    }
    return L;
}

int Oracle::top_dim_cell(int c, int z, int i, bool with_right) const {
    const StringPresentation& P = E_.pres();
    const Resolution& rc = E_.injective_resolution(c);
    auto has = [&](int x) { return static_cast<bool>(E_.nonzero_path(z, x)); };
    std::vector<int> A = level_coords(rc, i, has);
    if (A.empty()) return 0;
    std::map<int, int> row_of;  // node index -> row
    for (size_t r = 0; r < A.size(); ++r) row_of[A[r]] = static_cast<int>(r);

    Mat Z = cocycles(P, rc, z, i);
    if (Z.cols == 0) return 0;

    // Columns spanning the coboundaries.
    Mat cand = i == 0 ? Mat(static_cast<int>(A.size()), 0) : coboundary(P, rc, z, i - 1);

    // Left radical: classes over the targets of arrows leaving z, pushed
    // forward along the arrow.
    for (int alpha : P.out_arrows[z]) {
        int y = P.arrows[alpha].tgt;
        auto has_y = [&](int x) { return static_cast<bool>(E_.nonzero_path(y, x)); };
        std::vector<int> Ay = level_coords(rc, i, has_y);
        if (Ay.empty()) continue;
        Mat Zy = cocycles(P, rc, y, i);
        if (Zy.cols == 0) continue;
        Mat T(static_cast<int>(A.size()), static_cast<int>(Ay.size()));
        for (size_t cidx = 0; cidx < Ay.size(); ++cidx) {
            auto it = row_of.find(Ay[cidx]);
            if (it == row_of.end()) continue;
            const std::optional<Path>& rho_y = E_.nonzero_path(y, rc.node(i, Ay[cidx]).point);
            std::vector<int> word{alpha};
            if (!P.word_is_zero(concat(word, rho_y->arrows)))
                T.at(it->second, static_cast<int>(cidx)) = 1;
        }
        cand = mat_hstack(cand, mat_mul(T, Zy));
    }

    // Right radical: classes over the sources of arrows entering c,
    // transported through the lifted chain maps.
    if (with_right) {
        for (int beta : P.in_arrows[c]) {
            int b = P.arrows[beta].src;
            const Resolution& rb = E_.injective_resolution(b);
            auto has_b = [&](int x) { return static_cast<bool>(E_.nonzero_path(z, x)); };
            std::vector<int> Ab = level_coords(rb, i, has_b);
            if (Ab.empty()) continue;
            Mat Zb = cocycles(P, rb, z, i);
            if (Zb.cols == 0) continue;
            const Lift& L = lifts_[beta];
            if (i >= static_cast<int>(L.entries.size())) continue;
            Mat T(static_cast<int>(A.size()), static_cast<int>(Ab.size()));
            for (size_t cidx = 0; cidx < Ab.size(); ++cidx) {
                const std::optional<Path>& rho_b =
                    E_.nonzero_path(z, rb.node(i, Ab[cidx]).point);
                for (size_t r = 0; r < A.size(); ++r) {
                    auto it = L.entries[i].find({Ab[cidx], A[r]});
                    if (it == L.entries[i].end()) continue;
                    const std::optional<Path>& conn =
                        E_.nonzero_path(rb.node(i, Ab[cidx]).point, rc.node(i, A[r]).point);
                    if (conn && !P.word_is_zero(concat(rho_b->arrows, conn->arrows)))
                        T.at(static_cast<int>(r), static_cast<int>(cidx)) =
                            fmod_p(T.at(static_cast<int>(r), static_cast<int>(cidx)) +
                                   it->second);
                }
            }
            cand = mat_hstack(cand, mat_mul(T, Zb));
        }
    }

    if (mat_rank(mat_hstack(Z, cand)) != Z.cols)
        throw OracleError("radical image escapes the cocycle space");
    return Z.cols - mat_rank(cand);
}

std::vector<std::vector<int>> Oracle::bimodule_top_dims(int i, bool parallel) const {
    int n = E_.pres().n_vertices();
    std::vector<std::vector<int>> out(n, std::vector<int>(n, 0));
#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel for collapse(2) schedule(dynamic)
        for (int z = 0; z < n; ++z)
            for (int c = 0; c < n; ++c) out[z][c] = top_dim_cell(c, z, i, true);
        return out;
    }
#else
    (void)parallel;
#endif
    for (int z = 0; z < n; ++z)
        for (int c = 0; c < n; ++c) out[z][c] = top_dim_cell(c, z, i, true);
    return out;
}

std::vector<std::vector<int>> Oracle::left_top_dims(int i) const {
    int n = E_.pres().n_vertices();
    std::vector<std::vector<int>> out(n, std::vector<int>(n, 0));
    for (int z = 0; z < n; ++z)
        for (int c = 0; c < n; ++c) out[z][c] = top_dim_cell(c, z, i, false);
    return out;
}

ArrowMultiset Oracle::new_arrow_multiset(bool parallel) const {
    ArrowMultiset out;
    for (int i = 2; i <= E_.gldim(); ++i) {
        auto tops = bimodule_top_dims(i, parallel);
        for (size_t z = 0; z < tops.size(); ++z)
            for (size_t c = 0; c < tops[z].size(); ++c)
                if (tops[z][c] > 0)
                    out[{static_cast<int>(z), static_cast<int>(c), i}] = tops[z][c];
    }
    return out;
}

}  // namespace relquiv
