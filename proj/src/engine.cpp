#include "relquiv/engine.hpp"

namespace relquiv {

namespace {

std::vector<std::optional<Path>> build_path_cache(const StringPresentation& P) {
    int n = P.n_vertices();
    std::vector<std::optional<Path>> cache(static_cast<size_t>(n) * n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            std::optional<Path> p = find_path(P, u, v);
            if (p && path_nonzero(P, *p)) cache[static_cast<size_t>(u) * n + v] = std::move(*p);
        }
    return cache;
}

}  // namespace

ExtEngine::ExtEngine(const StringPresentation& P) : P_(P), op_(P.opposite()) {
    require_string_tree(P_);
    gldim_ = global_dimension(P_);
    inj_.reserve(P_.n_vertices());
    op_inj_.reserve(P_.n_vertices());
    for (int v = 0; v < P_.n_vertices(); ++v) {
        inj_.push_back(resolve_injective(P_, v));
        op_inj_.push_back(resolve_injective(op_, v));
    }
    paths_ = build_path_cache(P_);
    op_paths_ = build_path_cache(op_);
}

const std::optional<Path>& ExtEngine::nonzero_path(int u, int v) const {
    return paths_[static_cast<size_t>(u) * P_.n_vertices() + v];
}

const std::optional<Path>& ExtEngine::op_nonzero_path(int u, int v) const {
    return op_paths_[static_cast<size_t>(u) * P_.n_vertices() + v];
}

}  // namespace relquiv
