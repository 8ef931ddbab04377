#include "relquiv/generator.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace relquiv {

namespace {

StringPresentation sample_once(Rng& rng, const GeneratorOptions& opt) {
    StringPresentation P;
    for (int v = 0; v < opt.n_vertices; ++v) P.vertex_names.push_back(std::to_string(v + 1));

    std::vector<int> in_deg(opt.n_vertices, 0), out_deg(opt.n_vertices, 0);
    for (int v = 1; v < opt.n_vertices; ++v) {
        // Attach v to the tree built so far; a free slot always exists
        // because total degree 2(v-1) cannot saturate v vertices.
        std::vector<std::pair<int, bool>> feasible;  // (parent, arrow points at v)
        for (int p = 0; p < v; ++p) {
            if (out_deg[p] < 2) feasible.emplace_back(p, true);
            if (in_deg[p] < 2) feasible.emplace_back(p, false);
        }
        auto [p, toward_v] = feasible[rng.below(static_cast<int>(feasible.size()))];
        Arrow a;
        a.name = "a" + std::to_string(P.n_arrows() + 1);
        a.src = toward_v ? p : v;
        a.tgt = toward_v ? v : p;
        out_deg[a.src]++;
        in_deg[a.tgt]++;
        P.arrows.push_back(std::move(a));
    }
    P.rebuild_adjacency();

    // Per vertex, choose which in/out products die. Valid patterns: at most
    // one live product per row and per column; gentle additionally caps dead
    // products at one per row and column.
    for (int v = 0; v < opt.n_vertices; ++v) {
        const auto& ins = P.in_arrows[v];
        const auto& outs = P.out_arrows[v];
        int cells = static_cast<int>(ins.size() * outs.size());
        if (cells == 0) continue;

        std::vector<int> valid;
        std::vector<double> weight;
        for (int mask = 0; mask < (1 << cells); ++mask) {
            bool ok = true;
            for (size_t i = 0; i < ins.size() && ok; ++i) {
                int live = 0, dead = 0;
                for (size_t j = 0; j < outs.size(); ++j)
                    ((mask >> (i * outs.size() + j)) & 1 ? dead : live)++;
                if (live > 1 || (opt.gentle && dead > 1)) ok = false;
            }
            for (size_t j = 0; j < outs.size() && ok; ++j) {
                int live = 0, dead = 0;
                for (size_t i = 0; i < ins.size(); ++i)
                    ((mask >> (i * outs.size() + j)) & 1 ? dead : live)++;
                if (live > 1 || (opt.gentle && dead > 1)) ok = false;
            }
            if (!ok) continue;
            int zeros = 0;
            for (int b = 0; b < cells; ++b) zeros += (mask >> b) & 1;
            valid.push_back(mask);
            weight.push_back(std::pow(opt.density, zeros) *
                             std::pow(1.0 - opt.density, cells - zeros));
        }

        double total = 0;
        for (double w : weight) total += w;
        int mask;
        if (total <= 0) {
            mask = valid[rng.below(static_cast<int>(valid.size()))];
        } else {
            double u = rng.unit() * total;
            size_t k = 0;
            while (k + 1 < valid.size() && u >= weight[k]) u -= weight[k], k++;
            mask = valid[k];
        }
        for (size_t i = 0; i < ins.size(); ++i)
            for (size_t j = 0; j < outs.size(); ++j)
                if ((mask >> (i * outs.size() + j)) & 1)
                    P.relations.push_back({ins[i], outs[j]});
    }

    if (!opt.gentle && opt.long_relations) {
        // Occasionally promote a nonzero path of length 3..5 to a generator;
        // shorter-first order keeps the generating set minimal.
        std::vector<std::vector<int>> candidates;
        std::function<void(int, std::vector<int>&)> walk = [&](int v, std::vector<int>& word) {
            if (word.size() >= 3) candidates.push_back(word);
            if (word.size() == 5) return;
            for (int a : P.out_arrows[v]) {
                word.push_back(a);
                if (!P.word_is_zero(word)) walk(P.arrows[a].tgt, word);
                word.pop_back();
            }
        };
        for (int v = 0; v < opt.n_vertices; ++v) {
            std::vector<int> word;
            walk(v, word);
        }
        std::stable_sort(candidates.begin(), candidates.end(),
                         [](const auto& x, const auto& y) { return x.size() < y.size(); });
        for (auto& w : candidates)
            if (!P.word_is_zero(w) && rng.chance(opt.density * 0.2))
                P.relations.push_back(std::move(w));
    }
    return P;
}

}  // namespace

StringPresentation random_string_tree(Rng& rng, const GeneratorOptions& opt) {
    if (opt.n_vertices < 1) throw std::invalid_argument("n_vertices must be >= 1");
    for (int attempt = 0; attempt < 64; ++attempt) {
        StringPresentation P = sample_once(rng, opt);
        ValidationReport rep = validate(P);
        if (rep.string_tree() && (!opt.gentle || rep.is_gentle())) return P;
    }
    throw std::runtime_error("random_string_tree: no valid sample in 64 attempts");
}

}  // namespace relquiv
