#pragma once

#include <cstdint>
#include <random>

#include "relquiv/presentation.hpp"

namespace relquiv {

// Thin wrapper so every draw goes through one deterministic code path;
// mt19937_64 output is fixed by the standard, and the reductions below avoid
// library-dependent distribution objects.
struct Rng {
    std::mt19937_64 gen;

    explicit Rng(std::uint64_t seed) : gen(seed) {}

    std::uint64_t next() { return gen(); }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    bool chance(double p) { return unit() < p; }
};

struct GeneratorOptions {
    int n_vertices = 8;
    double density = 0.5;         // weight toward vanishing products
    bool gentle = false;
    bool long_relations = true;   // string mode: admit generators of length 3..5
};

// Random tree quiver with in- and out-degree at most two, relations sampled
// per vertex from the patterns the axioms allow. Always validates as a string
// tree (gentle on request); a bounded retry loop backs the guarantee.
StringPresentation random_string_tree(Rng& rng, const GeneratorOptions& opt);

}  // namespace relquiv
