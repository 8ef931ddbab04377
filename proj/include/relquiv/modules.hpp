#pragma once

#include "relquiv/linalg.hpp"
#include "relquiv/presentation.hpp"

namespace relquiv {

// Closed interval on the tree quiver: the unique nonzero directed path from a
// to b (possibly stationary).
struct Interval {
    int a = -1;
    int b = -1;
    Path path;

    bool stationary() const { return a == b; }
    bool operator==(const Interval& o) const { return a == o.a && b == o.b; }
};

// Throws std::invalid_argument when there is no nonzero path a .. b.
Interval make_interval(const StringPresentation& P, int a, int b);

std::string interval_to_string(const StringPresentation& P, const Interval& iv);

// Finite-dimensional module as vertex spaces + one matrix per arrow. For an
// arrow u -> v the matrix has dims[v] rows and dims[u] columns (the action
// maps the space at u into the space at v).
struct Representation {
    std::vector<int> dims;
    std::vector<Mat> mats;  // per arrow

    int total_dim() const;
};

// Zero unless every relation word acts by the zero map.
bool relations_vanish(const StringPresentation& P, const Representation& R);

Representation interval_module(const StringPresentation& P, const Interval& iv);

// Basis of the indecomposable projective at v: all nonzero paths from v, in
// depth-first declaration order. Index 0 is the stationary path.
std::vector<Path> projective_basis(const StringPresentation& P, int v);
Representation projective_module(const StringPresentation& P, int v);

// Basis of the injective envelope of the simple at c: all nonzero paths
// ending at c (dual basis vectors), again in a deterministic order.
std::vector<Path> injective_basis(const StringPresentation& P, int c);
Representation injective_module(const StringPresentation& P, int c);

struct WalkLetter {
    int arrow = -1;
    bool inverse = false;
};

// Reduced walk: starts at `start`, each letter attaches at the running
// endpoint (forward along the arrow if direct, backward if inverse), and no
// letter immediately undoes the previous one.
struct Walk {
    int start = -1;
    std::vector<WalkLetter> letters;
};

// Endpoint sequence of the walk (length = letters + 1). Throws on a walk that
// does not connect or is not reduced.
std::vector<int> walk_vertices(const StringPresentation& P, const Walk& w);

Representation string_module(const StringPresentation& P, const Walk& w);

}  // namespace relquiv
