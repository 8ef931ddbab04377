#pragma once

#include "relquiv/modules.hpp"

namespace relquiv {

enum class NodeRole { Root, TopStart, Cokernel, Branch };
// TopStart: degree-0 node of an injective resolution (one per start of a
// maximal inflow path); Cokernel: the degree-1 node carrying the shared end
// vertex when the top is two-dimensional; Branch: everything produced by
// interval branching.

struct ParentLink {
    int index = -1;            // node index at the previous level
    std::vector<int> word;     // connecting path parent_point .. point
    int sign = 1;
};

struct ResNode {
    int point = -1;                  // projective cover P(point)
    std::optional<Interval> interval;  // the resolved interval; Cokernel has none
    NodeRole role = NodeRole::Branch;
    std::vector<ParentLink> parents;   // links into the previous level
    std::vector<int> children;         // node indices at the next level
};

// Projective resolution laid out level by level; level k lists the summands
// of the k-th term. Parent links carry the differential: each link
// contributes sign * (left multiplication by word).
struct Resolution {
    enum class Target { IntervalModule, Injective };
    Target target = Target::IntervalModule;
    int target_vertex = -1;                 // Injective: the socle vertex
    std::optional<Interval> target_interval;  // IntervalModule
    std::vector<std::vector<ResNode>> levels;

    int pd() const { return static_cast<int>(levels.size()) - 1; }
    const ResNode& node(int level, int index) const { return levels[level][index]; }
};

// Branching tree of an interval (levels of nested subintervals with
// connecting words); this *is* the minimal projective resolution of the
// interval module, summand P(interval.a) per node.
Resolution resolve_interval(const StringPresentation& P, const Interval& iv);

// Minimal projective resolution of the injective envelope I(c).
Resolution resolve_injective(const StringPresentation& P, int c);

// Injective coresolution of P(z), represented as the projective resolution of
// the opposite-side injective at z. Interpret node points as injective socles
// and reverse the words for display.
Resolution coresolve_projective_op(const StringPresentation& op, int z);

int global_dimension(const StringPresentation& P);

// Number of summands at each level, top degree first suppressed.
std::vector<int> level_sizes(const Resolution& R);

}  // namespace relquiv
