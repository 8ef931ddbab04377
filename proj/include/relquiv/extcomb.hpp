#pragma once

#include "relquiv/engine.hpp"

namespace relquiv {

enum class WitnessKind { PathClass, DifferenceClass };

// A basis element of Ext^degree(I(c), P(z)) read off the resolution: either a
// nonzero path omega from z into the point of a degree-`degree` node whose
// continuation into every child vanishes, or the difference of the two child
// inclusions under a node with point z one level up.
struct ExtWitness {
    WitnessKind kind = WitnessKind::PathClass;
    int degree = 0;
    int level = 0;  // level of the referenced node
    int node = 0;
    Path omega;     // stationary at the node point for DifferenceClass
};

std::vector<ExtWitness> ext_witnesses(const ExtEngine& E, int c, int z, int degree);

// Witness enumeration on the opposite side: elements of
// Ext^degree(I(c), P(z)) located in the coresolution of P(z); the returned
// witnesses live in opposite-quiver coordinates.
std::vector<ExtWitness> op_ext_witnesses(const ExtEngine& E, int c, int z, int degree);

// Contiguous stretch of witness sources along one in-branch of a node point.
struct SupportInterval {
    int level = 0;
    int node = 0;
    int branch_root = -1;        // the node point
    bool off_branch = false;     // along the in-arrow away from the parent line
    std::vector<int> zs;         // valid sources, nearest to the point first
};

struct ExtSupport {
    int c = -1;
    int degree = 0;
    std::vector<SupportInterval> intervals;
    std::vector<int> difference_points;  // points of nodes with two children
    std::vector<int> all;                // dedup union, ascending
};

// All z with Ext^degree(I(c), P(z)) != 0, organized by branch interval.
ExtSupport ext_support(const ExtEngine& E, int c, int degree);
// All c with Ext^degree(I(c), P(z)) != 0 (computed on the opposite side).
ExtSupport ext_cosupport(const ExtEngine& E, int z, int degree);

struct TopClass {
    int vertex = -1;  // z for the left basis, c for the right basis
    ExtWitness witness;
};

// Witnesses surviving modulo the left radical action: a basis of the top of
// the left module structure on degree-`degree` Ext classes against I(c).
std::vector<TopClass> left_top_basis(const ExtEngine& E, int c, int degree);
// Dual basis over the coresolution of P(z); witnesses in opposite
// coordinates.
std::vector<TopClass> right_top_basis(const ExtEngine& E, int z, int degree);

enum class Provenance { Witness, Overlap };

struct NewArrow {
    int z = -1;
    int c = -1;
    int degree = 0;
    Provenance prov = Provenance::Witness;
    std::optional<ExtWitness> witness;
    std::string name;
};

// The two-sided survivors: per (z, c, degree) the smaller of the left and
// right top multiplicities, named x_<z>_<c>_<degree>. With restrict_c the
// outer loop only visits endpoints of relation words; the result is the same
// either way.
std::vector<NewArrow> new_arrows(const ExtEngine& E, bool restrict_c = true);

std::string witness_to_string(const StringPresentation& P, const ExtWitness& w);

}  // namespace relquiv
