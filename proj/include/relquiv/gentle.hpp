#pragma once

#include "relquiv/extcomb.hpp"

namespace relquiv {

// A maximal chain of quadratic generators in which each consecutive pair
// shares one arrow. The support spells the underlying path of the chain.
struct Overlapping {
    std::vector<int> generators;  // relation indices, chain order
    std::vector<int> shared;      // arrow shared by generators i and i+1
    std::vector<int> support;     // arrows alpha_1 .. alpha_{t+1}
    int c = -1;                   // source of the support path
    int z = -1;                   // target of the support path

    int t() const { return static_cast<int>(generators.size()); }
};

// Throws AxiomError unless P is an admissible gentle tree.
void require_gentle_tree(const StringPresentation& P);

// Every maximal chain, ordered by the index of its first generator.
std::vector<Overlapping> maximal_overlappings(const StringPresentation& P);

// One arrow z -> c of degree t+1 per maximal chain, aligned with
// maximal_overlappings(P) and named like the two-sided construction.
std::vector<NewArrow> gentle_new_arrows(const StringPresentation& P);

// A letter of a word over the extended quiver: an old arrow of P or one of
// the new arrows, by index into each list.
struct ExtLetter {
    bool is_new = false;
    int index = -1;

    bool operator==(const ExtLetter& o) const {
        return is_new == o.is_new && index == o.index;
    }
};

using ExtWord = std::vector<ExtLetter>;

// Old generators plus, per chain kappa, the two quadratic words
// alpha(kappa) alpha_1 and alpha_{t+1} alpha(kappa). New-letter indices refer
// to gentle_new_arrows(P).
std::vector<ExtWord> tensor_relations(const StringPresentation& P);

// tensor_relations plus the minimal words zeta rho zeta' with rho an old
// path; any candidate containing an emitted word as a subword is dropped.
std::vector<ExtWord> trivial_extension_relations(const StringPresentation& P);

std::string ext_word_to_string(const StringPresentation& P,
                               const std::vector<NewArrow>& news, const ExtWord& w);

}  // namespace relquiv
