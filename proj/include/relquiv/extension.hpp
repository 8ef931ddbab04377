#pragma once

#include "relquiv/gentle.hpp"

namespace relquiv {

enum class ExtensionMode { Tensor, Trivial };

// The extended quiver plus whatever relation data the construction pins
// down. Relations are populated only for gentle bases; otherwise the arrows
// stand alone and relations_specified stays false. Verdict flags are
// computed from the materialized presentation when relations exist.
struct ExtendedPresentation {
    StringPresentation base;
    ExtensionMode mode = ExtensionMode::Tensor;
    std::vector<NewArrow> arrows;
    std::vector<std::optional<Overlapping>> overlaps;  // aligned with arrows
    bool relations_specified = false;
    std::vector<ExtWord> relations;
    bool gentle = false;
    bool monomial = false;
    bool has_two_cycle = false;
};

ExtendedPresentation build_extension(const StringPresentation& P, ExtensionMode mode);
ExtendedPresentation build_extension(const ExtEngine& E, ExtensionMode mode);

// The extended quiver as a plain presentation. Relation words are included
// only when specified; new arrows keep their generated names.
StringPresentation to_presentation(const ExtendedPresentation& E);

std::string extension_to_json(const ExtendedPresentation& E);
ExtendedPresentation extension_from_json(const std::string& text);
std::string extension_to_dot(const ExtendedPresentation& E);

struct TheoremReport {
    bool tensor_gentle = false;
    bool trivial_monomial = false;
    bool arrows_match = false;

    bool ok() const { return tensor_gentle && trivial_monomial && arrows_match; }
};

// Gentle bases only: checks the tensor extension validates as gentle, the
// trivial extension is monomial, and the chain arrows agree with the
// two-sided construction as a multiset of (z, c, degree).
TheoremReport verify_theorem_7_1(const ExtEngine& E);

}  // namespace relquiv
