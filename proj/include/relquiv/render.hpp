#pragma once

#include "relquiv/resolutions.hpp"

namespace relquiv {

// Plain-text views of a resolution tree. With op_side the tree was computed
// on the opposite presentation and reads as an injective coresolution:
// summands print as I(x), intervals and words print reversed.

std::string term_line(const StringPresentation& P, const Resolution& R, bool op_side = false);

std::string render_levels(const StringPresentation& P, const Resolution& R, bool op_side = false);

}  // namespace relquiv
