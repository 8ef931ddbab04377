#pragma once

#include "relquiv/resolutions.hpp"

namespace relquiv {

// Shared coordinate system for the combinatorial layer and the linear-algebra
// oracle: one presentation, its opposite, and the complete family of minimal
// resolutions on both sides. Immutable after construction, safe to share
// across threads.
class ExtEngine {
  public:
    explicit ExtEngine(const StringPresentation& P);

    const StringPresentation& pres() const { return P_; }
    const StringPresentation& op() const { return op_; }
    int gldim() const { return gldim_; }

    // Minimal projective resolution of I(c).
    const Resolution& injective_resolution(int c) const { return inj_[c]; }
    // Opposite-side resolution of the injective at z; dually an injective
    // coresolution of P(z).
    const Resolution& op_injective_resolution(int z) const { return op_inj_[z]; }

    // Unique nonzero path u .. v, cached; nullopt when absent or zero.
    const std::optional<Path>& nonzero_path(int u, int v) const;
    const std::optional<Path>& op_nonzero_path(int u, int v) const;

  private:
    StringPresentation P_;
    StringPresentation op_;
    int gldim_ = 0;
    std::vector<Resolution> inj_;
    std::vector<Resolution> op_inj_;
    std::vector<std::optional<Path>> paths_;
    std::vector<std::optional<Path>> op_paths_;
};

}  // namespace relquiv
