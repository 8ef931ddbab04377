#pragma once

#include <map>
#include <tuple>

#include "relquiv/engine.hpp"

namespace relquiv {

// Raised when an internal consistency assertion of the oracle fails (the two
// Ext models disagree, a lift has nonzero residual, ...).
struct OracleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Chain map lifting the right multiplication I(c) -> I(b) along an arrow
// b -> c through the two minimal resolutions. entries[k] maps a node pair
// (index in level k of the b-resolution, index in level k of the
// c-resolution) to the scalar on the unique connecting path.
struct Lift {
    int arrow = -1;
    std::vector<std::map<std::pair<int, int>, std::int64_t>> entries;
};

using ArrowMultiset = std::map<std::tuple<int, int, int>, int>;  // (z, c, degree) -> count

// Exact linear algebra over F_p for everything the combinatorial layer
// claims: Ext dimensions in both resolution models, resolution verification
// at representation level, and the bimodule-top tables that decide which new
// arrows exist.
class Oracle {
  public:
    explicit Oracle(const ExtEngine& E, bool reversed_lift_order = false);

    const ExtEngine& engine() const { return E_; }

    int hom_dim(int a, int z) const;

    int ext_dim_primal(int c, int z, int i) const;
    int ext_dim_op(int c, int z, int i) const;
    // Both models, asserted equal.
    int ext_dim(int c, int z, int i) const;

    struct ResolutionCheck {
        bool d_squared_zero = false;
        bool exact = false;
        bool minimal = false;
        bool augmentation_onto = false;
        bool ok() const { return d_squared_zero && exact && minimal && augmentation_onto; }
    };
    ResolutionCheck verify_injective_resolution(int c) const;
    ResolutionCheck verify_op_injective_resolution(int z) const;
    // Interval resolutions on either side; the opposite variant expects an
    // interval of the opposite presentation.
    ResolutionCheck verify_interval_resolution(const Interval& iv) const;
    ResolutionCheck verify_op_interval_resolution(const Interval& iv_op) const;

    Lift lift_chain_map(int arrow, bool reversed_order) const;
    const Lift& lift(int arrow) const { return lifts_[arrow]; }

    // dim of Ext^i(I(c), P(z)) modulo coboundaries and both radical actions,
    // indexed [z][c]; the nonzero cells name the new arrows z -> c in
    // degree i.
    std::vector<std::vector<int>> bimodule_top_dims(int i, bool parallel) const;

    // Same without the right-radical filter (also [z][c]): the top of the
    // left module structure only, for cross-checking the one-sided
    // combinatorial basis.
    std::vector<std::vector<int>> left_top_dims(int i) const;

    ArrowMultiset new_arrow_multiset(bool parallel) const;

  private:
    const ExtEngine& E_;
    std::vector<Lift> lifts_;

    Mat coboundary(const StringPresentation& P, const Resolution& R, int z, int i) const;
    Mat cocycles(const StringPresentation& P, const Resolution& R, int z, int i) const;
    int ext_dim_model(const StringPresentation& P, const Resolution& R, int z, int i) const;
    ResolutionCheck verify_resolution(const StringPresentation& P, const Resolution& R) const;
    int top_dim_cell(int c, int z, int i, bool with_right) const;
};

}  // namespace relquiv
