#pragma once

#include "hodge/bigraded.hpp"
#include "hodge/surface.hpp"

#include <compare>
#include <vector>

namespace hodge {

/// A base diamond together with codimension-2 centers to blow up.
struct BlowupPlan {
    HodgeTable base;
    std::vector<HodgeTable> centers;
};

/// base(p,q) + sum over centers of center(p-1, q-1). Throws DimensionMismatch
/// unless every center has dimension base.dimension() - 2.
HodgeTable blowup_assemble(const BlowupPlan& plan);

/// Exceptional divisor over the locus x_i = x_j (Delta) or sigma(x_i) = x_j (T).
struct CenterLabel {
    enum class Kind { Delta, T };
    int i = 0;  ///< 0-based, i < j
    int j = 0;
    Kind kind = Kind::Delta;

    auto operator<=>(const CenterLabel&) const = default;
};

/// All 2 * C(n,2) labels, in lexicographic order.
std::vector<CenterLabel> center_labels(int n);

/// Number of orbits of the even-twist group on the center labels, n >= 2.
/// Permutations relabel pairs; a twist changes the kind of a pair when it
/// touches exactly one of its two slots.
int exceptional_orbits(int n);

/// Blow-up plan for the double cover of the Hilbert square: base is the
/// H-quotient of V x V, centers are the images of Delta and T, each isomorphic
/// to the quotient surface V / sigma.
BlowupPlan cover_plan_n2(const SurfaceSpec& v = presets::k3_enriques());

/// Full Hodge diamond of the double cover for n = 2.
HodgeTable cover_diamond_n2(const SurfaceSpec& v = presets::k3_enriques());

/// Sum of the weight-2 invariant Hodge numbers of V^n under H.
BigInt weight2_invariants(int n, const SurfaceSpec& v = presets::k3_enriques());

/// dim H^2 of the double cover: weight-2 invariants plus exceptional orbits.
BigInt h2_cover(int n, const SurfaceSpec& v = presets::k3_enriques());

/// dim H^{2n-1,1} of V^n / H.
BigInt h_top_minus(int n, const SurfaceSpec& v = presets::k3_enriques());

/// Hodge numbers of the double cover in total degree <= 2 for any n >= 2; the
/// rest of the diamond is not computed for n >= 3.
HodgeTable cover_low_degree(int n, const SurfaceSpec& v = presets::k3_enriques());

}  // namespace hodge
