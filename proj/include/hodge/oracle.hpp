#pragma once

#include "hodge/bigraded.hpp"
#include "hodge/group.hpp"

#include <map>
#include <utility>
#include <vector>

// Brute-force invariant dimensions over an explicit basis. Kept apart from the
// class-sum code in invariants.hpp so the two can check each other.
namespace hodge::oracle {

/// One basis vector of V: its bidegree, its eigenvalue under the involution,
/// and its position inside that eigenspace.
struct SlotLabel {
    Bidegree degree;
    int sign = 1;
    int index = 0;
    auto operator<=>(const SlotLabel&) const = default;
};

/// Basis vector of V^{(x)n}, one slot label per factor.
using Label = std::vector<int>;  // indices into LabeledBasis::slots

struct LabeledBasis {
    std::vector<SlotLabel> slots;
    int factors = 0;

    std::size_t size() const;
    Bidegree degree(const Label& label) const;
};

inline constexpr std::size_t kMaxLabels = 20000;

/// Throws TooLarge if the basis of V^{(x)n} would exceed kMaxLabels.
LabeledBasis make_basis(const EquivHodgeTable& v, int n);

/// Image of a basis vector under g, as a single signed basis vector.
std::pair<Label, int> apply_element(const LabeledBasis& basis, const GroupElement& g, const Label& label);

/// Trace of g on each (p,q) slot, counted over fixed labels.
std::map<Bidegree, BigInt> element_trace(const EquivHodgeTable& v, const GroupElement& g);

/// Invariant dimensions as the trace of the averaging projector, by
/// enumeration of every group element and every basis label. n <= 3.
HodgeTable projector_invariant_dims(const EquivHodgeTable& v, int n, Subgroup which);

}  // namespace hodge::oracle
