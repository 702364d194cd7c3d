#include "hodge/cover.hpp"

#include "hodge/errors.hpp"
#include "hodge/group.hpp"
#include "hodge/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hodge {

HodgeTable blowup_assemble(const BlowupPlan& plan) {
    HodgeTable::Entries out = plan.base.entries();
    for (const auto& center : plan.centers) {
        if (center.dimension() != plan.base.dimension() - 2) {
            throw DimensionMismatch("blow-up center of dimension " + std::to_string(center.dimension()) +
                                    " in a base of dimension " + std::to_string(plan.base.dimension()));
        }
        for (const auto& [deg, dim] : center.entries()) {
            out[Bidegree{deg.p + 1, deg.q + 1}] += dim;
        }
    }
    return HodgeTable(plan.base.dimension(), std::move(out));
}

std::vector<CenterLabel> center_labels(int n) {
    std::vector<CenterLabel> labels;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            labels.push_back({i, j, CenterLabel::Kind::Delta});
            labels.push_back({i, j, CenterLabel::Kind::T});
        }
    }
    std::sort(labels.begin(), labels.end());
    return labels;
}

namespace {

CenterLabel act(const GroupElement& g, const CenterLabel& label) {
    CenterLabel out = label;
    if (g.twist()[label.i] != g.twist()[label.j]) {
        out.kind = label.kind == CenterLabel::Kind::Delta ? CenterLabel::Kind::T : CenterLabel::Kind::Delta;
    }
    out.i = g.perm()[label.i];
    out.j = g.perm()[label.j];
    if (out.i > out.j) {
        std::swap(out.i, out.j);
    }
    return out;
}

struct DisjointSets {
    std::vector<int> parent;

    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

int exceptional_orbits(int n) {
    if (n < 2) {
        throw std::invalid_argument("exceptional_orbits requires n >= 2");
    }
    const auto labels = center_labels(n);
    auto index_of = [&](const CenterLabel& l) {
        return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin());
    };

    // Adjacent transpositions and sigma_{12} generate H.
    std::vector<GroupElement> generators;
    for (int k = 0; k + 1 < n; ++k) {
        generators.push_back(GroupElement::transposition(n, k, k + 1));
    }
    generators.push_back(GroupElement::twist_at(n, {0, 1}));

    DisjointSets sets(labels.size());
    for (std::size_t idx = 0; idx < labels.size(); ++idx) {
        for (const auto& g : generators) {
            sets.unite(static_cast<int>(idx), index_of(act(g, labels[idx])));
        }
    }
    int orbits = 0;
    for (std::size_t idx = 0; idx < labels.size(); ++idx) {
        orbits += sets.find(static_cast<int>(idx)) == static_cast<int>(idx);
    }
    return orbits;
}

BlowupPlan cover_plan_n2(const SurfaceSpec& v) {
    const HodgeTable quotient_surface = v.hodge.plus_part();
    return {invariant_dims(v.hodge, 2, Subgroup::H), {quotient_surface, quotient_surface}};
}

HodgeTable cover_diamond_n2(const SurfaceSpec& v) { return blowup_assemble(cover_plan_n2(v)); }

BigInt weight2_invariants(int n, const SurfaceSpec& v) {
    if (n < 2) {
        throw std::invalid_argument("weight2_invariants requires n >= 2");
    }
    return betti(invariant_dims(v.hodge, n, Subgroup::H), 2);
}

BigInt h2_cover(int n, const SurfaceSpec& v) {
    return weight2_invariants(n, v) + exceptional_orbits(n);
}

BigInt h_top_minus(int n, const SurfaceSpec& v) {
    if (n < 2) {
        throw std::invalid_argument("h_top_minus requires n >= 2");
    }
    return invariant_dims(v.hodge, n, Subgroup::H).at(2 * n - 1, 1);
}

HodgeTable cover_low_degree(int n, const SurfaceSpec& v) {
    if (n < 2) {
        throw std::invalid_argument("cover_low_degree requires n >= 2");
    }
    const HodgeTable invariants = invariant_dims(v.hodge, n, Subgroup::H);
    HodgeTable::Entries out;
    for (const auto& [deg, dim] : invariants.entries()) {
        if (deg.total() <= 2) {
            out.emplace(deg, dim);
        }
    }
    out[Bidegree{1, 1}] += exceptional_orbits(n);
    return HodgeTable(invariants.dimension(), std::move(out));
}

}  // namespace hodge
