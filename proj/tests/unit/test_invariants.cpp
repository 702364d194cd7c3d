#include "hodge/errors.hpp"
#include "hodge/invariants.hpp"
#include "hodge/oracle.hpp"
#include "hodge/surface.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace hodge;

namespace {

SignedCycleType type_of(std::vector<SignedCycle> parts) { return SignedCycleType{std::move(parts)}; }

// Sum of class_trace over every enumerated element, divided by the order.
HodgeTable element_sum_average(const EquivHodgeTable& v, int n, Subgroup which) {
    TracePolynomial sum;
    long long order = 0;
    for_each_element(n, which, [&](const GroupElement& g) {
        sum += class_trace(signed_cycle_type(g), v);
        ++order;
    });
    HodgeTable::Entries e;
    for (const auto& [deg, c] : sum.terms()) {
        REQUIRE(c % order == 0);
        e.emplace(deg, c / order);
    }
    return HodgeTable(n * v.dimension(), std::move(e));
}

}  // namespace

TEST_CASE("class_trace on the K3 with involution") {
    const auto v = presets::k3_enriques().hodge;
    CHECK(class_trace(type_of({{1, 0}}), v).coefficient(1, 1) == 20);
    CHECK(class_trace(type_of({{1, 1}}), v).coefficient(1, 1) == 0);

    // A 2-cycle stretches (p,q) to (2p,2q): only h^{1,1} reaches u^2 v^2 and
    // h^{2,0} lands at u^4. Compare against the fixed-label count of the swap.
    const auto swap_trace = class_trace(type_of({{2, 0}}), v);
    const auto fixed = oracle::element_trace(v, GroupElement::transposition(2, 0, 1));
    CHECK(fixed.at({2, 2}) == 20);
    CHECK(swap_trace.coefficient(2, 2) == 20);
    CHECK(swap_trace.coefficient(4, 0) == 1);
    CHECK(swap_trace.coefficient(2, 0) == 0);
}

TEST_CASE("invariant_dims on K^2/H") {
    const auto v = presets::k3_enriques().hodge;
    const auto q = invariant_dims(v, 2, Subgroup::H);
    CHECK(q.at(1, 1) == 10);
    CHECK(q.at(3, 1) == 10);
    CHECK(q.at(4, 0) == 1);
    // (404 + 4 + 20 + 20) / 4 from the four elements on the 404-dimensional slot.
    CHECK(q.at(2, 2) == 112);
    CHECK(q.at(2, 2) == oracle::projector_invariant_dims(v, 2, Subgroup::H).at(2, 2));
    CHECK(q.at(2, 0) == 0);
    CHECK(q.at(0, 0) == 1);
    CHECK(q.is_conjugation_symmetric());
    CHECK(q.satisfies_duality());
}

TEST_CASE("n = 1 under Sn forgets the split") {
    for (int trial = 0; trial < 10; ++trial) {
        const auto v = testing::random_equiv_table(2, 4, 100);
        CHECK(invariant_dims(v, 1, Subgroup::Sn) == v.forget_split());
        CHECK(invariant_dims(v, 1, Subgroup::G) == v.plus_part());
    }
}

TEST_CASE("sym_product") {
    const auto enr = presets::enriques_diamond();
    const auto k3 = presets::k3();
    // Sym^2 of H^{1,1}(E) (x) H^{0,0} pairs: (10*1*2 + 0) / 2.
    CHECK(sym_product(enr, 2).at(1, 1) == 10);
    CHECK(sym_product(k3, 2).at(2, 0) == 1);
    CHECK(sym_product(k3, 1) == k3);
    CHECK(sym_product(k3, 0) == HodgeTable::point());
    // Euler number of S^(2) is (e^2 + e) / 2.
    CHECK(euler(sym_product(enr, 2)) == 78);
    CHECK(euler(sym_product(k3, 2)) == 300);
}

TEST_CASE("sym_multi") {
    const auto enr = presets::enriques_diamond();
    CHECK(sym_multi(enr, Partition({3, 0, 0})) == sym_product(enr, 3));
    CHECK(sym_multi(enr, Partition({0, 1})) == enr);
    CHECK(sym_multi(enr, Partition({1})) == enr);
    CHECK(sym_multi(enr, Partition({1, 1, 0})) == tensor(enr, enr));
}

TEST_CASE("class sum equals element sum for n <= 4") {
    const auto k3e = presets::k3_enriques().hodge;
    for (int n = 1; n <= 4; ++n) {
        for (Subgroup which : {Subgroup::Sn, Subgroup::G, Subgroup::H}) {
            CHECK(invariant_dims(k3e, n, which) == element_sum_average(k3e, n, which));
        }
    }
    for (int trial = 0; trial < 10; ++trial) {
        const auto v = testing::random_equiv_table(2, 3, 60);
        const int n = testing::uniform(1, 4);
        CHECK(invariant_dims(v, n, Subgroup::H) == element_sum_average(v, n, Subgroup::H));
    }
}

TEST_CASE("subgroups give at least as many invariants") {
    const auto k3e = presets::k3_enriques().hodge;
    for (int n = 1; n <= 5; ++n) {
        const auto g = invariant_dims(k3e, n, Subgroup::G);
        const auto h = invariant_dims(k3e, n, Subgroup::H);
        const auto s = invariant_dims(k3e, n, Subgroup::Sn);
        HodgeTable power = HodgeTable::point();
        for (int k = 0; k < n; ++k) power = tensor(power, k3e.forget_split());
        for (const auto& [deg, dim] : power.entries()) {
            CHECK(g.at(deg) <= h.at(deg));
            CHECK(h.at(deg) <= s.at(deg));
            CHECK(s.at(deg) <= dim);
        }
    }
}

TEST_CASE("K^n/G has the Hodge numbers of E^(n)") {
    const auto k3e = presets::k3_enriques().hodge;
    for (int n = 1; n <= 5; ++n) {
        CHECK(invariant_dims(k3e, n, Subgroup::G) == sym_product(presets::enriques_diamond(), n));
    }
}

TEST_CASE("property: averages are integral on random split tables") {
    for (int trial = 0; trial < 30; ++trial) {
        const auto v = testing::random_equiv_table(testing::uniform(1, 3), 5, 400);
        const int n = testing::uniform(1, 6);
        for (Subgroup which : {Subgroup::Sn, Subgroup::G, Subgroup::H}) {
            const auto t = invariant_dims(v, n, which);
            CHECK(t.dimension() == n * v.dimension());
        }
    }
}

TEST_CASE("odd cohomology is rejected before averaging") {
    const HodgeTable curve(1, {{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}});
    CHECK_THROWS_AS(sym_product(curve, 2), OddCohomologyUnsupported);
}
