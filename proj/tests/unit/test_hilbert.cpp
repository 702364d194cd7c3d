#include "hodge/errors.hpp"
#include "hodge/hilbert.hpp"
#include "hodge/invariants.hpp"
#include "hodge/surface.hpp"

#include <doctest.h>

#include <functional>
#include <set>

using namespace hodge;

namespace {

// Every vector (a_1..a_n) with 0 <= a_i <= n/i and sum i*a_i = n.
std::set<std::vector<int>> brute_force_partitions(int n) {
    std::set<std::vector<int>> out;
    std::vector<int> a(n, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            int total = 0;
            for (int k = 0; k < n; ++k) total += (k + 1) * a[k];
            if (total == n) out.insert(a);
            return;
        }
        for (int v = 0; v * (i + 1) <= n; ++v) {
            a[i] = v;
            rec(i + 1);
        }
        a[i] = 0;
    };
    rec(0);
    return out;
}

// Coefficient of q^n in prod_m (1-q^m)^{-e}, summed over partitions of n:
// each part size m used a_m times contributes C(e + a_m - 1, a_m).
BigInt euler_by_colored_partitions(long e, int n) {
    BigInt total = 0;
    for (const auto& a : brute_force_partitions(n)) {
        BigInt term = 1;
        for (int m = 0; m < n; ++m) {
            BigInt c = 1;
            for (int k = 0; k < a[m]; ++k) c = c * (e + k) / (k + 1);
            term *= c;
        }
        total += term;
    }
    return total;
}

}  // namespace

TEST_CASE("partitions") {
    CHECK(partitions(1).size() == 1);
    const auto p2 = partitions(2);
    REQUIRE(p2.size() == 2);
    CHECK(p2[0].multiplicities() == std::vector<int>{2, 0});
    CHECK(p2[1].multiplicities() == std::vector<int>{0, 1});
    CHECK(brute_force_partitions(5).size() == 7);
    CHECK(partitions(5).size() == 7);
    for (int n = 1; n <= 9; ++n) {
        std::set<std::vector<int>> got;
        for (const auto& p : partitions(n)) {
            got.insert(p.multiplicities());
            CHECK(p.weight() >= 1);
            CHECK(p.weight() <= n);
        }
        CHECK(got == brute_force_partitions(n));
        CHECK(got.size() == partitions(n).size());
    }
    CHECK_THROWS_AS(Partition({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(partitions(0), std::invalid_argument);
}

TEST_CASE("hilbert_diamond") {
    const auto enr = presets::enriques_diamond();
    const auto k3 = presets::k3();
    for (int n = 2; n <= 6; ++n) {
        CHECK(hilbert_diamond(enr, n).at(1, 1) == 11);
    }
    CHECK(hilbert_diamond(k3, 2).at(1, 1) == 21);
    CHECK(hilbert_diamond(k3, 1) == k3);
    CHECK(hilbert_diamond(enr, 1) == enr);
    CHECK(hilbert_diamond(k3, 2).dimension() == 4);
    CHECK_THROWS_AS(hilbert_diamond(HodgeTable::point(), 2), Unsupported);
}

TEST_CASE("h_one_top") {
    const auto enr = presets::enriques_diamond();
    for (int n = 2; n <= 6; ++n) {
        CHECK(h_one_top(enr, n) == 0);
        CHECK(hilbert_diamond(enr, n).at(2 * n - 1, 1) == 0);
    }
    // K3^[2] is holomorphic symplectic: h^{1,3} = h^{3,1} = 21.
    CHECK(h_one_top(presets::k3(), 2) == 21);
    CHECK_THROWS_AS(h_one_top(enr, 1), std::invalid_argument);
}

TEST_CASE("Hilbert diamonds are symmetric and self-dual") {
    for (const auto& s : {presets::enriques_diamond(), presets::k3()}) {
        for (int n = 1; n <= 5; ++n) {
            const auto t = hilbert_diamond(s, n);
            CHECK(t.is_conjugation_symmetric());
            CHECK(t.satisfies_duality());
        }
    }
}

TEST_CASE("second Betti numbers") {
    for (int n = 2; n <= 6; ++n) {
        CHECK(betti(hilbert_diamond(presets::enriques_diamond(), n), 2) == 11);
    }
    for (int n = 2; n <= 5; ++n) {
        CHECK(betti(hilbert_diamond(presets::k3(), n), 2) == 23);
    }
}

TEST_CASE("Euler generating function") {
    CHECK(euler_by_colored_partitions(12, 2) == 90);
    CHECK(euler_by_colored_partitions(24, 2) == 324);
    const auto e12 = euler_generating_series(12, 6);
    const auto e24 = euler_generating_series(24, 6);
    for (int n = 0; n <= 6; ++n) {
        if (n >= 1) {
            CHECK(e12[n] == euler_by_colored_partitions(12, n));
            CHECK(e24[n] == euler_by_colored_partitions(24, n));
        }
    }
    // Negative Euler numbers give finite products.
    const auto neg = euler_generating_series(-2, 3);
    CHECK(neg[1] == -2);
    CHECK(neg[2] == -1);
}

TEST_CASE("euler_check") {
    const auto rows = euler_check(presets::enriques_diamond(), 6);
    REQUIRE(rows.size() == 6);
    CHECK(rows[1].n == 2);
    CHECK(rows[1].assembled == 90);
    CHECK(rows[1].generating_function == 90);

    const auto k3rows = euler_check(presets::k3(), 6);
    CHECK(k3rows[0].assembled == 24);
    CHECK(k3rows[1].assembled == 324);
    for (const auto& r : k3rows) {
        CHECK(r.assembled == r.generating_function);
    }
}
