#include "hodge/errors.hpp"
#include "hodge/group.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

using namespace hodge;

namespace {

// A point of K^n as labels x_i together with whether the involution was applied.
struct Slot {
    int label;
    bool flipped;
    bool operator==(const Slot&) const = default;
};
using Tuple = std::vector<Slot>;

Tuple act(const GroupElement& g, const Tuple& x) {
    Tuple out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[g.perm()[i]] = {x[i].label, x[i].flipped != (g.twist()[i] == 1)};
    }
    return out;
}

Tuple labelled(int n) {
    Tuple x(n);
    for (int i = 0; i < n; ++i) {
        x[i] = {i, false};
    }
    return x;
}

GroupElement random_element(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), testing::rng());
    std::vector<std::uint8_t> twist(n);
    for (auto& t : twist) {
        t = static_cast<std::uint8_t>(testing::uniform(0, 1));
    }
    return GroupElement(std::move(perm), std::move(twist));
}

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

TEST_CASE("enumerate_group sizes and membership") {
    const auto h2 = enumerate_group(2, Subgroup::H);
    REQUIRE(h2.size() == 4);
    const std::set<GroupElement> expected = {
        GroupElement::identity(2), GroupElement::transposition(2, 0, 1), GroupElement::twist_at(2, {0, 1}),
        GroupElement::transposition(2, 0, 1) * GroupElement::twist_at(2, {0, 1})};
    CHECK(std::set<GroupElement>(h2.begin(), h2.end()) == expected);

    const auto g1 = enumerate_group(1, Subgroup::G);
    CHECK(g1.size() == 2);
    CHECK(std::count(g1.begin(), g1.end(), GroupElement::twist_at(1, {0})) == 1);

    for (int n = 1; n <= 5; ++n) {
        const auto g = enumerate_group(n, Subgroup::G);
        const auto h = enumerate_group(n, Subgroup::H);
        CHECK(BigInt(g.size()) == (factorial(n) << n));
        CHECK(BigInt(h.size()) == (factorial(n) << (n - 1)));
        const std::set<GroupElement> gs(g.begin(), g.end());
        const std::set<GroupElement> hs(h.begin(), h.end());
        CHECK(gs.size() == g.size());
        CHECK(hs.size() == h.size());
        CHECK(std::includes(gs.begin(), gs.end(), hs.begin(), hs.end()));
        for (int i = 0; i < n; ++i) {
            CHECK(hs.count(GroupElement::twist_at(n, {i})) == 0);
        }
    }
    CHECK_THROWS_AS(enumerate_group(kEnumerationLimit + 1, Subgroup::H), TooLarge);
}

TEST_CASE("composition matches the action on labelled tuples") {
    for (int trial = 0; trial < 200; ++trial) {
        const int n = testing::uniform(1, 5);
        const auto a = random_element(n);
        const auto b = random_element(n);
        const auto c = random_element(n);
        const Tuple x = labelled(n);
        CHECK(act(a * b, x) == act(a, act(b, x)));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * a.inverse() == GroupElement::identity(n));
        CHECK(a.inverse() * a == GroupElement::identity(n));
        // Twist parity is a homomorphism onto Z/2 with kernel H.
        CHECK((a * b).twist_count() % 2 == (a.twist_count() + b.twist_count()) % 2);
        CHECK((a * b).in_h() == (a.in_h() == b.in_h()));
    }
}

TEST_CASE("conjugating a single twist moves it") {
    // (i j) o sigma_i o (i j) = sigma_j
    const int n = 4;
    const auto s = GroupElement::transposition(n, 0, 2);
    CHECK(s * GroupElement::twist_at(n, {0}) * s == GroupElement::twist_at(n, {2}));
}

TEST_CASE("signed_cycle_type") {
    CHECK(signed_cycle_type(GroupElement::identity(3)).parts ==
          std::vector<SignedCycle>{{1, 0}, {1, 0}, {1, 0}});
    CHECK(signed_cycle_type(GroupElement::twist_at(2, {0, 1})).parts == std::vector<SignedCycle>{{1, 1}, {1, 1}});
    const auto swap_twist = GroupElement::transposition(2, 0, 1) * GroupElement::twist_at(2, {0, 1});
    CHECK(signed_cycle_type(swap_twist).parts == std::vector<SignedCycle>{{2, 0}});
    CHECK(signed_cycle_type(GroupElement::transposition(3, 0, 1) * GroupElement::twist_at(3, {0, 2})).parts ==
          std::vector<SignedCycle>{{2, 1}, {1, 1}});

    for (int trial = 0; trial < 100; ++trial) {
        const int n = testing::uniform(1, 6);
        const auto g = random_element(n);
        const auto type = signed_cycle_type(g);
        CHECK(type.degree() == n);
        CHECK(type.in_h() == g.in_h());
        // Conjugation invariance in G.
        const auto x = random_element(n);
        CHECK(signed_cycle_type(x * g * x.inverse()) == type);
    }
}

TEST_CASE("classes") {
    const auto h2 = classes(2, Subgroup::H);
    std::multiset<BigInt> sizes;
    for (const auto& c : h2) sizes.insert(c.size);
    CHECK(sizes == std::multiset<BigInt>{1, 1, 2});

    BigInt h6 = 0, g6 = 0;
    for (const auto& c : classes(6, Subgroup::H)) h6 += c.size;
    for (const auto& c : classes(6, Subgroup::G)) g6 += c.size;
    CHECK(h6 == 23040);
    CHECK(g6 == 46080);

    for (int n = 1; n <= 12; ++n) {
        for (Subgroup which : {Subgroup::Sn, Subgroup::G, Subgroup::H}) {
            BigInt total = 0;
            for (const auto& c : classes(n, which)) total += c.size;
            CHECK(total == group_order(n, which));
        }
    }
}

TEST_CASE("class census equals enumeration for n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        for (Subgroup which : {Subgroup::Sn, Subgroup::G, Subgroup::H}) {
            std::map<SignedCycleType, BigInt> census;
            for_each_element(n, which, [&](const GroupElement& g) { census[signed_cycle_type(g)] += 1; });
            std::map<SignedCycleType, BigInt> predicted;
            for (const auto& c : classes(n, which)) predicted[c.type] = c.size;
            CHECK(census == predicted);
        }
    }
}

TEST_CASE("class lists are canonically ordered") {
    const auto a = classes(5, Subgroup::G);
    CHECK(std::is_sorted(a.begin(), a.end(),
                         [](const ConjugacyClass& x, const ConjugacyClass& y) { return x.type > y.type; }));
    for (const auto& c : a) {
        CHECK(std::is_sorted(c.type.parts.begin(), c.type.parts.end(), [](const SignedCycle& x, const SignedCycle& y) {
            return x.length != y.length ? x.length > y.length : x.twist < y.twist;
        }));
    }
}
