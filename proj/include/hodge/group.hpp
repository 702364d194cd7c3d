#pragma once

#include "hodge/bigraded.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hodge {

/// Which deck group acts on the n-fold product of a surface with involution:
/// plain permutations, the full hyperoctahedral group (Z/2)^n x| S_n, or its
/// index-2 subgroup of elements with an even number of twisted slots.
enum class Subgroup { Sn, G, H };

std::string to_string(Subgroup which);
/// Accepts "Sn", "G", "H" (case-insensitive for the first letter).
Subgroup subgroup_from_string(const std::string& name);

/// The element s o t of (Z/2)^n x| S_n, where t applies the involution in
/// every slot i with twist[i] = 1 and s then carries slot i to slot perm[i].
/// Slots are 0-based.
class GroupElement {
public:
    GroupElement() = default;
    GroupElement(std::vector<int> perm, std::vector<std::uint8_t> twist);

    static GroupElement identity(int n);
    /// Transposition of slots i and j (0-based).
    static GroupElement transposition(int n, int i, int j);
    /// Involution applied in the listed slots (0-based).
    static GroupElement twist_at(int n, const std::vector<int>& slots);

    int degree() const { return static_cast<int>(perm_.size()); }
    const std::vector<int>& perm() const { return perm_; }
    const std::vector<std::uint8_t>& twist() const { return twist_; }

    int twist_count() const;
    /// Membership in the even-twist subgroup.
    bool in_h() const { return twist_count() % 2 == 0; }

    GroupElement operator*(const GroupElement& rhs) const;
    GroupElement inverse() const;

    auto operator<=>(const GroupElement&) const = default;

private:
    std::vector<int> perm_;
    std::vector<std::uint8_t> twist_;
};

/// One cycle of the underlying permutation, with the parity of the twists
/// collected along it.
struct SignedCycle {
    int length = 1;
    int twist = 0;
    auto operator<=>(const SignedCycle&) const = default;
};

/// Conjugacy label in (Z/2)^n x| S_n: cycles sorted by length descending,
/// then twist ascending.
struct SignedCycleType {
    std::vector<SignedCycle> parts;

    int degree() const;
    int twisted_cycles() const;
    bool in_h() const { return twisted_cycles() % 2 == 0; }
    std::string to_string() const;

    auto operator<=>(const SignedCycleType&) const = default;
};

SignedCycleType signed_cycle_type(const GroupElement& g);

BigInt group_order(int n, Subgroup which);

inline constexpr int kEnumerationLimit = 8;

/// Visits every element of the chosen group without materializing the list.
/// Throws TooLarge for n > kEnumerationLimit.
void for_each_element(int n, Subgroup which, const std::function<void(const GroupElement&)>& fn);
std::vector<GroupElement> enumerate_group(int n, Subgroup which);

struct ConjugacyClass {
    SignedCycleType type;
    BigInt size;
};

/// Classes of (Z/2)^n x| S_n contained in the chosen group. For H these are
/// unions of at most two H-classes, which is all that trace averaging needs.
/// For Sn only untwisted types appear, sized as permutation classes.
std::vector<ConjugacyClass> classes(int n, Subgroup which);

}  // namespace hodge
