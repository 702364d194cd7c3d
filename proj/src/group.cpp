#include "hodge/group.hpp"

#include "hodge/errors.hpp"
#include "hodge/partition.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hodge {

std::string to_string(Subgroup which) {
    switch (which) {
        case Subgroup::Sn:
            return "Sn";
        case Subgroup::G:
            return "G";
        case Subgroup::H:
            return "H";
    }
    return "?";
}

Subgroup subgroup_from_string(const std::string& name) {
    if (name == "Sn" || name == "sn" || name == "S" || name == "s") {
        return Subgroup::Sn;
    }
    if (name == "G" || name == "g") {
        return Subgroup::G;
    }
    if (name == "H" || name == "h") {
        return Subgroup::H;
    }
    throw ParseError("unknown subgroup '" + name + "' (expected Sn, G or H)");
}

GroupElement::GroupElement(std::vector<int> perm, std::vector<std::uint8_t> twist)
    : perm_(std::move(perm)), twist_(std::move(twist)) {
    const int n = degree();
    if (static_cast<int>(twist_.size()) != n) {
        throw std::invalid_argument("permutation and twist vector differ in length");
    }
    std::vector<bool> seen(n, false);
    for (int image : perm_) {
        if (image < 0 || image >= n || seen[image]) {
            throw std::invalid_argument("not a permutation");
        }
        seen[image] = true;
    }
    for (auto& t : twist_) {
        if (t > 1) {
            throw std::invalid_argument("twist entries must be 0 or 1");
        }
    }
}

GroupElement GroupElement::identity(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    return GroupElement(std::move(perm), std::vector<std::uint8_t>(n, 0));
}

GroupElement GroupElement::transposition(int n, int i, int j) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm.at(i), perm.at(j));
    return GroupElement(std::move(perm), std::vector<std::uint8_t>(n, 0));
}

GroupElement GroupElement::twist_at(int n, const std::vector<int>& slots) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint8_t> twist(n, 0);
    for (int s : slots) {
        twist.at(s) ^= 1;
    }
    return GroupElement(std::move(perm), std::move(twist));
}

int GroupElement::twist_count() const {
    return static_cast<int>(std::count(twist_.begin(), twist_.end(), std::uint8_t{1}));
}

GroupElement GroupElement::operator*(const GroupElement& rhs) const {
    const int n = degree();
    if (rhs.degree() != n) {
        throw std::invalid_argument("composing elements of different degree");
    }
    std::vector<int> perm(n);
    std::vector<std::uint8_t> twist(n);
    for (int j = 0; j < n; ++j) {
        perm[j] = perm_[rhs.perm_[j]];
        twist[j] = rhs.twist_[j] ^ twist_[rhs.perm_[j]];
    }
    return GroupElement(std::move(perm), std::move(twist));
}

GroupElement GroupElement::inverse() const {
    const int n = degree();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) {
        perm[perm_[i]] = i;
    }
    std::vector<std::uint8_t> twist(n);
    for (int j = 0; j < n; ++j) {
        twist[j] = twist_[perm[j]];
    }
    return GroupElement(std::move(perm), std::move(twist));
}

int SignedCycleType::degree() const {
    int n = 0;
    for (const auto& c : parts) {
        n += c.length;
    }
    return n;
}

int SignedCycleType::twisted_cycles() const {
    return static_cast<int>(
        std::count_if(parts.begin(), parts.end(), [](const SignedCycle& c) { return c.twist == 1; }));
}

std::string SignedCycleType::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i != 0) {
            out += " ";
        }
        out += std::to_string(parts[i].length) + (parts[i].twist ? "-" : "+");
    }
    return out + "]";
}

namespace {

void canonicalize(std::vector<SignedCycle>& parts) {
    std::sort(parts.begin(), parts.end(), [](const SignedCycle& a, const SignedCycle& b) {
        if (a.length != b.length) {
            return a.length > b.length;
        }
        return a.twist < b.twist;
    });
}

BigInt factorial(int k) {
    BigInt f = 1;
    for (int i = 2; i <= k; ++i) {
        f *= i;
    }
    return f;
}

}  // namespace

SignedCycleType signed_cycle_type(const GroupElement& g) {
    const int n = g.degree();
    std::vector<bool> seen(n, false);
    SignedCycleType type;
    for (int start = 0; start < n; ++start) {
        if (seen[start]) {
            continue;
        }
        SignedCycle cycle{0, 0};
        for (int i = start; !seen[i]; i = g.perm()[i]) {
            seen[i] = true;
            ++cycle.length;
            cycle.twist ^= g.twist()[i];
        }
        type.parts.push_back(cycle);
    }
    canonicalize(type.parts);
    return type;
}

BigInt group_order(int n, Subgroup which) {
    if (n < 0) {
        throw std::invalid_argument("negative degree");
    }
    const BigInt perms = factorial(n);
    switch (which) {
        case Subgroup::Sn:
            return perms;
        case Subgroup::G:
            return perms << n;
        case Subgroup::H:
            return n == 0 ? perms : perms << (n - 1);
    }
    return 0;
}

void for_each_element(int n, Subgroup which, const std::function<void(const GroupElement&)>& fn) {
    if (n < 1) {
        throw std::invalid_argument("group degree must be at least 1");
    }
    if (n > kEnumerationLimit) {
        throw TooLarge("explicit enumeration is limited to n <= " +
                       std::to_string(kEnumerationLimit));
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    const unsigned masks = which == Subgroup::Sn ? 1u : (1u << n);
    do {
        for (unsigned mask = 0; mask < masks; ++mask) {
            std::vector<std::uint8_t> twist(n);
            int count = 0;
            for (int i = 0; i < n; ++i) {
                twist[i] = (mask >> i) & 1u;
                count += twist[i];
            }
            if (which == Subgroup::H && count % 2 != 0) {
                continue;
            }
            fn(GroupElement(perm, std::move(twist)));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<GroupElement> enumerate_group(int n, Subgroup which) {
    std::vector<GroupElement> out;
    for_each_element(n, which, [&](const GroupElement& g) { out.push_back(g); });
    return out;
}

std::vector<ConjugacyClass> classes(int n, Subgroup which) {
    if (n < 1) {
        throw std::invalid_argument("group degree must be at least 1");
    }
    const BigInt n_fact = factorial(n);
    std::vector<ConjugacyClass> out;

    for (const Partition& shape : partitions(n)) {
        // Split the a_l cycles of each length l into a0 untwisted and a1 twisted.
        std::vector<int> lengths;
        for (int l = n; l >= 1; --l) {
            if (shape.multiplicity(l) > 0) {
                lengths.push_back(l);
            }
        }
        std::vector<int> twisted(lengths.size(), 0);
        while (true) {
            SignedCycleType type;
            BigInt numer = n_fact;
            BigInt denom = 1;
            for (std::size_t k = 0; k < lengths.size(); ++k) {
                const int l = lengths[k];
                const int a = shape.multiplicity(l);
                const int a1 = twisted[k];
                const int a0 = a - a1;
                for (int c = 0; c < a0; ++c) {
                    type.parts.push_back({l, 0});
                }
                for (int c = 0; c < a1; ++c) {
                    type.parts.push_back({l, 1});
                }
                BigInt l_pow = 1;
                for (int c = 0; c < a; ++c) {
                    l_pow *= l;
                }
                if (which == Subgroup::Sn) {
                    denom *= l_pow * factorial(a);
                } else {
                    numer <<= (l - 1) * a;
                    denom *= l_pow * factorial(a0) * factorial(a1);
                }
            }
            canonicalize(type.parts);
            const bool keep = which == Subgroup::G || (which == Subgroup::H && type.in_h()) ||
                              (which == Subgroup::Sn && type.twisted_cycles() == 0);
            if (keep) {
                out.push_back({std::move(type), numer / denom});
            }
            if (which == Subgroup::Sn) {
                break;
            }
            // Odometer over the twisted counts.
            std::size_t k = 0;
            while (k < lengths.size() && twisted[k] == shape.multiplicity(lengths[k])) {
                twisted[k] = 0;
                ++k;
            }
            if (k == lengths.size()) {
                break;
            }
            ++twisted[k];
        }
    }
    std::sort(out.begin(), out.end(),
              [](const ConjugacyClass& a, const ConjugacyClass& b) { return a.type > b.type; });
    return out;
}

}  // namespace hodge
