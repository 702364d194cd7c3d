#include "hodge/oracle.hpp"

#include "hodge/errors.hpp"

#include <stdexcept>

namespace hodge::oracle {

std::size_t LabeledBasis::size() const {
    std::size_t total = 1;
    for (int k = 0; k < factors; ++k) {
        total *= slots.size();
    }
    return total;
}

Bidegree LabeledBasis::degree(const Label& label) const {
    Bidegree d{0, 0};
    for (int s : label) {
        d.p += slots[s].degree.p;
        d.q += slots[s].degree.q;
    }
    return d;
}

LabeledBasis make_basis(const EquivHodgeTable& v, int n) {
    if (n < 1) {
        throw std::invalid_argument("oracle needs at least one factor");
    }
    BigInt rank = v.forget_split().total_rank();
    BigInt labels = 1;
    for (int k = 0; k < n; ++k) {
        labels *= rank;
    }
    if (labels > kMaxLabels) {
        throw TooLarge("oracle basis would hold " + labels.str() + " labels, limit " +
                       std::to_string(kMaxLabels));
    }
    LabeledBasis basis;
    basis.factors = n;
    for (const auto& [deg, split] : v.entries()) {
        for (int i = 0; i < static_cast<int>(split.plus); ++i) {
            basis.slots.push_back({deg, +1, i});
        }
        for (int i = 0; i < static_cast<int>(split.minus); ++i) {
            basis.slots.push_back({deg, -1, i});
        }
    }
    return basis;
}

std::pair<Label, int> apply_element(const LabeledBasis& basis, const GroupElement& g, const Label& label) {
    Label image(label.size());
    int sign = 1;
    for (std::size_t i = 0; i < label.size(); ++i) {
        image[g.perm()[i]] = label[i];
        if (g.twist()[i]) {
            sign *= basis.slots[label[i]].sign;
        }
    }
    return {std::move(image), sign};
}

namespace {

// Calls fn on every label of the basis, odometer style.
template <class Fn>
void for_each_label(const LabeledBasis& basis, Fn&& fn) {
    if (basis.slots.empty()) {
        return;
    }
    Label label(basis.factors, 0);
    const int base = static_cast<int>(basis.slots.size());
    while (true) {
        fn(label);
        int k = 0;
        while (k < basis.factors && ++label[k] == base) {
            label[k] = 0;
            ++k;
        }
        if (k == basis.factors) {
            return;
        }
    }
}

}  // namespace

std::map<Bidegree, BigInt> element_trace(const EquivHodgeTable& v, const GroupElement& g) {
    const LabeledBasis basis = make_basis(v, g.degree());
    std::map<Bidegree, long long> acc;
    for_each_label(basis, [&](const Label& label) {
        auto [image, sign] = apply_element(basis, g, label);
        if (image == label) {
            acc[basis.degree(label)] += sign;
        }
    });
    std::map<Bidegree, BigInt> out;
    for (const auto& [deg, t] : acc) {
        if (t != 0) {
            out.emplace(deg, t);
        }
    }
    return out;
}

HodgeTable projector_invariant_dims(const EquivHodgeTable& v, int n, Subgroup which) {
    if (n > 3) {
        throw TooLarge("projector oracle is limited to n <= 3");
    }
    const LabeledBasis basis = make_basis(v, n);
    const auto elements = enumerate_group(n, which);

    std::vector<Label> labels;
    std::vector<Bidegree> degrees;
    for_each_label(basis, [&](const Label& label) {
        labels.push_back(label);
        degrees.push_back(basis.degree(label));
    });

    std::map<Bidegree, long long> acc;
    for (const auto& g : elements) {
        for (std::size_t k = 0; k < labels.size(); ++k) {
            auto [image, sign] = apply_element(basis, g, labels[k]);
            if (image == labels[k]) {
                acc[degrees[k]] += sign;
            }
        }
    }

    const long long order = static_cast<long long>(elements.size());
    HodgeTable::Entries entries;
    for (const auto& [deg, t] : acc) {
        if (t < 0 || t % order != 0) {
            throw IntegralityViolation("projector trace " + std::to_string(t) + " not divisible by " +
                                       std::to_string(order));
        }
        entries.emplace(deg, t / order);
    }
    return HodgeTable(n * v.dimension(), std::move(entries));
}

}  // namespace hodge::oracle
