#include "hodge/invariants.hpp"

#include "hodge/errors.hpp"

#include <stdexcept>

namespace hodge {

TracePolynomial::TracePolynomial(Terms terms) {
    for (auto& [deg, c] : terms) {
        if (c != 0) {
            terms_.emplace(deg, std::move(c));
        }
    }
}

TracePolynomial TracePolynomial::one() { return TracePolynomial({{{0, 0}, 1}}); }

BigInt TracePolynomial::coefficient(int p, int q) const {
    auto it = terms_.find({p, q});
    return it == terms_.end() ? BigInt{0} : it->second;
}

TracePolynomial TracePolynomial::operator*(const TracePolynomial& rhs) const {
    Terms out;
    for (const auto& [a, x] : terms_) {
        for (const auto& [b, y] : rhs.terms_) {
            out[Bidegree{a.p + b.p, a.q + b.q}] += x * y;
        }
    }
    return TracePolynomial(std::move(out));
}

TracePolynomial& TracePolynomial::operator+=(const TracePolynomial& rhs) {
    Terms sum = terms_;
    for (const auto& [deg, c] : rhs.terms_) {
        sum[deg] += c;
    }
    *this = TracePolynomial(std::move(sum));
    return *this;
}

TracePolynomial TracePolynomial::scaled(const BigInt& factor) const {
    Terms out;
    for (const auto& [deg, c] : terms_) {
        out.emplace(deg, c * factor);
    }
    return TracePolynomial(std::move(out));
}

namespace {

TracePolynomial cycle_factor(const SignedCycle& cycle, const EquivHodgeTable& v) {
    TracePolynomial::Terms terms;
    for (const auto& [deg, split] : v.entries()) {
        BigInt trace = cycle.twist ? BigInt(split.plus - split.minus) : BigInt(split.plus + split.minus);
        terms[Bidegree{cycle.length * deg.p, cycle.length * deg.q}] += trace;
    }
    return TracePolynomial(std::move(terms));
}

}  // namespace

TracePolynomial class_trace(const SignedCycleType& type, const EquivHodgeTable& v) {
    // EquivHodgeTable rejects odd-degree classes on construction.
    TracePolynomial result = TracePolynomial::one();
    for (const auto& cycle : type.parts) {
        result = result * cycle_factor(cycle, v);
    }
    return result;
}

HodgeTable invariant_dims(const EquivHodgeTable& v, int n, Subgroup which) {
    if (n < 1) {
        throw std::invalid_argument("invariant_dims requires n >= 1");
    }
    // Cycles of equal (length, twist) share a factor; cache them.
    std::map<SignedCycle, TracePolynomial> factors;
    TracePolynomial sum;
    for (const auto& cls : classes(n, which)) {
        TracePolynomial trace = TracePolynomial::one();
        for (const auto& cycle : cls.type.parts) {
            auto it = factors.find(cycle);
            if (it == factors.end()) {
                it = factors.emplace(cycle, cycle_factor(cycle, v)).first;
            }
            trace = trace * it->second;
        }
        sum += trace.scaled(cls.size);
    }

    const BigInt order = group_order(n, which);
    HodgeTable::Entries entries;
    for (const auto& [deg, c] : sum.terms()) {
        if (c < 0 || c % order != 0) {
            throw IntegralityViolation("averaged trace " + c.str() + " at (" + std::to_string(deg.p) +
                                       "," + std::to_string(deg.q) + ") is not divisible by " +
                                       order.str());
        }
        entries.emplace(deg, c / order);
    }
    return HodgeTable(n * v.dimension(), std::move(entries));
}

HodgeTable sym_product(const HodgeTable& s, int m) {
    if (m < 0) {
        throw std::invalid_argument("negative symmetric power");
    }
    if (m == 0) {
        return HodgeTable::point();
    }
    return invariant_dims(EquivHodgeTable::trivial(s), m, Subgroup::Sn);
}

HodgeTable sym_multi(const HodgeTable& s, const Partition& alpha) {
    HodgeTable out = HodgeTable::point();
    for (int i = 1; i <= alpha.n(); ++i) {
        out = tensor(out, sym_product(s, alpha.multiplicity(i)));
    }
    return out;
}

}  // namespace hodge
