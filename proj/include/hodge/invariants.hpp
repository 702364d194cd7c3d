#pragma once

#include "hodge/bigraded.hpp"
#include "hodge/group.hpp"
#include "hodge/partition.hpp"

#include <map>

namespace hodge {

/// Bivariate polynomial in formal u, v; the coefficient of u^p v^q is a graded
/// trace on the (p,q) slot. Coefficients may be negative.
class TracePolynomial {
public:
    using Terms = std::map<Bidegree, BigInt>;

    TracePolynomial() = default;
    explicit TracePolynomial(Terms terms);
    static TracePolynomial one();

    const Terms& terms() const { return terms_; }
    BigInt coefficient(int p, int q) const;

    TracePolynomial operator*(const TracePolynomial& rhs) const;
    TracePolynomial& operator+=(const TracePolynomial& rhs);
    TracePolynomial scaled(const BigInt& factor) const;

    bool operator==(const TracePolynomial&) const = default;

private:
    Terms terms_;
};

/// Graded trace of any element with the given signed cycle type acting on
/// V^{(x)n}: the product over cycles (l, t) of
/// sum_{p,q} (d_plus + (-1)^t d_minus) u^{l p} v^{l q}.
TracePolynomial class_trace(const SignedCycleType& type, const EquivHodgeTable& v);

/// Dimensions of the invariant part of V^{(x)n} under the chosen group,
/// averaged over conjugacy classes. The result has dimension n * dim V.
/// Throws IntegralityViolation if an average is not a nonnegative integer.
HodgeTable invariant_dims(const EquivHodgeTable& v, int n, Subgroup which);

/// Hodge diamond of the m-th symmetric product; m = 0 gives a point.
HodgeTable sym_product(const HodgeTable& s, int m);

/// Product over i of sym_product(s, alpha_i).
HodgeTable sym_multi(const HodgeTable& s, const Partition& alpha);

}  // namespace hodge
