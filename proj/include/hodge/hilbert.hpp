#pragma once

#include "hodge/bigraded.hpp"
#include "hodge/partition.hpp"

#include <vector>

namespace hodge {

/// Hodge diamond of the Hilbert scheme of n points on the surface s.
///
/// Every partition alpha of n contributes sym_multi(s, alpha) moved up by
/// n - |alpha| in both indices. Requires a surface (dimension 2) with
/// even-degree cohomology; throws Unsupported otherwise.
HodgeTable hilbert_diamond(const HodgeTable& s, int n);

/// h^{1,2n-1} of the Hilbert scheme, n >= 2.
BigInt h_one_top(const HodgeTable& s, int n);

struct EulerCheckRow {
    int n;
    BigInt assembled;
    BigInt generating_function;
};

/// Coefficients of q^0..q^n_max in prod_{m>=1} (1 - q^m)^{-e}.
std::vector<BigInt> euler_generating_series(const BigInt& e, int n_max);

/// Compares euler(hilbert_diamond(s, n)) against the generating function for
/// n = 1..n_max. Throws MismatchReport naming the first disagreeing n.
std::vector<EulerCheckRow> euler_check(const HodgeTable& s, int n_max);

}  // namespace hodge
