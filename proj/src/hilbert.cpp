#include "hodge/hilbert.hpp"

#include "hodge/errors.hpp"
#include "hodge/invariants.hpp"

#include <stdexcept>

namespace hodge {

HodgeTable hilbert_diamond(const HodgeTable& s, int n) {
    if (n < 1) {
        throw std::invalid_argument("Hilbert scheme of n points requires n >= 1");
    }
    if (s.dimension() != 2) {
        throw Unsupported("Hilbert schemes are computed for surfaces only");
    }
    if (s.has_odd_degree()) {
        throw OddCohomologyUnsupported("surface has odd-degree cohomology");
    }
    HodgeTable::Entries total;
    for (const Partition& alpha : partitions(n)) {
        const HodgeTable term = sym_multi(s, alpha).with_dimension(2 * n).shift_by(n - alpha.weight());
        for (const auto& [deg, dim] : term.entries()) {
            total[deg] += dim;
        }
    }
    return HodgeTable(2 * n, std::move(total));
}

BigInt h_one_top(const HodgeTable& s, int n) {
    if (n < 2) {
        throw std::invalid_argument("h_one_top requires n >= 2");
    }
    return hilbert_diamond(s, n).at(1, 2 * n - 1);
}

std::vector<BigInt> euler_generating_series(const BigInt& e, int n_max) {
    if (n_max < 0) {
        throw std::invalid_argument("negative series length");
    }
    std::vector<BigInt> series(n_max + 1, 0);
    series[0] = 1;
    for (int m = 1; m <= n_max; ++m) {
        // (1 - x)^{-e} = sum_k e(e+1)...(e+k-1)/k! x^k with x = q^m.
        std::vector<BigInt> factor(n_max / m + 1, 0);
        factor[0] = 1;
        for (std::size_t k = 1; k < factor.size(); ++k) {
            factor[k] = factor[k - 1] * (e + static_cast<int>(k) - 1) / static_cast<int>(k);
        }
        std::vector<BigInt> next(n_max + 1, 0);
        for (int i = 0; i <= n_max; ++i) {
            if (series[i] == 0) {
                continue;
            }
            for (std::size_t k = 0; i + static_cast<int>(k) * m <= n_max; ++k) {
                next[i + k * m] += series[i] * factor[k];
            }
        }
        series = std::move(next);
    }
    return series;
}

std::vector<EulerCheckRow> euler_check(const HodgeTable& s, int n_max) {
    if (n_max < 1) {
        throw std::invalid_argument("euler_check requires n_max >= 1");
    }
    const auto series = euler_generating_series(euler(s), n_max);
    std::vector<EulerCheckRow> rows;
    for (int n = 1; n <= n_max; ++n) {
        EulerCheckRow row{n, euler(hilbert_diamond(s, n)), series[n]};
        if (row.assembled != row.generating_function) {
            throw MismatchReport(n, "Euler number mismatch at n = " + std::to_string(n) + ": assembled " +
                                        row.assembled.str() + ", generating function " +
                                        row.generating_function.str());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace hodge
