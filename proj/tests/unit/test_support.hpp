#pragma once

#include "hodge/bigraded.hpp"

#include <random>

namespace hodge::testing {

// Fixed seeds keep property runs reproducible.
inline std::mt19937& rng() {
    static std::mt19937 gen(20261014u);
    return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

/// Random even-degree table on a space of the given dimension; entries up to max_dim.
inline HodgeTable random_even_table(int dimension, int max_dim) {
    HodgeTable::Entries e;
    for (int p = 0; p <= dimension; ++p) {
        for (int q = 0; q <= dimension; ++q) {
            if ((p + q) % 2 == 0 && uniform(0, 2) != 0) {
                e[{p, q}] = uniform(0, max_dim);
            }
        }
    }
    return HodgeTable(dimension, std::move(e));
}

/// Random even-degree split table whose total rank stays at or below max_rank.
inline EquivHodgeTable random_equiv_table(int dimension, int max_entry, int max_rank) {
    while (true) {
        EquivHodgeTable::Entries e;
        int rank = 0;
        for (int p = 0; p <= dimension; ++p) {
            for (int q = 0; q <= dimension; ++q) {
                if ((p + q) % 2 != 0) {
                    continue;
                }
                const int plus = uniform(0, max_entry);
                const int minus = uniform(0, max_entry);
                rank += plus + minus;
                e[{p, q}] = {plus, minus};
            }
        }
        if (rank > 0 && rank <= max_rank) {
            return EquivHodgeTable(dimension, std::move(e));
        }
    }
}

}  // namespace hodge::testing
