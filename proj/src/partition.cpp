#include "hodge/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace hodge {

Partition::Partition(std::vector<int> multiplicities) : alpha_(std::move(multiplicities)) {
    long long total = 0;
    for (std::size_t i = 0; i < alpha_.size(); ++i) {
        if (alpha_[i] < 0) {
            throw std::invalid_argument("negative multiplicity in partition");
        }
        total += static_cast<long long>(i + 1) * alpha_[i];
    }
    if (alpha_.empty() || total != static_cast<long long>(alpha_.size())) {
        throw std::invalid_argument("partition multiplicities do not sum to n");
    }
}

int Partition::weight() const { return std::accumulate(alpha_.begin(), alpha_.end(), 0); }

int Partition::multiplicity(int i) const {
    return (i >= 1 && i <= n()) ? alpha_[i - 1] : 0;
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < alpha_.size(); ++i) {
        if (i != 0) {
            out += ",";
        }
        out += std::to_string(alpha_[i]);
    }
    return out + ")";
}

std::vector<Partition> partitions(int n) {
    if (n < 1) {
        throw std::invalid_argument("partitions of n require n >= 1");
    }
    std::vector<Partition> out;
    std::vector<int> alpha(n, 0);
    // Choose alpha_1 first, largest first, which yields reverse-lex order.
    std::function<void(int, int)> fill = [&](int index, int remaining) {
        if (index == 0) {
            // Everything left goes into parts of size 1.
            alpha[0] = remaining;
            out.emplace_back(alpha);
            return;
        }
        const int size = index + 1;
        for (int k = 0; k * size <= remaining; ++k) {
            alpha[index] = k;
            fill(index - 1, remaining - k * size);
        }
        alpha[index] = 0;
    };
    fill(n - 1, n);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

}  // namespace hodge
