#pragma once

#include <string>
#include <vector>

namespace hodge {

/// A partition of n stored by multiplicities: alpha[i-1] parts of size i, so
/// that sum of i * alpha[i-1] equals n.
class Partition {
public:
    /// Throws std::invalid_argument unless the multiplicities are nonnegative
    /// and sum to a positive n.
    explicit Partition(std::vector<int> multiplicities);

    int n() const { return static_cast<int>(alpha_.size()); }
    /// Number of parts.
    int weight() const;
    /// Multiplicity of parts of size i, 1-based; 0 beyond n.
    int multiplicity(int i) const;
    const std::vector<int>& multiplicities() const { return alpha_; }

    std::string to_string() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> alpha_;
};

/// All partitions of n, reverse-lexicographic on (alpha_1, ..., alpha_n), so
/// (n, 0, ..., 0) comes first.
std::vector<Partition> partitions(int n);

}  // namespace hodge
