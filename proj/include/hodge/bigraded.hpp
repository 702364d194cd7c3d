#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <string>
#include <utility>

namespace hodge {

using BigInt = boost::multiprecision::cpp_int;

struct Bidegree {
    int p = 0;
    int q = 0;

    int total() const { return p + q; }
    auto operator<=>(const Bidegree&) const = default;
};

/// Finitely supported map (p,q) -> dimension; the Hodge diamond of a space
/// of complex dimension `dimension()`. Zero entries are never stored.
class HodgeTable {
public:
    using Entries = std::map<Bidegree, BigInt>;

    HodgeTable() = default;
    /// Drops zero entries. Throws NegativeIndex for p < 0 or q < 0 and
    /// std::invalid_argument for negative dimensions or out-of-range support.
    HodgeTable(int dimension, Entries entries);

    /// The one-point space.
    static HodgeTable point();

    int dimension() const { return dimension_; }
    const Entries& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    BigInt at(int p, int q) const;
    BigInt at(Bidegree d) const { return at(d.p, d.q); }

    bool has_odd_degree() const;
    /// h^{p,q} = h^{q,p}.
    bool is_conjugation_symmetric() const;
    /// h^{p,q} = h^{d-p,d-q} with d = dimension().
    bool satisfies_duality() const;

    /// Moves every entry from (p,q) to (p+k, q+k); dimension is kept.
    HodgeTable shift_by(int k) const;
    /// Same entries under a different ambient dimension.
    HodgeTable with_dimension(int dimension) const;

    /// Sum of all entries.
    BigInt total_rank() const;

    bool operator==(const HodgeTable&) const = default;

private:
    int dimension_ = 0;
    Entries entries_;
};

/// Eigenspace split of a Hodge diamond under an involution:
/// (p,q) -> (dim of +1 part, dim of -1 part). Even total degree only.
class EquivHodgeTable {
public:
    struct Split {
        BigInt plus;
        BigInt minus;
        bool operator==(const Split&) const = default;
    };
    using Entries = std::map<Bidegree, Split>;

    EquivHodgeTable() = default;
    /// Throws OddCohomologyUnsupported if any nonzero entry has p+q odd.
    EquivHodgeTable(int dimension, Entries entries);

    /// Trivial split: every class is +1.
    static EquivHodgeTable trivial(const HodgeTable& table);

    int dimension() const { return dimension_; }
    const Entries& entries() const { return entries_; }
    Split at(int p, int q) const;

    HodgeTable forget_split() const;
    /// The +1 eigenspaces; the diamond of the quotient by the involution.
    HodgeTable plus_part() const;
    HodgeTable minus_part() const;

    bool operator==(const EquivHodgeTable&) const = default;

private:
    int dimension_ = 0;
    Entries entries_;
};

HodgeTable direct_sum(const HodgeTable& a, const HodgeTable& b);

/// Kunneth product. Throws OddCohomologyUnsupported on odd-degree input.
HodgeTable tensor(const HodgeTable& a, const HodgeTable& b);

/// Twist by k: result(p,q) = a(p+k, q+k). Throws NegativeIndex when an entry
/// would land at a negative index.
HodgeTable tate_twist(const HodgeTable& a, int k);

BigInt betti(const HodgeTable& a, int k);
BigInt euler(const HodgeTable& a);

/// Diamond rows, top degree first, centered. Used by the CLI and for
/// debugging output in tests.
std::string format_diamond(const HodgeTable& table);

}  // namespace hodge
