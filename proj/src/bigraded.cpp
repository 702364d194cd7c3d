#include "hodge/bigraded.hpp"

#include "hodge/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace hodge {

namespace {

std::string where(Bidegree d) {
    return "(" + std::to_string(d.p) + "," + std::to_string(d.q) + ")";
}

void check_support(int dimension, Bidegree d) {
    if (d.p < 0 || d.q < 0) {
        throw NegativeIndex("Hodge entry at negative index " + where(d));
    }
    if (d.p > 2 * dimension || d.q > 2 * dimension) {
        throw std::invalid_argument("Hodge entry " + where(d) + " exceeds dimension " +
                                    std::to_string(dimension));
    }
}

}  // namespace

HodgeTable::HodgeTable(int dimension, Entries entries) : dimension_(dimension) {
    if (dimension < 0) {
        throw std::invalid_argument("negative dimension");
    }
    for (auto& [deg, dim] : entries) {
        if (dim == 0) {
            continue;
        }
        if (dim < 0) {
            throw std::invalid_argument("negative Hodge number at " + where(deg));
        }
        check_support(dimension, deg);
        entries_.emplace(deg, std::move(dim));
    }
}

HodgeTable HodgeTable::point() { return HodgeTable(0, {{{0, 0}, 1}}); }

BigInt HodgeTable::at(int p, int q) const {
    auto it = entries_.find({p, q});
    return it == entries_.end() ? BigInt{0} : it->second;
}

bool HodgeTable::has_odd_degree() const {
    return std::any_of(entries_.begin(), entries_.end(),
                       [](const auto& e) { return e.first.total() % 2 != 0; });
}

bool HodgeTable::is_conjugation_symmetric() const {
    return std::all_of(entries_.begin(), entries_.end(), [this](const auto& e) {
        return at(e.first.q, e.first.p) == e.second;
    });
}

bool HodgeTable::satisfies_duality() const {
    return std::all_of(entries_.begin(), entries_.end(), [this](const auto& e) {
        return at(dimension_ - e.first.p, dimension_ - e.first.q) == e.second;
    });
}

HodgeTable HodgeTable::shift_by(int k) const {
    Entries moved;
    for (const auto& [deg, dim] : entries_) {
        moved.emplace(Bidegree{deg.p + k, deg.q + k}, dim);
    }
    return HodgeTable(dimension_, std::move(moved));
}

HodgeTable HodgeTable::with_dimension(int dimension) const {
    return HodgeTable(dimension, entries_);
}

BigInt HodgeTable::total_rank() const {
    BigInt sum = 0;
    for (const auto& e : entries_) {
        sum += e.second;
    }
    return sum;
}

EquivHodgeTable::EquivHodgeTable(int dimension, Entries entries) : dimension_(dimension) {
    if (dimension < 0) {
        throw std::invalid_argument("negative dimension");
    }
    for (auto& [deg, split] : entries) {
        if (split.plus < 0 || split.minus < 0) {
            throw std::invalid_argument("negative eigenspace dimension at " + where(deg));
        }
        if (split.plus == 0 && split.minus == 0) {
            continue;
        }
        check_support(dimension, deg);
        if (deg.total() % 2 != 0) {
            throw OddCohomologyUnsupported("odd-degree class at " + where(deg));
        }
        entries_.emplace(deg, std::move(split));
    }
}

EquivHodgeTable EquivHodgeTable::trivial(const HodgeTable& table) {
    Entries lifted;
    for (const auto& [deg, dim] : table.entries()) {
        lifted.emplace(deg, Split{dim, 0});
    }
    return EquivHodgeTable(table.dimension(), std::move(lifted));
}

EquivHodgeTable::Split EquivHodgeTable::at(int p, int q) const {
    auto it = entries_.find({p, q});
    return it == entries_.end() ? Split{0, 0} : it->second;
}

HodgeTable EquivHodgeTable::forget_split() const {
    HodgeTable::Entries out;
    for (const auto& [deg, split] : entries_) {
        out.emplace(deg, split.plus + split.minus);
    }
    return HodgeTable(dimension_, std::move(out));
}

HodgeTable EquivHodgeTable::plus_part() const {
    HodgeTable::Entries out;
    for (const auto& [deg, split] : entries_) {
        out.emplace(deg, split.plus);
    }
    return HodgeTable(dimension_, std::move(out));
}

HodgeTable EquivHodgeTable::minus_part() const {
    HodgeTable::Entries out;
    for (const auto& [deg, split] : entries_) {
        out.emplace(deg, split.minus);
    }
    return HodgeTable(dimension_, std::move(out));
}

HodgeTable direct_sum(const HodgeTable& a, const HodgeTable& b) {
    HodgeTable::Entries out = a.entries();
    for (const auto& [deg, dim] : b.entries()) {
        out[deg] += dim;
    }
    return HodgeTable(std::max(a.dimension(), b.dimension()), std::move(out));
}

HodgeTable tensor(const HodgeTable& a, const HodgeTable& b) {
    if (a.has_odd_degree() || b.has_odd_degree()) {
        throw OddCohomologyUnsupported("tensor product of tables with odd-degree classes");
    }
    HodgeTable::Entries out;
    for (const auto& [da, xa] : a.entries()) {
        for (const auto& [db, xb] : b.entries()) {
            out[Bidegree{da.p + db.p, da.q + db.q}] += xa * xb;
        }
    }
    return HodgeTable(a.dimension() + b.dimension(), std::move(out));
}

HodgeTable tate_twist(const HodgeTable& a, int k) { return a.shift_by(-k); }

BigInt betti(const HodgeTable& a, int k) {
    BigInt sum = 0;
    for (const auto& [deg, dim] : a.entries()) {
        if (deg.total() == k) {
            sum += dim;
        }
    }
    return sum;
}

BigInt euler(const HodgeTable& a) {
    BigInt sum = 0;
    for (const auto& [deg, dim] : a.entries()) {
        if (deg.total() % 2 == 0) {
            sum += dim;
        } else {
            sum -= dim;
        }
    }
    return sum;
}

std::string format_diamond(const HodgeTable& table) {
    // Row k lists h^{p,k-p} for p descending from min(k, pmax) to max(0, k-pmax).
    int pmax = table.dimension();
    for (const auto& e : table.entries()) {
        pmax = std::max({pmax, e.first.p, e.first.q});
    }
    const int top = 2 * pmax;

    std::vector<std::vector<std::string>> rows;
    std::size_t width = 1;
    std::size_t max_cells = 0;
    for (int k = top; k >= 0; --k) {
        std::vector<std::string> cells;
        for (int p = std::min(k, pmax); p >= std::max(0, k - pmax); --p) {
            cells.push_back(table.at(p, k - p).str());
            width = std::max(width, cells.back().size());
        }
        max_cells = std::max(max_cells, cells.size());
        rows.push_back(std::move(cells));
    }

    std::ostringstream out;
    const std::size_t cell = width + 1;
    for (const auto& cells : rows) {
        std::string line((max_cells - cells.size()) * cell / 2, ' ');
        for (const auto& c : cells) {
            line += std::string(cell - c.size(), ' ') + c;
        }
        while (!line.empty() && line.back() == ' ') {
            line.pop_back();
        }
        out << line << '\n';
    }
    return out.str();
}

}  // namespace hodge
