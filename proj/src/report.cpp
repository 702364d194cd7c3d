#include "hodge/report.hpp"

#include "hodge/cover.hpp"
#include "hodge/errors.hpp"
#include "hodge/group.hpp"
#include "hodge/hilbert.hpp"
#include "hodge/invariants.hpp"
#include "hodge/oracle.hpp"

#include <json.hpp>

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hodge {

std::string to_string(Provenance p) { return p == Provenance::Paper ? "PAPER" : "DERIVED"; }

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass:
            return "pass";
        case CheckStatus::Fail:
            return "fail";
        case CheckStatus::DiscrepancyNoted:
            return "discrepancy-noted";
    }
    return "?";
}

namespace {

class CheckList {
public:
    void equal(std::string id, std::string description, const BigInt& expected, Provenance provenance,
               const BigInt& actual) {
        add(std::move(id), std::move(description), expected.str(), provenance, actual.str(),
            expected == actual ? CheckStatus::Pass : CheckStatus::Fail);
    }

    void holds(std::string id, std::string description, bool ok) {
        add(std::move(id), std::move(description), "true", Provenance::Derived, ok ? "true" : "false",
            ok ? CheckStatus::Pass : CheckStatus::Fail);
    }

    /// A printed value that the independent derivation does not reproduce.
    /// `derived_ok` says whether the computed value passed its own cross-checks.
    void printed(std::string id, std::string description, const BigInt& printed_value, const BigInt& actual,
                 bool derived_ok) {
        CheckStatus status = CheckStatus::Fail;
        if (derived_ok) {
            status = actual == printed_value ? CheckStatus::Pass : CheckStatus::DiscrepancyNoted;
        }
        add(std::move(id), std::move(description), printed_value.str(), Provenance::Paper, actual.str(), status);
    }

    std::vector<CheckResult> take() { return std::move(results_); }

private:
    void add(std::string id, std::string description, std::string expected, Provenance provenance,
             std::string actual, CheckStatus status) {
        results_.push_back({std::move(id), std::move(description), std::move(expected), provenance,
                            std::move(actual), status});
    }

    std::vector<CheckResult> results_;
};

std::string nid(const std::string& stem, int n) { return stem + ".n" + std::to_string(n); }

BigInt sum_sizes(int n, Subgroup which) {
    BigInt total = 0;
    for (const auto& c : classes(n, which)) {
        total += c.size;
    }
    return total;
}

bool census_matches_enumeration(int n, Subgroup which) {
    std::map<SignedCycleType, BigInt> census;
    for_each_element(n, which, [&](const GroupElement& g) { census[signed_cycle_type(g)] += 1; });
    std::map<SignedCycleType, BigInt> predicted;
    for (const auto& c : classes(n, which)) {
        predicted[c.type] = c.size;
    }
    return census == predicted;
}

}  // namespace

std::vector<CheckResult> run_paper_checks(int n_max) {
    if (n_max < 2) {
        throw std::invalid_argument("verify-paper requires n_max >= 2");
    }
    CheckList checks;
    const SurfaceSpec k3e = presets::k3_enriques();
    const HodgeTable enriques = presets::enriques_diamond();
    const HodgeTable k3 = presets::k3();

    for (int n = 1; n <= n_max; ++n) {
        checks.equal(nid("group.order.G", n), "|G| = 2^n n! from the class census", group_order(n, Subgroup::G),
                     Provenance::Paper, sum_sizes(n, Subgroup::G));
        checks.equal(nid("group.order.H", n), "|H| = 2^(n-1) n! from the class census",
                     group_order(n, Subgroup::H), Provenance::Paper, sum_sizes(n, Subgroup::H));
    }
    for (int n = 1; n <= std::min(n_max, 5); ++n) {
        checks.holds(nid("group.census", n), "class census equals explicit enumeration for G and H",
                     census_matches_enumeration(n, Subgroup::G) && census_matches_enumeration(n, Subgroup::H));
    }

    for (int n = 2; n <= n_max; ++n) {
        checks.equal(nid("hilbert.h1top.enriques", n), "h^{1,2n-1}(E^[n]) = 0", 0, Provenance::Paper,
                     h_one_top(enriques, n));
    }
    for (int n = 2; n <= n_max; ++n) {
        checks.equal(nid("hilbert.b2.enriques", n), "b_2(E^[n]) = 11", 11, Provenance::Paper,
                     betti(hilbert_diamond(enriques, n), 2));
    }
    for (int n = 2; n <= std::min(n_max, 5); ++n) {
        checks.equal(nid("hilbert.b2.k3", n), "b_2(K3^[n]) = 23", 23, Provenance::Derived,
                     betti(hilbert_diamond(k3, n), 2));
    }

    for (int n = 2; n <= n_max; ++n) {
        checks.equal(nid("quotient.h_top_minus", n), "h^{2n-1,1}(K^n/H) = 10", 10, Provenance::Paper,
                     h_top_minus(n, k3e));
    }
    for (int n = 2; n <= n_max; ++n) {
        checks.equal(nid("cover.exceptional_orbits", n), "H-orbits of exceptional divisors", n == 2 ? 2 : 1,
                     Provenance::Paper, exceptional_orbits(n));
    }
    for (int n = 3; n <= n_max; ++n) {
        checks.equal(nid("cover.h2", n), "dim H^2(X) = 11", 11, Provenance::Paper, h2_cover(n, k3e));
    }

    // Hilbert square: quotient K^2/H, its blow-up X, and the cross-checks that
    // pin the middle Hodge number independently of the printed value.
    const HodgeTable quotient = invariant_dims(k3e.hodge, 2, Subgroup::H);
    const HodgeTable quotient_oracle = oracle::projector_invariant_dims(k3e.hodge, 2, Subgroup::H);
    const HodgeTable cover = cover_diamond_n2(k3e);
    const BigInt euler_hilb2 = euler(hilbert_diamond(enriques, 2));
    const bool cover_euler_ok = euler(cover) == 2 * euler_hilb2;
    const bool quotient_oracle_ok = quotient == quotient_oracle;

    checks.equal("quotient.n2.h11", "h^{1,1}(K^2/H) = 10", 10, Provenance::Paper, quotient.at(1, 1));
    checks.equal("quotient.n2.h31", "h^{3,1}(K^2/H) = 10", 10, Provenance::Paper, quotient.at(3, 1));
    checks.equal("quotient.n2.h40", "h^{4,0}(K^2/H) = 1", 1, Provenance::Paper, quotient.at(4, 0));
    checks.holds("quotient.n2.oracle", "class-sum K^2/H diamond equals projector oracle", quotient_oracle_ok);
    checks.printed("quotient.n2.h22", "h^{2,2}(K^2/H); derived value equals the projector oracle", 111,
                   quotient.at(2, 2), quotient_oracle_ok && quotient.at(2, 2) == quotient_oracle.at(2, 2));

    const std::pair<int, int> cover_slots[] = {{0, 0}, {1, 0}, {2, 0}, {1, 1}, {3, 0}, {2, 1}, {4, 0}, {3, 1}};
    const int cover_values[] = {1, 0, 0, 12, 0, 0, 1, 10};
    for (std::size_t k = 0; k < std::size(cover_values); ++k) {
        const auto [p, q] = cover_slots[k];
        const std::string slot = std::to_string(p) + std::to_string(q);
        checks.equal("cover.n2.h" + slot, "h^{" + std::to_string(p) + "," + std::to_string(q) + "}(X), n = 2",
                     cover_values[k], Provenance::Paper, cover.at(p, q));
    }
    checks.equal("cover.n2.euler", "e(X) = 2 e(E^[2]) for the unramified double cover", 2 * euler_hilb2,
                 Provenance::Derived, euler(cover));
    checks.printed("cover.n2.h22", "h^{2,2}(X); derived value satisfies e(X) = 2 e(E^[2])", 131, cover.at(2, 2),
                   cover_euler_ok && quotient_oracle_ok);
    checks.holds("cover.n2.symmetry", "X diamond has conjugation symmetry and Poincare duality",
                 cover.is_conjugation_symmetric() && cover.satisfies_duality());

    for (const auto& [name, surface] : {std::pair{"enriques", enriques}, std::pair{"k3", k3}}) {
        const auto series = euler_generating_series(euler(surface), n_max);
        for (int n = 1; n <= n_max; ++n) {
            checks.equal(nid(std::string("euler.") + name, n), "e(S^[n]) assembled vs generating function",
                         series[n], Provenance::Derived, euler(hilbert_diamond(surface, n)));
        }
    }

    for (int n = 1; n <= std::min(n_max, 3); ++n) {
        for (Subgroup which : {Subgroup::Sn, Subgroup::G, Subgroup::H}) {
            checks.holds(nid("oracle." + to_string(which), n), "class-sum invariants equal projector oracle on K3",
                         invariant_dims(k3e.hodge, n, which) == oracle::projector_invariant_dims(k3e.hodge, n, which));
        }
    }
    return checks.take();
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::none_of(results.begin(), results.end(),
                        [](const CheckResult& r) { return r.status == CheckStatus::Fail; });
}

OutputFormat output_format_from_string(const std::string& name) {
    if (name == "table") {
        return OutputFormat::Table;
    }
    if (name == "json") {
        return OutputFormat::Json;
    }
    if (name == "csv") {
        return OutputFormat::Csv;
    }
    throw ParseError("unknown format '" + name + "' (expected table, json or csv)");
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

// Hodge numbers fit in JSON numbers as long as they fit in 64 bits.
nlohmann::json big_to_json(const BigInt& x) {
    if (x <= BigInt(std::numeric_limits<long long>::max())) {
        return static_cast<long long>(x);
    }
    return x.str();
}

}  // namespace

std::string format_checks(const std::vector<CheckResult>& results, OutputFormat format) {
    std::ostringstream out;
    switch (format) {
        case OutputFormat::Json: {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& r : results) {
                arr.push_back({{"id", r.id},
                               {"description", r.description},
                               {"expected", r.expected},
                               {"provenance", to_string(r.provenance)},
                               {"actual", r.actual},
                               {"status", to_string(r.status)}});
            }
            out << arr.dump(2) << '\n';
            break;
        }
        case OutputFormat::Csv:
            out << "id,status,expected,provenance,actual,description\n";
            for (const auto& r : results) {
                out << csv_field(r.id) << ',' << to_string(r.status) << ',' << csv_field(r.expected) << ','
                    << to_string(r.provenance) << ',' << csv_field(r.actual) << ',' << csv_field(r.description)
                    << '\n';
            }
            break;
        case OutputFormat::Table: {
            std::size_t w_id = 2, w_status = 6, w_exp = 8, w_act = 6;
            for (const auto& r : results) {
                w_id = std::max(w_id, r.id.size());
                w_status = std::max(w_status, to_string(r.status).size());
                w_exp = std::max(w_exp, r.expected.size());
                w_act = std::max(w_act, r.actual.size());
            }
            out << pad("id", w_id) << "  " << pad("status", w_status) << "  " << pad("expected", w_exp) << "  "
                << pad("source", 7) << "  " << pad("actual", w_act) << "  description\n";
            int pass = 0, fail = 0, noted = 0;
            for (const auto& r : results) {
                out << pad(r.id, w_id) << "  " << pad(to_string(r.status), w_status) << "  " << pad(r.expected, w_exp)
                    << "  " << pad(to_string(r.provenance), 7) << "  " << pad(r.actual, w_act) << "  "
                    << r.description << '\n';
                pass += r.status == CheckStatus::Pass;
                fail += r.status == CheckStatus::Fail;
                noted += r.status == CheckStatus::DiscrepancyNoted;
            }
            out << results.size() << " checks: " << pass << " pass, " << noted << " discrepancy-noted, " << fail
                << " fail\n";
            break;
        }
    }
    return out.str();
}

namespace {

int parse_count(const std::string& text, const char* what) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty()) {
        throw ParseError(std::string("expected an integer for ") + what + ", got '" + text + "'");
    }
    return value;
}

}  // namespace

DiamondResult compute_diamond(const SurfaceSpec& surface, const std::vector<std::string>& op) {
    if (op.empty()) {
        throw ParseError("missing operation (hilb n | sym n | quotient n Sn|G|H | cover n)");
    }
    const std::string& kind = op[0];
    const std::size_t want = kind == "quotient" ? 3 : 2;
    if (op.size() != want) {
        throw ParseError("wrong number of arguments for '" + kind + "'");
    }
    const int n = parse_count(op[1], "n");

    if (kind == "hilb") {
        if (n < 1) {
            throw ParseError("hilb needs n >= 1");
        }
        return {surface.name + "^[" + op[1] + "]", hilbert_diamond(surface.diamond(), n), {}};
    }
    if (kind == "sym") {
        if (n < 0) {
            throw ParseError("sym needs n >= 0");
        }
        return {surface.name + "^(" + op[1] + ")", sym_product(surface.diamond(), n), {}};
    }
    if (kind == "quotient") {
        if (n < 1) {
            throw ParseError("quotient needs n >= 1");
        }
        const Subgroup which = subgroup_from_string(op[2]);
        return {surface.name + "^" + op[1] + "/" + to_string(which), invariant_dims(surface.hodge, n, which), {}};
    }
    if (kind == "cover") {
        if (n < 2) {
            throw ParseError("cover needs n >= 2");
        }
        if (surface.hodge.dimension() != 2) {
            throw Unsupported("cover is computed for surfaces only");
        }
        DiamondResult result{"X -> " + surface.name + "/sigma [" + op[1] + "]", {}, {}};
        if (n == 2) {
            result.table = cover_diamond_n2(surface);
            if (surface.name == "k3_enriques") {
                result.notes.push_back("h^{2,2} = " + result.table.at(2, 2).str() +
                                       " is the derived value; the published table prints 131");
            }
        } else {
            result.table = cover_low_degree(n, surface);
            result.notes.push_back("only total degree <= 2 is computed for n >= 3");
        }
        return result;
    }
    throw ParseError("unknown operation '" + kind + "'");
}

std::string format_diamond_result(const DiamondResult& result, OutputFormat format) {
    std::ostringstream out;
    switch (format) {
        case OutputFormat::Table:
            out << result.title << "  (dimension " << result.table.dimension() << ")\n";
            out << format_diamond(result.table);
            for (const auto& note : result.notes) {
                out << "note: " << note << '\n';
            }
            break;
        case OutputFormat::Json: {
            nlohmann::ordered_json doc;
            doc["name"] = result.title;
            doc["dimension"] = result.table.dimension();
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            for (const auto& [deg, dim] : result.table.entries()) {
                rows.push_back({deg.p, deg.q, big_to_json(dim)});
            }
            doc["hodge"] = rows;
            doc["notes"] = result.notes;
            out << doc.dump(2) << '\n';
            break;
        }
        case OutputFormat::Csv:
            out << "p,q,h\n";
            for (const auto& [deg, dim] : result.table.entries()) {
                out << deg.p << ',' << deg.q << ',' << dim.str() << '\n';
            }
            break;
    }
    return out.str();
}

}  // namespace hodge
