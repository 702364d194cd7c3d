#pragma once

#include "hodge/bigraded.hpp"
#include "hodge/surface.hpp"

#include <string>
#include <vector>

namespace hodge {

enum class Provenance { Paper, Derived };
enum class CheckStatus { Pass, Fail, DiscrepancyNoted };

std::string to_string(Provenance p);
std::string to_string(CheckStatus s);

struct CheckResult {
    std::string id;
    std::string description;
    std::string expected;
    Provenance provenance = Provenance::Derived;
    std::string actual;
    CheckStatus status = CheckStatus::Fail;
};

/// Every published dimension together with the independent cross-checks,
/// for n up to n_max (n_max >= 2). Order is fixed.
std::vector<CheckResult> run_paper_checks(int n_max = 6);

/// True when no check has status Fail.
bool all_passed(const std::vector<CheckResult>& results);

enum class OutputFormat { Table, Json, Csv };
OutputFormat output_format_from_string(const std::string& name);

std::string format_checks(const std::vector<CheckResult>& results, OutputFormat format);

/// A diamond computed by the `diamond` command: the table plus free-form notes.
struct DiamondResult {
    std::string title;
    HodgeTable table;
    std::vector<std::string> notes;
};

/// Evaluates one of: hilb n | sym n | quotient n Sn|G|H | cover n.
/// Throws ParseError on a malformed operation.
DiamondResult compute_diamond(const SurfaceSpec& surface, const std::vector<std::string>& op);

std::string format_diamond_result(const DiamondResult& result, OutputFormat format);

}  // namespace hodge
