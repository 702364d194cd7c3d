// hodge: Hodge numbers of Hilbert schemes of points, symmetric products,
// deck-group quotients and the Calabi-Yau double cover of an Enriques
// Hilbert scheme.
//
// Exit codes: 0 success, 1 a verification check failed, 2 usage or parse
// error, 3 unsupported input.

#include "hodge/errors.hpp"
#include "hodge/report.hpp"
#include "hodge/surface.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnsupported = 3;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hodge diamonds of Hilbert schemes, wreath quotients and double covers"};
    app.require_subcommand(1);

    std::string format_name = "table";
    const auto formats = CLI::IsMember({"table", "json", "csv"});

    auto* diamond = app.add_subcommand("diamond", "Print a Hodge diamond");
    std::string preset;
    std::string spec_path;
    std::vector<std::string> op;
    auto* preset_opt = diamond->add_option("--preset", preset, "Built-in surface (enriques, k3_enriques)");
    auto* spec_opt = diamond->add_option("--spec", spec_path, "Surface spec JSON file");
    preset_opt->excludes(spec_opt);
    diamond->add_option("--format", format_name, "Output format")->check(formats);
    diamond->add_option("op", op, "hilb n | sym n | quotient n Sn|G|H | cover n")->required();

    auto* verify = app.add_subcommand("verify-paper", "Recompute every published dimension and cross-check");
    int n_max = 6;
    verify->add_option("--n-max", n_max, "Largest n to check")->check(CLI::Range(2, 64));
    verify->add_option("--format", format_name, "Output format")->check(formats);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const auto format = hodge::output_format_from_string(format_name);
        if (*diamond) {
            if (preset.empty() && spec_path.empty()) {
                std::cerr << "diamond: one of --preset or --spec is required\n";
                return kExitUsage;
            }
            const hodge::SurfaceSpec surface =
                spec_path.empty() ? hodge::presets::by_name(preset) : hodge::load_surface_spec(spec_path);
            std::cout << hodge::format_diamond_result(hodge::compute_diamond(surface, op), format);
            return 0;
        }
        const auto results = hodge::run_paper_checks(n_max);
        std::cout << hodge::format_checks(results, format);
        return hodge::all_passed(results) ? 0 : kExitCheckFailed;
    } catch (const hodge::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const hodge::Unsupported& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return kExitUnsupported;
    } catch (const hodge::TooLarge& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return kExitUnsupported;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const hodge::Error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitCheckFailed;
    }
}
