#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"
#include "toricsheaf/parallel.hpp"

int main(int argc, char** argv)
{
    using namespace toricsheaf::cli;

    CLI::App app{"Equivariant reflexive sheaves on smooth complete toric varieties"};
    app.require_subcommand(1);

    RunConfig config;
    config.jobs = toricsheaf::default_jobs();
    std::size_t rank = 0;
    std::size_t n = 0;
    std::vector<std::size_t> cone;

    struct Needs {
        bool fan, divisor, family;
        const char* help;
    };
    const std::vector<std::pair<std::string, Needs>> layout{
        {"validate-fan", {true, false, false, "check smoothness and completeness of a fan"}},
        {"degrees", {true, true, false, "degrees of the boundary divisors for an ample divisor"}},
        {"slope", {true, true, true, "iota, first Chern class and slope of a family"}},
        {"check-stability", {true, true, true, "slope stability verdict with a witness subspace"}},
        {"check-free", {true, false, true, "compatibility on the maximal cones or on --cone"}},
        {"singular-locus", {true, false, true, "per-cone compatibility and sing_dim"}},
        {"build-er", {true, true, false, "the rank-r family with one general line per ray"}},
        {"verify-theorem", {true, true, false, "check the low-rank construction for every admissible rank"}},
        {"verify-prop32", {false, false, false, "check the rank-two singular locus bound on P^n"}},
    };
    for (const auto& [name, needs] : layout) {
        auto* sub = app.add_subcommand(name, needs.help);
        if (needs.fan) {
            sub->add_option("--fan", config.fan_path, "fan JSON file")->required();
        }
        if (needs.divisor) {
            sub->add_option("--divisor", config.divisor_path, "divisor JSON file")->required();
        }
        if (needs.family) {
            sub->add_option("--family", config.family_path, "filtration family JSON file")->required();
        }
        sub->add_option("-o,--output", config.output_path, "write the JSON report here");
        sub->add_option("-j,--jobs", config.jobs, "worker threads (default $TORICSHEAF_JOBS or 1)")
            ->check(CLI::PositiveNumber);
        if (name == "check-stability") {
            sub->add_option("--closure-rounds", config.closure_rounds,
                            "sum/intersection rounds for non-line-type candidate sets")
                ->check(CLI::PositiveNumber);
        }
        if (name == "check-free" || name == "singular-locus") {
            sub->add_flag("--certificates", config.emit_certificates, "include splitting certificates");
        }
        if (name == "check-free") {
            sub->add_option("--cone", cone, "ray indices of a single cone to test")->delimiter(',');
        }
        if (name == "build-er") {
            sub->add_option("--rank", rank, "rank r")->required();
        }
        if (name == "verify-prop32") {
            sub->add_option("--n", n, "dimension of the projective space (n >= 3)")->required();
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_parse_error;
    }

    config.command = app.get_subcommands().front()->get_name();
    if (config.command == "build-er") {
        config.rank = rank;
    }
    if (config.command == "verify-prop32") {
        config.n = n;
    }
    if (!cone.empty()) {
        config.cone = cone;
    }
    return run(config, std::cout, std::cerr);
}
