#include "cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <map>

#include "toricsheaf/json_io.hpp"

namespace toricsheaf::cli {

namespace {

using io::Json;

struct Outcome {
    Json report;
    int code = exit_ok;
    std::string summary;
};

void require(const std::string& value, const char* flag)
{
    if (value.empty()) {
        throw ParseError(std::string("missing required option ") + flag);
    }
}

Fan load_fan(const RunConfig& c)
{
    require(c.fan_path, "--fan");
    return io::fan_from_json(io::read_json_file(c.fan_path));
}

PolarisedDivisor load_divisor(const RunConfig& c)
{
    Fan fan = load_fan(c);
    require(c.divisor_path, "--divisor");
    return PolarisedDivisor(std::move(fan), io::divisor_from_json(io::read_json_file(c.divisor_path)));
}

FiltrationFamily load_family(const RunConfig& c, const Fan& fan)
{
    require(c.family_path, "--family");
    FiltrationFamily e = io::family_from_json(io::read_json_file(c.family_path));
    if (e.num_rays() != fan.num_rays()) {
        throw ParseError("family has " + std::to_string(e.num_rays()) + " filtrations for a fan with " +
                         std::to_string(fan.num_rays()) + " rays");
    }
    return e;
}

Outcome validate_fan_cmd(const RunConfig& c)
{
    const auto v = validate(load_fan(c));
    return {io::validation_to_json(v), exit_ok,
            std::string("smooth: ") + (v.smooth ? "yes" : "no") + ", complete: " + (v.complete ? "yes" : "no")};
}

Outcome degrees_cmd(const RunConfig& c)
{
    const auto l = load_divisor(c);
    return {io::degrees_to_json(l.degrees()), exit_ok, {}};
}

Outcome slope_cmd(const RunConfig& c)
{
    const auto l = load_divisor(c);
    const auto e = load_family(c, l.fan());
    const auto inv = invariants(e, l.degrees());
    return {Json{{"slope", io::rational_to_json(inv.slope)},
                 {"iota", inv.iota},
                 {"c1", inv.c1},
                 {"deg", l.degrees().deg}},
            exit_ok,
            "slope " + to_string(inv.slope)};
}

Outcome check_stability_cmd(const RunConfig& c)
{
    const auto l = load_divisor(c);
    const auto e = load_family(c, l.fan());
    StabilityOptions opts;
    opts.jobs = c.jobs;
    opts.closure_rounds = c.closure_rounds;
    const auto v = check_stability(e, l, opts);
    std::string summary = std::string(to_string(v.status)) + ", slope " + to_string(v.ambient_slope);
    if (!v.exhaustive) {
        summary += " (candidate set not exhaustive)";
    }
    return {io::verdict_to_json(v), exit_ok, summary};
}

Outcome check_free_cmd(const RunConfig& c)
{
    const Fan fan = load_fan(c);
    const auto e = load_family(c, fan);
    if (c.cone) {
        const auto cert = is_compatible(e, fan, Cone(*c.cone));
        return {io::certificate_to_json(cert), exit_ok, cert.compatible ? "compatible" : "incompatible"};
    }
    Json cones = Json::array();
    bool free = true;
    for (const auto& sigma : fan.max_cones()) {
        const auto cert = is_compatible(e, fan, sigma);
        free = free && cert.compatible;
        cones.push_back(c.emit_certificates
                            ? io::certificate_to_json(cert)
                            : Json{{"cone", io::cone_to_json(sigma)}, {"compatible", cert.compatible},
                                   {"verified", cert.verified}});
    }
    return {Json{{"locally_free", free}, {"max_cones", cones}}, exit_ok,
            free ? "locally free" : "not locally free"};
}

Outcome singular_locus_cmd(const RunConfig& c)
{
    const Fan fan = load_fan(c);
    const auto e = load_family(c, fan);
    const auto r = singular_locus(e, fan, {.jobs = c.jobs, .keep_certificates = c.emit_certificates});
    return {io::freeness_to_json(r, c.emit_certificates), exit_ok,
            r.sing_dim ? "dim Sing = " + std::to_string(*r.sing_dim) : "locally free"};
}

Outcome build_er_cmd(const RunConfig& c)
{
    if (!c.rank) {
        throw ParseError("missing required option --rank");
    }
    const auto l = load_divisor(c);
    const auto ex = build_low_rank_family(l, *c.rank);
    return {io::low_rank_family_to_json(ex), exit_ok, {}};
}

Outcome verify_theorem_cmd(const RunConfig& c)
{
    const auto l = load_divisor(c);
    const auto report = verify_theorem(l, {.jobs = c.jobs});
    std::string summary;
    for (const auto& row : report.rows) {
        summary += "r=" + std::to_string(row.rank) + "  slope " + to_string(row.slope) + "  " +
                   to_string(row.status) + "  " + (row.locally_free ? "locally free" : "singular") +
                   "  sing_dim " + (row.sing_dim ? std::to_string(*row.sing_dim) : "empty") + "  " +
                   (row.passed() ? "ok" : "FAILED") + "\n";
        for (const auto& f : row.failures) {
            summary += "    " + f + "\n";
        }
    }
    summary += report.passed() ? "all checks passed" : "verification FAILED";
    return {io::theorem_report_to_json(report), report.passed() ? exit_ok : exit_assertion_failed, summary};
}

Outcome verify_rank_two_bound_cmd(const RunConfig& c)
{
    if (!c.n) {
        throw ParseError("missing required option --n");
    }
    const auto report = verify_rank_two_bound(*c.n, {.jobs = c.jobs});
    std::string summary = "n=" + std::to_string(report.n) + "  sing_dim " +
                          (report.sing_dim ? std::to_string(*report.sing_dim) : "empty") + "  expected " +
                          std::to_string(report.expected) + "  " + (report.passed() ? "ok" : "FAILED");
    for (const auto& f : report.failures) {
        summary += "\n    " + f;
    }
    return {io::rank_two_bound_to_json(report), report.passed() ? exit_ok : exit_assertion_failed, summary};
}

const std::map<std::string, std::function<Outcome(const RunConfig&)>>& dispatch()
{
    static const std::map<std::string, std::function<Outcome(const RunConfig&)>> table{
        {"validate-fan", validate_fan_cmd},
        {"degrees", degrees_cmd},
        {"slope", slope_cmd},
        {"check-stability", check_stability_cmd},
        {"check-free", check_free_cmd},
        {"singular-locus", singular_locus_cmd},
        {"build-er", build_er_cmd},
        {"verify-theorem", verify_theorem_cmd},
        {"verify-prop32", verify_rank_two_bound_cmd},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& commands()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : dispatch()) {
            out.push_back(name);
        }
        return out;
    }();
    return names;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    const auto it = dispatch().find(config.command);
    if (it == dispatch().end()) {
        err << "error: unknown command '" << config.command << "'\n";
        return exit_parse_error;
    }
    if (config.jobs == 0 || config.closure_rounds == 0) {
        err << "error: --jobs and --closure-rounds must be positive\n";
        return exit_parse_error;
    }
    Outcome outcome;
    try {
        outcome = it->second(config);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return exit_parse_error;
    } catch (const PreconditionError& e) {
        err << "precondition failed: " << e.what() << "\n";
        return exit_precondition;
    } catch (const std::invalid_argument& e) {
        // Malformed fans, families and mismatched dimensions.
        err << "invalid input: " << e.what() << "\n";
        return exit_parse_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_assertion_failed;
    }

    const std::string text = outcome.report.dump(2) + "\n";
    if (config.output_path.empty()) {
        out << text;
    } else {
        std::ofstream file(config.output_path);
        if (!file || !(file << text)) {
            err << "error: cannot write '" << config.output_path << "'\n";
            return exit_parse_error;
        }
    }
    if (!outcome.summary.empty()) {
        err << outcome.summary << "\n";
    }
    return outcome.code;
}

}  // namespace toricsheaf::cli
