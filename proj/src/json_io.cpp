#include "toricsheaf/json_io.hpp"

#include <fstream>
#include <sstream>

namespace toricsheaf::io {

namespace {

template <typename Fn>
auto guarded(const char* what, Fn&& fn)
{
    try {
        return fn();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

const Json& field(const Json& j, const char* name)
{
    if (!j.is_object() || !j.contains(name)) {
        throw ParseError(std::string("missing field '") + name + "'");
    }
    return j.at(name);
}

std::size_t positive_size(const Json& j, const char* name)
{
    const Json& v = field(j, name);
    if (!v.is_number_integer() || v.get<std::int64_t>() < 1) {
        throw ParseError(std::string("field '") + name + "' must be a positive integer");
    }
    return v.get<std::size_t>();
}

// An empty singular locus is written as "empty".
Json sing_dim_json(const std::optional<std::size_t>& v)
{
    return v ? Json(*v) : Json("empty");
}

}  // namespace

Rational rational_from_json(const Json& j)
{
    if (j.is_number_integer()) {
        return Rational(std::to_string(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    throw ParseError("rational must be a string \"p/q\" or an integer, got " + j.dump());
}

Json rational_to_json(const Rational& q) { return to_string(q); }

Vector vector_from_json(const Json& j, std::size_t expected_len)
{
    if (!j.is_array() || j.size() != expected_len) {
        throw ParseError("expected a vector of length " + std::to_string(expected_len) + ", got " +
                         j.dump());
    }
    Vector v;
    for (const auto& x : j) {
        v.push_back(rational_from_json(x));
    }
    return v;
}

Json vector_to_json(const Vector& v)
{
    Json out = Json::array();
    for (const auto& x : v) {
        out.push_back(rational_to_json(x));
    }
    return out;
}

Json subspace_to_json(const Subspace& s)
{
    Json basis = Json::array();
    for (const auto& row : s.basis()) {
        basis.push_back(vector_to_json(row));
    }
    return basis;
}

Fan fan_from_json(const Json& j)
{
    return guarded("fan", [&] {
        const std::size_t n = positive_size(j, "dim");
        std::vector<LatticeVector> rays;
        for (const auto& r : field(j, "rays")) {
            rays.push_back(r.get<LatticeVector>());
        }
        std::vector<Cone> cones;
        for (const auto& c : field(j, "max_cones")) {
            cones.emplace_back(c.get<std::vector<std::size_t>>());
        }
        return Fan(n, std::move(rays), std::move(cones));
    });
}

Json fan_to_json(const Fan& fan)
{
    Json cones = Json::array();
    for (const auto& c : fan.max_cones()) {
        cones.push_back(c.rays);
    }
    return Json{{"dim", fan.dim()}, {"rays", fan.rays()}, {"max_cones", cones}};
}

LatticeVector divisor_from_json(const Json& j)
{
    return guarded("divisor", [&] { return field(j, "coeffs").get<LatticeVector>(); });
}

Json divisor_to_json(const LatticeVector& coeffs) { return Json{{"coeffs", coeffs}}; }

FiltrationFamily family_from_json(const Json& j)
{
    return guarded("family", [&] {
        const std::size_t r = positive_size(j, "rank");
        std::vector<Filtration> filts;
        for (const auto& ray : field(j, "filtrations")) {
            std::vector<Jump> jumps;
            for (const auto& jump : ray) {
                Matrix basis;
                for (const auto& v : field(jump, "basis")) {
                    basis.push_back(vector_from_json(v, r));
                }
                jumps.push_back(Jump{field(jump, "i").get<std::int64_t>(), Subspace::span(basis, r)});
            }
            filts.emplace_back(r, std::move(jumps));
        }
        return FiltrationFamily(r, std::move(filts));
    });
}

Json family_to_json(const FiltrationFamily& e)
{
    Json filts = Json::array();
    for (const auto& f : e.filtrations()) {
        Json jumps = Json::array();
        for (const auto& j : f.jumps()) {
            jumps.push_back(Json{{"i", j.index}, {"basis", subspace_to_json(j.space)}});
        }
        filts.push_back(std::move(jumps));
    }
    return Json{{"rank", e.rank()}, {"filtrations", filts}};
}

Json cone_to_json(const Cone& c) { return Json(c.rays); }

Json validation_to_json(const FanValidation& v)
{
    return Json{{"smooth", v.smooth}, {"complete", v.complete}, {"messages", v.messages}};
}

Json degrees_to_json(const DegreeVector& d) { return Json{{"deg", d.deg}}; }

Json verdict_to_json(const StabilityVerdict& v)
{
    Json out{{"status", to_string(v.status)},
             {"slope", rational_to_json(v.ambient_slope)},
             {"exhaustive", v.exhaustive},
             {"candidates_checked", v.candidates_checked}};
    if (v.witness) {
        out["witness"] = Json{{"dim", v.witness->subspace.dim()},
                              {"basis", subspace_to_json(v.witness->subspace)},
                              {"slope", rational_to_json(v.witness->slope)}};
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

Json certificate_to_json(const SplittingCertificate& c)
{
    Json pieces = Json::array();
    for (const auto& p : c.pieces) {
        pieces.push_back(Json{{"weight", p.weight}, {"basis", subspace_to_json(p.space)}});
    }
    Json out{{"cone", cone_to_json(c.cone)},
             {"compatible", c.compatible},
             {"verified", c.verified},
             {"graded_dimension", c.graded_dimension},
             {"pieces", pieces}};
    if (c.strategy) {
        out["strategy"] = *c.strategy == ComplementStrategy::earliest_pivot ? "earliest_pivot"
                                                                           : "latest_pivot";
    }
    return out;
}

Json freeness_to_json(const FreenessReport& r, bool with_certificates)
{
    Json cones = Json::array();
    for (const auto& v : r.cones) {
        cones.push_back(Json{{"rays", cone_to_json(v.cone)},
                             {"dim", v.cone.dim()},
                             {"compatible", v.compatible},
                             {"inherited", v.inherited},
                             {"verified", v.verified}});
    }
    Json minimal = Json::array();
    for (const auto& c : r.minimal_incompatible) {
        minimal.push_back(cone_to_json(c));
    }
    Json out{{"locally_free", r.locally_free},
             {"sing_dim", sing_dim_json(r.sing_dim)},
             {"minimal_incompatible_cones", minimal},
             {"unverified_incompatible", r.unverified_incompatible},
             {"codimension_floor_ok", r.codimension_floor_ok},
             {"cones", cones}};
    if (with_certificates) {
        Json certs = Json::array();
        for (const auto& c : r.certificates) {
            certs.push_back(certificate_to_json(c));
        }
        out["certificates"] = certs;
    }
    return out;
}

Json low_rank_family_to_json(const LowRankFamily& ex)
{
    Json marked = Json::array();
    for (const auto& v : ex.marked) {
        marked.push_back(vector_to_json(v));
    }
    return Json{{"rank", ex.rank},
                {"deg", ex.degrees.deg},
                {"m", ex.weights},
                {"c", ex.c},
                {"marked_vectors", marked},
                {"family", family_to_json(ex.family)}};
}

Json theorem_report_to_json(const TheoremReport& r)
{
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        rows.push_back(Json{{"r", row.rank},
                            {"slope", rational_to_json(row.slope)},
                            {"expected_slope", rational_to_json(row.expected_slope)},
                            {"status", to_string(row.status)},
                            {"exhaustive", row.exhaustive},
                            {"candidates", row.candidates},
                            {"locally_free", row.locally_free},
                            {"sing_dim", sing_dim_json(row.sing_dim)},
                            {"unverified_incompatible", row.unverified_incompatible},
                            {"passed", row.passed()},
                            {"failures", row.failures}});
    }
    return Json{{"n", r.dim},
                {"rays", r.num_rays},
                {"deg", r.degrees.deg},
                {"m", r.weights},
                {"c", r.c},
                {"rows", rows},
                {"passed", r.passed()}};
}

Json rank_two_bound_to_json(const RankTwoBoundReport& r)
{
    Json minimal = Json::array();
    for (const auto& c : r.minimal_incompatible) {
        minimal.push_back(cone_to_json(c));
    }
    return Json{{"n", r.n},
                {"sing_dim", sing_dim_json(r.sing_dim)},
                {"expected", r.expected},
                {"status", to_string(r.status)},
                {"minimal_incompatible_cones", minimal},
                {"three_line_cones", r.three_line_cones},
                {"passed", r.passed()},
                {"failures", r.failures}};
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("'" + path + "': " + e.what());
    }
}

}  // namespace toricsheaf::io
