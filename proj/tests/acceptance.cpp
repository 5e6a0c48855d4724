// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "oracles.hpp"
#include "toricsheaf/construction.hpp"
#include "toricsheaf/freeness.hpp"
#include "toricsheaf/json_io.hpp"
#include "toricsheaf/stability.hpp"

using namespace toricsheaf;

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            detail = what;
        }
        ok = ok && cond;
    }
};

struct Example {
    std::string name;
    std::string fan_file;
    std::string divisor_file;
    Fan fan;
    LatticeVector coeffs;
};

std::string data(const std::string& name)
{
    return std::string(TEST_DATA_DIR) + "/" + name;
}

LatticeVector o1(std::size_t n)
{
    LatticeVector a(n + 1, 0);
    a[n] = 1;
    return a;
}

// First ample vector in {0..3}^rays, ordered by coefficient sum and then lexicographically.
LatticeVector search_ample(const Fan& fan)
{
    std::vector<LatticeVector> all;
    LatticeVector a(fan.num_rays(), 0);
    while (true) {
        all.push_back(a);
        std::size_t i = a.size();
        while (i > 0 && a[i - 1] == 3) {
            a[--i] = 0;
        }
        if (i == 0) {
            break;
        }
        ++a[i - 1];
    }
    std::stable_sort(all.begin(), all.end(), [](const LatticeVector& x, const LatticeVector& y) {
        return std::accumulate(x.begin(), x.end(), std::int64_t{0}) <
               std::accumulate(y.begin(), y.end(), std::int64_t{0});
    });
    for (const auto& c : all) {
        if (is_ample(fan, c)) {
            return c;
        }
    }
    throw std::runtime_error("no ample divisor with coefficients in 0..3");
}

std::vector<Example> examples()
{
    const Fan p1p1 = product(projective_space(1), projective_space(1));
    const Fan f1 = hirzebruch(1);
    return {
        {"P2 O(1)", "pp2.json", "o1_pp2.json", projective_space(2), o1(2)},
        {"P3 O(1)", "pp3.json", "o1_pp3.json", projective_space(3), o1(3)},
        {"P4 O(1)", "pp4.json", "o1_pp4.json", projective_space(4), o1(4)},
        {"P1xP1 O(1,1)", "p1xp1.json", "o11_p1xp1.json", p1p1, {1, 0, 1, 0}},
        {"P1xP1 O(1,2)", "p1xp1.json", "o12_p1xp1.json", p1p1, {1, 0, 2, 0}},
        {"F1", "hirzebruch1.json", "ample_hirzebruch1.json", f1, search_ample(f1)},
    };
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Check theorem_reproduction()
{
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    std::size_t rows = 0;
    for (const auto& ex : examples()) {
        // The fixture files must describe the same polarised variety.
        c.expect(io::fan_from_json(io::read_json_file(data(ex.fan_file))) == ex.fan, ex.name + ": fan fixture");
        c.expect(io::divisor_from_json(io::read_json_file(data(ex.divisor_file))) == ex.coeffs,
                 ex.name + ": divisor fixture differs from the ample search");

        cli::RunConfig cfg;
        cfg.command = "verify-theorem";
        cfg.fan_path = data(ex.fan_file);
        cfg.divisor_path = data(ex.divisor_file);
        std::ostringstream out;
        std::ostringstream err;
        c.expect(cli::run(cfg, out, err) == cli::exit_ok, ex.name + ": verify-theorem exit code");

        const PolarisedDivisor l(ex.fan, ex.coeffs);
        const auto report = verify_theorem(l);
        const std::size_t n = ex.fan.dim();
        c.expect(report.rows.size() + 2 == ex.fan.num_rays(), ex.name + ": ranks 2..|rays|-1");
        for (const auto& row : report.rows) {
            ++rows;
            const std::string tag = ex.name + " r=" + std::to_string(row.rank);
            c.expect(row.status == StabilityStatus::stable && row.exhaustive, tag + ": not proven stable");
            c.expect(row.locally_free == (row.rank >= n), tag + ": locally free iff r >= n");
            if (row.rank < n) {
                c.expect(row.sing_dim && *row.sing_dim < n - row.rank, tag + ": sing_dim < n - r");
            }
        }
    }
    const double secs = seconds_since(t0);
    c.expect(secs < 60.0, "runtime over one minute");
    if (c.ok) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "6 polarisations, %zu ranks, %.2f s", rows, secs);
        c.detail = buf;
    }
    return c;
}

Check rank_two_bound()
{
    Check c;
    for (std::size_t n : {3u, 4u}) {
        const auto report = verify_rank_two_bound(n);
        const std::string tag = "n=" + std::to_string(n);
        c.expect(report.sing_dim && *report.sing_dim == n - 3, tag + ": sing_dim");

        // Three-line 3-cones recomputed from the marked vectors.
        const PolarisedDivisor l(projective_space(n), o1(n));
        const auto built = build_low_rank_family(l, 2);
        std::set<Cone> expected;
        for (const auto& cone : l.fan().cones_of_dim(3)) {
            bool distinct = true;
            for (std::size_t a = 0; a < 3; ++a) {
                for (std::size_t b = a + 1; b < 3; ++b) {
                    distinct = distinct &&
                               rank({built.marked[cone.rays[a]], built.marked[cone.rays[b]]}, 2) == 2;
                }
            }
            if (distinct) {
                expected.insert(cone);
            }
        }
        const std::set<Cone> got(report.minimal_incompatible.begin(), report.minimal_incompatible.end());
        c.expect(got == expected && !expected.empty(), tag + ": minimal incompatible cones");
        c.expect(report.passed(), tag + ": report failures");
    }
    if (c.ok) {
        c.detail = "sing_dim 0 on P3, 1 on P4; minimal cones = three-line 3-cones";
    }
    return c;
}

Check slope_closed_form()
{
    Check c;
    std::size_t cases = 0;
    for (const auto& ex : examples()) {
        const PolarisedDivisor l(ex.fan, ex.coeffs);
        const std::size_t rays = ex.fan.num_rays();
        for (std::size_t r = 2; r < rays; ++r) {
            const auto built = build_low_rank_family(l, r);
            const std::int64_t cst = built.weights[0] * l.degrees()[0];
            for (std::size_t rho = 0; rho < rays; ++rho) {
                c.expect(built.weights[rho] * l.degrees()[rho] == cst, ex.name + ": c not constant");
            }
            const Rational closed = -Rational(static_cast<long>(cst * static_cast<std::int64_t>((r - 1) * rays))) /
                                    Rational(static_cast<long>(r));
            c.expect(slope(built.family, l) == closed, ex.name + " r=" + std::to_string(r) + ": slope");
            ++cases;
        }
    }
    if (c.ok) {
        c.detail = std::to_string(cases) + " slopes equal -c(r-1)|rays|/r";
    }
    return c;
}

Check instability_witnesses()
{
    Check c;
    std::size_t families = 0;
    for (std::size_t n : {2u, 3u, 4u}) {
        const PolarisedDivisor l(projective_space(n), o1(n));
        const auto built = build_low_rank_family(l, 2);
        const Subspace f1 = Subspace::line(built.marked[0]);
        const Subspace f2 = Subspace::line(built.marked[1]);

        std::vector<Filtration> one;
        for (std::size_t rho = 0; rho <= n; ++rho) {
            one.push_back(Filtration::line_then_full(built.marked[0], 0, built.weights[rho]));
        }
        const auto v1 = check_stability(FiltrationFamily(2, one), l);
        c.expect(v1.status != StabilityStatus::stable && v1.witness && v1.witness->subspace == f1,
                 "one-line P" + std::to_string(n));
        ++families;

        for (std::size_t k = 1; k <= n; ++k) {
            std::vector<Filtration> two;
            for (std::size_t rho = 0; rho <= n; ++rho) {
                two.push_back(
                    Filtration::line_then_full(built.marked[rho < k ? 0 : 1], 0, built.weights[rho]));
            }
            const auto v2 = check_stability(FiltrationFamily(2, two), l);
            c.expect(v2.status != StabilityStatus::stable && v2.witness &&
                         (v2.witness->subspace == f1 || v2.witness->subspace == f2),
                     "two-line P" + std::to_string(n) + " k=" + std::to_string(k));
            ++families;
        }

        const FiltrationFamily zero(2, std::vector<Filtration>(n + 1, Filtration::trivial(2, 0)));
        c.expect(check_stability(zero, l).status == StabilityStatus::strictly_semistable,
                 "all jumps at zero on P" + std::to_string(n));
        ++families;
    }
    if (c.ok) {
        c.detail = std::to_string(families) + " degenerate families classified with the expected witnesses";
    }
    return c;
}

Check degree_oracle()
{
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<Fan> fans{projective_space(1),
                                projective_space(2),
                                projective_space(3),
                                product(projective_space(1), projective_space(1)),
                                hirzebruch(1),
                                hirzebruch(2),
                                hirzebruch(3),
                                product(projective_space(2), projective_space(1)),
                                product(product(projective_space(1), projective_space(1)), projective_space(1))};
    std::size_t polarisations = 0;
    for (const auto& fan : fans) {
        LatticeVector a(fan.num_rays(), 0);
        while (true) {
            if (is_ample(fan, a)) {
                ++polarisations;
                for (std::size_t rho = 0; rho < fan.num_rays(); ++rho) {
                    c.expect(facet_degree(fan, a, rho) == oracle::ehrhart_degree(fan, a, rho),
                             "degree mismatch");
                }
            }
            std::size_t i = a.size();
            while (i > 0 && a[i - 1] == 3) {
                a[--i] = 0;
            }
            if (i == 0) {
                break;
            }
            ++a[i - 1];
        }
    }
    const double secs = seconds_since(t0);
    c.expect(polarisations > 0, "no polarisations enumerated");
    c.expect(secs < 60.0, "runtime over one minute");
    if (c.ok) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%zu ample divisors on 9 fans, %.2f s", polarisations, secs);
        c.detail = buf;
    }
    return c;
}

Check compatibility_oracle()
{
    Check c;
    std::mt19937 rng(1234567);
    std::size_t cases = 0;
    std::size_t positives = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t r = 1 + static_cast<std::size_t>(trial) % 3;
        // Incompatibility needs three filtrations, so most cases use three.
        const std::size_t count = trial % 4 == 3 ? 1 + static_cast<std::size_t>(trial / 4) % 2 : 3;
        std::vector<Filtration> filts;
        for (std::size_t k = 0; k < count; ++k) {
            if (r == 1) {
                filts.push_back(Filtration::trivial(1, static_cast<std::int64_t>(rng() % 3)));
            } else if (trial % 2 == 0) {
                filts.push_back(oracle::random_filtration(rng, r, 2));
            } else {
                // One proper jump, then the whole space.
                const auto step = static_cast<std::int64_t>(rng() % 3);
                filts.push_back(Filtration(r, {Jump{step, oracle::random_proper_subspace(rng, r)},
                                               Jump{step + 1, Subspace::full(r)}}));
            }
        }
        const auto cert = check_compatibility(filts, r);
        c.expect(cert.compatible == oracle::has_adapted_basis(filts, r), "disagreement with the oracle");
        c.expect(cert.verified, "unverified verdict on a random family");
        positives += cert.compatible;
        ++cases;
    }
    c.expect(positives >= 20 && cases - positives >= 20, "suite does not exercise both outcomes: " + std::to_string(positives) + " compatible");

    std::size_t unverified = 0;
    for (const auto& ex : examples()) {
        const PolarisedDivisor l(ex.fan, ex.coeffs);
        for (std::size_t r = 2; r < ex.fan.num_rays(); ++r) {
            unverified += singular_locus(build_low_rank_family(l, r).family, ex.fan).unverified_incompatible;
        }
    }
    c.expect(unverified == 0, "verified: false incompatibles on the constructed examples");
    if (c.ok) {
        c.detail = std::to_string(cases) + " random families (" + std::to_string(positives) +
                   " compatible), 0 unverified on the constructed examples";
    }
    return c;
}

Check property_suites()
{
    Check c;
    std::mt19937 rng(424242);
    std::uniform_int_distribution<std::int64_t> small(-2, 2);

    // Twist and basis-change invariance of stability verdicts.
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t r = 2 + static_cast<std::size_t>(trial) % 2;
        std::vector<Filtration> filts;
        for (std::size_t k = 0; k < 4; ++k) {
            filts.push_back(Filtration::line_then_full(oracle::small_vector(rng, r), 0, 1 + trial % 3));
        }
        const FiltrationFamily e(r, filts);
        const DegreeVector deg{{1, 1, 1, 1}};
        const auto base = check_stability(e, deg).status;
        c.expect(check_stability(tensor_line_bundle(e, {small(rng), small(rng), small(rng), small(rng)}), deg)
                         .status == base,
                 "twist changed the verdict");
        c.expect(check_stability(e.transformed(oracle::random_invertible(rng, r)), deg).status == base,
                 "basis change changed the verdict");
    }

    // Face monotonicity of compatibility.
    for (int trial = 0; trial < 40; ++trial) {
        const Fan fan = projective_space(3);
        const auto e = oracle::random_family(rng, 2 + static_cast<std::size_t>(trial) % 2, 4, 2);
        const auto report = singular_locus(e, fan);
        for (const auto& a : report.cones) {
            for (const auto& b : report.cones) {
                if (a.cone.is_face_of(b.cone) && b.compatible) {
                    c.expect(is_compatible(e, fan, a.cone).compatible, "face of a compatible cone failed");
                }
            }
        }
    }

    // dim A + dim B = dim(A + B) + dim(A cap B).
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial) % 4;
        const auto a = oracle::random_proper_subspace(rng, n);
        const auto b = oracle::random_proper_subspace(rng, n);
        c.expect(a.dim() + b.dim() == sum(a, b).dim() + intersect(a, b).dim(), "dimension formula");
    }

    // Vandermonde general position up to (5, 12).
    for (std::size_t r = 2; r <= 5; ++r) {
        for (std::size_t m = 1; m <= 12; ++m) {
            c.expect(validate_general_position(general_position_vectors(r, m), r), "general position");
        }
    }
    if (c.ok) {
        c.detail = "twist, basis change, face monotonicity, dimension formula, general position";
    }
    return c;
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
        {"low-rank construction is stable with the stated singular locus", theorem_reproduction},
        {"rank-two singular locus on P3 and P4", rank_two_bound},
        {"slope closed form", slope_closed_form},
        {"instability witnesses for degenerate families", instability_witnesses},
        {"facet degrees agree with the Ehrhart oracle", degree_oracle},
        {"compatibility agrees with exhaustive splitting search", compatibility_oracle},
        {"property suites", property_suites},
    };
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Check result;
        try {
            result = criteria[k].second();
        } catch (const std::exception& e) {
            result.ok = false;
            result.detail = std::string("exception: ") + e.what();
        }
        failures += !result.ok;
        std::cout << "criterion " << (k + 1) << " " << (result.ok ? "PASS" : "FAIL") << "  "
                  << criteria[k].first << " (" << result.detail << ")\n";
    }
    return failures == 0 ? 0 : 1;
}
