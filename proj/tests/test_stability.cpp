#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "toricsheaf/stability.hpp"

using namespace toricsheaf;

namespace {

Vector v(std::initializer_list<long> xs)
{
    Vector out;
    for (auto x : xs) {
        out.emplace_back(x);
    }
    return out;
}

FiltrationFamily lines_family(const std::vector<Vector>& lines, const std::vector<std::int64_t>& full_at)
{
    std::vector<Filtration> f;
    for (std::size_t k = 0; k < lines.size(); ++k) {
        f.push_back(Filtration::line_then_full(lines[k], 0, full_at[k]));
    }
    return FiltrationFamily(lines.front().size(), std::move(f));
}

// (1/dim F) sum iota_rho(F) deg_rho, with iota_rho(F) read off membership of
// F's basis vectors: the k-th jump of F cap E(.) is the first index where
// E(i) meets F in dimension k.
Rational brute_value(const FiltrationFamily& e, const Subspace& f, const DegreeVector& deg)
{
    Rational total = 0;
    for (std::size_t ray = 0; ray < e.num_rays(); ++ray) {
        const auto& filt = e.filtration(ray);
        std::int64_t iota = 0;
        std::size_t prev = 0;
        for (std::int64_t i = filt.first_index(); i <= filt.last_index(); ++i) {
            const Subspace meet = intersect(filt.at(i), f);
            iota += i * static_cast<std::int64_t>(meet.dim() - prev);
            prev = meet.dim();
        }
        total += Rational(static_cast<long>(iota * deg[ray]));
    }
    return total / Rational(static_cast<long>(f.dim()));
}

}  // namespace

TEST_CASE("candidate sets")
{
    const auto e2 = lines_family({v({1, 1}), v({1, 2}), v({1, 3})}, {1, 1, 1});
    CHECK(is_line_type(e2));
    CHECK(marked_lines(e2).size() == 3);
    const auto c = candidates(e2);
    CHECK(c.exhaustive);
    CHECK(c.subspaces.size() == 4);
    CHECK(std::is_sorted(c.subspaces.begin(), c.subspaces.end()));

    const auto same = lines_family({v({1, 0}), v({2, 0}), v({1, 0})}, {1, 1, 1});
    const auto cs = candidates(same);
    CHECK(cs.subspaces.size() == 2);
    CHECK(std::count(cs.subspaces.begin(), cs.subspaces.end(), Subspace::line(v({1, 0}))) == 1);

    const auto same3 = lines_family({v({1, 0, 0}), v({1, 0, 0})}, {1, 2});
    CHECK(candidates(same3).subspaces.size() == 3);

    const FiltrationFamily rank_one(1, {Filtration::trivial(1), Filtration::trivial(1, 2)});
    const auto c1 = candidates(rank_one);
    CHECK(c1.subspaces.empty());
    CHECK(c1.exhaustive);

    // Three lines in Q^3, two of them spanning a plane with the third outside it.
    const auto e3 = lines_family({v({1, 0, 0}), v({0, 1, 0}), v({0, 0, 1})}, {1, 1, 1});
    const auto c3 = candidates(e3);
    CHECK(c3.exhaustive);
    CHECK(c3.subspaces.size() == 3 + 3 + 2);
}

TEST_CASE("generic subspaces avoid the given ones")
{
    const std::vector<Subspace> avoid{Subspace::line(v({1, 1, 1})), Subspace::span({v({1, 0, 0}), v({0, 1, 0})}, 3)};
    for (std::size_t d = 1; d <= 2; ++d) {
        const auto g = generic_subspace(3, d, avoid);
        CHECK(g.dim() == d);
        for (const auto& s : avoid) {
            const std::size_t expected = d + s.dim() > 3 ? d + s.dim() - 3 : 0;
            CHECK(intersect(g, s).dim() == expected);
        }
    }
}

TEST_CASE("verdicts on small families")
{
    const DegreeVector p2{{1, 1, 1}};
    const auto e2 = lines_family({v({1, 1}), v({1, 2}), v({1, 3})}, {1, 1, 1});
    const auto ok = check_stability(e2, p2);
    CHECK(ok.status == StabilityStatus::stable);
    CHECK(ok.ambient_slope == Rational(-3, 2));
    CHECK_FALSE(ok.witness);
    CHECK(ok.candidates_checked == 4);

    // Two rays share a line: that line destabilises.
    const auto two = lines_family({v({1, 1}), v({1, 1}), v({1, 3})}, {1, 1, 1});
    const auto bad = check_stability(two, p2);
    CHECK(bad.status == StabilityStatus::unstable);
    REQUIRE(bad.witness);
    CHECK(bad.witness->subspace == Subspace::line(v({1, 1})));
    CHECK(bad.witness->slope == -1);

    // One line on every ray of P^3.
    const auto one = lines_family({v({1, 0}), v({1, 0}), v({1, 0}), v({1, 0})}, {1, 1, 2, 1});
    const auto vone = check_stability(one, DegreeVector{{1, 1, 1, 1}});
    CHECK(vone.status == StabilityStatus::unstable);
    CHECK(vone.ambient_slope == Rational(-5, 2));
    REQUIRE(vone.witness);
    CHECK(vone.witness->slope == 0);

    const FiltrationFamily trivial(2, std::vector<Filtration>(3, Filtration::trivial(2)));
    const auto vt = check_stability(trivial, p2);
    CHECK(vt.status == StabilityStatus::strictly_semistable);
    REQUIRE(vt.witness);
    CHECK(vt.witness->slope == 0);

    CHECK_THROWS_AS(check_stability(e2, DegreeVector{{1, 0, 1}}), NotAmpleError);
    CHECK_THROWS_AS(check_stability(e2, DegreeVector{{1, 1}}), DimensionMismatch);
    CHECK(std::string(to_string(StabilityStatus::strictly_semistable)) == "strictly_semistable");
}

TEST_CASE("non-line-type families use a closure and are flagged")
{
    const auto plane12 = Subspace::span({v({1, 0, 0}), v({0, 1, 0})}, 3);
    const auto plane23 = Subspace::span({v({0, 1, 0}), v({0, 0, 1})}, 3);
    const FiltrationFamily e(3, {Filtration(3, {Jump{0, plane12}, Jump{1, Subspace::full(3)}}),
                                 Filtration(3, {Jump{0, plane23}, Jump{1, Subspace::full(3)}}),
                                 Filtration::line_then_full(v({1, 1, 1}), 0, 1)});
    CHECK_FALSE(is_line_type(e));
    const auto c = candidates(e);
    CHECK_FALSE(c.exhaustive);
    CHECK(std::find(c.subspaces.begin(), c.subspaces.end(), Subspace::line(v({0, 1, 0}))) !=
          c.subspaces.end());
    const auto verdict = check_stability(e, DegreeVector{{1, 1, 1}});
    CHECK_FALSE(verdict.exhaustive);
    CHECK(verdict.candidates_checked == c.subspaces.size());
}

TEST_CASE("property: rank-2 verdict matches a brute-force minimum over lines")
{
    std::mt19937 rng(4242);
    const std::vector<Vector> pool{v({1, 0}), v({0, 1}), v({1, 1}), v({1, -1}), v({2, 1})};
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<std::int64_t> idx(1, 3);
    std::uniform_int_distribution<std::int64_t> dg(1, 3);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rays = 3 + trial % 3;
        std::vector<Vector> lines;
        std::vector<std::int64_t> full_at;
        DegreeVector deg;
        for (std::size_t k = 0; k < rays; ++k) {
            lines.push_back(pool[pick(rng)]);
            full_at.push_back(idx(rng));
            deg.deg.push_back(dg(rng));
        }
        const auto e = lines_family(lines, full_at);
        const auto verdict = check_stability(e, deg);

        // Lines through (1, t) for many t and (0, 1), plus every marked line.
        std::vector<Subspace> probes;
        for (long t = -6; t <= 6; ++t) {
            probes.push_back(Subspace::line(v({1, t})));
        }
        probes.push_back(Subspace::line(v({0, 1})));
        for (const auto& l : pool) {
            probes.push_back(Subspace::line(l));
        }
        Rational best = brute_value(e, probes.front(), deg);
        for (const auto& p : probes) {
            best = std::min(best, brute_value(e, p, deg));
        }
        const Rational threshold = -verdict.ambient_slope;
        const auto expected = best < threshold    ? StabilityStatus::unstable
                              : best == threshold ? StabilityStatus::strictly_semistable
                                                  : StabilityStatus::stable;
        CHECK(verdict.status == expected);
        if (verdict.witness) {
            CHECK(-verdict.witness->slope == best);
            CHECK(brute_value(e, verdict.witness->subspace, deg) == best);
        }
    }
}

TEST_CASE("property: witness is a true minimum among sampled subspaces")
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = 3 + trial % 2;
        std::vector<Vector> lines;
        std::vector<std::int64_t> full_at;
        DegreeVector deg;
        for (std::size_t k = 0; k < 5; ++k) {
            lines.push_back(oracle::small_vector(rng, r));
            full_at.push_back(1 + static_cast<std::int64_t>(k % 2));
            deg.deg.push_back(1 + static_cast<std::int64_t>(k % 3));
        }
        const auto e = lines_family(lines, full_at);
        const auto verdict = check_stability(e, deg);
        CHECK(verdict.exhaustive);
        const Rational floor = verdict.witness ? -verdict.witness->slope : Rational(0);
        for (int s = 0; s < 40; ++s) {
            const auto f = oracle::random_proper_subspace(rng, r);
            const Rational value = brute_value(e, f, deg);
            CHECK(value == normalized_degree_sum(e, f, deg));
            if (verdict.witness) {
                CHECK(value >= floor);
            } else {
                CHECK(value > -verdict.ambient_slope);
            }
        }
    }
}

TEST_CASE("property: verdict invariant under twists, basis change and scaling")
{
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t r = 2 + trial % 2;
        std::vector<Vector> lines;
        std::vector<std::int64_t> full_at;
        for (std::size_t k = 0; k < 4; ++k) {
            lines.push_back(oracle::small_vector(rng, r));
            full_at.push_back(1 + static_cast<std::int64_t>(rng() % 3));
        }
        const auto e = lines_family(lines, full_at);
        const DegreeVector deg{{1, 1, 2, 2}};
        const auto base = check_stability(e, deg);

        std::uniform_int_distribution<std::int64_t> d(-2, 2);
        const auto twisted = check_stability(tensor_line_bundle(e, {d(rng), d(rng), d(rng), d(rng)}), deg);
        CHECK(twisted.status == base.status);

        const auto moved = check_stability(e.transformed(oracle::random_invertible(rng, r)), deg);
        CHECK(moved.status == base.status);

        const DegreeVector scaled{{3, 3, 6, 6}};
        const auto big = check_stability(e, scaled);
        CHECK(big.status == base.status);
        CHECK(big.ambient_slope == 3 * base.ambient_slope);

        StabilityOptions parallel;
        parallel.jobs = 4;
        const auto threaded = check_stability(e, deg, parallel);
        CHECK(threaded.status == base.status);
        CHECK(threaded.witness.has_value() == base.witness.has_value());
        if (base.witness) {
            CHECK(threaded.witness->subspace == base.witness->subspace);
        }
    }
}
