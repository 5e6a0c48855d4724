#include "toricsheaf/construction.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace toricsheaf {

namespace {

template <typename Fn>
void for_each_index_subset(std::size_t m, std::size_t k, Fn&& fn)
{
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > m) {
        return;
    }
    while (true) {
        if (!fn(idx)) {
            return;
        }
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == m - k + (i - 1)) {
            --i;
        }
        if (i == 0) {
            return;
        }
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

std::string rank_tag(std::size_t r) { return "r=" + std::to_string(r) + ": "; }

}  // namespace

std::vector<Vector> general_position_vectors(std::size_t r, std::size_t m)
{
    if (r < 2) {
        throw std::invalid_argument("general_position_vectors: rank must be at least 2");
    }
    std::vector<Vector> out;
    for (std::size_t i = 1; i <= m; ++i) {
        Vector v(r);
        Rational power = 1;
        for (std::size_t k = 0; k < r; ++k) {
            v[k] = power;
            power *= static_cast<unsigned long>(i);
        }
        out.push_back(std::move(v));
    }
    return out;
}

bool validate_general_position(std::span<const Vector> vectors, std::size_t r)
{
    for (const auto& v : vectors) {
        if (v.size() != r) {
            throw DimensionMismatch("validate_general_position: vector not in Q^" + std::to_string(r));
        }
    }
    const std::size_t top = std::min(r, vectors.size());
    for (std::size_t d = 1; d <= top; ++d) {
        bool ok = true;
        for_each_index_subset(vectors.size(), d, [&](const std::vector<std::size_t>& idx) {
            Matrix rows;
            for (auto i : idx) {
                rows.push_back(vectors[i]);
            }
            ok = rank(rows, r) == d;
            return ok;
        });
        if (!ok) {
            return false;
        }
    }
    return true;
}

LowRankFamily build_low_rank_family(const PolarisedDivisor& l, std::size_t r)
{
    const std::size_t rays = l.fan().num_rays();
    if (r < 2 || r + 1 > rays) {
        throw PreconditionError("rank " + std::to_string(r) + " outside 2 <= r <= |Sigma(1)| - 1 = " +
                                std::to_string(rays - 1));
    }
    LowRankFamily out;
    out.rank = r;
    out.degrees = l.degrees();
    for (std::size_t rho = 0; rho < rays; ++rho) {
        std::int64_t m = 1;
        for (std::size_t other = 0; other < rays; ++other) {
            if (other != rho && __builtin_mul_overflow(m, out.degrees[other], &m)) {
                throw std::overflow_error("weight m_rho overflows 64 bits");
            }
        }
        out.weights.push_back(m);
    }
    if (__builtin_mul_overflow(out.weights[0], out.degrees[0], &out.c)) {
        throw std::overflow_error("constant c overflows 64 bits");
    }
    for (std::size_t rho = 0; rho < rays; ++rho) {
        std::int64_t product = 0;
        if (__builtin_mul_overflow(out.weights[rho], out.degrees[rho], &product) || product != out.c) {
            throw std::logic_error("m_rho * deg_L(D_rho) is not constant");
        }
    }
    out.marked = general_position_vectors(r, rays);
    std::vector<Filtration> filts;
    for (std::size_t rho = 0; rho < rays; ++rho) {
        filts.push_back(Filtration::line_then_full(out.marked[rho], 0, out.weights[rho]));
    }
    out.family = FiltrationFamily(r, std::move(filts));
    return out;
}

Rational expected_low_rank_slope(std::int64_t c, std::size_t r, std::size_t num_rays)
{
    Rational value(static_cast<long>(c));
    value *= static_cast<unsigned long>((r - 1) * num_rays);
    value /= static_cast<unsigned long>(r);
    return -value;
}

bool TheoremReport::passed() const
{
    return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const TheoremRow& row) {
        return row.passed();
    });
}

TheoremReport verify_theorem(const PolarisedDivisor& l, const VerifyOptions& options)
{
    const Fan& fan = l.fan();
    TheoremReport report;
    report.dim = fan.dim();
    report.num_rays = fan.num_rays();
    report.degrees = l.degrees();
    const std::size_t n = fan.dim();
    const std::size_t rays = fan.num_rays();

    for (std::size_t r = 2; r < rays; ++r) {
        const LowRankFamily ex = build_low_rank_family(l, r);
        report.weights = ex.weights;
        report.c = ex.c;
        TheoremRow row;
        row.rank = r;
        const std::string tag = rank_tag(r);

        if (!validate_general_position(ex.marked, r)) {
            row.failures.push_back(tag + "marked vectors are not in general position");
        }

        row.slope = slope(ex.family, l);
        row.expected_slope = expected_low_rank_slope(ex.c, r, rays);
        if (row.slope != row.expected_slope) {
            row.failures.push_back(tag + "slope " + to_string(row.slope) + " differs from closed form " +
                                   to_string(row.expected_slope));
        }

        const StabilityVerdict verdict = check_stability(ex.family, l, {.jobs = options.jobs});
        row.status = verdict.status;
        row.exhaustive = verdict.exhaustive;
        if (verdict.status != StabilityStatus::stable) {
            row.failures.push_back(tag + "family is " + to_string(verdict.status));
        }
        if (!verdict.exhaustive) {
            row.failures.push_back(tag + "candidate set is not exhaustive");
        }

        // Each candidate F of dim d containing k marked vectors has
        // (1/d) sum iota(F) deg = c |Sigma(1)| - c k / d >= c |Sigma(1)| - c.
        const CandidateSet cands = candidates(ex.family);
        row.candidates = cands.subspaces.size();
        const Rational base = Rational(static_cast<long>(ex.c)) * static_cast<unsigned long>(rays);
        for (const auto& f : cands.subspaces) {
            const auto k = static_cast<unsigned long>(
                std::count_if(ex.marked.begin(), ex.marked.end(), [&](const Vector& v) { return f.contains(v); }));
            const Rational value = normalized_degree_sum(ex.family, f, l.degrees());
            const Rational predicted =
                base - Rational(static_cast<long>(ex.c)) * k / static_cast<unsigned long>(f.dim());
            const Rational floor = base - Rational(static_cast<long>(ex.c));
            if (value != predicted || value < floor || ((value == floor) != (k == f.dim()))) {
                row.failures.push_back(tag + "subspace degree bound fails on a candidate of dim " +
                                       std::to_string(f.dim()));
                break;
            }
        }

        const FreenessReport freeness = singular_locus(ex.family, fan, {.jobs = options.jobs});
        row.locally_free = freeness.locally_free;
        row.sing_dim = freeness.sing_dim;
        row.unverified_incompatible = freeness.unverified_incompatible;
        if (freeness.locally_free != (r >= n)) {
            row.failures.push_back(tag + (freeness.locally_free ? "locally free although r < n"
                                                                 : "not locally free although r >= n"));
        }
        if (r < n && (!freeness.sing_dim || *freeness.sing_dim >= n - r)) {
            row.failures.push_back(tag + "singular locus dimension not below n - r");
        }
        if (freeness.unverified_incompatible != 0) {
            row.failures.push_back(tag + "unverified incompatible cones");
        }
        if (!freeness.codimension_floor_ok) {
            row.failures.push_back(tag + "singular locus of codimension below 3");
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

RankTwoBoundReport check_rank_two_bound(const FiltrationFamily& e, const Fan& fan, const VerifyOptions& options)
{
    if (e.rank() != 2) {
        throw PreconditionError("check_rank_two_bound: family must have rank 2");
    }
    RankTwoBoundReport report;
    report.n = fan.dim();
    report.expected = fan.dim() >= 3 ? fan.dim() - 3 : 0;

    auto line_of = [&](std::size_t ray) -> std::optional<Subspace> {
        for (const auto& j : e.filtration(ray).jumps()) {
            if (j.space.dim() == 1) {
                return j.space;
            }
        }
        return std::nullopt;
    };
    std::set<Cone> three_line;
    if (fan.dim() >= 3) {
        for (const auto& cone : fan.cones_of_dim(3)) {
            std::set<Subspace> lines;
            for (auto r : cone.rays) {
                if (auto l = line_of(r)) {
                    lines.insert(*l);
                }
            }
            if (lines.size() == 3) {
                three_line.insert(cone);
            }
        }
    }
    report.three_line_cones = three_line.size();

    const FreenessReport freeness = singular_locus(e, fan, {.jobs = options.jobs});
    report.sing_dim = freeness.sing_dim;
    report.minimal_incompatible = freeness.minimal_incompatible;
    for (const auto& v : freeness.cones) {
        if (v.cone.dim() <= 2 && !v.compatible) {
            report.failures.push_back("cone of dimension " + std::to_string(v.cone.dim()) +
                                      " is incompatible");
        }
        if (three_line.count(v.cone) && v.compatible) {
            report.failures.push_back("3-cone with three distinct marked lines is compatible");
        }
    }
    if (std::set<Cone>(freeness.minimal_incompatible.begin(), freeness.minimal_incompatible.end()) !=
        three_line) {
        report.failures.push_back("minimal incompatible cones differ from the three-line 3-cones");
    }
    if (freeness.unverified_incompatible != 0) {
        report.failures.push_back("unverified incompatible cones");
    }
    if (!freeness.sing_dim || *freeness.sing_dim != report.expected) {
        report.failures.push_back("sing_dim differs from n - 3");
    }
    return report;
}

RankTwoBoundReport verify_rank_two_bound(std::size_t n, const VerifyOptions& options)
{
    if (n < 3) {
        throw PreconditionError("verify_rank_two_bound: n must be at least 3");
    }
    LatticeVector o1(n + 1, 0);
    o1[n] = 1;
    const PolarisedDivisor l(projective_space(n), o1);
    const LowRankFamily ex = build_low_rank_family(l, 2);
    RankTwoBoundReport report = check_rank_two_bound(ex.family, l.fan(), options);
    const StabilityVerdict verdict = check_stability(ex.family, l, {.jobs = options.jobs});
    report.status = verdict.status;
    if (verdict.status != StabilityStatus::stable) {
        report.failures.push_back(std::string("family is ") + to_string(verdict.status));
    }
    return report;
}

}  // namespace toricsheaf
