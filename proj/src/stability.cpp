#include "toricsheaf/stability.hpp"

#include <algorithm>
#include <set>

#include "toricsheaf/parallel.hpp"

namespace toricsheaf {

const char* to_string(StabilityStatus s)
{
    switch (s) {
    case StabilityStatus::stable:
        return "stable";
    case StabilityStatus::strictly_semistable:
        return "strictly_semistable";
    case StabilityStatus::unstable:
        return "unstable";
    }
    return "unknown";
}

bool is_line_type(const FiltrationFamily& e)
{
    for (const auto& f : e.filtrations()) {
        for (const auto& j : f.jumps()) {
            if (!j.space.is_full() && j.space.dim() != 1) {
                return false;
            }
        }
    }
    return true;
}

std::vector<Subspace> marked_lines(const FiltrationFamily& e)
{
    std::set<Subspace> lines;
    for (const auto& f : e.filtrations()) {
        for (const auto& j : f.jumps()) {
            if (!j.space.is_full() && j.space.dim() == 1) {
                lines.insert(j.space);
            }
        }
    }
    return {lines.begin(), lines.end()};
}

Subspace generic_subspace(std::size_t rank, std::size_t d, const std::vector<Subspace>& avoid)
{
    if (d > rank) {
        throw std::invalid_argument("generic_subspace: dimension exceeds rank");
    }
    Matrix chosen;
    Subspace g = Subspace::zero(rank);
    std::vector<Subspace> joins = avoid;
    for (long t = 1; g.dim() < d; ++t) {
        Vector x(rank);
        Rational power = 1;
        for (std::size_t k = 0; k < rank; ++k) {
            x[k] = power;
            power *= t;
        }
        if (g.contains(x)) {
            continue;
        }
        // Joins G + S that are not yet the whole space must grow with x.
        const bool generic = std::none_of(joins.begin(), joins.end(), [&](const Subspace& j) {
            return !j.is_full() && j.contains(x);
        });
        if (!generic) {
            continue;
        }
        chosen.push_back(x);
        g = Subspace::span(chosen, rank);
        for (auto& j : joins) {
            if (!j.is_full()) {
                j = sum(j, Subspace::line(x));
            }
        }
    }
    return g;
}

namespace {

bool proper_nonzero(const Subspace& s) { return !s.is_zero() && !s.is_full(); }

void add_generic_representatives(std::size_t rank, std::set<Subspace>& pool)
{
    const std::vector<Subspace> avoid(pool.begin(), pool.end());
    for (std::size_t d = 1; d < rank; ++d) {
        pool.insert(generic_subspace(rank, d, avoid));
    }
}

}  // namespace

CandidateSet candidates(const FiltrationFamily& e, const StabilityOptions& options)
{
    const std::size_t r = e.rank();
    CandidateSet out;
    if (r == 1) {
        out.exhaustive = true;
        return out;
    }
    std::set<Subspace> pool;
    if (is_line_type(e)) {
        // Spans of subsets of marked lines, grown one line at a time.
        const auto lines = marked_lines(e);
        std::vector<Subspace> frontier(lines.begin(), lines.end());
        pool.insert(lines.begin(), lines.end());
        while (!frontier.empty()) {
            std::vector<Subspace> next;
            for (const auto& s : frontier) {
                for (const auto& l : lines) {
                    if (s.contains(l)) {
                        continue;
                    }
                    Subspace grown = sum(s, l);
                    if (grown.dim() < r && pool.insert(grown).second) {
                        next.push_back(std::move(grown));
                    }
                }
            }
            frontier = std::move(next);
        }
        out.exhaustive = true;
    } else {
        for (const auto& f : e.filtrations()) {
            for (const auto& j : f.jumps()) {
                if (proper_nonzero(j.space)) {
                    pool.insert(j.space);
                }
            }
        }
        for (std::size_t round = 0; round < options.closure_rounds; ++round) {
            const std::vector<Subspace> current(pool.begin(), pool.end());
            bool grew = false;
            for (std::size_t a = 0; a < current.size() && pool.size() < options.closure_limit; ++a) {
                for (std::size_t b = a + 1; b < current.size() && pool.size() < options.closure_limit;
                     ++b) {
                    for (const auto& s : {sum(current[a], current[b]), intersect(current[a], current[b])}) {
                        if (proper_nonzero(s)) {
                            grew |= pool.insert(s).second;
                        }
                    }
                }
            }
            if (!grew) {
                break;
            }
        }
        out.exhaustive = false;
    }
    add_generic_representatives(r, pool);
    out.subspaces.assign(pool.begin(), pool.end());
    return out;
}

Rational normalized_degree_sum(const FiltrationFamily& e, const Subspace& f, const DegreeVector& degrees)
{
    if (f.is_zero()) {
        throw std::invalid_argument("normalized_degree_sum: zero subspace");
    }
    Rational total = 0;
    for (std::size_t r = 0; r < e.num_rays(); ++r) {
        total += Rational(static_cast<long>(induced_iota(e, f, r))) *
                 Rational(static_cast<long>(degrees[r]));
    }
    return total / Rational(static_cast<unsigned long>(f.dim()));
}

StabilityVerdict check_stability(const FiltrationFamily& e, const DegreeVector& degrees,
                                 const StabilityOptions& options)
{
    if (degrees.size() != e.num_rays()) {
        throw DimensionMismatch("check_stability: degree vector does not match the family");
    }
    if (std::any_of(degrees.deg.begin(), degrees.deg.end(), [](std::int64_t d) { return d < 1; })) {
        throw NotAmpleError("check_stability: degrees of an ample divisor are positive");
    }
    StabilityVerdict verdict;
    verdict.ambient_slope = slope(e, degrees);
    const Rational threshold = -verdict.ambient_slope;

    const CandidateSet cands = candidates(e, options);
    verdict.exhaustive = cands.exhaustive;
    verdict.candidates_checked = cands.subspaces.size();

    std::vector<Rational> values(cands.subspaces.size());
    parallel_for(values.size(), options.jobs, [&](std::size_t i) {
        values[i] = normalized_degree_sum(e, cands.subspaces[i], degrees);
    });

    // Candidates are sorted by (dim, basis), so the first minimum is the
    // tie-broken witness.
    std::optional<std::size_t> worst;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!worst || values[i] < values[*worst]) {
            worst = i;
        }
    }
    if (worst && values[*worst] <= threshold) {
        verdict.status = values[*worst] < threshold ? StabilityStatus::unstable
                                                    : StabilityStatus::strictly_semistable;
        verdict.witness = Witness{cands.subspaces[*worst], -values[*worst]};
    }
    return verdict;
}

StabilityVerdict check_stability(const FiltrationFamily& e, const PolarisedDivisor& l,
                                 const StabilityOptions& options)
{
    return check_stability(e, l.degrees(), options);
}

}  // namespace toricsheaf
