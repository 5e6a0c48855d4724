#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toricsheaf/freeness.hpp"
#include "toricsheaf/stability.hpp"

namespace toricsheaf {

// v_i = (1, i, i^2, ..., i^{r-1}) for i = 1..m. Any min(r, m) of them are
// linearly independent (Vandermonde).
std::vector<Vector> general_position_vectors(std::size_t r, std::size_t m);

// True iff every subset of at most min(r, m) of the vectors is independent.
bool validate_general_position(std::span<const Vector> vectors, std::size_t r);

/**
 * The rank-r family with one general-position line per ray:
 * E^rho(i) = 0 for i < 0, Q.v_rho for 0 <= i < m_rho, and Q^r from m_rho on,
 * where m_rho is the product of the degrees of the other rays so that
 * m_rho * deg_L(D_rho) equals the same constant c on every ray.
 */
struct LowRankFamily {
    std::size_t rank = 0;
    DegreeVector degrees;
    std::vector<Vector> marked;         // v_rho
    std::vector<std::int64_t> weights;  // m_rho
    std::int64_t c = 0;
    FiltrationFamily family;
};

LowRankFamily build_low_rank_family(const PolarisedDivisor& l, std::size_t r);

// -mu_L = c (r - 1) |Sigma(1)| / r.
Rational expected_low_rank_slope(std::int64_t c, std::size_t r, std::size_t num_rays);

struct VerifyOptions {
    std::size_t jobs = 1;
};

struct TheoremRow {
    std::size_t rank = 0;
    Rational slope;
    Rational expected_slope;
    StabilityStatus status = StabilityStatus::unstable;
    bool exhaustive = false;
    std::size_t candidates = 0;
    bool locally_free = false;
    std::optional<std::size_t> sing_dim;
    std::size_t unverified_incompatible = 0;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

struct TheoremReport {
    std::size_t dim = 0;
    std::size_t num_rays = 0;
    DegreeVector degrees;
    std::vector<std::int64_t> weights;
    std::int64_t c = 0;
    std::vector<TheoremRow> rows;

    bool passed() const;
};

// Builds the low-rank family for every 2 <= r < |Sigma(1)| and checks:
// stable (with an exhaustive candidate set), the closed-form slope, the
// per-subspace degree bound, locally free iff r >= n, and sing_dim < n - r
// when r < n.
TheoremReport verify_theorem(const PolarisedDivisor& l, const VerifyOptions& options = {});

struct RankTwoBoundReport {
    std::size_t n = 0;
    std::optional<std::size_t> sing_dim;
    std::size_t expected = 0;
    StabilityStatus status = StabilityStatus::unstable;
    std::vector<Cone> minimal_incompatible;
    std::size_t three_line_cones = 0;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

// The rank-2 family on (P^n, O(1)): sing_dim = n - 3, every 3-cone with three
// distinct marked lines is incompatible, every cone of dim <= 2 compatible.
RankTwoBoundReport verify_rank_two_bound(std::size_t n, const VerifyOptions& options = {});

// Pure check used by the driver above, exposed for testing on other families.
RankTwoBoundReport check_rank_two_bound(const FiltrationFamily& e, const Fan& fan,
                                        const VerifyOptions& options = {});

}  // namespace toricsheaf
