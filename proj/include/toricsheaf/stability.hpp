#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toricsheaf/filtration.hpp"

namespace toricsheaf {

enum class StabilityStatus { stable, strictly_semistable, unstable };

const char* to_string(StabilityStatus s);

struct CandidateSet {
    std::vector<Subspace> subspaces;  // sorted, proper, nonzero
    bool exhaustive = false;
};

struct StabilityOptions {
    // Rounds of pairwise sum/intersection closure for non-line-type families.
    std::size_t closure_rounds = 3;
    // Hard limit on the number of closure subspaces kept.
    std::size_t closure_limit = 5000;
    std::size_t jobs = 1;
};

struct Witness {
    Subspace subspace;
    Rational slope;
};

struct StabilityVerdict {
    StabilityStatus status = StabilityStatus::stable;
    std::optional<Witness> witness;
    Rational ambient_slope;
    bool exhaustive = true;
    std::size_t candidates_checked = 0;
};

// Every proper nonzero jump subspace on every ray is a line.
bool is_line_type(const FiltrationFamily& e);

// The distinct lines appearing as proper jump subspaces, sorted.
std::vector<Subspace> marked_lines(const FiltrationFamily& e);

// A d-dimensional subspace spanned by moment-curve vectors (1, t, ..., t^{r-1}),
// t = 1, 2, ..., whose intersection with every subspace S in `avoid` has
// the generic dimension max(0, d + dim S - r).
Subspace generic_subspace(std::size_t rank, std::size_t d, const std::vector<Subspace>& avoid);

CandidateSet candidates(const FiltrationFamily& e, const StabilityOptions& options = {});

// (1/dim F) sum_rho iota_rho(F) deg_L(D_rho) = -mu_L(F).
Rational normalized_degree_sum(const FiltrationFamily& e, const Subspace& f,
                               const DegreeVector& degrees);

StabilityVerdict check_stability(const FiltrationFamily& e, const DegreeVector& degrees,
                                 const StabilityOptions& options = {});
StabilityVerdict check_stability(const FiltrationFamily& e, const PolarisedDivisor& l,
                                 const StabilityOptions& options = {});

}  // namespace toricsheaf
