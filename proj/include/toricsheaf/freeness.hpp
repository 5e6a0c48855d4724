#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "toricsheaf/filtration.hpp"

namespace toricsheaf {

// One coordinate per ray of the cone, in the cone's ray order.
using Multiweight = std::vector<std::int64_t>;

struct SplittingPiece {
    Multiweight weight;
    Subspace space;
};

enum class ComplementStrategy { earliest_pivot, latest_pivot };

/**
 * Outcome of Klyachko's compatibility test on one cone.
 *
 * When `compatible`, the pieces are independent, span Q^r, and rebuild every
 * filtration of the cone: E^{rho_k}(i) is the sum of the pieces whose k-th
 * weight is at most i. `verified` is false only when the graded dimension
 * count allowed a splitting but neither complement strategy produced one that
 * passed the reconstruction check.
 */
struct SplittingCertificate {
    Cone cone;
    std::vector<SplittingPiece> pieces;
    bool compatible = false;
    bool verified = true;
    std::size_t graded_dimension = 0;  // sum of d(i) over the grid
    std::optional<ComplementStrategy> strategy;
};

// V(i) = intersection of E^{rho_j}(i_j) over the given filtrations.
Subspace joint_space(std::span<const Filtration> filtrations, const Multiweight& weight);
Subspace joint_space(const FiltrationFamily& e, const Cone& cone, const Multiweight& weight);

// Independent reconstruction check of a proposed splitting.
bool verify_splitting(std::span<const Filtration> filtrations, std::size_t rank,
                      const std::vector<SplittingPiece>& pieces);

// Compatibility of an arbitrary list of filtrations of the same Q^r.
SplittingCertificate check_compatibility(std::span<const Filtration> filtrations, std::size_t rank);

// Compatibility on a cone of the fan; throws PreconditionError for non-smooth cones.
SplittingCertificate is_compatible(const FiltrationFamily& e, const Fan& fan, const Cone& cone);

struct ConeVerdict {
    Cone cone;
    bool compatible = true;
    bool inherited = false;  // incompatible because a face is
    bool verified = true;
};

struct FreenessOptions {
    std::size_t jobs = 1;
    bool keep_certificates = false;
};

struct FreenessReport {
    bool locally_free = true;
    std::vector<ConeVerdict> cones;  // every cone, by dimension
    std::vector<Cone> minimal_incompatible;
    std::optional<std::size_t> sing_dim;  // empty singular locus when unset
    std::size_t unverified_incompatible = 0;
    // For rank >= 2 the singular locus of a reflexive sheaf on a smooth
    // variety has codimension at least 3; false flags an internal error.
    bool codimension_floor_ok = true;
    std::vector<SplittingCertificate> certificates;
};

FreenessReport singular_locus(const FiltrationFamily& e, const Fan& fan,
                              const FreenessOptions& options = {});

}  // namespace toricsheaf
