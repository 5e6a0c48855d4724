#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "toricsheaf/linalg.hpp"

namespace toricsheaf {

// A cone of a simplicial fan, identified with its sorted set of ray indices.
struct Cone {
    std::vector<std::size_t> rays;

    Cone() = default;
    explicit Cone(std::vector<std::size_t> ray_indices);

    std::size_t dim() const { return rays.size(); }
    bool contains(std::size_t ray) const;
    bool is_face_of(const Cone& other) const;

    friend auto operator<=>(const Cone&, const Cone&) = default;
};

/**
 * A simplicial fan in N = Z^n given by its primitive rays and maximal cones.
 *
 * The constructor enforces structural well-formedness (ray lengths and indices,
 * primitivity, distinct rays, linearly independent cone rays). Smoothness and
 * completeness are properties queried through validate().
 *
 * Ray order is the canonical ray indexing for divisor coefficients and
 * filtration families.
 */
class Fan {
public:
    Fan(std::size_t dim, std::vector<LatticeVector> rays, std::vector<Cone> max_cones);

    std::size_t dim() const { return dim_; }
    std::size_t num_rays() const { return rays_.size(); }
    const std::vector<LatticeVector>& rays() const { return rays_; }
    const LatticeVector& ray(std::size_t i) const { return rays_.at(i); }
    const std::vector<Cone>& max_cones() const { return max_cones_; }

    // All distinct d-dimensional faces of maximal cones, sorted.
    std::vector<Cone> cones_of_dim(std::size_t d) const;
    // Every cone including the zero cone, ordered by dimension.
    std::vector<Cone> all_cones() const;
    bool has_cone(const Cone& cone) const;

    // Dimension of the torus orbit O(cone), that is n - dim(cone).
    std::size_t orbit_dim(const Cone& cone) const;

    // |det| = 1 for full cones; gcd of maximal minors = 1 in general.
    bool is_smooth_cone(const Cone& cone) const;

    friend bool operator==(const Fan&, const Fan&) = default;

private:
    std::size_t dim_;
    std::vector<LatticeVector> rays_;
    std::vector<Cone> max_cones_;
};

struct FanValidation {
    bool smooth = false;
    bool complete = false;
    std::vector<std::string> messages;
};

FanValidation validate(const Fan& fan);

Fan projective_space(std::size_t n);
Fan product(const Fan& a, const Fan& b);
Fan hirzebruch(std::int64_t a);

}  // namespace toricsheaf
