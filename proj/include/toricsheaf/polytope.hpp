#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "toricsheaf/fan.hpp"

namespace toricsheaf {

// Intersection numbers deg_L(D_rho) = L^{n-1} . D_rho, one per ray.
struct DegreeVector {
    std::vector<std::int64_t> deg;

    std::size_t size() const { return deg.size(); }
    std::int64_t operator[](std::size_t ray) const { return deg.at(ray); }
    friend bool operator==(const DegreeVector&, const DegreeVector&) = default;
};

// Vertex v_sigma of the moment polytope for every maximal cone sigma, solving
// <v_sigma, u_rho> = -a_rho for the rays of sigma.
std::map<Cone, Vector> vertices(const Fan& fan, const LatticeVector& coeffs);

// Strict convexity of the support function across every wall.
bool is_ample(const Fan& fan, const LatticeVector& coeffs);

// Normalized (n-1)-dimensional lattice volume of the facet of P_L dual to
// `ray`. Throws NotAmpleError on non-ample data.
std::int64_t facet_degree(const Fan& fan, const LatticeVector& coeffs, std::size_t ray);

/**
 * An ample divisor L = sum a_rho D_rho on a smooth complete fan.
 *
 * Construction checks ampleness and computes the degree vector once; every
 * slope evaluation downstream reads the cached degrees.
 */
class PolarisedDivisor {
public:
    PolarisedDivisor(Fan fan, LatticeVector coeffs);

    const Fan& fan() const { return fan_; }
    const LatticeVector& coeffs() const { return coeffs_; }
    const DegreeVector& degrees() const { return degrees_; }

    PolarisedDivisor scaled(std::int64_t k) const;

private:
    Fan fan_;
    LatticeVector coeffs_;
    DegreeVector degrees_;
};

}  // namespace toricsheaf
