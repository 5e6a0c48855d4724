#include "toricsheaf/polytope.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <tuple>
#include <utility>

namespace toricsheaf {

namespace {

void require_ray_coefficients(const Fan& fan, const LatticeVector& coeffs)
{
    if (coeffs.size() != fan.num_rays()) {
        throw DimensionMismatch("divisor has " + std::to_string(coeffs.size()) +
                                " coefficients for " + std::to_string(fan.num_rays()) + " rays");
    }
}

// Lattice vector y with <y, u> = 1 for primitive u.
LatticeVector unit_pairing_partner(const LatticeVector& u)
{
    // Invariant: <coef, u[0..i]> = g.
    std::int64_t g = 0;
    LatticeVector coef(u.size(), 0);
    for (std::size_t i = 0; i < u.size(); ++i) {
        // Extended Euclid on (g, u[i]).
        std::int64_t old_r = g, r = u[i];
        std::int64_t old_s = 1, s = 0;
        std::int64_t old_t = 0, t = 1;
        while (r != 0) {
            const std::int64_t q = old_r / r;
            std::tie(old_r, r) = std::pair{r, old_r - q * r};
            std::tie(old_s, s) = std::pair{s, old_s - q * s};
            std::tie(old_t, t) = std::pair{t, old_t - q * t};
        }
        if (old_r < 0) {
            old_r = -old_r;
            old_s = -old_s;
            old_t = -old_t;
        }
        for (std::size_t j = 0; j < i; ++j) {
            coef[j] *= old_s;
        }
        coef[i] = old_t;
        g = old_r;
    }
    if (g != 1) {
        throw std::logic_error("unit_pairing_partner: vector is not primitive");
    }
    return coef;
}

// Pulling triangulation of the face of P_L dual to `face`: cone from the
// lexicographically smallest vertex over the subfaces that avoid it.
void triangulate_face(const Fan& fan, const std::map<Cone, Vector>& verts, const Cone& face,
                      std::vector<const Vector*>& prefix, std::vector<std::vector<const Vector*>>& out)
{
    const Cone* apex_cone = nullptr;
    const Vector* apex = nullptr;
    for (const auto& [sigma, v] : verts) {
        if (face.is_face_of(sigma) && (apex == nullptr || lex_less(v, *apex))) {
            apex = &v;
            apex_cone = &sigma;
        }
    }
    prefix.push_back(apex);
    if (face.dim() == fan.dim()) {
        out.push_back(prefix);
    } else {
        for (std::size_t r = 0; r < fan.num_rays(); ++r) {
            if (face.contains(r) || apex_cone->contains(r)) {
                continue;
            }
            auto rays = face.rays;
            rays.push_back(r);
            const Cone sub(std::move(rays));
            if (fan.has_cone(sub)) {
                triangulate_face(fan, verts, sub, prefix, out);
            }
        }
    }
    prefix.pop_back();
}

}  // namespace

std::map<Cone, Vector> vertices(const Fan& fan, const LatticeVector& coeffs)
{
    require_ray_coefficients(fan, coeffs);
    std::map<Cone, Vector> out;
    for (const auto& sigma : fan.max_cones()) {
        if (sigma.dim() != fan.dim()) {
            throw PreconditionError("vertices: fan is not pure full-dimensional");
        }
        Matrix a;
        Vector b;
        for (auto r : sigma.rays) {
            a.push_back(to_rational(fan.ray(r)));
            b.emplace_back(static_cast<long>(-coeffs[r]));
        }
        out.emplace(sigma, solve(a, b));
    }
    return out;
}

bool is_ample(const Fan& fan, const LatticeVector& coeffs)
{
    const auto verts = vertices(fan, coeffs);
    const auto& cones = fan.max_cones();
    for (const auto& sigma : cones) {
        const Vector& v = verts.at(sigma);
        for (const auto& other : cones) {
            std::vector<std::size_t> outside;
            for (auto r : other.rays) {
                if (!sigma.contains(r)) {
                    outside.push_back(r);
                }
            }
            if (outside.size() != 1) {
                continue;  // not adjacent along a wall
            }
            const auto r = outside.front();
            if (dot(v, to_rational(fan.ray(r))) <= Rational(static_cast<long>(-coeffs[r]))) {
                return false;
            }
        }
    }
    return true;
}

std::int64_t facet_degree(const Fan& fan, const LatticeVector& coeffs, std::size_t ray)
{
    if (ray >= fan.num_rays()) {
        throw std::out_of_range("facet_degree: no ray " + std::to_string(ray));
    }
    if (!is_ample(fan, coeffs)) {
        throw NotAmpleError("facet_degree: divisor is not ample");
    }
    const auto verts = vertices(fan, coeffs);
    std::vector<const Vector*> prefix;
    std::vector<std::vector<const Vector*>> simplices;
    triangulate_face(fan, verts, Cone({ray}), prefix, simplices);

    const std::size_t n = fan.dim();
    const Vector y = to_rational(unit_pairing_partner(fan.ray(ray)));
    Rational total = 0;
    for (const auto& simplex : simplices) {
        Matrix m;
        for (std::size_t i = 1; i < simplex.size(); ++i) {
            Vector edge(n);
            for (std::size_t c = 0; c < n; ++c) {
                edge[c] = (*simplex[i])[c] - (*simplex[0])[c];
            }
            m.push_back(std::move(edge));
        }
        m.push_back(y);
        total += abs(determinant(std::move(m)));
    }
    if (total.get_den() != 1 || !total.get_num().fits_slong_p()) {
        throw std::logic_error("facet_degree: non-integral facet volume");
    }
    return total.get_num().get_si();
}

PolarisedDivisor::PolarisedDivisor(Fan fan, LatticeVector coeffs)
    : fan_(std::move(fan)), coeffs_(std::move(coeffs))
{
    require_ray_coefficients(fan_, coeffs_);
    const auto report = validate(fan_);
    if (!report.smooth || !report.complete) {
        throw PreconditionError("polarised divisor requires a smooth complete fan");
    }
    if (!is_ample(fan_, coeffs_)) {
        throw NotAmpleError("divisor is not ample");
    }
    for (std::size_t r = 0; r < fan_.num_rays(); ++r) {
        degrees_.deg.push_back(facet_degree(fan_, coeffs_, r));
    }
}

PolarisedDivisor PolarisedDivisor::scaled(std::int64_t k) const
{
    if (k < 1) {
        throw std::invalid_argument("scaled: factor must be positive");
    }
    LatticeVector c = coeffs_;
    for (auto& x : c) {
        x *= k;
    }
    return PolarisedDivisor(fan_, std::move(c));
}

}  // namespace toricsheaf
