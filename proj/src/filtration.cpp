#include "toricsheaf/filtration.hpp"

#include <algorithm>
#include <iterator>

namespace toricsheaf {

Filtration::Filtration(std::size_t rank, std::vector<Jump> jumps) : rank_(rank), jumps_(std::move(jumps))
{
    if (rank_ == 0) {
        throw FamilyError("filtration of the zero space");
    }
    if (jumps_.empty()) {
        throw FamilyError("filtration without jumps");
    }
    for (std::size_t j = 0; j < jumps_.size(); ++j) {
        const auto& s = jumps_[j].space;
        if (s.ambient_dim() != rank_) {
            throw FamilyError("jump subspace lives in Q^" + std::to_string(s.ambient_dim()) +
                              ", expected Q^" + std::to_string(rank_));
        }
        if (s.is_zero()) {
            throw FamilyError("jump to the zero subspace");
        }
        if (j > 0) {
            const auto& prev = jumps_[j - 1];
            if (jumps_[j].index <= prev.index) {
                throw FamilyError("jump indices must strictly increase");
            }
            if (s.dim() <= prev.space.dim() || !s.contains(prev.space)) {
                throw FamilyError("jump subspaces must strictly increase");
            }
        }
    }
    if (!jumps_.back().space.is_full()) {
        throw FamilyError("last jump must reach the whole space");
    }
}

Filtration Filtration::trivial(std::size_t rank, std::int64_t index)
{
    return Filtration(rank, {Jump{index, Subspace::full(rank)}});
}

Filtration Filtration::line_then_full(const Vector& v, std::int64_t line_index, std::int64_t full_index)
{
    const std::size_t r = v.size();
    if (r == 1) {
        return trivial(1, line_index);
    }
    return Filtration(r, {Jump{line_index, Subspace::line(v)}, Jump{full_index, Subspace::full(r)}});
}

Subspace Filtration::at(std::int64_t i) const
{
    auto it = std::upper_bound(jumps_.begin(), jumps_.end(), i,
                               [](std::int64_t x, const Jump& j) { return x < j.index; });
    if (it == jumps_.begin()) {
        return Subspace::zero(rank_);
    }
    return std::prev(it)->space;
}

std::int64_t iota(const Filtration& f)
{
    std::int64_t total = 0;
    std::size_t prev = 0;
    for (const auto& j : f.jumps()) {
        total += j.index * static_cast<std::int64_t>(j.space.dim() - prev);
        prev = j.space.dim();
    }
    return total;
}

FiltrationFamily::FiltrationFamily(std::size_t rank, std::vector<Filtration> filtrations)
    : rank_(rank), filtrations_(std::move(filtrations))
{
    for (const auto& f : filtrations_) {
        if (f.rank() != rank_) {
            throw FamilyError("filtration of rank " + std::to_string(f.rank()) +
                              " in a family of rank " + std::to_string(rank_));
        }
    }
}

const Filtration& FiltrationFamily::filtration(std::size_t ray) const
{
    if (ray >= filtrations_.size()) {
        throw std::out_of_range("family has no ray " + std::to_string(ray));
    }
    return filtrations_[ray];
}

FiltrationFamily FiltrationFamily::transformed(const Matrix& g) const
{
    if (g.size() != rank_ || toricsheaf::rank(g, rank_) != rank_) {
        throw std::invalid_argument("transformed: matrix is not invertible");
    }
    std::vector<Filtration> out;
    for (const auto& f : filtrations_) {
        std::vector<Jump> jumps;
        for (const auto& j : f.jumps()) {
            jumps.push_back(Jump{j.index, j.space.transformed(g)});
        }
        out.emplace_back(rank_, std::move(jumps));
    }
    return FiltrationFamily(rank_, std::move(out));
}

std::int64_t iota(const FiltrationFamily& e, std::size_t ray) { return iota(e.filtration(ray)); }

std::vector<std::int64_t> iota_vector(const FiltrationFamily& e)
{
    std::vector<std::int64_t> out;
    for (const auto& f : e.filtrations()) {
        out.push_back(iota(f));
    }
    return out;
}

LatticeVector first_chern(const FiltrationFamily& e)
{
    LatticeVector c1;
    for (const auto& f : e.filtrations()) {
        c1.push_back(-iota(f));
    }
    return c1;
}

Rational slope(const FiltrationFamily& e, const DegreeVector& degrees)
{
    if (degrees.size() != e.num_rays()) {
        throw DimensionMismatch("slope: " + std::to_string(degrees.size()) + " degrees for " +
                                std::to_string(e.num_rays()) + " rays");
    }
    Rational total = 0;
    for (std::size_t r = 0; r < e.num_rays(); ++r) {
        total += Rational(static_cast<long>(iota(e, r))) * Rational(static_cast<long>(degrees[r]));
    }
    return -total / Rational(static_cast<unsigned long>(e.rank()));
}

Rational slope(const FiltrationFamily& e, const PolarisedDivisor& l) { return slope(e, l.degrees()); }

InvariantRecord invariants(const FiltrationFamily& e, const DegreeVector& degrees)
{
    return InvariantRecord{iota_vector(e), first_chern(e), slope(e, degrees)};
}

FiltrationFamily tensor_line_bundle(const FiltrationFamily& e, const LatticeVector& twist)
{
    if (twist.size() != e.num_rays()) {
        throw DimensionMismatch("tensor_line_bundle: twist has wrong number of coefficients");
    }
    std::vector<Filtration> out;
    for (std::size_t r = 0; r < e.num_rays(); ++r) {
        std::vector<Jump> jumps = e.filtration(r).jumps();
        for (auto& j : jumps) {
            j.index -= twist[r];
        }
        out.emplace_back(e.rank(), std::move(jumps));
    }
    return FiltrationFamily(e.rank(), std::move(out));
}

std::int64_t induced_iota(const FiltrationFamily& e, const Subspace& f, std::size_t ray)
{
    std::int64_t total = 0;
    std::size_t prev = 0;
    for (const auto& j : e.filtration(ray).jumps()) {
        const std::size_t d = intersect(f, j.space).dim();
        total += j.index * static_cast<std::int64_t>(d - prev);
        prev = d;
    }
    return total;
}

FiltrationFamily induced_family(const FiltrationFamily& e, const Subspace& f)
{
    if (f.ambient_dim() != e.rank()) {
        throw DimensionMismatch("induced_family: subspace is not in Q^rank");
    }
    if (f.is_zero() || f.is_full()) {
        throw std::invalid_argument("induced_family: subspace must be nonzero and proper");
    }
    std::vector<Filtration> out;
    for (const auto& filt : e.filtrations()) {
        std::vector<Jump> jumps;
        for (const auto& j : filt.jumps()) {
            const Subspace meet = intersect(f, j.space);
            if (meet.dim() == (jumps.empty() ? 0 : jumps.back().space.dim())) {
                continue;
            }
            Matrix coords;
            for (const auto& b : meet.basis()) {
                coords.push_back(f.coordinates(b));
            }
            jumps.push_back(Jump{j.index, Subspace::span(coords, f.dim())});
        }
        out.emplace_back(f.dim(), std::move(jumps));
    }
    return FiltrationFamily(f.dim(), std::move(out));
}

std::size_t section_weights(const FiltrationFamily& e, const Fan& fan, const Cone& cone,
                            const LatticeVector& m)
{
    if (!fan.has_cone(cone)) {
        throw std::invalid_argument("section_weights: cone is not in the fan");
    }
    if (m.size() != fan.dim()) {
        throw DimensionMismatch("section_weights: character has wrong length");
    }
    Subspace v = Subspace::full(e.rank());
    for (auto r : cone.rays) {
        std::int64_t pairing = 0;
        for (std::size_t k = 0; k < m.size(); ++k) {
            pairing += m[k] * fan.ray(r)[k];
        }
        v = intersect(v, e.eval(r, pairing));
    }
    return v.dim();
}

}  // namespace toricsheaf
