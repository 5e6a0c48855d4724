#pragma once

#include <cstdint>
#include <vector>

#include "toricsheaf/fan.hpp"
#include "toricsheaf/linalg.hpp"
#include "toricsheaf/polytope.hpp"

namespace toricsheaf {

struct Jump {
    std::int64_t index;
    Subspace space;

    friend bool operator==(const Jump&, const Jump&) = default;
};

/**
 * A bounded increasing filtration of Q^r stored as its jump list
 * [(i_1, S_1), ..., (i_k, S_k)]: E(i) is the last S_j with i_j <= i and zero
 * below i_1. Indices and subspaces strictly increase and S_k is the whole space.
 */
class Filtration {
public:
    Filtration(std::size_t rank, std::vector<Jump> jumps);

    // The filtration that jumps straight from 0 to Q^r at `index`.
    static Filtration trivial(std::size_t rank, std::int64_t index = 0);
    // 0 below `line_index`, C.v up to `full_index`, then Q^r.
    static Filtration line_then_full(const Vector& v, std::int64_t line_index,
                                     std::int64_t full_index);

    std::size_t rank() const { return rank_; }
    const std::vector<Jump>& jumps() const { return jumps_; }
    std::int64_t first_index() const { return jumps_.front().index; }
    std::int64_t last_index() const { return jumps_.back().index; }

    Subspace at(std::int64_t i) const;

    friend bool operator==(const Filtration&, const Filtration&) = default;

private:
    std::size_t rank_;
    std::vector<Jump> jumps_;
};

// Sum of i * (dim F(i) - dim F(i-1)).
std::int64_t iota(const Filtration& f);

/**
 * Klyachko's family of filtrations (E, E^rho(.)) for one equivariant
 * reflexive sheaf: a filtration of E = Q^r for every ray of the fan.
 */
class FiltrationFamily {
public:
    FiltrationFamily() = default;
    FiltrationFamily(std::size_t rank, std::vector<Filtration> filtrations);

    std::size_t rank() const { return rank_; }
    std::size_t num_rays() const { return filtrations_.size(); }
    const std::vector<Filtration>& filtrations() const { return filtrations_; }
    const Filtration& filtration(std::size_t ray) const;

    Subspace eval(std::size_t ray, std::int64_t i) const { return filtration(ray).at(i); }

    FiltrationFamily transformed(const Matrix& g) const;

    friend bool operator==(const FiltrationFamily&, const FiltrationFamily&) = default;

private:
    std::size_t rank_ = 0;
    std::vector<Filtration> filtrations_;
};

std::int64_t iota(const FiltrationFamily& e, std::size_t ray);
std::vector<std::int64_t> iota_vector(const FiltrationFamily& e);

// Coefficients of c_1(E) = -sum iota_rho(E) D_rho.
LatticeVector first_chern(const FiltrationFamily& e);

// mu_L(E) = -(1/rank) sum iota_rho(E) deg_L(D_rho).
Rational slope(const FiltrationFamily& e, const DegreeVector& degrees);
Rational slope(const FiltrationFamily& e, const PolarisedDivisor& l);

struct InvariantRecord {
    std::vector<std::int64_t> iota;
    LatticeVector c1;
    Rational slope;
};
InvariantRecord invariants(const FiltrationFamily& e, const DegreeVector& degrees);

// E tensor O(sum n_rho D_rho): every jump index on ray rho moves to i - n_rho.
FiltrationFamily tensor_line_bundle(const FiltrationFamily& e, const LatticeVector& twist);

// iota_rho of the filtration F cap E^rho(.), computed from dimensions only.
std::int64_t induced_iota(const FiltrationFamily& e, const Subspace& f, std::size_t ray);

// The family (F, F cap E^rho(i)) written in the coordinates of F's canonical
// basis. F must be nonzero and proper.
FiltrationFamily induced_family(const FiltrationFamily& e, const Subspace& f);

// dim of the intersection of E^rho(<m, u_rho>) over the rays of `cone`: the
// multiplicity of the character m in the sections over U_cone.
std::size_t section_weights(const FiltrationFamily& e, const Fan& fan, const Cone& cone,
                            const LatticeVector& m);

}  // namespace toricsheaf
