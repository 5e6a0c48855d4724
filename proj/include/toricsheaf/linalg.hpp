#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "toricsheaf/errors.hpp"

namespace toricsheaf {

// GMP keeps mpq_class values canonical (reduced, positive denominator)
// after every arithmetic operation.
using Rational = mpq_class;
using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;  // row-major

using LatticeVector = std::vector<std::int64_t>;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

Vector to_rational(const LatticeVector& v);
Rational dot(const Vector& a, const Vector& b);

// Lexicographic order on vectors of equal length.
bool lex_less(const Vector& a, const Vector& b);

// Row-reduced echelon form of a stack of rows; zero rows are dropped.
struct EchelonForm {
    Matrix rows;
    std::vector<std::size_t> pivots;
};
EchelonForm reduced_row_echelon(Matrix rows, std::size_t ambient_dim);

std::size_t rank(const Matrix& rows, std::size_t ambient_dim);
Rational determinant(Matrix square);

// Unique solution x of A x = b; throws std::logic_error if A is singular.
Vector solve(const Matrix& a, const Vector& b);

/**
 * A linear subspace of Q^n stored as the reduced row-echelon basis of its span.
 *
 * Two Subspace objects compare equal exactly when they are the same set, so
 * subspaces can be used directly as keys in ordered containers.
 */
class Subspace {
public:
    Subspace() = default;

    static Subspace span(std::span<const Vector> vectors, std::size_t ambient_dim);
    static Subspace span(std::initializer_list<Vector> vectors, std::size_t ambient_dim);
    static Subspace zero(std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim);
    static Subspace line(const Vector& v);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return basis_.size(); }
    bool is_zero() const { return basis_.empty(); }
    bool is_full() const { return basis_.size() == ambient_dim_; }

    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;

    // Vectors x with <b, x> = 0 for every basis vector b.
    Subspace annihilator() const;

    // Coordinates of v (which must lie in this subspace) with respect to the
    // canonical basis. For a reduced echelon basis these are the pivot entries.
    Vector coordinates(const Vector& v) const;

    // Image under v -> g v where g is a square matrix of size ambient_dim.
    Subspace transformed(const Matrix& g) const;

    // Rows of `larger` that extend this subspace's basis to a basis of
    // `larger`, scanning the rows of `larger` first-to-last or last-to-first.
    Matrix complement_in(const Subspace& larger, bool latest_first = false) const;

    friend bool operator==(const Subspace& a, const Subspace& b);
    // Dimension first, then lexicographic on the canonical basis.
    friend bool operator<(const Subspace& a, const Subspace& b);

private:
    Subspace(std::size_t ambient_dim, EchelonForm form);

    std::size_t ambient_dim_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

}  // namespace toricsheaf
