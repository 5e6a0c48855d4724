#include "toricsheaf/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace toricsheaf {

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    auto is_integer = [](std::string_view part) {
        if (!part.empty() && (part.front() == '-' || part.front() == '+')) {
            part.remove_prefix(1);
        }
        return !part.empty() &&
               std::all_of(part.begin(), part.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    const auto slash = s.find('/');
    const std::string num = s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!is_integer(num) || !is_integer(den)) {
        throw ParseError("invalid rational literal '" + s + "'");
    }
    mpz_class p(num.front() == '+' ? num.substr(1) : num, 10);
    mpz_class q(den.front() == '+' ? den.substr(1) : den, 10);
    if (q == 0) {
        throw ParseError("zero denominator in '" + s + "'");
    }
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Vector to_rational(const LatticeVector& v)
{
    Vector out;
    out.reserve(v.size());
    for (auto x : v) {
        out.emplace_back(static_cast<long>(x));
    }
    return out;
}

Rational dot(const Vector& a, const Vector& b)
{
    if (a.size() != b.size()) {
        throw DimensionMismatch("dot: vectors of length " + std::to_string(a.size()) + " and " +
                                std::to_string(b.size()));
    }
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

bool lex_less(const Vector& a, const Vector& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

EchelonForm reduced_row_echelon(Matrix rows, std::size_t ambient_dim)
{
    for (const auto& row : rows) {
        if (row.size() != ambient_dim) {
            throw DimensionMismatch("vector of length " + std::to_string(row.size()) +
                                    " in ambient dimension " + std::to_string(ambient_dim));
        }
    }
    EchelonForm form;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < ambient_dim && lead < rows.size(); ++col) {
        std::size_t pivot = lead;
        while (pivot < rows.size() && rows[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[lead], rows[pivot]);
        const Rational inv = 1 / rows[lead][col];
        for (auto& x : rows[lead]) {
            x *= inv;
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == lead || rows[r][col] == 0) {
                continue;
            }
            const Rational f = rows[r][col];
            for (std::size_t c = col; c < ambient_dim; ++c) {
                rows[r][c] -= f * rows[lead][c];
            }
        }
        form.pivots.push_back(col);
        ++lead;
    }
    rows.resize(lead);
    form.rows = std::move(rows);
    return form;
}

std::size_t rank(const Matrix& rows, std::size_t ambient_dim)
{
    return reduced_row_echelon(rows, ambient_dim).rows.size();
}

Rational determinant(Matrix m)
{
    const std::size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) {
            throw DimensionMismatch("determinant of a non-square matrix");
        }
    }
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == n) {
            return 0;
        }
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) {
                continue;
            }
            const Rational f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) {
                m[r][c] -= f * m[col][c];
            }
        }
    }
    return det;
}

Vector solve(const Matrix& a, const Vector& b)
{
    const std::size_t n = a.size();
    if (b.size() != n) {
        throw DimensionMismatch("solve: right-hand side has wrong length");
    }
    Matrix aug;
    aug.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) {
            throw DimensionMismatch("solve: matrix is not square");
        }
        Vector row = a[i];
        row.push_back(b[i]);
        aug.push_back(std::move(row));
    }
    auto form = reduced_row_echelon(std::move(aug), n + 1);
    if (form.rows.size() != n || form.pivots.back() != n - 1) {
        throw std::logic_error("solve: singular linear system");
    }
    Vector x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = form.rows[i][n];
    }
    return x;
}

// --- Subspace ---------------------------------------------------------------

Subspace::Subspace(std::size_t ambient_dim, EchelonForm form)
    : ambient_dim_(ambient_dim), basis_(std::move(form.rows)), pivots_(std::move(form.pivots))
{
}

Subspace Subspace::span(std::span<const Vector> vectors, std::size_t ambient_dim)
{
    return Subspace(ambient_dim,
                    reduced_row_echelon(Matrix(vectors.begin(), vectors.end()), ambient_dim));
}

Subspace Subspace::span(std::initializer_list<Vector> vectors, std::size_t ambient_dim)
{
    return span(std::span<const Vector>(vectors.begin(), vectors.size()), ambient_dim);
}

Subspace Subspace::zero(std::size_t ambient_dim) { return Subspace(ambient_dim, EchelonForm{}); }

Subspace Subspace::full(std::size_t ambient_dim)
{
    EchelonForm form;
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        Vector e(ambient_dim, Rational(0));
        e[i] = 1;
        form.rows.push_back(std::move(e));
        form.pivots.push_back(i);
    }
    return Subspace(ambient_dim, std::move(form));
}

Subspace Subspace::line(const Vector& v) { return span({v}, v.size()); }

bool Subspace::contains(const Vector& v) const
{
    if (v.size() != ambient_dim_) {
        throw DimensionMismatch("contains: vector of length " + std::to_string(v.size()) +
                                " in ambient dimension " + std::to_string(ambient_dim_));
    }
    Vector rest = v;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        const Rational f = rest[pivots_[k]];
        if (f == 0) {
            continue;
        }
        for (std::size_t c = 0; c < ambient_dim_; ++c) {
            rest[c] -= f * basis_[k][c];
        }
    }
    return std::all_of(rest.begin(), rest.end(), [](const Rational& x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const
{
    if (other.ambient_dim_ != ambient_dim_) {
        throw DimensionMismatch("contains: subspaces of different ambient dimension");
    }
    return std::all_of(other.basis_.begin(), other.basis_.end(),
                       [this](const Vector& v) { return contains(v); });
}

Subspace Subspace::annihilator() const
{
    std::vector<bool> is_pivot(ambient_dim_, false);
    for (auto p : pivots_) {
        is_pivot[p] = true;
    }
    Matrix kernel;
    for (std::size_t f = 0; f < ambient_dim_; ++f) {
        if (is_pivot[f]) {
            continue;
        }
        Vector x(ambient_dim_, Rational(0));
        x[f] = 1;
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            x[pivots_[k]] = -basis_[k][f];
        }
        kernel.push_back(std::move(x));
    }
    return span(kernel, ambient_dim_);
}

Vector Subspace::coordinates(const Vector& v) const
{
    if (!contains(v)) {
        throw std::invalid_argument("coordinates: vector does not lie in the subspace");
    }
    Vector c;
    c.reserve(pivots_.size());
    for (auto p : pivots_) {
        c.push_back(v[p]);
    }
    return c;
}

Subspace Subspace::transformed(const Matrix& g) const
{
    if (g.size() != ambient_dim_) {
        throw DimensionMismatch("transformed: matrix size does not match ambient dimension");
    }
    Matrix images;
    images.reserve(basis_.size());
    for (const auto& b : basis_) {
        Vector w(ambient_dim_, Rational(0));
        for (std::size_t i = 0; i < ambient_dim_; ++i) {
            w[i] = dot(g[i], b);
        }
        images.push_back(std::move(w));
    }
    return span(images, ambient_dim_);
}

Matrix Subspace::complement_in(const Subspace& larger, bool latest_first) const
{
    if (!larger.contains(*this)) {
        throw std::invalid_argument("complement_in: subspace is not contained in target");
    }
    Matrix current = basis_;
    Matrix extra;
    std::size_t dim = basis_.size();
    auto try_row = [&](const Vector& row) {
        if (dim == larger.dim()) {
            return;
        }
        current.push_back(row);
        if (rank(current, ambient_dim_) > dim) {
            ++dim;
            extra.push_back(row);
        } else {
            current.pop_back();
        }
    };
    if (latest_first) {
        for (auto it = larger.basis_.rbegin(); it != larger.basis_.rend(); ++it) {
            try_row(*it);
        }
    } else {
        for (const auto& row : larger.basis_) {
            try_row(row);
        }
    }
    return extra;
}

bool operator==(const Subspace& a, const Subspace& b)
{
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
}

bool operator<(const Subspace& a, const Subspace& b)
{
    if (a.ambient_dim_ != b.ambient_dim_) {
        return a.ambient_dim_ < b.ambient_dim_;
    }
    if (a.dim() != b.dim()) {
        return a.dim() < b.dim();
    }
    return std::lexicographical_compare(a.basis_.begin(), a.basis_.end(), b.basis_.begin(),
                                        b.basis_.end(), lex_less);
}

Subspace sum(const Subspace& a, const Subspace& b)
{
    if (a.ambient_dim() != b.ambient_dim()) {
        throw DimensionMismatch("sum: subspaces of different ambient dimension");
    }
    Matrix rows = a.basis();
    rows.insert(rows.end(), b.basis().begin(), b.basis().end());
    return Subspace::span(rows, a.ambient_dim());
}

Subspace intersect(const Subspace& a, const Subspace& b)
{
    if (a.ambient_dim() != b.ambient_dim()) {
        throw DimensionMismatch("intersect: subspaces of different ambient dimension");
    }
    if (a.contains(b)) {
        return b;
    }
    if (b.contains(a)) {
        return a;
    }
    return sum(a.annihilator(), b.annihilator()).annihilator();
}

}  // namespace toricsheaf
