#include "toricsheaf/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace toricsheaf {

namespace {

std::string format_cone(const Cone& c)
{
    std::string s = "{";
    for (std::size_t i = 0; i < c.rays.size(); ++i) {
        s += (i ? "," : "") + std::to_string(c.rays[i]);
    }
    return s + "}";
}

// Calls fn(subset) for every k-subset of items, in lexicographic order.
template <typename Fn>
void for_each_subset(const std::vector<std::size_t>& items, std::size_t k, Fn&& fn)
{
    if (k > items.size()) {
        return;
    }
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<std::size_t> subset(k);
    while (true) {
        for (std::size_t i = 0; i < k; ++i) {
            subset[i] = items[idx[i]];
        }
        fn(subset);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == items.size() - k + (i - 1)) {
            --i;
        }
        if (i == 0) {
            return;
        }
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

Matrix cone_matrix(const Fan& fan, const Cone& cone)
{
    Matrix rows;
    for (auto r : cone.rays) {
        rows.push_back(to_rational(fan.ray(r)));
    }
    return rows;
}

}  // namespace

Cone::Cone(std::vector<std::size_t> ray_indices) : rays(std::move(ray_indices))
{
    std::sort(rays.begin(), rays.end());
    if (std::adjacent_find(rays.begin(), rays.end()) != rays.end()) {
        throw FanError("cone lists a ray twice");
    }
}

bool Cone::contains(std::size_t ray) const
{
    return std::binary_search(rays.begin(), rays.end(), ray);
}

bool Cone::is_face_of(const Cone& other) const
{
    return std::includes(other.rays.begin(), other.rays.end(), rays.begin(), rays.end());
}

Fan::Fan(std::size_t dim, std::vector<LatticeVector> rays, std::vector<Cone> max_cones)
    : dim_(dim), rays_(std::move(rays)), max_cones_(std::move(max_cones))
{
    if (dim_ == 0) {
        throw FanError("fan dimension must be positive");
    }
    for (std::size_t i = 0; i < rays_.size(); ++i) {
        const auto& u = rays_[i];
        if (u.size() != dim_) {
            throw FanError("ray " + std::to_string(i) + " has length " + std::to_string(u.size()) +
                           ", expected " + std::to_string(dim_));
        }
        std::int64_t g = 0;
        for (auto x : u) {
            g = std::gcd(g, x);
        }
        if (g != 1) {
            throw FanError("ray " + std::to_string(i) + " is not primitive");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (rays_[j] == u) {
                throw FanError("rays " + std::to_string(j) + " and " + std::to_string(i) +
                               " coincide");
            }
        }
    }
    for (const auto& c : max_cones_) {
        if (c.rays.empty()) {
            throw FanError("maximal cone without rays");
        }
        if (c.rays.back() >= rays_.size()) {
            throw FanError("cone " + format_cone(c) + " refers to a missing ray");
        }
        if (rank(cone_matrix(*this, c), dim_) != c.dim()) {
            throw FanError("cone " + format_cone(c) + " has linearly dependent rays");
        }
    }
    std::sort(max_cones_.begin(), max_cones_.end());
    if (std::adjacent_find(max_cones_.begin(), max_cones_.end()) != max_cones_.end()) {
        throw FanError("maximal cone listed twice");
    }
}

std::vector<Cone> Fan::cones_of_dim(std::size_t d) const
{
    if (d > dim_) {
        throw std::out_of_range("cones_of_dim: dimension " + std::to_string(d) +
                                " exceeds fan dimension " + std::to_string(dim_));
    }
    std::set<Cone> faces;
    for (const auto& c : max_cones_) {
        for_each_subset(c.rays, d, [&](const std::vector<std::size_t>& s) { faces.insert(Cone(s)); });
    }
    return {faces.begin(), faces.end()};
}

std::vector<Cone> Fan::all_cones() const
{
    std::vector<Cone> out;
    for (std::size_t d = 0; d <= dim_; ++d) {
        auto level = cones_of_dim(d);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

bool Fan::has_cone(const Cone& cone) const
{
    return std::any_of(max_cones_.begin(), max_cones_.end(),
                       [&](const Cone& m) { return cone.is_face_of(m); });
}

std::size_t Fan::orbit_dim(const Cone& cone) const
{
    if (!has_cone(cone)) {
        throw std::invalid_argument("orbit_dim: " + format_cone(cone) + " is not a cone of the fan");
    }
    return dim_ - cone.dim();
}

bool Fan::is_smooth_cone(const Cone& cone) const
{
    const Matrix gens = cone_matrix(*this, cone);
    const std::size_t k = gens.size();
    if (k == 0) {
        return true;
    }
    std::vector<std::size_t> columns(dim_);
    std::iota(columns.begin(), columns.end(), 0);
    mpz_class g = 0;
    for_each_subset(columns, k, [&](const std::vector<std::size_t>& cols) {
        Matrix minor(k, Vector(k));
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                minor[i][j] = gens[i][cols[j]];
            }
        }
        const Rational det = determinant(std::move(minor));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_num_mpz_t());
    });
    return g == 1;
}

FanValidation validate(const Fan& fan)
{
    FanValidation report;
    const std::size_t n = fan.dim();

    report.smooth = true;
    for (const auto& c : fan.max_cones()) {
        if (!fan.is_smooth_cone(c)) {
            report.smooth = false;
            report.messages.push_back("cone " + format_cone(c) +
                                      " is not generated by part of a lattice basis");
        }
    }

    bool pure = !fan.max_cones().empty();
    for (const auto& c : fan.max_cones()) {
        if (c.dim() != n) {
            pure = false;
            report.messages.push_back("maximal cone " + format_cone(c) + " is not full-dimensional");
        }
    }
    if (fan.max_cones().empty()) {
        report.messages.push_back("fan has no maximal cones");
    }
    if (!pure) {
        return report;
    }

    const auto& cones = fan.max_cones();
    std::map<Cone, std::vector<std::size_t>> walls;
    for (std::size_t k = 0; k < cones.size(); ++k) {
        for (std::size_t drop = 0; drop < n; ++drop) {
            auto rays = cones[k].rays;
            rays.erase(rays.begin() + static_cast<std::ptrdiff_t>(drop));
            walls[Cone(rays)].push_back(k);
        }
    }

    bool two_sided = true;
    std::vector<std::vector<std::size_t>> adjacent(cones.size());
    for (const auto& [wall, owners] : walls) {
        if (owners.size() != 2) {
            two_sided = false;
            report.messages.push_back("wall " + format_cone(wall) + " lies in " +
                                      std::to_string(owners.size()) + " maximal cone(s)");
            continue;
        }
        adjacent[owners[0]].push_back(owners[1]);
        adjacent[owners[1]].push_back(owners[0]);

        // The two cones must lie on opposite sides of the wall's hyperplane.
        const Subspace normal = Subspace::span(cone_matrix(fan, wall), n).annihilator();
        auto side = [&](std::size_t owner) {
            for (auto r : cones[owner].rays) {
                if (!wall.contains(r)) {
                    return sgn(dot(normal.basis().front(), to_rational(fan.ray(r))));
                }
            }
            return 0;
        };
        if (side(owners[0]) * side(owners[1]) >= 0) {
            two_sided = false;
            report.messages.push_back("cones meeting along wall " + format_cone(wall) +
                                      " lie on the same side of it");
        }
    }

    std::vector<bool> seen(cones.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const auto k = stack.back();
        stack.pop_back();
        for (auto j : adjacent[k]) {
            if (!seen[j]) {
                seen[j] = true;
                ++reached;
                stack.push_back(j);
            }
        }
    }
    const bool connected = reached == cones.size();
    if (!connected) {
        report.messages.push_back("maximal cones do not form a connected wall graph");
    }

    // Local conditions give a covering of N_R; an interior point of the
    // first cone lying in no other cone forces it to be one-sheeted.
    bool single_cover = true;
    if (two_sided && connected) {
        const Matrix first = cone_matrix(fan, cones[0]);
        Vector probe(n, Rational(0));
        for (const auto& u : first) {
            for (std::size_t i = 0; i < n; ++i) {
                probe[i] += u[i];
            }
        }
        for (std::size_t k = 1; k < cones.size(); ++k) {
            const Matrix gens = cone_matrix(fan, cones[k]);
            Matrix transpose(n, Vector(n));
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    transpose[i][j] = gens[j][i];
                }
            }
            const Vector coeffs = solve(transpose, probe);
            if (std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& x) { return x >= 0; })) {
                single_cover = false;
                report.messages.push_back("maximal cones " + format_cone(cones[0]) + " and " +
                                          format_cone(cones[k]) + " overlap");
                break;
            }
        }
    }

    report.complete = two_sided && connected && single_cover;
    return report;
}

Fan projective_space(std::size_t n)
{
    if (n == 0) {
        throw std::invalid_argument("projective_space: n must be at least 1");
    }
    std::vector<LatticeVector> rays;
    for (std::size_t i = 0; i < n; ++i) {
        LatticeVector e(n, 0);
        e[i] = 1;
        rays.push_back(std::move(e));
    }
    rays.emplace_back(n, -1);
    std::vector<std::size_t> all(n + 1);
    std::iota(all.begin(), all.end(), 0);
    std::vector<Cone> cones;
    for_each_subset(all, n, [&](const std::vector<std::size_t>& s) { cones.emplace_back(s); });
    return Fan(n, std::move(rays), std::move(cones));
}

Fan product(const Fan& a, const Fan& b)
{
    const std::size_t n = a.dim() + b.dim();
    std::vector<LatticeVector> rays;
    for (const auto& u : a.rays()) {
        LatticeVector v(n, 0);
        std::copy(u.begin(), u.end(), v.begin());
        rays.push_back(std::move(v));
    }
    for (const auto& u : b.rays()) {
        LatticeVector v(n, 0);
        std::copy(u.begin(), u.end(), v.begin() + static_cast<std::ptrdiff_t>(a.dim()));
        rays.push_back(std::move(v));
    }
    std::vector<Cone> cones;
    for (const auto& ca : a.max_cones()) {
        for (const auto& cb : b.max_cones()) {
            auto r = ca.rays;
            for (auto x : cb.rays) {
                r.push_back(x + a.num_rays());
            }
            cones.emplace_back(std::move(r));
        }
    }
    return Fan(n, std::move(rays), std::move(cones));
}

Fan hirzebruch(std::int64_t a)
{
    if (a < 0) {
        throw std::invalid_argument("hirzebruch: parameter must be nonnegative");
    }
    return Fan(2, {{1, 0}, {0, 1}, {-1, a}, {0, -1}},
               {Cone({0, 1}), Cone({1, 2}), Cone({2, 3}), Cone({0, 3})});
}

}  // namespace toricsheaf
