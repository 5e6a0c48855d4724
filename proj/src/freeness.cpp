#include "toricsheaf/freeness.hpp"

#include <algorithm>
#include <map>

#include "toricsheaf/parallel.hpp"

namespace toricsheaf {

Subspace joint_space(std::span<const Filtration> filtrations, const Multiweight& weight)
{
    if (filtrations.empty()) {
        throw std::invalid_argument("joint_space: no filtrations given");
    }
    if (weight.size() != filtrations.size()) {
        throw DimensionMismatch("joint_space: multiweight length differs from number of filtrations");
    }
    Subspace v = filtrations[0].at(weight[0]);
    for (std::size_t j = 1; j < filtrations.size() && !v.is_zero(); ++j) {
        v = intersect(v, filtrations[j].at(weight[j]));
    }
    return v;
}

namespace {

std::vector<Filtration> cone_filtrations(const FiltrationFamily& e, const Cone& cone)
{
    std::vector<Filtration> out;
    for (auto r : cone.rays) {
        out.push_back(e.filtration(r));
    }
    return out;
}

Subspace span_of_pieces(const std::vector<const SplittingPiece*>& pieces, std::size_t rank)
{
    Matrix rows;
    for (const auto* p : pieces) {
        rows.insert(rows.end(), p->space.basis().begin(), p->space.basis().end());
    }
    return Subspace::span(rows, rank);
}

}  // namespace

Subspace joint_space(const FiltrationFamily& e, const Cone& cone, const Multiweight& weight)
{
    if (cone.rays.empty()) {
        return Subspace::full(e.rank());
    }
    return joint_space(cone_filtrations(e, cone), weight);
}

bool verify_splitting(std::span<const Filtration> filtrations, std::size_t rank,
                      const std::vector<SplittingPiece>& pieces)
{
    std::vector<const SplittingPiece*> all;
    std::size_t total = 0;
    for (const auto& p : pieces) {
        if (p.weight.size() != filtrations.size() || p.space.ambient_dim() != rank || p.space.is_zero()) {
            return false;
        }
        total += p.space.dim();
        all.push_back(&p);
    }
    if (total != rank || !span_of_pieces(all, rank).is_full()) {
        return false;
    }
    for (std::size_t k = 0; k < filtrations.size(); ++k) {
        std::vector<std::int64_t> checkpoints;
        for (const auto& j : filtrations[k].jumps()) {
            checkpoints.push_back(j.index);
        }
        for (const auto& p : pieces) {
            checkpoints.push_back(p.weight[k]);
        }
        for (auto t : checkpoints) {
            std::vector<const SplittingPiece*> below;
            for (const auto& p : pieces) {
                if (p.weight[k] <= t) {
                    below.push_back(&p);
                }
            }
            if (span_of_pieces(below, rank) != filtrations[k].at(t)) {
                return false;
            }
        }
    }
    return true;
}

SplittingCertificate check_compatibility(std::span<const Filtration> filtrations, std::size_t rank)
{
    SplittingCertificate cert;
    for (const auto& f : filtrations) {
        if (f.rank() != rank) {
            throw DimensionMismatch("check_compatibility: filtrations of different rank");
        }
    }
    const std::size_t k = filtrations.size();
    if (k == 0) {
        cert.compatible = true;
        cert.graded_dimension = rank;
        cert.pieces.push_back(SplittingPiece{{}, Subspace::full(rank)});
        cert.strategy = ComplementStrategy::earliest_pivot;
        return cert;
    }

    // Grid of jump positions, flattened in mixed radix with the last
    // coordinate fastest; predecessors always precede in this order.
    std::vector<std::size_t> radix(k);
    std::size_t cells = 1;
    for (std::size_t j = 0; j < k; ++j) {
        radix[j] = filtrations[j].jumps().size();
        cells *= radix[j];
    }
    std::vector<std::size_t> stride(k);
    for (std::size_t j = k; j-- > 0;) {
        stride[j] = (j + 1 == k) ? 1 : stride[j + 1] * radix[j + 1];
    }
    auto position = [&](std::size_t cell) {
        std::vector<std::size_t> pos(k);
        for (std::size_t j = 0; j < k; ++j) {
            pos[j] = (cell / stride[j]) % radix[j];
        }
        return pos;
    };

    std::vector<Subspace> joint(cells);
    std::vector<Subspace> below(cells);
    std::vector<Multiweight> weights(cells);
    for (std::size_t cell = 0; cell < cells; ++cell) {
        const auto pos = position(cell);
        Multiweight w(k);
        Subspace v = Subspace::full(rank);
        for (std::size_t j = 0; j < k; ++j) {
            const auto& jump = filtrations[j].jumps()[pos[j]];
            w[j] = jump.index;
            v = intersect(v, jump.space);
        }
        Subspace b = Subspace::zero(rank);
        for (std::size_t j = 0; j < k; ++j) {
            if (pos[j] > 0) {
                b = sum(b, joint[cell - stride[j]]);
            }
        }
        cert.graded_dimension += v.dim() - b.dim();
        joint[cell] = std::move(v);
        below[cell] = std::move(b);
        weights[cell] = std::move(w);
    }
    if (cert.graded_dimension != rank) {
        return cert;
    }

    for (auto strategy : {ComplementStrategy::earliest_pivot, ComplementStrategy::latest_pivot}) {
        std::vector<SplittingPiece> pieces;
        for (std::size_t cell = 0; cell < cells; ++cell) {
            if (joint[cell].dim() == below[cell].dim()) {
                continue;
            }
            const Matrix extra =
                below[cell].complement_in(joint[cell], strategy == ComplementStrategy::latest_pivot);
            pieces.push_back(SplittingPiece{weights[cell], Subspace::span(extra, rank)});
        }
        if (verify_splitting(filtrations, rank, pieces)) {
            cert.compatible = true;
            cert.pieces = std::move(pieces);
            cert.strategy = strategy;
            return cert;
        }
    }
    cert.verified = false;
    return cert;
}

SplittingCertificate is_compatible(const FiltrationFamily& e, const Fan& fan, const Cone& cone)
{
    if (e.num_rays() != fan.num_rays()) {
        throw DimensionMismatch("family has " + std::to_string(e.num_rays()) + " filtrations for " +
                                std::to_string(fan.num_rays()) + " rays");
    }
    if (!fan.has_cone(cone)) {
        throw std::invalid_argument("is_compatible: cone is not in the fan");
    }
    if (!fan.is_smooth_cone(cone)) {
        throw PreconditionError("is_compatible: cone is not smooth");
    }
    const auto filts = cone_filtrations(e, cone);
    auto cert = check_compatibility(filts, e.rank());
    cert.cone = cone;
    return cert;
}

FreenessReport singular_locus(const FiltrationFamily& e, const Fan& fan, const FreenessOptions& options)
{
    const auto validation = validate(fan);
    if (!validation.smooth || !validation.complete) {
        throw PreconditionError("singular_locus: fan is not smooth and complete");
    }
    if (e.num_rays() != fan.num_rays()) {
        throw DimensionMismatch("family has " + std::to_string(e.num_rays()) + " filtrations for " +
                                std::to_string(fan.num_rays()) + " rays");
    }
    FreenessReport report;
    std::map<Cone, bool> compatible;
    for (std::size_t d = 0; d <= fan.dim(); ++d) {
        const auto level = fan.cones_of_dim(d);
        std::vector<ConeVerdict> verdicts(level.size());
        std::vector<std::size_t> to_test;
        for (std::size_t i = 0; i < level.size(); ++i) {
            verdicts[i].cone = level[i];
            for (std::size_t drop = 0; drop < level[i].dim(); ++drop) {
                auto rays = level[i].rays;
                rays.erase(rays.begin() + static_cast<std::ptrdiff_t>(drop));
                if (!compatible.at(Cone(rays))) {
                    verdicts[i].compatible = false;
                    verdicts[i].inherited = true;
                    break;
                }
            }
            if (!verdicts[i].inherited) {
                to_test.push_back(i);
            }
        }
        std::vector<SplittingCertificate> certs(to_test.size());
        parallel_for(to_test.size(), options.jobs, [&](std::size_t t) {
            certs[t] = is_compatible(e, fan, level[to_test[t]]);
        });
        for (std::size_t t = 0; t < to_test.size(); ++t) {
            auto& v = verdicts[to_test[t]];
            v.compatible = certs[t].compatible;
            v.verified = certs[t].verified;
            if (!v.compatible) {
                report.minimal_incompatible.push_back(v.cone);
                if (!v.verified) {
                    ++report.unverified_incompatible;
                }
            }
            if (options.keep_certificates) {
                report.certificates.push_back(std::move(certs[t]));
            }
        }
        for (auto& v : verdicts) {
            compatible[v.cone] = v.compatible;
            report.locally_free = report.locally_free && v.compatible;
            report.cones.push_back(std::move(v));
        }
    }
    if (!report.minimal_incompatible.empty()) {
        std::size_t min_dim = fan.dim();
        for (const auto& c : report.minimal_incompatible) {
            min_dim = std::min(min_dim, c.dim());
        }
        report.sing_dim = fan.dim() - min_dim;
        report.codimension_floor_ok = e.rank() < 2 || min_dim >= 3;
    }
    return report;
}

}  // namespace toricsheaf
