#include "ilab/fitter.hpp"

#include "ilab/error.hpp"
#include "ilab/parallel.hpp"

namespace ilab {

RatMatrix containment_constraints(const Line& l, unsigned d) {
    const auto basis = monomial_basis(d);
    const auto parts = restrict_monomials(basis, l);
    RatMatrix rows(d + 1, RatVector(basis.size()));
    for (std::size_t col = 0; col < basis.size(); ++col) {
        for (unsigned j = 0; j <= d; ++j) rows[j][col] = parts[col].coeff(j);
    }
    return rows;
}

RatMatrix containment_constraints(const Circle& c, unsigned d) {
    const auto basis = monomial_basis(d);
    const auto parts = reduce_monomials(basis, c);
    RatMatrix rows(2 * d + 1, RatVector(basis.size()));
    for (std::size_t col = 0; col < basis.size(); ++col) {
        const auto flat = parts[col].flatten(d);
        for (std::size_t j = 0; j < flat.size(); ++j) rows[j][col] = flat[j];
    }
    return rows;
}

RatMatrix containment_constraints(const CurveRef& curve, unsigned d) {
    return std::visit([d](const auto* cv) { return containment_constraints(*cv, d); }, curve);
}

RatMatrix assemble_constraints_serial(const std::vector<CurveRef>& curves, unsigned d) {
    RatMatrix all;
    for (const auto& c : curves) {
        auto block = containment_constraints(c, d);
        for (auto& row : block) all.push_back(std::move(row));
    }
    return all;
}

RatMatrix assemble_constraints(const std::vector<CurveRef>& curves, unsigned d) {
    std::vector<RatMatrix> blocks(curves.size());
    parallel_for(curves.size(), [&](std::size_t i) { blocks[i] = containment_constraints(curves[i], d); });
    RatMatrix all;
    for (auto& block : blocks) {
        for (auto& row : block) all.push_back(std::move(row));
    }
    return all;
}

unsigned trivial_degree_bound(std::size_t curve_count) {
    Integer n = 12 * Integer(static_cast<unsigned long>(curve_count));
    Integer r = sqrt(n);
    return static_cast<unsigned>(r.get_ui());
}

std::optional<SurfaceFit> min_degree_surface_capped(const std::vector<CurveRef>& curves, unsigned cap) {
    for (unsigned d = 1; d <= cap; ++d) {
        const auto basis = monomial_basis(d);
        const auto kernel = nullspace(assemble_constraints(curves, d), basis.size());
        if (kernel.empty()) continue;
        SurfaceFit fit;
        fit.surface = MultiPoly::from_basis(basis, kernel.front()).canonical();
        fit.degree = d;
        fit.kernel_dim = kernel.size();
        for (const auto& c : curves) {
            if (!contains(fit.surface, c)) throw AlgorithmError("fitted surface does not contain an input curve");
        }
        return fit;
    }
    return std::nullopt;
}

SurfaceFit min_degree_surface(const std::vector<CurveRef>& curves) {
    if (curves.empty()) throw ContractError("min_degree_surface: empty curve collection");
    auto fit = min_degree_surface_capped(curves, trivial_degree_bound(curves.size()));
    if (!fit) throw AlgorithmError("min_degree_surface: no surface within the trivial degree bound");
    return *fit;
}

std::optional<MultiPoly> surface_through_points(const std::vector<Vec3>& points, unsigned d) {
    if (d < 1) throw ContractError("surface_through_points: degree must be >= 1");
    const auto basis = monomial_basis(d);
    RatMatrix rows;
    rows.reserve(points.size());
    for (const auto& p : points) {
        RatVector row;
        row.reserve(basis.size());
        for (const auto& e : basis) {
            MultiPoly m;
            m.add_term(e, Rational(1));
            row.push_back(m.eval(p));
        }
        rows.push_back(std::move(row));
    }
    const auto kernel = nullspace(rows, basis.size());
    if (kernel.empty()) return std::nullopt;
    return MultiPoly::from_basis(basis, kernel.front()).canonical();
}

std::vector<CurveRef> curve_refs(const Scene& scene) {
    std::vector<CurveRef> out;
    out.reserve(scene.size());
    for (std::size_t i = 0; i < scene.size(); ++i) out.push_back(curve_at(scene, i));
    return out;
}

std::vector<std::size_t> contained_curves_serial(const MultiPoly& poly, const Scene& scene) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < scene.size(); ++i) {
        if (contains(poly, curve_at(scene, i))) out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> contained_curves(const MultiPoly& poly, const Scene& scene) {
    std::vector<char> hit(scene.size(), 0);
    parallel_for(scene.size(), [&](std::size_t i) { hit[i] = contains(poly, curve_at(scene, i)) ? 1 : 0; });
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < hit.size(); ++i) {
        if (hit[i]) out.push_back(i);
    }
    return out;
}

}  // namespace ilab
