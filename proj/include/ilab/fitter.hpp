#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ilab/geom.hpp"
#include "ilab/linalg.hpp"
#include "ilab/poly.hpp"

namespace ilab {

/// Linear functionals on the coefficient space of monomial_basis(d) whose
/// common zero set is exactly the degree-<=d polynomials vanishing on the
/// curve: d+1 rows for a line, 2d+1 rows for a circle.
RatMatrix containment_constraints(const Line& l, unsigned d);
RatMatrix containment_constraints(const Circle& c, unsigned d);
RatMatrix containment_constraints(const CurveRef& curve, unsigned d);

/// Stacked constraints of all curves, in input order. The OpenMP version
/// assembles per-curve blocks concurrently; the serial one is the reference.
RatMatrix assemble_constraints(const std::vector<CurveRef>& curves, unsigned d);
RatMatrix assemble_constraints_serial(const std::vector<CurveRef>& curves, unsigned d);

/// floor(sqrt(12 * curve_count)): a surface of at most this degree contains
/// any curve_count lines and circles.
unsigned trivial_degree_bound(std::size_t curve_count);

struct SurfaceFit {
    MultiPoly surface;        // canonical scaling
    unsigned degree = 0;
    std::size_t kernel_dim = 0;
};

/// Smallest-degree nonzero polynomial vanishing on every curve, searching
/// degrees 1..cap. Returns nullopt when no degree <= cap works. The result is
/// the first kernel basis vector at that degree, canonically scaled, and its
/// containment of every curve is re-verified.
std::optional<SurfaceFit> min_degree_surface_capped(const std::vector<CurveRef>& curves, unsigned cap);

/// Throws ContractError on an empty collection.
SurfaceFit min_degree_surface(const std::vector<CurveRef>& curves);

/// Nonzero polynomial of degree <= d through all points, or nullopt when the
/// evaluation matrix has full column rank.
std::optional<MultiPoly> surface_through_points(const std::vector<Vec3>& points, unsigned d);

/// Indices (global, ascending) of the scene's curves lying on Z(poly). The
/// OpenMP version checks curves concurrently; the serial one is the reference.
std::vector<std::size_t> contained_curves(const MultiPoly& poly, const Scene& scene);
std::vector<std::size_t> contained_curves_serial(const MultiPoly& poly, const Scene& scene);

std::vector<CurveRef> curve_refs(const Scene& scene);

}  // namespace ilab
