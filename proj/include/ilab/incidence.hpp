#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ilab/geom.hpp"

namespace ilab {

/// A point of P(L, C) with every line and circle of the scene through it.
struct IncidencePoint {
    Point3 point;
    std::vector<std::size_t> lines;    // line indices, ascending
    std::vector<std::size_t> circles;  // circle indices, ascending
};

struct IncidenceReport {
    std::vector<IncidencePoint> points;  // distinct, structurally sorted
    std::vector<std::size_t> line_counts;
    std::vector<std::size_t> circle_counts;

    std::size_t total_points() const { return points.size(); }
    /// Count for a global curve index (lines first, then circles).
    std::size_t count_of(std::size_t curve) const;
};

/// P(L, C) with full membership lists. Every line/circle pair through a point
/// produces that point, so grouping the pair intersections by exact point
/// value yields complete membership. The OpenMP version enumerates pairs
/// concurrently per line; the serial version is the reference.
IncidenceReport all_incidences(const Scene& scene);
IncidenceReport all_incidences_serial(const Scene& scene);

struct BoundReport {
    std::size_t lines = 0;
    std::size_t circles = 0;
    Rational A;
    std::size_t points = 0;
    Rational rhs;                     // 1000 * A * (n + m)
    bool bound_holds = true;          // points <= rhs
    double growth_ratio = 0.0;        // points / (n + m)^{3/2}, 0 for an empty scene
    bool regime_holds = false;        // A >= 1e5 * min(n, m)^{1/2}
    std::size_t largest_family = 0;   // members of the largest structured family
    bool family_reaches_A = false;
    std::size_t detect_threshold = 3; // member threshold handed to detection
};

/// Counts |P| and checks the bound-or-family dichotomy on the scene. Detection runs
/// with threshold max(3, ceil(A)). Throws ContractError unless A > 0.
BoundReport bound_report(const Scene& scene, const Rational& A, std::uint64_t seed = 1);

}  // namespace ilab
